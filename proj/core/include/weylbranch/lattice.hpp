/*
  lattice.hpp — ordered products of standard root-system blocks.

  A WeightLattice is the weight-coordinate context characters live over:
  either a single root system, or the concatenated epsilon-coordinate tuple of
  the standard systems of a Levi subalgebra's simple components. Weights are
  concatenations of block weights; type-A blocks canonicalize their slice.
*/
#pragma once

#include "weylbranch/root_system.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace weylbranch {

using Rational = boost::multiprecision::cpp_rational;

class WeightLattice {
public:
    explicit WeightLattice(std::vector<const RootSystem*> blocks);

    // interned lattice instances with stable addresses (characters keep
    // pointers into this registry)
    static const WeightLattice& of(const std::vector<const RootSystem*>& blocks);
    static const WeightLattice& single(const RootSystem& rs) { return of({&rs}); }

    int block_count() const { return static_cast<int>(blocks_.size()); }
    const RootSystem& block(int b) const { return *blocks_[b]; }
    int offset(int b) const { return offsets_[b]; }
    int dim() const { return dim_; }
    int rank() const { return rank_; }

    // structural equality: same ordered list of (family, rank)
    bool same_as(const WeightLattice& o) const;
    std::string name() const;   // e.g. "B3" or "A1 x B2"

    Weight zero() const { return Weight::zero(dim_); }
    Weight canonical(Weight w) const;
    Weight add(const Weight& a, const Weight& b) const { return canonical(raw_add(a, b)); }
    Weight sub(const Weight& a, const Weight& b) const { return canonical(raw_sub(a, b)); }
    Weight negated(const Weight& a) const { return canonical(raw_negated(a)); }

    Weight embed(int b, const Weight& block_weight) const;
    Weight slice(int b, const Weight& w) const;

    bool is_dominant(const Weight& w) const;
    // flat simple-root indexing: 0 .. rank()-1 across blocks in order
    std::pair<int, int> flat_to_block(int flat) const;
    Weight reflect(const Weight& w, int flat) const;

    // exact squared length under the blockwise invariant form
    Rational norm(const Weight& w) const;

    Weight from_fundamental(std::span<const Int> coords) const;
    std::vector<Int> to_fundamental(const Weight& w) const;

    // w in the nonnegative-integer span of all simple roots (blockwise)
    bool in_positive_root_span(const Weight& w) const;

private:
    std::vector<const RootSystem*> blocks_;
    std::vector<int> offsets_;
    int dim_ = 0;
    int rank_ = 0;
};

} // namespace weylbranch
