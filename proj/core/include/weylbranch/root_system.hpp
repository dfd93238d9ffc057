/*
  root_system.hpp — classical root systems A/B/C/D in exact epsilon coordinates.

  Conventions: simple roots in Bourbaki order
    A_n : e_i - e_{i+1}                       (ambient dimension n+1)
    B_n : e_i - e_{i+1}, e_n                  (n >= 2)
    C_n : e_i - e_{i+1}, 2 e_n                (n >= 2)
    D_n : e_i - e_{i+1}, e_{n-1} + e_n        (n >= 3)
  Type-A weights are classes modulo the all-ones line; the canonical
  representative has minimal coordinate 0 and canonicalization is applied
  after every arithmetic operation.

  Immutable after construction; all operations are const and pure.
*/
#pragma once

#include "weylbranch/weight.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace weylbranch {

class RootSystem {
public:
    RootSystem(Family family, int rank);

    // cached immutable instance (thread-safe)
    static const RootSystem& get(Family family, int rank);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    bool mod_all_ones() const { return family_ == Family::A; }

    const std::vector<Weight>& simple_roots() const { return simple_; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_; }
    const Weight& simple_root(int i) const { return simple_[i]; }        // 0-based
    const Weight& fundamental_weight(int i) const { return fundamental_[i]; }
    const Weight& rho() const { return rho_; }

    bool is_positive_root(const Weight& w) const;
    bool is_root(const Weight& w) const;

    // --- arithmetic in this ambient (canonicalizes type-A classes) ---
    Weight canonical(Weight w) const;
    Weight add(const Weight& a, const Weight& b) const { return canonical(raw_add(a, b)); }
    Weight sub(const Weight& a, const Weight& b) const { return canonical(raw_sub(a, b)); }
    Weight negated(const Weight& a) const { return canonical(raw_negated(a)); }
    Weight scaled(const Weight& a, Int k) const { return canonical(raw_scaled(a, k)); }

    // --- pairings and dominance ---
    // <lam, root^v> = 2 (lam, root) / (root, root); exact, throws if lam is
    // not integral against root or root = 0
    Int pairing(const Weight& lam, const Weight& root) const;
    bool is_integral(const Weight& w) const;
    bool is_dominant(const Weight& w) const;   // throws on non-integral input
    std::vector<Int> to_fundamental(const Weight& w) const;
    Weight from_fundamental(std::span<const Int> coords) const;

    // --- reflections and orbits ---
    Weight reflect(const Weight& w, int i) const;                   // simple reflection s_i
    Weight reflect_root(const Weight& w, const Weight& root) const;
    Weight dominant_representative(const Weight& w) const;
    std::set<Weight> weyl_orbit(const Weight& w) const;
    std::uint64_t weyl_order() const;
    // |orbit| of a dominant weight via the parabolic stabilizer, no expansion
    std::uint64_t dominant_orbit_size(const Weight& w) const;

    // scaled invariant form: form(v,w) = form_scale() * (v,w) with (.,.) the
    // standard dot for B/C/D and the all-ones-quotient form for type A
    Int form_scale() const;
    Int form(const Weight& v, const Weight& w) const;

    // inverse Cartan matrix row-major as exact fractions num[i][j] / den
    const std::vector<std::vector<Int>>& inverse_cartan_num() const { return inv_cartan_num_; }
    Int inverse_cartan_den() const { return inv_cartan_den_; }

    std::string name() const;   // e.g. "B3"

private:
    Family family_;
    int rank_;
    int ambient_dim_;
    std::vector<Weight> simple_;
    std::vector<Weight> positive_;
    std::vector<Weight> fundamental_;
    Weight rho_;
    std::set<Weight> root_set_;        // positive and negative roots, canonical
    std::vector<std::vector<Int>> inv_cartan_num_;
    Int inv_cartan_den_ = 1;
};

// true iff mu is a nonnegative-integer combination of the basis vectors;
// exact rational elimination, type-A ambients tested on the class.
// Throws std::invalid_argument on a linearly dependent basis.
bool in_nonneg_root_span(const RootSystem& rs, const Weight& mu,
                         const std::vector<Weight>& basis);

// Cartan-matrix classification of a connected, linearly independent set of
// roots of a classical ambient. Returns the family, the rank, and the
// permutation `order` placing the input roots in Bourbaki order
// (roots[order[k]] is the k-th simple root of the component).
struct ComponentClass {
    Family family;
    int rank;
    std::vector<int> order;
};
ComponentClass classify_simple_system(const RootSystem& ambient,
                                      const std::vector<Weight>& roots);

// order of the parabolic Weyl subgroup generated by the listed simple
// reflections (indices into ambient.simple_roots())
std::uint64_t parabolic_order(const RootSystem& ambient, const std::vector<int>& subset);

} // namespace weylbranch
