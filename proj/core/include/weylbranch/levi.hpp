/*
  levi.hpp — Levi subalgebras from closed symmetric root subsets.

  A LeviSubalgebra is built by validating a closed, symmetric subset R' of the
  ambient roots, extracting the indecomposable positive elements as its simple
  roots, splitting them into connected components and classifying each against
  the standard Cartan matrices. Weight projection and the product lattice of
  the component standard systems hang off the result.
*/
#pragma once

#include "weylbranch/character.hpp"
#include "weylbranch/lattice.hpp"
#include "weylbranch/root_system.hpp"
#include "weylbranch/span_solver.hpp"

#include <memory>
#include <string>
#include <vector>

namespace weylbranch {

struct SimpleComponent {
    Family family;
    int rank;
    std::vector<Weight> simple_roots;   // ambient coordinates, Bourbaki order
};

class LeviSubalgebra {
public:
    // validates closure and symmetry of R'; error messages name a witness
    static LeviSubalgebra from_root_subset(const RootSystem& ambient, const std::vector<Weight>& r_prime);
    // convenience: R' = closure of (pi_a union -pi_a) under root addition
    static LeviSubalgebra from_simple_roots(const RootSystem& ambient, const std::vector<Weight>& pi_a);

    const RootSystem& ambient() const { return *ambient_; }
    const std::vector<SimpleComponent>& components() const { return components_; }
    const std::vector<Weight>& simple_roots_flat() const { return flat_roots_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    bool is_simple_root_generated() const { return simple_root_generated_; }
    bool is_simple() const { return components_.size() == 1; }
    int rank() const { return static_cast<int>(flat_roots_.size()); }

    // product of the component standard systems; characters over the Levi
    // live here (concatenated epsilon coordinates)
    const WeightLattice& lattice() const { return *lattice_; }

    // weight projection pi: concatenated fundamental coordinates, ordered by
    // component then by the component's Bourbaki node
    std::vector<Int> project(const Weight& ambient_weight) const;
    // projection of the k-th (0-based) ambient fundamental weight, restricted
    // to one component
    std::vector<Int> project_fundamental_onto(int component, int k) const;

    // a-weight in fundamental coordinates -> lattice weight
    Weight embed_fundamental(std::span<const Int> coords) const;

    // mu in the nonnegative integer span of the Levi's simple roots (ambient
    // coordinates)
    bool in_positive_span(const Weight& mu) const { return span_solver_->contains(ambient_->canonical(mu)); }

    // sorted simple roots in epsilon syntax, comma separated
    std::string canonical_string() const;

private:
    LeviSubalgebra() = default;

    const RootSystem* ambient_ = nullptr;
    std::vector<SimpleComponent> components_;
    std::vector<Weight> flat_roots_;
    std::vector<Weight> positive_roots_;
    bool simple_root_generated_ = false;
    const WeightLattice* lattice_ = nullptr;   // interned, stable address
    std::shared_ptr<const NonnegSpanSolver> span_solver_;
};

// Cartan-matrix pattern matching of one connected component
ComponentClass classify_component(const RootSystem& ambient, const std::vector<Weight>& simple_roots);

// all simple Levi subalgebras of the ambient system, from the classified
// index patterns; deduplicated, deterministically ordered
std::vector<LeviSubalgebra> enumerate_simple_levis(const RootSystem& rs);

// closure of a symmetric generating set under root addition
std::vector<Weight> close_root_subset(const RootSystem& rs, const std::vector<Weight>& generators);

} // namespace weylbranch
