/*
  span_solver.hpp — exact membership test for nonnegative integer root spans.

  Factors a linearly independent basis once (rational row reduction); each
  query then costs one small integer matrix-vector product plus divisibility
  and sign checks. For type-A ambients (classes modulo the all-ones line) the
  query vector is first moved to its sum-zero representative; a non-integral
  shift means the class cannot lie in the span.
*/
#pragma once

#include "weylbranch/weight.hpp"

#include <optional>
#include <vector>

namespace weylbranch {

class NonnegSpanSolver {
public:
    // basis vectors in doubled coordinates, all of dimension `dim`.
    // Throws std::invalid_argument if the basis is linearly dependent.
    NonnegSpanSolver(std::vector<Weight> basis, int dim, bool mod_all_ones);

    bool contains(const Weight& mu) const { return static_cast<bool>(coefficients(mu)); }
    // the unique candidate coefficient vector, if mu lies in the span
    std::optional<std::vector<Int>> coefficients(const Weight& mu) const;

    int dim() const { return dim_; }
    int basis_size() const { return static_cast<int>(basis_.size()); }

private:
    int dim_;
    bool mod_ones_;
    std::vector<Weight> basis_;
    // row-reduced transform E: y = E*mu; rows < basis_size() give the
    // coefficients, the remaining rows must vanish
    std::vector<std::vector<Int>> e_num_;
    std::vector<Int> e_den_;
};

} // namespace weylbranch
