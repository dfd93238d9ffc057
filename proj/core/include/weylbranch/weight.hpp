/*
  weight.hpp — exact weights of classical root systems in epsilon coordinates.

  A Weight stores doubled coordinates (the actual epsilon coordinate is
  doubled()/2), so the spin weights of types B and D stay in exact integers.
  Arithmetic that must respect an ambient convention (the type-A quotient by
  the all-ones line) lives on RootSystem / WeightLattice, not here.
*/
#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace weylbranch {

using Int = std::int64_t;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

char family_char(Family f);
Family parse_family(char c);

class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<Int> doubled) : d_(std::move(doubled)) {}

    static Weight zero(int dim) { return Weight(std::vector<Int>(dim, 0)); }
    // epsilon basis vector e_k (1-based), as a weight of the given ambient dim
    static Weight eps(int dim, int k);

    int dim() const { return static_cast<int>(d_.size()); }
    const std::vector<Int>& doubled() const { return d_; }
    Int doubled(int i) const { return d_[i]; }
    bool is_zero() const;
    Int coord_sum_doubled() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;

private:
    std::vector<Int> d_;
};

// plain coordinatewise arithmetic, no canonicalization
Weight raw_add(const Weight& a, const Weight& b);
Weight raw_sub(const Weight& a, const Weight& b);
Weight raw_scaled(const Weight& a, Int k);
Weight raw_negated(const Weight& a);

// 4 * (standard epsilon-basis dot product)
Int dot4(const Weight& a, const Weight& b);

} // namespace weylbranch
