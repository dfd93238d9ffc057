#include "weylbranch/span_solver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace weylbranch {

namespace {
using Rational = boost::multiprecision::cpp_rational;
using boost::multiprecision::cpp_int;
}

NonnegSpanSolver::NonnegSpanSolver(std::vector<Weight> basis, int dim, bool mod_all_ones)
    : dim_(dim), mod_ones_(mod_all_ones), basis_(std::move(basis)) {
    const int s = static_cast<int>(basis_.size());
    for (Weight& b : basis_) {
        if (b.dim() != dim_)
            throw std::invalid_argument("span basis vector has wrong dimension");
        if (mod_ones_) {
            // basis classes must admit integral sum-zero representatives (roots do)
            std::vector<Int> d(b.doubled());
            const Int sum = b.coord_sum_doubled();
            if (sum % dim_ != 0)
                throw std::invalid_argument("type-A span basis class has no sum-zero representative");
            for (Int& x : d) x -= sum / dim_;
            b = Weight(std::move(d));
        }
    }

    // row reduce [M | I] where M's columns are the basis vectors
    std::vector<std::vector<Rational>> m(dim_, std::vector<Rational>(s + dim_, 0));
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < s; ++c) m[r][c] = basis_[c].doubled(r);
        m[r][s + r] = 1;
    }
    int row = 0;
    for (int col = 0; col < s; ++col) {
        int piv = -1;
        for (int r = row; r < dim_; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0)
            throw std::invalid_argument("span basis is linearly dependent");
        std::swap(m[row], m[piv]);
        const Rational lead = m[row][col];
        for (auto& x : m[row]) x /= lead;
        for (int r = 0; r < dim_; ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational f = m[r][col];
            for (int c2 = 0; c2 < s + dim_; ++c2) m[r][c2] -= f * m[row][c2];
        }
        ++row;
    }

    e_num_.assign(dim_, std::vector<Int>(dim_, 0));
    e_den_.assign(dim_, 1);
    for (int r = 0; r < dim_; ++r) {
        cpp_int den = 1;
        for (int c = 0; c < dim_; ++c)
            den = lcm(den, denominator(m[r][s + c]));
        e_den_[r] = static_cast<Int>(den);
        for (int c = 0; c < dim_; ++c) {
            cpp_int scaled = numerator(m[r][s + c]) * (den / denominator(m[r][s + c]));
            e_num_[r][c] = static_cast<Int>(scaled);
        }
    }
}

std::optional<std::vector<Int>> NonnegSpanSolver::coefficients(const Weight& mu) const {
    if (mu.dim() != dim_)
        throw std::invalid_argument("span query vector has wrong dimension");
    std::vector<Int> v(mu.doubled());
    if (mod_ones_) {
        // unique sum-zero representative of the class; reject non-integral shifts
        Int sum = 0;
        for (Int x : v) sum += x;
        if (sum % dim_ != 0) return std::nullopt;
        const Int t = sum / dim_;
        for (Int& x : v) x -= t;
    }
    const int s = basis_size();
    std::vector<Int> coeffs(s, 0);
    for (int r = 0; r < dim_; ++r) {
        Int y = 0;
        for (int c = 0; c < dim_; ++c) y += e_num_[r][c] * v[c];
        if (r < s) {
            if (y % e_den_[r] != 0) return std::nullopt;
            const Int ck = y / e_den_[r];
            if (ck < 0) return std::nullopt;
            coeffs[r] = ck;
        } else if (y != 0) {
            return std::nullopt;
        }
    }
    return coeffs;
}

} // namespace weylbranch
