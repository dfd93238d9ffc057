#include "weylbranch/admissibility.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace weylbranch {

namespace {

bool is_zero_vec(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

bool is_unit_vec(const std::vector<Int>& v) {
    int ones = 0;
    for (Int c : v) {
        if (c == 1) ++ones;
        else if (c != 0) return false;
    }
    return ones == 1;
}

bool is_doubled_last(const std::vector<Int>& v) {
    if (v.empty() || v.back() != 2) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

} // namespace

AdmissibilityVerdict classify_fundamental_pair(const LeviSubalgebra& a, int component, int k) {
    const SimpleComponent& comp = a.components().at(component);
    const Family ambient = a.ambient().family();
    const std::vector<Int> proj = a.project_fundamental_onto(component, k - 1);

    AdmissibilityVerdict v;
    v.globally = is_zero_vec(proj) || is_unit_vec(proj);
    const bool case_b = ambient == Family::B && comp.family == Family::B && is_doubled_last(proj);
    const bool case_c = ambient == Family::C && comp.family == Family::A && !v.globally;
    v.locally = !case_b && !case_c;
    if (!v.globally)
        v.reasons.push_back({component, k, v.locally ? "local-only" : "locally-non-admissible", proj});
    return v;
}

AdmissibilityVerdict classify_pair(const LeviSubalgebra& a, std::span<const Int> lambda) {
    if (static_cast<int>(lambda.size()) != a.ambient().rank())
        throw std::invalid_argument("weight coordinate count does not match the ambient rank");
    AdmissibilityVerdict verdict;
    for (int k = 1; k <= a.ambient().rank(); ++k) {
        if (lambda[k - 1] <= 0) {
            if (lambda[k - 1] < 0)
                throw std::invalid_argument("admissibility classification requires a dominant weight");
            continue;
        }
        for (int c = 0; c < static_cast<int>(a.components().size()); ++c) {
            AdmissibilityVerdict part = classify_fundamental_pair(a, c, k);
            verdict.globally = verdict.globally && part.globally;
            verdict.locally = verdict.locally && part.locally;
            verdict.reasons.insert(verdict.reasons.end(), part.reasons.begin(), part.reasons.end());
        }
    }
    return verdict;
}

const char* to_string(SurjectivityResult r) {
    switch (r) {
    case SurjectivityResult::Surjective: return "surjective";
    case SurjectivityResult::NotSurjective: return "not-surjective";
    case SurjectivityResult::Inconclusive: return "inconclusive: bound";
    }
    return "?";
}

namespace {

// next vector below `cap` in reverse-lexicographic enumeration of
// 0 <= v <= cap (componentwise); returns false at the end
bool next_below(std::vector<Int>& v, const std::vector<Int>& cap) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < cap[i]) {
            ++v[i];
            for (std::size_t j = 0; j < i; ++j) v[j] = 0;
            return true;
        }
    }
    return false;
}

// can the parts be lifted? columns proj[i] = pi(w_{i+1}); distribute each
// lambda coordinate over the parts by backtracking with monotone pruning
// (all projection columns are nonnegative, so partial sums never shrink)
bool lift_exists(const std::vector<std::vector<Int>>& proj, const std::vector<Int>& lambda,
                 const std::vector<std::vector<Int>>& parts) {
    // zero parts: every point of a preimage may project to zero
    if (parts.empty()) return true;
    const int n = static_cast<int>(lambda.size());
    const int k = static_cast<int>(parts.size());
    const int arank = static_cast<int>(parts[0].size());
    std::vector<std::vector<Int>> acc(k, std::vector<Int>(arank, 0));

    auto apply = [&](const std::vector<Int>& comp, int i, Int sign) {
        for (int l = 0; l < k; ++l)
            for (int t = 0; t < arank; ++t) acc[l][t] += sign * comp[l] * proj[i][t];
    };
    auto within = [&]() {
        for (int l = 0; l < k; ++l)
            for (int t = 0; t < arank; ++t)
                if (acc[l][t] > parts[l][t]) return false;
        return true;
    };

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == n) {
            for (int l = 0; l < k; ++l)
                if (acc[l] != parts[l]) return false;
            return true;
        }
        std::vector<Int> comp(k, 0);
        comp[0] = lambda[i];
        for (;;) {
            apply(comp, i, +1);
            if (within() && place(i + 1)) return true;
            apply(comp, i, -1);
            int j = 0;
            while (j < k - 1 && comp[j] == 0) ++j;
            if (j == k - 1) break;   // also ends the lambda[i] == 0 case
            const Int move = comp[j];
            comp[j] = 0;
            ++comp[j + 1];
            comp[0] = move - 1;
        }
        return false;
    };
    return place(0);
}

} // namespace

SurjectivityResult surjectivity_oracle(const LeviSubalgebra& a, std::span<const Int> lambda,
                                       int bound) {
    const RootSystem& rs = a.ambient();
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("weight coordinate count does not match the ambient rank");
    for (Int m : lambda)
        if (m < 0) throw std::invalid_argument("surjectivity oracle requires a dominant weight");

    std::vector<std::vector<Int>> proj(rs.rank());
    for (int i = 1; i <= rs.rank(); ++i)
        proj[i - 1] = a.project(rs.fundamental_weight(i - 1));
    std::vector<Int> target(a.rank(), 0);
    for (int i = 0; i < rs.rank(); ++i)
        for (int t = 0; t < a.rank(); ++t) target[t] += lambda[i] * proj[i][t];

    const std::vector<Int> lam(lambda.begin(), lambda.end());

    bool truncated = false;
    bool failed = false;

    // multiset decompositions of `target` into nonzero dominant parts, each
    // part at most the previous one in lexicographic order
    std::vector<std::vector<Int>> parts;
    const std::vector<Int> no_cap;
    std::function<void(const std::vector<Int>&, const std::vector<Int>&)> rec =
        [&](const std::vector<Int>& remaining, const std::vector<Int>& cap_part) {
            if (failed) return;
            if (is_zero_vec(remaining)) {
                if (!lift_exists(proj, lam, parts)) failed = true;
                return;
            }
            if (static_cast<int>(parts.size()) >= bound) {
                truncated = true;
                return;
            }
            std::vector<Int> p(remaining.size(), 0);
            while (next_below(p, remaining)) {
                if (!cap_part.empty() && p > cap_part) continue;
                std::vector<Int> rest(remaining);
                for (std::size_t t = 0; t < rest.size(); ++t) rest[t] -= p[t];
                parts.push_back(p);
                rec(rest, p);
                parts.pop_back();
                if (failed) return;
            }
        };
    rec(target, no_cap);

    if (failed) return SurjectivityResult::NotSurjective;
    if (truncated) return SurjectivityResult::Inconclusive;
    return SurjectivityResult::Surjective;
}

} // namespace weylbranch
