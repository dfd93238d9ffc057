#include "weylbranch/levi.hpp"

#include "weylbranch/text.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace weylbranch {

namespace {

Weight sum_zero_rep(const RootSystem& rs, const Weight& w) {
    if (!rs.mod_all_ones()) return w;
    std::vector<Int> d(w.doubled());
    Int sum = 0;
    for (Int x : d) sum += x;
    if (sum % static_cast<Int>(d.size()) != 0)
        throw std::logic_error("root class without sum-zero representative");
    const Int t = sum / static_cast<Int>(d.size());
    for (Int& x : d) x -= t;
    return Weight(std::move(d));
}

// deterministic component order: by first supported epsilon coordinate, then
// by the ordered simple-root list
struct ComponentKey {
    int first_support;
    std::vector<Weight> ordered_roots;
    bool operator<(const ComponentKey& o) const {
        if (first_support != o.first_support) return first_support < o.first_support;
        return ordered_roots < o.ordered_roots;
    }
};

} // namespace

std::vector<Weight> close_root_subset(const RootSystem& rs, const std::vector<Weight>& generators) {
    std::set<Weight> closure;
    for (const Weight& g : generators) {
        const Weight c = rs.canonical(g);
        if (!rs.is_root(c))
            throw std::invalid_argument("not a root of " + rs.name() + ": " + render_weight_eps(rs, c));
        closure.insert(c);
        closure.insert(rs.negated(c));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> current(closure.begin(), closure.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i; j < current.size(); ++j) {
                const Weight s = rs.add(current[i], current[j]);
                if (rs.is_root(s) && closure.insert(s).second) grew = true;
            }
    }
    return {closure.begin(), closure.end()};
}

LeviSubalgebra LeviSubalgebra::from_root_subset(const RootSystem& ambient,
                                                const std::vector<Weight>& r_prime) {
    if (r_prime.empty())
        throw std::invalid_argument("empty root subset does not define a Levi subalgebra");

    std::set<Weight> rset;
    for (const Weight& w : r_prime) {
        const Weight c = ambient.canonical(w);
        if (!ambient.is_root(c))
            throw std::invalid_argument("not a root of " + ambient.name() + ": " +
                                        render_weight_eps(ambient, c));
        rset.insert(c);
    }
    for (const Weight& w : rset)
        if (!rset.count(ambient.negated(w)))
            throw std::invalid_argument("root subset is not symmetric: contains " +
                                        render_weight_eps(ambient, w) + " but not its negative");
    for (const Weight& a : rset)
        for (const Weight& b : rset) {
            const Weight s = ambient.add(a, b);
            if (ambient.is_root(s) && !rset.count(s))
                throw std::invalid_argument(
                    "root subset is not closed: " + render_weight_eps(ambient, a) + " + " +
                    render_weight_eps(ambient, b) + " = " + render_weight_eps(ambient, s) +
                    " is a root outside the subset");
        }

    std::vector<Weight> positive;
    for (const Weight& w : rset)
        if (ambient.is_positive_root(w)) positive.push_back(w);

    // indecomposable elements of the positive part
    std::set<Weight> pos_set(positive.begin(), positive.end());
    std::vector<Weight> simple;
    for (const Weight& a : positive) {
        bool decomposable = false;
        for (const Weight& b : positive) {
            const Weight rest = ambient.sub(a, b);
            if (pos_set.count(rest)) { decomposable = true; break; }
        }
        if (!decomposable) simple.push_back(a);
    }

    // connected components under the invariant form
    std::vector<int> comp_of(simple.size(), -1);
    int comps = 0;
    for (std::size_t i = 0; i < simple.size(); ++i) {
        if (comp_of[i] >= 0) continue;
        comp_of[i] = comps;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < simple.size(); ++j)
                if (comp_of[j] < 0 && ambient.form(simple[cur], simple[j]) != 0) {
                    comp_of[j] = comps;
                    stack.push_back(j);
                }
        }
        ++comps;
    }

    std::map<ComponentKey, SimpleComponent> ordered;
    for (int c = 0; c < comps; ++c) {
        std::vector<Weight> roots;
        for (std::size_t i = 0; i < simple.size(); ++i)
            if (comp_of[i] == c) roots.push_back(simple[i]);
        const ComponentClass cc = classify_component(ambient, roots);
        SimpleComponent comp;
        comp.family = cc.family;
        comp.rank = cc.rank;
        for (int k : cc.order) comp.simple_roots.push_back(roots[k]);
        int first_support = ambient.ambient_dim();
        for (const Weight& r : comp.simple_roots) {
            const Weight rep = sum_zero_rep(ambient, r);
            for (int k = 0; k < rep.dim(); ++k)
                if (rep.doubled(k) != 0) { first_support = std::min(first_support, k); break; }
        }
        ordered.emplace(ComponentKey{first_support, comp.simple_roots}, std::move(comp));
    }

    LeviSubalgebra out;
    out.ambient_ = &ambient;
    std::vector<const RootSystem*> blocks;
    for (auto& [key, comp] : ordered) {
        blocks.push_back(&RootSystem::get(comp.family, comp.rank));
        for (const Weight& r : comp.simple_roots) out.flat_roots_.push_back(r);
        out.components_.push_back(std::move(comp));
    }
    out.positive_roots_ = std::move(positive);
    std::sort(out.positive_roots_.begin(), out.positive_roots_.end());
    out.simple_root_generated_ =
        std::all_of(out.flat_roots_.begin(), out.flat_roots_.end(), [&](const Weight& r) {
            const auto& simple_roots = ambient.simple_roots();
            return std::find(simple_roots.begin(), simple_roots.end(), r) != simple_roots.end();
        });
    out.lattice_ = &WeightLattice::of(blocks);
    out.span_solver_ = std::make_shared<NonnegSpanSolver>(out.flat_roots_, ambient.ambient_dim(),
                                                          ambient.mod_all_ones());
    return out;
}

LeviSubalgebra LeviSubalgebra::from_simple_roots(const RootSystem& ambient,
                                                 const std::vector<Weight>& pi_a) {
    return from_root_subset(ambient, close_root_subset(ambient, pi_a));
}

std::vector<Int> LeviSubalgebra::project(const Weight& ambient_weight) const {
    std::vector<Int> coords;
    coords.reserve(rank());
    for (const Weight& beta : flat_roots_)
        coords.push_back(ambient_->pairing(ambient_weight, beta));
    return coords;
}

std::vector<Int> LeviSubalgebra::project_fundamental_onto(int component, int k) const {
    const SimpleComponent& comp = components_.at(component);
    const Weight& omega = ambient_->fundamental_weight(k);
    std::vector<Int> coords;
    coords.reserve(comp.rank);
    for (const Weight& beta : comp.simple_roots)
        coords.push_back(ambient_->pairing(omega, beta));
    return coords;
}

Weight LeviSubalgebra::embed_fundamental(std::span<const Int> coords) const {
    return lattice_->from_fundamental(coords);
}

std::string LeviSubalgebra::canonical_string() const {
    std::vector<std::string> parts;
    parts.reserve(flat_roots_.size());
    for (const Weight& r : flat_roots_) parts.push_back(render_root_eps(*ambient_, r));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
    }
    return s;
}

ComponentClass classify_component(const RootSystem& ambient, const std::vector<Weight>& simple_roots) {
    return classify_simple_system(ambient, simple_roots);
}

namespace {

void all_subsets(int top, int min_size, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    // depth-first over increasing index subsets of {1..top}
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) >= min_size) emit(cur);
        for (int k = next; k <= top; ++k) {
            cur.push_back(k);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

std::vector<Weight> chain_diffs(const RootSystem& rs, const std::vector<int>& sorted_idx) {
    std::vector<Weight> roots;
    for (std::size_t t = 0; t + 1 < sorted_idx.size(); ++t)
        roots.push_back(rs.canonical(raw_sub(Weight::eps(rs.ambient_dim(), sorted_idx[t]),
                                             Weight::eps(rs.ambient_dim(), sorted_idx[t + 1]))));
    return roots;
}

} // namespace

std::vector<LeviSubalgebra> enumerate_simple_levis(const RootSystem& rs) {
    const int n = rs.rank();
    const int top = rs.family() == Family::A ? n + 1 : n;
    std::vector<std::vector<Weight>> candidates;

    auto eps = [&](int k) { return Weight::eps(rs.ambient_dim(), k); };

    // type-A strings, all ambients
    all_subsets(top, 2, [&](const std::vector<int>& s) { candidates.push_back(chain_diffs(rs, s)); });

    if (rs.family() == Family::B) {
        // chains ending in a short root e_i
        all_subsets(n, 1, [&](const std::vector<int>& s) {
            std::vector<Weight> roots = chain_diffs(rs, s);
            roots.push_back(rs.canonical(eps(s.back())));
            candidates.push_back(std::move(roots));
        });
    }
    if (rs.family() == Family::C) {
        // chains ending in a long root 2 e_i
        all_subsets(n, 1, [&](const std::vector<int>& s) {
            std::vector<Weight> roots = chain_diffs(rs, s);
            roots.push_back(rs.canonical(raw_scaled(eps(s.back()), 2)));
            candidates.push_back(std::move(roots));
        });
    }
    if (rs.family() == Family::B || rs.family() == Family::D) {
        // chains ending in a spin pair e_i -+ e_j
        all_subsets(n, 2, [&](const std::vector<int>& s) {
            const int i = s.back();
            for (int j = i + 1; j <= n; ++j) {
                std::vector<Weight> roots = chain_diffs(rs, s);
                roots.push_back(rs.canonical(raw_sub(eps(i), eps(j))));
                roots.push_back(rs.canonical(raw_add(eps(i), eps(j))));
                candidates.push_back(std::move(roots));
            }
        });
    }
    if (rs.family() != Family::A) {
        // strings through one long root e_i + e_j: a chain below i, the sum
        // root, and a chain below j avoiding the i-side indices
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                std::vector<std::vector<int>> i_chains{{}};
                all_subsets(i - 1, 1, [&](const std::vector<int>& a) { i_chains.push_back(a); });
                for (const std::vector<int>& a : i_chains) {
                    std::vector<std::vector<int>> j_chains{{}};
                    {
                        std::vector<int> allowed;
                        for (int b = 1; b < j; ++b)
                            if (b != i && std::find(a.begin(), a.end(), b) == a.end())
                                allowed.push_back(b);
                        all_subsets(static_cast<int>(allowed.size()), 1,
                                    [&](const std::vector<int>& pick) {
                                        std::vector<int> b;
                                        for (int p : pick) b.push_back(allowed[p - 1]);
                                        j_chains.push_back(std::move(b));
                                    });
                    }
                    for (const std::vector<int>& b : j_chains) {
                        std::vector<int> ichain(a);
                        ichain.push_back(i);
                        std::vector<int> jchain(b);
                        jchain.push_back(j);
                        std::vector<Weight> roots = chain_diffs(rs, ichain);
                        roots.push_back(rs.canonical(raw_add(eps(i), eps(j))));
                        const std::vector<Weight> jroots = chain_diffs(rs, jchain);
                        roots.insert(roots.end(), jroots.begin(), jroots.end());
                        candidates.push_back(std::move(roots));
                    }
                }
            }
    }

    std::map<std::vector<Weight>, LeviSubalgebra> dedup;
    for (const std::vector<Weight>& pi : candidates) {
        LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(rs, pi);
        if (!levi.is_simple())
            throw std::logic_error("pattern instance produced a non-simple Levi");
        std::vector<Weight> key(levi.simple_roots_flat());
        std::sort(key.begin(), key.end());
        std::vector<Weight> expected(pi);
        std::sort(expected.begin(), expected.end());
        if (key != expected)
            throw std::logic_error("pattern instance changed under closure/extraction");
        dedup.emplace(std::move(key), std::move(levi));
    }

    std::vector<LeviSubalgebra> out;
    out.reserve(dedup.size());
    for (auto& [key, levi] : dedup) out.push_back(std::move(levi));
    std::sort(out.begin(), out.end(), [](const LeviSubalgebra& x, const LeviSubalgebra& y) {
        return x.canonical_string() < y.canonical_string();
    });
    return out;
}

} // namespace weylbranch
