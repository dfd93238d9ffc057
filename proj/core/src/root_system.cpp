#include "weylbranch/root_system.hpp"

#include "weylbranch/span_solver.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace weylbranch {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t weyl_order_of(Family f, int rank) {
    switch (f) {
    case Family::A: return factorial(rank + 1);
    case Family::B:
    case Family::C: return factorial(rank) << rank;
    case Family::D: return factorial(rank) << (rank - 1);
    }
    throw std::logic_error("unreachable family");
}

} // namespace

RootSystem::RootSystem(Family family, int rank) : family_(family), rank_(rank) {
    switch (family_) {
    case Family::A:
        if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
        break;
    case Family::B:
        if (rank < 2) throw std::invalid_argument("type B requires rank >= 2");
        break;
    case Family::C:
        if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
        break;
    case Family::D:
        if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
        break;
    }
    if (rank > 16) throw std::invalid_argument("rank > 16 not supported");

    const int n = rank_;
    ambient_dim_ = (family_ == Family::A) ? n + 1 : n;
    const int d = ambient_dim_;

    auto eps = [d](int k) { return Weight::eps(d, k); };
    auto diff = [&](int i, int j) { return canonical(raw_sub(eps(i), eps(j))); };
    auto sum = [&](int i, int j) { return canonical(raw_add(eps(i), eps(j))); };

    // simple roots, Bourbaki order
    for (int i = 1; i < ((family_ == Family::A) ? n + 1 : n); ++i)
        simple_.push_back(diff(i, i + 1));
    switch (family_) {
    case Family::A: break;
    case Family::B: simple_.push_back(canonical(eps(n))); break;
    case Family::C: simple_.push_back(canonical(raw_scaled(eps(n), 2))); break;
    case Family::D: simple_.push_back(sum(n - 1, n)); break;
    }

    // positive roots
    if (family_ == Family::A) {
        for (int i = 1; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 1; ++j)
                positive_.push_back(diff(i, j));
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                positive_.push_back(diff(i, j));
                if (family_ != Family::A) positive_.push_back(sum(i, j));
            }
        if (family_ == Family::B)
            for (int i = 1; i <= n; ++i) positive_.push_back(canonical(eps(i)));
        if (family_ == Family::C)
            for (int i = 1; i <= n; ++i) positive_.push_back(canonical(raw_scaled(eps(i), 2)));
    }
    const std::size_t expected_count =
        family_ == Family::A ? static_cast<std::size_t>(n) * (n + 1) / 2
        : family_ == Family::D ? static_cast<std::size_t>(n) * (n - 1)
                               : static_cast<std::size_t>(n) * n;
    if (positive_.size() != expected_count)
        throw std::logic_error("positive root count mismatch");

    for (const Weight& a : positive_) {
        root_set_.insert(a);
        root_set_.insert(negated(a));
    }

    // fundamental weights
    if (family_ == Family::A || family_ == Family::C || family_ == Family::B) {
        for (int i = 1; i <= n; ++i) {
            std::vector<Int> c(d, 0);
            for (int k = 0; k < i; ++k) c[k] = 2;
            fundamental_.push_back(canonical(Weight(std::move(c))));
        }
        if (family_ == Family::B)
            fundamental_.back() = canonical(Weight(std::vector<Int>(d, 1)));
    } else { // D
        for (int i = 1; i <= n - 2; ++i) {
            std::vector<Int> c(d, 0);
            for (int k = 0; k < i; ++k) c[k] = 2;
            fundamental_.push_back(canonical(Weight(std::move(c))));
        }
        std::vector<Int> spin_minus(d, 1), spin_plus(d, 1);
        spin_minus[d - 1] = -1;
        fundamental_.push_back(canonical(Weight(std::move(spin_minus))));
        fundamental_.push_back(canonical(Weight(std::move(spin_plus))));
    }

    // <w_i, a_j^v> = delta_ij
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pairing(fundamental_[i], simple_[j]) != (i == j ? 1 : 0))
                throw std::logic_error("fundamental/coroot duality violated");

    // rho two ways: sum of fundamentals and half the positive-root sum
    Weight rho_f = Weight::zero(d);
    for (const Weight& w : fundamental_) rho_f = raw_add(rho_f, w);
    rho_f = canonical(rho_f);
    std::vector<Int> half(d, 0);
    for (const Weight& a : positive_)
        for (int k = 0; k < d; ++k) half[k] += a.doubled(k);
    for (int k = 0; k < d; ++k) {
        if (half[k] % 2 != 0) throw std::logic_error("positive-root sum not even");
        half[k] /= 2;
    }
    const Weight rho_h = canonical(Weight(std::move(half)));
    if (rho_f != rho_h) throw std::logic_error("rho mismatch between the two computations");
    rho_ = rho_f;

    // inverse Cartan, exact
    {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                m[j][i] = pairing(simple_[i], simple_[j]);  // column i = fund coords of a_i
        for (int r = 0; r < n; ++r) m[r][n + r] = 1;
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (m[r][col] != 0) { piv = r; break; }
            if (piv < 0) throw std::logic_error("Cartan matrix singular");
            std::swap(m[col], m[piv]);
            const Rational lead = m[col][col];
            for (auto& x : m[col]) x /= lead;
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                const Rational fct = m[r][col];
                for (int c2 = 0; c2 < 2 * n; ++c2) m[r][c2] -= fct * m[col][c2];
            }
        }
        boost::multiprecision::cpp_int den = 1;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                den = lcm(den, denominator(m[r][n + c]));
        inv_cartan_den_ = static_cast<Int>(den);
        inv_cartan_num_.assign(n, std::vector<Int>(n, 0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                inv_cartan_num_[r][c] = static_cast<Int>(
                    boost::multiprecision::cpp_int(numerator(m[r][n + c]) * (den / denominator(m[r][n + c]))));
    }
}

const RootSystem& RootSystem::get(Family family, int rank) {
    static std::mutex mtx;
    static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(family_char(family), rank);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<RootSystem>(family, rank)).first;
    return *it->second;
}

bool RootSystem::is_positive_root(const Weight& w) const {
    return std::find(positive_.begin(), positive_.end(), canonical(w)) != positive_.end();
}

bool RootSystem::is_root(const Weight& w) const { return root_set_.count(canonical(w)) != 0; }

Weight RootSystem::canonical(Weight w) const {
    if (w.dim() != ambient_dim_)
        throw std::invalid_argument("weight has wrong ambient dimension for " + name());
    if (family_ != Family::A) return w;
    std::vector<Int> d(w.doubled());
    const Int mn = *std::min_element(d.begin(), d.end());
    if (mn != 0)
        for (Int& x : d) x -= mn;
    return Weight(std::move(d));
}

Int RootSystem::pairing(const Weight& lam, const Weight& root) const {
    if (root.is_zero())
        throw std::invalid_argument("pairing against the zero vector is undefined");
    const Int num = 2 * form(lam, root);
    const Int den = form(root, root);
    if (num % den != 0)
        throw std::invalid_argument("weight is not integral against the given root");
    return num / den;
}

bool RootSystem::is_integral(const Weight& w) const {
    for (const Weight& a : simple_) {
        if (2 * form(w, a) % form(a, a) != 0) return false;
    }
    return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (const Weight& a : simple_)
        if (pairing(w, a) < 0) return false;
    return true;
}

std::vector<Int> RootSystem::to_fundamental(const Weight& w) const {
    std::vector<Int> c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = pairing(w, simple_[i]);
    return c;
}

Weight RootSystem::from_fundamental(std::span<const Int> coords) const {
    if (static_cast<int>(coords.size()) != rank_)
        throw std::invalid_argument("fundamental coordinate vector has wrong length for " + name());
    Weight w = Weight::zero(ambient_dim_);
    for (int i = 0; i < rank_; ++i)
        w = raw_add(w, raw_scaled(fundamental_[i], coords[i]));
    return canonical(w);
}

Weight RootSystem::reflect(const Weight& w, int i) const { return reflect_root(w, simple_[i]); }

Weight RootSystem::reflect_root(const Weight& w, const Weight& root) const {
    return canonical(raw_sub(w, raw_scaled(root, pairing(w, root))));
}

Weight RootSystem::dominant_representative(const Weight& w) const {
    Weight v = canonical(w);
    for (;;) {
        bool moved = false;
        for (int i = 0; i < rank_; ++i) {
            if (pairing(v, simple_[i]) < 0) {
                v = reflect(v, i);
                moved = true;
            }
        }
        if (!moved) return v;
    }
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    std::set<Weight> orbit;
    std::deque<Weight> frontier{canonical(w)};
    orbit.insert(frontier.front());
    while (!frontier.empty()) {
        Weight v = std::move(frontier.front());
        frontier.pop_front();
        for (int i = 0; i < rank_; ++i) {
            Weight r = reflect(v, i);
            if (orbit.insert(r).second) frontier.push_back(r);
        }
    }
    return orbit;
}

std::uint64_t RootSystem::weyl_order() const { return weyl_order_of(family_, rank_); }

std::uint64_t RootSystem::dominant_orbit_size(const Weight& w) const {
    std::vector<int> fixed;
    for (int i = 0; i < rank_; ++i) {
        const Int p = pairing(w, simple_[i]);
        if (p < 0) throw std::invalid_argument("dominant_orbit_size requires a dominant weight");
        if (p == 0) fixed.push_back(i);
    }
    return weyl_order() / parabolic_order(*this, fixed);
}

Int RootSystem::form_scale() const {
    return family_ == Family::A ? 4 * static_cast<Int>(ambient_dim_) : 4;
}

Int RootSystem::form(const Weight& v, const Weight& w) const {
    if (family_ != Family::A) return dot4(v, w);
    return static_cast<Int>(ambient_dim_) * dot4(v, w) -
           v.coord_sum_doubled() * w.coord_sum_doubled();
}

std::string RootSystem::name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

bool in_nonneg_root_span(const RootSystem& rs, const Weight& mu, const std::vector<Weight>& basis) {
    NonnegSpanSolver solver(basis, rs.ambient_dim(), rs.mod_all_ones());
    return solver.contains(rs.canonical(mu));
}

namespace {

// walk a path graph given by the adjacency matrix, starting at `start`
std::vector<int> walk_path(const std::vector<std::vector<bool>>& adj, int start, int count) {
    std::vector<int> order{start};
    std::vector<bool> used(adj.size(), false);
    used[start] = true;
    while (static_cast<int>(order.size()) < count) {
        const int cur = order.back();
        int next = -1;
        for (int k = 0; k < static_cast<int>(adj.size()); ++k) {
            if (!used[k] && adj[cur][k]) {
                if (next != -1) throw std::invalid_argument("root set is not a simple chain");
                next = k;
            }
        }
        if (next < 0) throw std::invalid_argument("root set diagram is disconnected");
        used[next] = true;
        order.push_back(next);
    }
    return order;
}

} // namespace

namespace {

// sum-zero representative for pattern tests in type-A ambients
Weight pattern_rep(const RootSystem& ambient, const Weight& w) {
    if (!ambient.mod_all_ones()) return w;
    std::vector<Int> d(w.doubled());
    Int sum = 0;
    for (Int x : d) sum += x;
    if (sum % static_cast<Int>(d.size()) != 0)
        throw std::invalid_argument("class has no sum-zero integral representative");
    const Int t = sum / static_cast<Int>(d.size());
    for (Int& x : d) x -= t;
    return Weight(std::move(d));
}

} // namespace

ComponentClass classify_simple_system(const RootSystem& ambient, const std::vector<Weight>& roots) {
    const int s = static_cast<int>(roots.size());
    if (s == 0) throw std::invalid_argument("cannot classify an empty root set");
    if (s == 1) return {Family::A, 1, {0}};

    std::vector<std::vector<bool>> adj(s, std::vector<bool>(s, false));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            adj[i][j] = adj[j][i] = ambient.form(roots[i], roots[j]) != 0;

    // connectivity
    {
        std::vector<bool> seen(s, false);
        std::deque<int> q{0};
        seen[0] = true;
        int found = 1;
        while (!q.empty()) {
            int c = q.front();
            q.pop_front();
            for (int k = 0; k < s; ++k)
                if (adj[c][k] && !seen[k]) { seen[k] = true; ++found; q.push_back(k); }
        }
        if (found != s) throw std::invalid_argument("root set is not connected");
    }

    // 4 * squared length; roots always give an exact value in {4, 8, 16}
    std::vector<Int> norm(s);
    for (int i = 0; i < s; ++i) {
        const Int f = 4 * ambient.form(roots[i], roots[i]);
        if (f % ambient.form_scale() != 0)
            throw std::invalid_argument("non-classical component: fractional root length");
        norm[i] = f / ambient.form_scale();
    }

    int short_idx = -1, long_idx = -1;
    for (int i = 0; i < s; ++i) {
        if (norm[i] == 4) {
            if (short_idx >= 0) throw std::invalid_argument("non-classical component: two short e_i roots");
            short_idx = i;
        } else if (norm[i] == 16) {
            if (long_idx >= 0) throw std::invalid_argument("non-classical component: two long 2e_i roots");
            long_idx = i;
        } else if (norm[i] != 8) {
            throw std::invalid_argument("non-classical component: unexpected root length");
        }
    }
    if (short_idx >= 0 && long_idx >= 0)
        throw std::invalid_argument("non-classical component: mixed short/long distinguished roots");

    std::vector<int> degree(s, 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (adj[i][j]) ++degree[i];

    auto endpoints = [&]() {
        std::vector<int> ends;
        for (int i = 0; i < s; ++i)
            if (degree[i] == 1) ends.push_back(i);
        return ends;
    };

    ComponentClass out;
    out.rank = s;

    if (short_idx >= 0 || long_idx >= 0) {
        const int dist = short_idx >= 0 ? short_idx : long_idx;
        out.family = short_idx >= 0 ? Family::B : Family::C;
        auto ends = endpoints();
        if (ends.size() != 2 || (ends[0] != dist && ends[1] != dist))
            throw std::invalid_argument("non-classical component: distinguished root not terminal");
        const int start = ends[0] == dist ? ends[1] : ends[0];
        out.order = walk_path(adj, start, s);
        if (out.order.back() != dist)
            throw std::invalid_argument("non-classical component: distinguished root not terminal");
    } else {
        // all roots of squared length 2: type A unless a spin pair is present
        int pa = -1, pb = -1;
        for (int i = 0; i < s && pa < 0; ++i)
            for (int j = i + 1; j < s; ++j) {
                const Weight sum = raw_add(pattern_rep(ambient, roots[i]), pattern_rep(ambient, roots[j]));
                int nonzero = 0;
                for (Int x : sum.doubled())
                    if (x != 0) ++nonzero;
                if (nonzero == 1) { pa = i; pb = j; break; }
            }
        if (pa < 0) {
            out.family = Family::A;
            auto ends = endpoints();
            if (ends.size() != 2) throw std::invalid_argument("root set is not a simple chain");
            const int start = roots[ends[0]] > roots[ends[1]] ? ends[0] : ends[1];
            out.order = walk_path(adj, start, s);
        } else {
            if (s < 3) throw std::invalid_argument("non-classical component: spin pair of rank < 3");
            out.family = Family::D;
            // the sum root (all coordinates nonnegative) takes the last node
            const bool a_is_sum =
                std::all_of(roots[pa].doubled().begin(), roots[pa].doubled().end(),
                            [](Int x) { return x >= 0; });
            const int sum_idx = a_is_sum ? pa : pb;
            const int dif_idx = a_is_sum ? pb : pa;
            int center = -1;
            for (int k = 0; k < s; ++k)
                if (k != pa && k != pb && adj[k][pa] && adj[k][pb]) center = k;
            if (center < 0) throw std::invalid_argument("non-classical component: spin pair without fork node");
            if (s == 3) {
                out.order = {center, dif_idx, sum_idx};
            } else {
                std::vector<std::vector<bool>> chain_adj = adj;
                for (int k = 0; k < s; ++k)
                    chain_adj[pa][k] = chain_adj[k][pa] = chain_adj[pb][k] = chain_adj[k][pb] = false;
                int start = -1;
                for (int k = 0; k < s; ++k) {
                    if (k == pa || k == pb || k == center) continue;
                    int deg = 0;
                    for (int k2 = 0; k2 < s; ++k2)
                        if (chain_adj[k][k2]) ++deg;
                    if (deg == 1) {
                        if (start >= 0) throw std::invalid_argument("root set diagram is not a D chain");
                        start = k;
                    }
                }
                if (start < 0) throw std::invalid_argument("root set diagram is not a D chain");
                out.order = walk_path(chain_adj, start, s - 2);
                if (out.order.back() != center)
                    throw std::invalid_argument("root set diagram is not a D chain");
                out.order.push_back(dif_idx);
                out.order.push_back(sum_idx);
            }
        }
    }

    // the reordered Cartan matrix must equal the standard one exactly
    const RootSystem& std_rs = RootSystem::get(out.family, out.rank);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            const Int got = ambient.pairing(roots[out.order[j]], roots[out.order[i]]);
            const Int want = std_rs.pairing(std_rs.simple_root(j), std_rs.simple_root(i));
            if (got != want)
                throw std::invalid_argument("non-classical component: Cartan matrix mismatch");
        }
    return out;
}

std::uint64_t parabolic_order(const RootSystem& ambient, const std::vector<int>& subset) {
    if (subset.empty()) return 1;
    const int m = static_cast<int>(subset.size());
    std::vector<bool> assigned(m, false);
    std::uint64_t order = 1;
    for (int i = 0; i < m; ++i) {
        if (assigned[i]) continue;
        // grow the connected component of subset[i]
        std::vector<int> comp{i};
        assigned[i] = true;
        for (std::size_t h = 0; h < comp.size(); ++h) {
            for (int j = 0; j < m; ++j) {
                if (assigned[j]) continue;
                if (ambient.form(ambient.simple_root(subset[comp[h]]),
                                 ambient.simple_root(subset[j])) != 0) {
                    assigned[j] = true;
                    comp.push_back(j);
                }
            }
        }
        std::vector<Weight> roots;
        roots.reserve(comp.size());
        for (int k : comp) roots.push_back(ambient.simple_root(subset[k]));
        const ComponentClass cc = classify_simple_system(ambient, roots);
        order *= RootSystem::get(cc.family, cc.rank).weyl_order();
    }
    return order;
}

} // namespace weylbranch
