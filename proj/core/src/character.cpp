#include "weylbranch/character.hpp"

#include "weylbranch/levi.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace weylbranch {

Int Character::mult(const Weight& w) const {
    auto it = mults_.find(w);
    return it == mults_.end() ? 0 : it->second;
}

void Character::add(const Weight& w, Int m) {
    if (m == 0) return;
    auto [it, inserted] = mults_.emplace(w, m);
    if (!inserted) {
        it->second += m;
        if (it->second == 0) mults_.erase(it);
    }
}

BigInt Character::mass() const {
    BigInt total = 0;
    for (const auto& [w, m] : mults_) total += m;
    return total;
}

std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lambda_in) {
    const Weight lambda = rs.canonical(lambda_in);
    if (!rs.is_integral(lambda) || !rs.is_dominant(lambda))
        throw std::invalid_argument("irreducible characters require a dominant integral weight");

    const int n = rs.rank();
    const std::vector<Int> lf = rs.to_fundamental(lambda);

    // box bounds from the inverse Cartan matrix (entrywise positive)
    std::vector<Int> bound(n, 0);
    for (int i = 0; i < n; ++i) {
        Int num = 0;
        for (int j = 0; j < n; ++j) num += rs.inverse_cartan_num()[i][j] * lf[j];
        bound[i] = num >= 0 ? num / rs.inverse_cartan_den() : 0;
    }

    // Cartan matrix columns = fundamental coordinates of the simple roots
    std::vector<std::vector<Int>> cart(n, std::vector<Int>(n));
    for (int j = 0; j < n; ++j) {
        const std::vector<Int> col = rs.to_fundamental(rs.simple_root(j));
        for (int i = 0; i < n; ++i) cart[i][j] = col[i];
    }

    struct Entry {
        Int height;
        Weight mu;
    };
    std::vector<Entry> entries;
    std::vector<Int> c(n, 0);
    for (;;) {
        Int height = 0;
        for (int i = 0; i < n; ++i) height += c[i];
        bool dominant = true;
        for (int i = 0; i < n && dominant; ++i) {
            Int fi = lf[i];
            for (int j = 0; j < n; ++j) fi -= cart[i][j] * c[j];
            dominant = fi >= 0;
        }
        if (dominant) {
            Weight mu = lambda;
            for (int j = 0; j < n; ++j)
                if (c[j] != 0) mu = raw_sub(mu, raw_scaled(rs.simple_root(j), c[j]));
            entries.push_back({height, rs.canonical(mu)});
        }
        int k = 0;
        while (k < n && c[k] == bound[k]) c[k++] = 0;
        if (k == n) break;
        ++c[k];
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.height != b.height ? a.height < b.height : a.mu < b.mu;
    });

    std::map<Weight, Int> table;
    const Weight lr = rs.canonical(raw_add(lambda, rs.rho()));
    const Int top_norm = rs.form(lr, lr);
    for (const Entry& e : entries) {
        if (e.height == 0) {
            table[e.mu] = 1;
            continue;
        }
        Int num = 0;
        for (const Weight& alpha : rs.positive_roots()) {
            Weight nu = e.mu;
            for (;;) {
                nu = rs.add(nu, alpha);
                auto it = table.find(rs.dominant_representative(nu));
                if (it == table.end()) break;
                num += it->second * rs.form(nu, alpha);
            }
        }
        const Weight mr = rs.canonical(raw_add(e.mu, rs.rho()));
        const Int den = top_norm - rs.form(mr, mr);
        if (den <= 0 || (2 * num) % den != 0)
            throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
        table[e.mu] = 2 * num / den;
    }
    return table;
}

BigInt freudenthal_mass(const RootSystem& rs, const Weight& lambda) {
    BigInt total = 0;
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        total += BigInt(m) * rs.dominant_orbit_size(mu);
    return total;
}

namespace {

std::shared_mutex& char_cache_mutex() {
    static std::shared_mutex m;
    return m;
}

using CharKey = std::pair<std::string, Weight>;

std::map<CharKey, std::unique_ptr<Character>>& char_cache() {
    static std::map<CharKey, std::unique_ptr<Character>> cache;
    return cache;
}

const Character* cache_find(const CharKey& key) {
    std::shared_lock lock(char_cache_mutex());
    auto it = char_cache().find(key);
    return it == char_cache().end() ? nullptr : it->second.get();
}

const Character& cache_store(const CharKey& key, Character&& value) {
    std::unique_lock lock(char_cache_mutex());
    auto it = char_cache().find(key);
    if (it == char_cache().end())
        it = char_cache().emplace(key, std::make_unique<Character>(std::move(value))).first;
    return *it->second;
}

} // namespace

const Character& irreducible_character(const RootSystem& rs, const Weight& lambda) {
    const WeightLattice& lat = WeightLattice::single(rs);
    const CharKey key{lat.name(), rs.canonical(lambda)};
    if (const Character* hit = cache_find(key)) return *hit;

    Character out(lat);
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        for (const Weight& w : rs.weyl_orbit(mu))
            out.add(w, m);
    return cache_store(key, std::move(out));
}

const Character& irreducible_character(const WeightLattice& lat, const Weight& lambda) {
    if (lat.block_count() == 1)
        return irreducible_character(lat.block(0), lat.slice(0, lambda));
    const CharKey key{lat.name(), lat.canonical(lambda)};
    if (const Character* hit = cache_find(key)) return *hit;

    Character out(lat);
    out.add(lat.zero(), 1);
    for (int b = 0; b < lat.block_count(); ++b) {
        const Character& blk = irreducible_character(lat.block(b), lat.slice(b, lambda));
        Character next(lat);
        for (const auto& [w, m] : out.mults())
            for (const auto& [bw, bm] : blk.mults())
                next.add(lat.add(w, lat.embed(b, bw)), m * bm);
        out = std::move(next);
    }
    return cache_store(key, std::move(out));
}

BigInt dim_irreducible(const RootSystem& rs, const Weight& lambda_in) {
    const Weight lambda = rs.canonical(lambda_in);
    if (!rs.is_integral(lambda) || !rs.is_dominant(lambda))
        throw std::invalid_argument("the Weyl dimension formula requires a dominant integral weight");
    const Weight lr = rs.canonical(raw_add(lambda, rs.rho()));
    BigInt num = 1, den = 1;
    for (const Weight& alpha : rs.positive_roots()) {
        num *= rs.form(lr, alpha);
        den *= rs.form(rs.rho(), alpha);
    }
    if (num % den != 0)
        throw std::logic_error("Weyl dimension formula did not divide exactly");
    return num / den;
}

BigInt dim_irreducible(const WeightLattice& lat, const Weight& lambda) {
    BigInt d = 1;
    for (int b = 0; b < lat.block_count(); ++b)
        d *= dim_irreducible(lat.block(b), lat.slice(b, lambda));
    return d;
}

Character tensor_character(const Character& c1, const Character& c2) {
    if (!c1.lattice().same_as(c2.lattice()))
        throw std::invalid_argument("tensor_character: ambient lattice mismatch");
    const WeightLattice& lat = c1.lattice();
    Character out(lat);
    for (const auto& [w1, m1] : c1.mults())
        for (const auto& [w2, m2] : c2.mults())
            out.add(lat.add(w1, w2), m1 * m2);
    return out;
}

std::vector<std::pair<Weight, Int>> decompose(const Character& c) {
    const WeightLattice& lat = c.lattice();
    std::map<Weight, Int> work(c.mults());
    std::vector<std::pair<Weight, Int>> out;
    for (;;) {
        bool found = false;
        Weight pivot;
        Rational pivot_norm;
        bool any_positive = false;
        for (const auto& [w, m] : work) {
            if (m <= 0) {
                if (m < 0) throw std::invalid_argument("not a module character: negative multiplicity");
                continue;
            }
            any_positive = true;
            if (!lat.is_dominant(w)) continue;
            const Rational nw = lat.norm(w);
            if (!found || nw > pivot_norm || (nw == pivot_norm && w > pivot)) {
                found = true;
                pivot = w;
                pivot_norm = nw;
            }
        }
        if (!any_positive) break;
        if (!found)
            throw std::invalid_argument("not a module character: positive part has no dominant weight");
        const Int count = work.at(pivot);
        const Character& irr = irreducible_character(lat, pivot);
        for (const auto& [w, m] : irr.mults()) {
            auto [it, inserted] = work.emplace(w, -count * m);
            if (!inserted) it->second -= count * m;
            if (it->second < 0)
                throw std::invalid_argument("not a module character: negative multiplicity");
            if (it->second == 0) work.erase(it);
        }
        out.emplace_back(pivot, count);
    }
    return out;
}

Character restrict_character(const Character& c, const LeviSubalgebra& a) {
    if (!c.lattice().same_as(WeightLattice::single(a.ambient())))
        throw std::invalid_argument("restrict_character: character does not live over the Levi's ambient");
    const WeightLattice& target = a.lattice();
    Character out(target);
    for (const auto& [w, m] : c.mults())
        out.add(a.embed_fundamental(a.project(w)), m);
    return out;
}

std::map<std::vector<Int>, Int> branching_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                         const LeviSubalgebra& a) {
    const Character restricted = restrict_character(irreducible_character(rs, lambda), a);
    std::map<std::vector<Int>, Int> out;
    BigInt check = 0;
    for (const auto& [tau, m] : decompose(restricted)) {
        out[a.lattice().to_fundamental(tau)] += m;
        check += BigInt(m) * dim_irreducible(a.lattice(), tau);
    }
    if (check != dim_irreducible(rs, lambda))
        throw std::logic_error("branching multiplicities do not sum to the ambient dimension");
    return out;
}

bool is_weyl_invariant(const Character& c) {
    const WeightLattice& lat = c.lattice();
    for (int flat = 0; flat < lat.rank(); ++flat)
        for (const auto& [w, m] : c.mults())
            if (c.mult(lat.reflect(w, flat)) != m) return false;
    return true;
}

} // namespace weylbranch
