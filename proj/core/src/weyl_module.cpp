#include "weylbranch/weyl_module.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace weylbranch {

CurrentWeight::CurrentWeight(int rank, std::map<std::string, std::vector<Int>> entries)
    : rank_(rank), entries_(std::move(entries)) {
    for (const auto& [label, coords] : entries_) {
        if (static_cast<int>(coords.size()) != rank_)
            throw std::invalid_argument("current weight entry '" + label + "' has wrong coordinate count");
        bool nonzero = false;
        for (Int c : coords) {
            if (c < 0)
                throw std::invalid_argument("current weight entry '" + label + "' is not dominant");
            if (c > 0) nonzero = true;
        }
        if (!nonzero)
            throw std::invalid_argument("current weight entry '" + label + "' is zero; zero-valued points are not stored");
    }
}

std::set<std::string> CurrentWeight::support() const {
    std::set<std::string> s;
    for (const auto& [label, coords] : entries_) s.insert(label);
    return s;
}

std::vector<Int> CurrentWeight::weight() const {
    std::vector<Int> total(rank_, 0);
    for (const auto& [label, coords] : entries_)
        for (int i = 0; i < rank_; ++i) total[i] += coords[i];
    return total;
}

CurrentWeight project_current_weight(const LeviSubalgebra& a, const CurrentWeight& psi) {
    const RootSystem& rs = a.ambient();
    if (psi.rank() != rs.rank())
        throw std::invalid_argument("current weight does not live over the Levi's ambient");
    std::map<std::string, std::vector<Int>> projected;
    for (const auto& [label, coords] : psi.entries()) {
        const std::vector<Int> image = a.project(rs.from_fundamental(coords));
        if (std::any_of(image.begin(), image.end(), [](Int c) { return c != 0; }))
            projected.emplace(label, image);
    }
    return CurrentWeight(a.rank(), std::move(projected));
}

std::vector<Weight> fundamental_weyl_chain(const RootSystem& rs, int i) {
    const int n = rs.rank();
    if (i < 1 || i > n)
        throw std::invalid_argument("fundamental node index out of range for " + rs.name());
    std::vector<Weight> chain;
    const bool descends = (rs.family() == Family::B && i < n) ||
                          (rs.family() == Family::D && i < n - 1);
    if (!descends) {
        chain.push_back(rs.fundamental_weight(i - 1));
        return chain;
    }
    for (int k = i; k >= 1; k -= 2) chain.push_back(rs.fundamental_weight(k - 1));
    if (i % 2 == 0) chain.push_back(Weight::zero(rs.ambient_dim()));
    return chain;
}

namespace {

std::shared_mutex& weyl_cache_mutex() {
    static std::shared_mutex m;
    return m;
}

std::map<std::pair<std::string, std::vector<Int>>, std::unique_ptr<Character>>& weyl_char_cache() {
    static std::map<std::pair<std::string, std::vector<Int>>, std::unique_ptr<Character>> cache;
    return cache;
}

const Character* weyl_cache_find(const std::pair<std::string, std::vector<Int>>& key) {
    std::shared_lock lock(weyl_cache_mutex());
    auto it = weyl_char_cache().find(key);
    return it == weyl_char_cache().end() ? nullptr : it->second.get();
}

const Character& weyl_cache_store(const std::pair<std::string, std::vector<Int>>& key, Character&& value) {
    std::unique_lock lock(weyl_cache_mutex());
    auto it = weyl_char_cache().find(key);
    if (it == weyl_char_cache().end())
        it = weyl_char_cache().emplace(key, std::make_unique<Character>(std::move(value))).first;
    return *it->second;
}

} // namespace

const Character& fundamental_weyl_character(const RootSystem& rs, int i) {
    std::vector<Int> tag(rs.rank(), 0);
    tag.at(i - 1) = 1;
    const std::pair<std::string, std::vector<Int>> key{"W:" + rs.name(), tag};
    if (const Character* hit = weyl_cache_find(key)) return *hit;

    Character out(WeightLattice::single(rs));
    for (const Weight& top : fundamental_weyl_chain(rs, i))
        for (const auto& [w, m] : irreducible_character(rs, top).mults())
            out.add(w, m);
    return weyl_cache_store(key, std::move(out));
}

BigInt fundamental_weyl_dim(const RootSystem& rs, int i) {
    BigInt d = 0;
    for (const Weight& top : fundamental_weyl_chain(rs, i)) d += dim_irreducible(rs, top);
    return d;
}

const Character& local_weyl_character(const RootSystem& rs, std::span<const Int> lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("weight coordinate count does not match the rank of " + rs.name());
    for (Int m : lambda)
        if (m < 0) throw std::invalid_argument("local Weyl modules require a dominant weight");
    const std::pair<std::string, std::vector<Int>> key{"W:" + rs.name(),
                                                       std::vector<Int>(lambda.begin(), lambda.end())};
    if (const Character* hit = weyl_cache_find(key)) return *hit;

    const WeightLattice& lat = WeightLattice::single(rs);
    Character out(lat);
    out.add(lat.zero(), 1);
    for (int i = 1; i <= rs.rank(); ++i)
        for (Int rep = 0; rep < lambda[i - 1]; ++rep)
            out = tensor_character(out, fundamental_weyl_character(rs, i));
    return weyl_cache_store(key, std::move(out));
}

Character local_weyl_character(const LeviSubalgebra& a, std::span<const Int> lambda) {
    const WeightLattice& lat = a.lattice();
    if (static_cast<int>(lambda.size()) != lat.rank())
        throw std::invalid_argument("weight coordinate count does not match the Levi rank");
    Character out(lat);
    out.add(lat.zero(), 1);
    int at = 0;
    for (int b = 0; b < lat.block_count(); ++b) {
        const RootSystem& block = lat.block(b);
        const Character& blk = local_weyl_character(block, lambda.subspan(at, block.rank()));
        Character next(lat);
        for (const auto& [w, m] : out.mults())
            for (const auto& [bw, bm] : blk.mults())
                next.add(lat.add(w, lat.embed(b, bw)), m * bm);
        out = std::move(next);
        at += block.rank();
    }
    return out;
}

BigInt local_weyl_dim(const RootSystem& rs, std::span<const Int> lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("weight coordinate count does not match the rank of " + rs.name());
    BigInt d = 1;
    for (int i = 1; i <= rs.rank(); ++i) {
        if (lambda[i - 1] < 0)
            throw std::invalid_argument("local Weyl modules require a dominant weight");
        for (Int rep = 0; rep < lambda[i - 1]; ++rep) d *= fundamental_weyl_dim(rs, i);
    }
    return d;
}

BigInt local_weyl_dim(const WeightLattice& lat, std::span<const Int> lambda) {
    if (static_cast<int>(lambda.size()) != lat.rank())
        throw std::invalid_argument("weight coordinate count does not match the lattice rank");
    BigInt d = 1;
    int at = 0;
    for (int b = 0; b < lat.block_count(); ++b) {
        d *= local_weyl_dim(lat.block(b), lambda.subspan(at, lat.block(b).rank()));
        at += lat.block(b).rank();
    }
    return d;
}

BigInt local_weyl_dim(const LeviSubalgebra& a, std::span<const Int> lambda) {
    return local_weyl_dim(a.lattice(), lambda);
}

const Character& local_weyl_character(const RootSystem& rs, const CurrentWeight& psi) {
    const std::vector<Int> wt = psi.weight();
    return local_weyl_character(rs, wt);
}

BigInt local_weyl_dim(const RootSystem& rs, const CurrentWeight& psi) {
    const std::vector<Int> wt = psi.weight();
    return local_weyl_dim(rs, wt);
}

Int GlobalWeylDescriptor::variable_count() const {
    Int total = 0;
    for (const auto& [node, m] : variable_multiplicities) total += m;
    return total;
}

GlobalWeylDescriptor global_weyl_descriptor(const RootSystem& rs, std::span<const Int> lambda) {
    GlobalWeylDescriptor out;
    out.lambda.assign(lambda.begin(), lambda.end());
    for (int i = 1; i <= rs.rank(); ++i) {
        const Int m = lambda[i - 1];
        if (m < 0) throw std::invalid_argument("global Weyl modules require a dominant weight");
        if (m > 0) out.variable_multiplicities.emplace_back(i, m);
    }
    out.rank = local_weyl_dim(rs, lambda);
    return out;
}

} // namespace weylbranch
