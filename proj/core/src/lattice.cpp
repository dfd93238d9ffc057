#include "weylbranch/lattice.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace weylbranch {

WeightLattice::WeightLattice(std::vector<const RootSystem*> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("weight lattice needs at least one block");
    for (const RootSystem* rs : blocks_) {
        offsets_.push_back(dim_);
        dim_ += rs->ambient_dim();
        rank_ += rs->rank();
    }
}

const WeightLattice& WeightLattice::of(const std::vector<const RootSystem*>& blocks) {
    static std::mutex mtx;
    static std::map<std::vector<std::pair<char, int>>, std::unique_ptr<WeightLattice>> registry;
    std::vector<std::pair<char, int>> key;
    key.reserve(blocks.size());
    for (const RootSystem* rs : blocks) key.emplace_back(family_char(rs->family()), rs->rank());
    std::lock_guard<std::mutex> lock(mtx);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::make_unique<WeightLattice>(blocks)).first;
    return *it->second;
}

bool WeightLattice::same_as(const WeightLattice& o) const {
    if (block_count() != o.block_count()) return false;
    for (int b = 0; b < block_count(); ++b)
        if (blocks_[b]->family() != o.blocks_[b]->family() || blocks_[b]->rank() != o.blocks_[b]->rank())
            return false;
    return true;
}

std::string WeightLattice::name() const {
    std::string s;
    for (int b = 0; b < block_count(); ++b) {
        if (b) s += " x ";
        s += blocks_[b]->name();
    }
    return s;
}

Weight WeightLattice::canonical(Weight w) const {
    if (w.dim() != dim_) throw std::invalid_argument("weight has wrong dimension for lattice " + name());
    std::vector<Int> d(w.doubled());
    for (int b = 0; b < block_count(); ++b) {
        const RootSystem& rs = *blocks_[b];
        if (!rs.mod_all_ones()) continue;
        Int mn = d[offsets_[b]];
        for (int k = 1; k < rs.ambient_dim(); ++k) mn = std::min(mn, d[offsets_[b] + k]);
        if (mn != 0)
            for (int k = 0; k < rs.ambient_dim(); ++k) d[offsets_[b] + k] -= mn;
    }
    return Weight(std::move(d));
}

Weight WeightLattice::embed(int b, const Weight& block_weight) const {
    const RootSystem& rs = *blocks_[b];
    if (block_weight.dim() != rs.ambient_dim())
        throw std::invalid_argument("block weight has wrong dimension");
    std::vector<Int> d(dim_, 0);
    for (int k = 0; k < rs.ambient_dim(); ++k) d[offsets_[b] + k] = block_weight.doubled(k);
    return canonical(Weight(std::move(d)));
}

Weight WeightLattice::slice(int b, const Weight& w) const {
    const RootSystem& rs = *blocks_[b];
    std::vector<Int> d(rs.ambient_dim());
    for (int k = 0; k < rs.ambient_dim(); ++k) d[k] = w.doubled(offsets_[b] + k);
    return rs.canonical(Weight(std::move(d)));
}

bool WeightLattice::is_dominant(const Weight& w) const {
    for (int b = 0; b < block_count(); ++b)
        if (!blocks_[b]->is_dominant(slice(b, w))) return false;
    return true;
}

std::pair<int, int> WeightLattice::flat_to_block(int flat) const {
    for (int b = 0; b < block_count(); ++b) {
        if (flat < blocks_[b]->rank()) return {b, flat};
        flat -= blocks_[b]->rank();
    }
    throw std::invalid_argument("flat simple-root index out of range");
}

Weight WeightLattice::reflect(const Weight& w, int flat) const {
    auto [b, i] = flat_to_block(flat);
    Weight s = blocks_[b]->reflect(slice(b, w), i);
    std::vector<Int> d(w.doubled());
    for (int k = 0; k < blocks_[b]->ambient_dim(); ++k) d[offsets_[b] + k] = s.doubled(k);
    return canonical(Weight(std::move(d)));
}

Rational WeightLattice::norm(const Weight& w) const {
    Rational total = 0;
    for (int b = 0; b < block_count(); ++b) {
        const Weight s = slice(b, w);
        total += Rational(blocks_[b]->form(s, s), blocks_[b]->form_scale());
    }
    return total;
}

Weight WeightLattice::from_fundamental(std::span<const Int> coords) const {
    if (static_cast<int>(coords.size()) != rank_)
        throw std::invalid_argument("fundamental coordinate vector has wrong length for " + name());
    std::vector<Int> d(dim_, 0);
    int at = 0;
    for (int b = 0; b < block_count(); ++b) {
        const RootSystem& rs = *blocks_[b];
        const Weight bw = rs.from_fundamental(coords.subspan(at, rs.rank()));
        for (int k = 0; k < rs.ambient_dim(); ++k) d[offsets_[b] + k] = bw.doubled(k);
        at += rs.rank();
    }
    return canonical(Weight(std::move(d)));
}

std::vector<Int> WeightLattice::to_fundamental(const Weight& w) const {
    std::vector<Int> out;
    out.reserve(rank_);
    for (int b = 0; b < block_count(); ++b) {
        const std::vector<Int> c = blocks_[b]->to_fundamental(slice(b, w));
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

bool WeightLattice::in_positive_root_span(const Weight& w) const {
    for (int b = 0; b < block_count(); ++b) {
        const RootSystem& rs = *blocks_[b];
        const std::vector<Int> f = rs.to_fundamental(slice(b, w));
        const auto& inv = rs.inverse_cartan_num();
        const Int den = rs.inverse_cartan_den();
        for (int i = 0; i < rs.rank(); ++i) {
            Int num = 0;
            for (int j = 0; j < rs.rank(); ++j) num += inv[i][j] * f[j];
            if (num % den != 0 || num / den < 0) return false;
        }
    }
    return true;
}

} // namespace weylbranch
