#include "weylbranch/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylbranch {

char family_char(Family f) { return static_cast<char>(f); }

Family parse_family(char c) {
    switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default:
        throw std::invalid_argument(std::string("unknown family '") + c + "': expected A, B, C or D");
    }
}

Weight Weight::eps(int dim, int k) {
    if (k < 1 || k > dim)
        throw std::invalid_argument("epsilon index out of range");
    std::vector<Int> d(dim, 0);
    d[k - 1] = 2;
    return Weight(std::move(d));
}

bool Weight::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](Int x) { return x == 0; });
}

Int Weight::coord_sum_doubled() const {
    Int s = 0;
    for (Int x : d_) s += x;
    return s;
}

Weight raw_add(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("weight dimension mismatch");
    std::vector<Int> d(a.doubled());
    for (int i = 0; i < b.dim(); ++i) d[i] += b.doubled(i);
    return Weight(std::move(d));
}

Weight raw_sub(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("weight dimension mismatch");
    std::vector<Int> d(a.doubled());
    for (int i = 0; i < b.dim(); ++i) d[i] -= b.doubled(i);
    return Weight(std::move(d));
}

Weight raw_scaled(const Weight& a, Int k) {
    std::vector<Int> d(a.doubled());
    for (Int& x : d) x *= k;
    return Weight(std::move(d));
}

Weight raw_negated(const Weight& a) { return raw_scaled(a, -1); }

Int dot4(const Weight& a, const Weight& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("weight dimension mismatch");
    Int s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a.doubled(i) * b.doubled(i);
    return s;
}

} // namespace weylbranch
