#include "weylbranch/text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace weylbranch {

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_index(const std::string& tok, const std::string& what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(c); }))
        throw std::invalid_argument("bad " + what + " '" + tok + "'");
    return std::stoi(tok);
}

// sum-zero representative for epsilon rendering in type-A ambients
std::vector<Int> display_coords(const RootSystem& rs, const Weight& w) {
    std::vector<Int> d(w.doubled());
    if (rs.mod_all_ones()) {
        Int sum = 0;
        for (Int x : d) sum += x;
        if (sum % static_cast<Int>(d.size()) == 0) {
            const Int t = sum / static_cast<Int>(d.size());
            for (Int& x : d) x -= t;
        }
    }
    return d;
}

} // namespace

const RootSystem& parse_system(const std::string& s_in) {
    const std::string s = strip(s_in);
    if (s.size() < 2)
        throw std::invalid_argument("bad root system '" + s + "': expected e.g. A2, B3, C4, D4");
    const Family fam = parse_family(s[0]);
    const int rank = parse_index(s.substr(1), "rank");
    return RootSystem::get(fam, rank);
}

Weight parse_root_expr(const RootSystem& rs, const std::string& s_in) {
    const std::string s = strip(s_in);
    const auto fail = [&]() -> void {
        throw std::invalid_argument("bad root expression '" + s +
                                    "': expected eK, 2eK, eK+eL or eK-eL with K < L");
    };
    std::size_t pos = 0;
    Int lead = 1;
    if (!s.empty() && s[0] == '2') {
        lead = 2;
        pos = 1;
    }
    if (pos >= s.size() || s[pos] != 'e') fail();
    ++pos;
    std::size_t num_end = pos;
    while (num_end < s.size() && std::isdigit(s[num_end])) ++num_end;
    if (num_end == pos) fail();
    const int k = parse_index(s.substr(pos, num_end - pos), "epsilon index");
    if (k < 1 || k > rs.ambient_dim())
        throw std::invalid_argument("epsilon index out of range in '" + s + "'");
    Weight w = raw_scaled(Weight::eps(rs.ambient_dim(), k), lead);
    if (num_end < s.size()) {
        if (lead == 2) fail();
        const char op = s[num_end];
        if (op != '+' && op != '-') fail();
        const std::string rest = s.substr(num_end + 1);
        if (rest.empty() || rest[0] != 'e') fail();
        const int l = parse_index(rest.substr(1), "epsilon index");
        if (l < 1 || l > rs.ambient_dim())
            throw std::invalid_argument("epsilon index out of range in '" + s + "'");
        if (k >= l)
            throw std::invalid_argument("bad root expression '" + s + "': indices must satisfy K < L");
        const Weight el = Weight::eps(rs.ambient_dim(), l);
        w = op == '+' ? raw_add(w, el) : raw_sub(w, el);
    }
    return rs.canonical(w);
}

std::vector<Weight> parse_root_list(const RootSystem& rs, const std::string& s) {
    std::vector<Weight> out;
    for (const std::string& part : split(s, ','))
        out.push_back(parse_root_expr(rs, strip(part)));
    return out;
}

std::string render_root_eps(const RootSystem& rs, const Weight& root) {
    const std::vector<Int> d = display_coords(rs, root);
    std::vector<std::pair<int, Int>> terms;   // (1-based index, coefficient)
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        if (d[i] == 0) continue;
        if (d[i] % 2 != 0) throw std::invalid_argument("not a root: half-integral coordinates");
        terms.emplace_back(i + 1, d[i] / 2);
    }
    if (terms.size() == 1 && terms[0].second == 1)
        return "e" + std::to_string(terms[0].first);
    if (terms.size() == 1 && terms[0].second == 2)
        return "2e" + std::to_string(terms[0].first);
    if (terms.size() == 2 && terms[0].second == 1 && (terms[1].second == 1 || terms[1].second == -1))
        return "e" + std::to_string(terms[0].first) + (terms[1].second == 1 ? "+" : "-") +
               "e" + std::to_string(terms[1].first);
    throw std::invalid_argument("weight is not a positive root of " + rs.name());
}

std::string render_weight_eps(const RootSystem& rs, const Weight& w) {
    const std::vector<Int> d = display_coords(rs, w);
    const bool halves = std::any_of(d.begin(), d.end(), [](Int x) { return x % 2 != 0; });
    std::string body;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
        const Int c = halves ? d[i] : d[i] / 2;
        if (c == 0) continue;
        if (!body.empty() || c < 0) body += c < 0 ? "-" : "+";
        const Int a = c < 0 ? -c : c;
        if (a != 1) body += std::to_string(a);
        body += "e" + std::to_string(i + 1);
    }
    if (body.empty()) return "0";
    return halves ? "(" + body + ")/2" : body;
}

std::vector<Int> parse_fund_coords(const std::string& s) {
    std::vector<Int> out;
    for (std::string part : split(s, ',')) {
        part = strip(part);
        bool neg = false;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
            neg = part[0] == '-';
            part = part.substr(1);
        }
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(c); }))
            throw std::invalid_argument("bad weight coordinates '" + s + "': expected e.g. 0,1,0");
        const Int v = std::stoll(part);
        out.push_back(neg ? -v : v);
    }
    return out;
}

std::string render_fund_coords(std::span<const Int> coords) {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s;
}

std::map<std::string, std::vector<Int>> parse_current_weight_entries(const std::string& s) {
    std::map<std::string, std::vector<Int>> out;
    for (const std::string& part : split(s, ';')) {
        const std::string p = strip(part);
        if (p.empty()) continue;
        const std::size_t colon = p.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad current weight '" + s + "': expected label:coords;...");
        const std::string label = strip(p.substr(0, colon));
        if (label.empty())
            throw std::invalid_argument("bad current weight '" + s + "': empty point label");
        if (out.count(label))
            throw std::invalid_argument("bad current weight '" + s + "': duplicate label '" + label + "'");
        out[label] = parse_fund_coords(p.substr(colon + 1));
    }
    return out;
}

std::string render_current_weight_entries(const std::map<std::string, std::vector<Int>>& entries) {
    std::string s;
    for (const auto& [label, coords] : entries) {
        if (!s.empty()) s += ";";
        s += label + ":" + render_fund_coords(coords);
    }
    return s;
}

} // namespace weylbranch
