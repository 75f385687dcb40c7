#include "wedge/perm.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wedge {

Perm5 Perm5::from_images(const std::array<uint8_t, 5>& img) {
    std::array<bool, 5> seen{};
    for (uint8_t v : img) {
        if (v >= 5 || seen[v]) throw std::invalid_argument("Perm5: not a bijection of {0,...,4}");
        seen[v] = true;
    }
    Perm5 p;
    p.img_ = img;
    return p;
}

Perm5 compose(const Perm5& a, const Perm5& b) {
    std::array<uint8_t, 5> r;
    for (int i = 0; i < 5; ++i) r[i] = a(b(uint8_t(i)));
    return Perm5::from_images(r);
}

Perm5 inverse(const Perm5& g) {
    std::array<uint8_t, 5> r{};
    for (int i = 0; i < 5; ++i) r[g(uint8_t(i))] = uint8_t(i);
    return Perm5::from_images(r);
}

Perm5 conjugate(const Perm5& g, const Perm5& h) {
    return compose(compose(h, g), inverse(h));
}

int order(const Perm5& g) {
    int n = 1;
    Perm5 p = g;
    while (!(p == Perm5())) {
        p = compose(p, g);
        ++n;
    }
    return n;
}

bool is_even(const Perm5& g) {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (g(uint8_t(i)) > g(uint8_t(j))) ++inv;
    return inv % 2 == 0;
}

const std::vector<Perm5>& elements(Group g) {
    static const std::vector<Perm5> s5 = [] {
        std::vector<Perm5> out;
        std::array<uint8_t, 5> img{0, 1, 2, 3, 4};
        do {
            out.push_back(Perm5::from_images(img));
        } while (std::next_permutation(img.begin(), img.end()));
        return out;
    }();
    static const std::vector<Perm5> a5 = [] {
        std::vector<Perm5> out;
        for (const Perm5& p : s5)
            if (is_even(p)) out.push_back(p);
        return out;
    }();
    return g == Group::S5 ? s5 : a5;
}

std::vector<Perm5> elements_of_order(Group g, int r) {
    std::vector<Perm5> out;
    for (const Perm5& p : elements(g))
        if (order(p) == r) out.push_back(p);
    return out;
}

std::string to_string(SubgroupLabel label) {
    switch (label) {
        case SubgroupLabel::Trivial: return "trivial";
        case SubgroupLabel::C2: return "C2";
        case SubgroupLabel::C3: return "C3";
        case SubgroupLabel::C5: return "C5";
        case SubgroupLabel::V4: return "V4";
        case SubgroupLabel::S3ev: return "S3ev";
        case SubgroupLabel::C6Type: return "C6-type";
        case SubgroupLabel::A4: return "A4";
        case SubgroupLabel::DType: return "D-type";
        case SubgroupLabel::A5: return "A5";
        case SubgroupLabel::S5: return "S5";
        case SubgroupLabel::Other: return "other";
    }
    return "other";
}

std::vector<Perm5> closure_elements(const std::vector<Perm5>& gens) {
    if (gens.empty()) throw std::invalid_argument("closure_elements: empty generating set");
    std::set<Perm5> seen(gens.begin(), gens.end());
    seen.insert(Perm5());
    std::vector<Perm5> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Perm5 x = queue.back();
        queue.pop_back();
        for (const Perm5& g : gens) {
            Perm5 y = compose(g, x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return std::vector<Perm5>(seen.begin(), seen.end());
}

SubgroupId subgroup_closure(const std::vector<Perm5>& gens) {
    std::vector<Perm5> h = closure_elements(gens);
    int n = int(h.size());
    std::map<int, int> census;
    bool all_even = true;
    for (const Perm5& p : h) {
        ++census[order(p)];
        if (!is_even(p)) all_even = false;
    }
    SubgroupLabel label = SubgroupLabel::Other;
    switch (n) {
        case 1: label = SubgroupLabel::Trivial; break;
        case 2: label = SubgroupLabel::C2; break;
        case 3: label = SubgroupLabel::C3; break;
        case 4:
            if (census[2] == 3) label = SubgroupLabel::V4;
            break;
        case 5: label = SubgroupLabel::C5; break;
        case 6:
            if (census[6] > 0) label = SubgroupLabel::C6Type;
            else if (all_even) label = SubgroupLabel::S3ev;
            break;
        case 10:
            if (census[10] == 0) label = SubgroupLabel::DType;
            break;
        case 12:
            if (all_even && census[3] == 8) label = SubgroupLabel::A4;
            break;
        case 60: label = SubgroupLabel::A5; break;
        case 120: label = SubgroupLabel::S5; break;
        default: break;
    }
    return SubgroupId{n, label};
}

Perm5 parse_cycles(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t == "e" || t == "()") return Perm5();
    if (t.empty()) throw std::invalid_argument("parse_cycles: empty input");

    std::array<uint8_t, 5> img{0, 1, 2, 3, 4};
    std::array<bool, 5> used{};
    size_t i = 0;
    while (i < t.size()) {
        if (t[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
        ++i;
        std::vector<uint8_t> cyc;
        while (i < t.size() && t[i] != ')') {
            if (t[i] < '1' || t[i] > '5')
                throw std::invalid_argument("parse_cycles: points must be 1..5");
            uint8_t p = uint8_t(t[i] - '1');
            if (used[p]) throw std::invalid_argument("parse_cycles: repeated point");
            used[p] = true;
            cyc.push_back(p);
            ++i;
        }
        if (i == t.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
        ++i;  // ')'
        if (cyc.size() == 1) throw std::invalid_argument("parse_cycles: fixed point in cycle");
        for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    return Perm5::from_images(img);
}

std::string to_cycles(const Perm5& g) {
    std::string out;
    std::array<bool, 5> seen{};
    for (int i = 0; i < 5; ++i) {
        if (seen[i] || g(uint8_t(i)) == i) continue;
        out.push_back('(');
        int j = i;
        do {
            seen[j] = true;
            out.push_back(char('1' + j));
            j = g(uint8_t(j));
        } while (j != i);
        out.push_back(')');
    }
    return out.empty() ? "e" : out;
}

}  // namespace wedge
