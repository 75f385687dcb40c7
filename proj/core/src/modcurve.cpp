#include "wedge/modcurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wedge/rational.hpp"

namespace wedge {

namespace {

bool is_perm(const std::vector<int>& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= int(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// (p q)(x) = p(q(x)), matching compose() on Perm5.
std::vector<int> pcompose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

std::vector<int> pinverse(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
    return r;
}

std::vector<int> pidentity(size_t n) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

int fixed_points(const std::vector<int>& p) {
    int n = 0;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == int(i)) ++n;
    return n;
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& p) {
    std::vector<bool> done(p.size(), false);
    std::vector<std::vector<int>> cycles;
    for (size_t i = 0; i < p.size(); ++i) {
        if (done[i]) continue;
        std::vector<int> cyc;
        int j = int(i);
        do {
            done[j] = true;
            cyc.push_back(j);
            j = p[j];
        } while (j != int(i));
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

}  // namespace

PermAction make_action(std::vector<int> pi1, std::vector<int> pi2) {
    if (pi1.empty() || pi1.size() != pi2.size())
        throw std::invalid_argument("make_action: degree mismatch");
    if (!is_perm(pi1) || !is_perm(pi2))
        throw std::invalid_argument("make_action: inputs are not permutations");

    PermAction a;
    a.pi1 = std::move(pi1);
    a.pi2 = std::move(pi2);
    a.piU = pcompose(a.pi1, a.pi2);
    a.piS = pcompose(a.pi1, a.piU);

    const std::vector<int> id = pidentity(a.pi1.size());
    if (pcompose(a.piS, a.piS) != id)
        throw std::invalid_argument("make_action: relation piS^2 = id failed");
    if (pcompose(a.piU, pcompose(a.piU, a.piU)) != id)
        throw std::invalid_argument("make_action: relation piU^3 = id failed");
    if (pcompose(pinverse(a.piU), a.piS) != a.pi1)
        throw std::invalid_argument("make_action: relation pi1 = piU^-1 piS failed");

    // Transitivity of <piS, piU>.
    std::vector<bool> reach(a.pi1.size(), false);
    std::vector<int> stack{0};
    reach[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const std::vector<int>* p : {&a.piS, &a.piU})
            if (!reach[(*p)[v]]) {
                reach[(*p)[v]] = true;
                stack.push_back((*p)[v]);
            }
    }
    if (!std::all_of(reach.begin(), reach.end(), [](bool b) { return b; }))
        throw std::invalid_argument("make_action: action is not transitive");
    return a;
}

PermAction build_action(const ClassSet& cs) {
    if (cs.sig.group != Group::A5 || cs.sig.orders != std::vector<int>{3, 2, 2, 2} ||
        cs.classes.size() != 18)
        throw std::invalid_argument("build_action: expected the 18 classes of (A5; 3,2,2,2)");
    std::vector<int> pi1(18), pi2(18);
    for (int i = 0; i < 18; ++i) {
        pi1[i] = move_on_class(cs, BraidMove::M3Inv, i);
        pi2[i] = move_on_class(cs, BraidMove::M1Swap34, i);
    }
    return make_action(std::move(pi1), std::move(pi2));
}

CuspData cusp_data(const PermAction& a) {
    std::vector<Cusp> cusps;
    for (std::vector<int>& cyc : cycles_of(a.pi2)) {
        Cusp c;
        c.width = int(cyc.size());
        c.classes = std::move(cyc);
        cusps.push_back(std::move(c));
    }
    std::sort(cusps.begin(), cusps.end(), [](const Cusp& x, const Cusp& y) {
        if (x.width != y.width) return x.width > y.width;
        return x.classes.front() < y.classes.front();
    });
    return CuspData{std::move(cusps)};
}

int quotient_genus(const PermAction& a) {
    const long long n = static_cast<long long>(a.pi1.size());
    const long long e2 = fixed_points(a.piS);
    const long long e3 = fixed_points(a.piU);
    const long long c = static_cast<long long>(cycles_of(a.pi2).size());
    Rat g = Rat(1) + Rat(n, 12) - Rat(e2, 4) - Rat(e3, 3) - Rat(c, 2);
    if (g.denominator() != 1 || g.numerator() < 0)
        throw std::logic_error("quotient_genus: formula did not yield a nonnegative integer");
    return int(g.numerator());
}

int free_rank(const PermAction& a) {
    return 2 * quotient_genus(a) + int(cycles_of(a.pi2).size()) - 1;
}

bool larcher_test(const std::vector<int>& widths) {
    if (widths.empty()) throw std::invalid_argument("larcher_test: empty width list");
    std::set<long long> s;
    for (int w : widths) {
        if (w < 1) throw std::invalid_argument("larcher_test: widths must be positive");
        s.insert(w);
    }
    for (long long x : s)
        for (long long y : s) {
            if (!s.count(std::gcd(x, y))) return false;
            if (!s.count(std::lcm(x, y))) return false;
        }
    return true;
}

std::vector<int> involution_on_cusps(const ClassSet& cs, const PermAction& a) {
    CuspData cd = cusp_data(a);
    std::vector<std::set<int>> blocks;
    for (const Cusp& c : cd.cusps) blocks.emplace_back(c.classes.begin(), c.classes.end());

    std::vector<int> image(cd.cusps.size(), -1);
    for (size_t i = 0; i < blocks.size(); ++i) {
        std::set<int> img;
        for (int x : blocks[i]) img.insert(outer_on_class(cs, x));
        auto it = std::find(blocks.begin(), blocks.end(), img);
        if (it == blocks.end())
            throw std::logic_error("involution_on_cusps: involution does not permute cusps");
        image[i] = int(it - blocks.begin());
    }
    return image;
}

std::string dump_action(const ClassSet& cs, const PermAction& a) {
    CuspData cd = cusp_data(a);
    std::vector<int> iota = involution_on_cusps(cs, a);
    std::ostringstream os;
    for (size_t i = 0; i < cd.cusps.size(); ++i) {
        os << "cusp " << i + 1 << ": width " << cd.cusps[i].width << ", classes [";
        for (size_t k = 0; k < cd.cusps[i].classes.size(); ++k) {
            if (k) os << ',';
            os << cs.classes.at(cd.cusps[i].classes[k]).id;
        }
        os << "], iota-image " << iota[i] + 1 << '\n';
    }
    return os.str();
}

}  // namespace wedge
