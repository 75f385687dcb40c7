#include "wedge/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wedge {

namespace {

// Paper-order word xy: apply x, then y.
Perm5 pw(const Perm5& x, const Perm5& y) { return word_product(x, y); }

GenTuple conj_tuple(const GenTuple& t, const Perm5& h) {
    GenTuple r;
    r.reserve(t.size());
    for (const Perm5& g : t) r.push_back(conjugate(g, h));
    return r;
}

}  // namespace

Signature make_signature(Group g, std::vector<int> orders) {
    if (orders.size() < 3) throw std::invalid_argument("signature: need at least 3 orders");
    for (size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 2) throw std::invalid_argument("signature: orders must be >= 2");
        if (i > 0 && orders[i] > orders[i - 1])
            throw std::invalid_argument("signature: orders must be nonincreasing");
    }
    return Signature{g, std::move(orders)};
}

Perm5 tuple_product(const GenTuple& t) {
    Perm5 p;
    for (const Perm5& g : t) p = compose(g, p);
    return p;
}

bool is_valid_tuple(const Signature& sig, const GenTuple& t) {
    if (t.size() != sig.orders.size()) return false;
    for (size_t i = 0; i < t.size(); ++i)
        if (order(t[i]) != sig.orders[i]) return false;
    if (!(tuple_product(t) == Perm5())) return false;
    size_t want = sig.group == Group::A5 ? 60 : 120;
    if (sig.group == Group::A5)
        for (const Perm5& g : t)
            if (!is_even(g)) return false;
    return closure_elements(t).size() == want;
}

std::vector<GenTuple> enumerate_tuples(const Signature& sig) {
    const size_t n = sig.orders.size();
    std::vector<std::vector<Perm5>> pools;
    for (size_t i = 0; i + 1 < n; ++i) pools.push_back(elements_of_order(sig.group, sig.orders[i]));

    std::vector<GenTuple> out;
    GenTuple cur(n);
    auto rec = [&](auto&& self, size_t slot) -> void {
        if (slot == n - 1) {
            // Last entry forced by the product relation.
            GenTuple head(cur.begin(), cur.end() - 1);
            cur[n - 1] = inverse(tuple_product(head));
            if (is_valid_tuple(sig, cur)) out.push_back(cur);
            return;
        }
        for (const Perm5& g : pools[slot]) {
            cur[slot] = g;
            self(self, slot + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

GenTuple canonicalize(const Signature& sig, const GenTuple& t) {
    GenTuple best = t;
    for (const Perm5& h : elements(sig.group)) {
        GenTuple c = conj_tuple(t, h);
        if (c < best) best = c;
    }
    return best;
}

ClassSet orbit_classes(const Signature& sig, const std::vector<GenTuple>& tuples) {
    std::set<GenTuple> input(tuples.begin(), tuples.end());
    if (input.size() != tuples.size())
        throw std::invalid_argument("orbit_classes: duplicate tuples");

    std::set<GenTuple> seen;
    std::vector<CoverClass> classes;
    for (const GenTuple& t : tuples) {
        if (seen.count(t)) continue;
        std::set<GenTuple> orbit;
        for (const Perm5& h : elements(sig.group)) orbit.insert(conj_tuple(t, h));
        for (const GenTuple& o : orbit) {
            if (!input.count(o))
                throw std::invalid_argument("orbit_classes: input not closed under conjugation");
            seen.insert(o);
        }
        CoverClass c;
        c.canonical = *orbit.begin();
        c.size = int(orbit.size());
        if (sig.orders.size() == 4) c.rtype = order(pw(c.canonical[0], c.canonical[1]));
        classes.push_back(std::move(c));
    }
    std::sort(classes.begin(), classes.end(),
              [](const CoverClass& a, const CoverClass& b) { return a.canonical < b.canonical; });

    std::map<int, int> counters;
    for (CoverClass& c : classes) {
        std::string prefix = "C";
        if (c.rtype == 2) prefix = "P";
        else if (c.rtype == 3) prefix = "K";
        else if (c.rtype == 5) prefix = "D";
        c.id = prefix + std::to_string(++counters[c.rtype]);
    }
    return ClassSet{sig, std::move(classes)};
}

ClassSet classify(const Signature& sig) { return orbit_classes(sig, enumerate_tuples(sig)); }

int class_index(const ClassSet& cs, const GenTuple& t) {
    GenTuple canon = canonicalize(cs.sig, t);
    for (size_t i = 0; i < cs.classes.size(); ++i)
        if (cs.classes[i].canonical == canon) return int(i);
    throw std::invalid_argument("class_index: tuple not in any class");
}

std::map<int, int> rtype_census(const ClassSet& cs) {
    std::map<int, int> census;
    for (const CoverClass& c : cs.classes) {
        if (c.rtype == 0) throw std::invalid_argument("rtype_census: class without rtype");
        ++census[c.rtype];
    }
    return census;
}

std::string to_string(BraidMove m) {
    switch (m) {
        case BraidMove::M1Swap34: return "M1_swap34";
        case BraidMove::M2Conj12: return "M2_conj12";
        case BraidMove::M3Swap23: return "M3_swap23";
        case BraidMove::M3Inv: return "M3_inv";
    }
    return "?";
}

GenTuple apply_move(const Signature& sig, BraidMove m, const GenTuple& t) {
    if (t.size() != 4) throw std::invalid_argument("apply_move: tuple must have 4 entries");
    const Perm5 &a1 = t[0], &a2 = t[1], &a3 = t[2], &a4 = t[3];
    GenTuple r = t;
    switch (m) {
        case BraidMove::M1Swap34:
            r[2] = pw(pw(a3, a4), inverse(a3));
            r[3] = a3;
            break;
        case BraidMove::M2Conj12: {
            Perm5 c = pw(a1, a2);
            r[2] = pw(pw(c, a3), inverse(c));
            r[3] = pw(pw(c, a4), inverse(c));
            break;
        }
        case BraidMove::M3Swap23:
            r[1] = a3;
            r[2] = pw(pw(inverse(a3), a2), a3);
            break;
        case BraidMove::M3Inv:
            r[1] = pw(pw(a2, a3), inverse(a2));
            r[2] = a2;
            break;
    }
    if (!is_valid_tuple(sig, r))
        throw std::invalid_argument("apply_move: " + to_string(m) + " broke the signature");
    return r;
}

int move_on_class(const ClassSet& cs, BraidMove m, int i) {
    return class_index(cs, apply_move(cs.sig, m, cs.classes.at(i).canonical));
}

int outer_on_class(const ClassSet& cs, int i) {
    static const Perm5 tau = parse_cycles("(12)");
    GenTuple t = cs.classes.at(i).canonical;
    for (Perm5& g : t) g = conjugate(g, tau);
    return class_index(cs, t);
}

std::vector<std::vector<int>> tgamma_orbits(const ClassSet& cs) {
    const int n = int(cs.classes.size());
    std::vector<bool> done(n, false);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<int> orbit;
        int j = i;
        do {
            done[j] = true;
            orbit.push_back(j);
            j = move_on_class(cs, BraidMove::M1Swap34, j);
        } while (j != i);
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

SubgroupId stabilizer_type(const CoverClass& c) {
    return subgroup_closure({c.canonical[0], c.canonical[1]});
}

std::string dump_classes(const ClassSet& cs) {
    std::ostringstream os;
    for (const CoverClass& c : cs.classes) {
        os << c.id << ' ';
        if (c.rtype > 0) os << c.rtype;
        else os << '-';
        os << ' ' << c.size;
        for (const Perm5& g : c.canonical) os << ' ' << to_cycles(g);
        os << '\n';
    }
    return os.str();
}

}  // namespace wedge
