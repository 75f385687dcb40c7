#include "wedge/dualgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wedge {

MultiGraph make_graph(int vertices, std::vector<std::pair<int, int>> edges) {
    if (vertices < 0) throw std::invalid_argument("make_graph: negative vertex count");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertices || b >= vertices)
            throw std::invalid_argument("make_graph: edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return MultiGraph{vertices, std::move(edges)};
}

int edge_count(const MultiGraph& g) { return int(g.edges.size()); }

int loop_count(const MultiGraph& g) {
    int n = 0;
    for (auto& [a, b] : g.edges)
        if (a == b) ++n;
    return n;
}

int degree(const MultiGraph& g, int v) {
    int d = 0;
    for (auto& [a, b] : g.edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

int component_count(const MultiGraph& g) {
    Dsu d(g.vertices);
    for (auto& [a, b] : g.edges) d.join(a, b);
    std::set<int> roots;
    for (int v = 0; v < g.vertices; ++v) roots.insert(d.find(v));
    return int(roots.size());
}

int first_betti(const MultiGraph& g) {
    return edge_count(g) - g.vertices + component_count(g);
}

MultiGraph intersection_graph(const Signature& sig, const CoverClass& c) {
    if (sig.group != Group::A5 || sig.orders != std::vector<int>{3, 2, 2, 2})
        throw std::invalid_argument("intersection_graph: signature must be (A5; 3,2,2,2)");
    const GenTuple& t = c.canonical;

    auto coset_map = [](const std::vector<Perm5>& sub) {
        // x -> index of the left coset x*sub; scanning sorted A5 numbers the
        // cosets by least element.
        std::map<Perm5, int> of;
        int next = 0;
        for (const Perm5& x : elements(Group::A5)) {
            if (of.count(x)) continue;
            for (const Perm5& h : sub) of[compose(x, h)] = next;
            ++next;
        }
        return of;
    };

    std::vector<Perm5> H = closure_elements({t[0], t[1]});
    std::vector<Perm5> K = closure_elements({t[2], t[3]});
    std::map<Perm5, int> vertex_of = coset_map(H);
    int vertices = 60 / int(H.size());

    std::vector<std::pair<int, int>> edges;
    std::set<Perm5> seen;
    for (const Perm5& x : elements(Group::A5)) {
        if (seen.count(x)) continue;
        std::set<int> ends;
        for (const Perm5& k : K) {
            Perm5 y = compose(x, k);
            seen.insert(y);
            ends.insert(vertex_of.at(y));
        }
        if (ends.size() > 2)
            throw std::logic_error("intersection_graph: edge coset meets more than 2 vertex cosets");
        int u = *ends.begin();
        int v = ends.size() == 2 ? *std::next(ends.begin()) : u;
        edges.emplace_back(u, v);
    }
    return make_graph(vertices, std::move(edges));
}

namespace {

// Multiset signature used for pruning: (degree, loops at vertex).
std::vector<std::pair<int, int>> vertex_signature(const MultiGraph& g) {
    std::vector<std::pair<int, int>> s(g.vertices, {0, 0});
    for (auto& [a, b] : g.edges) {
        if (a == b) {
            s[a].first += 2;
            s[a].second += 1;
        } else {
            s[a].first += 1;
            s[b].first += 1;
        }
    }
    return s;
}

std::vector<std::vector<int>> adjacency(const MultiGraph& g) {
    std::vector<std::vector<int>> m(g.vertices, std::vector<int>(g.vertices, 0));
    for (auto& [a, b] : g.edges) ++m[a][b], ++m[b][a];
    return m;
}

}  // namespace

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
    auto sa = vertex_signature(a), sb = vertex_signature(b);
    {
        auto ma = sa, mb = sb;
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != mb) return false;
    }
    auto adja = adjacency(a), adjb = adjacency(b);
    const int n = a.vertices;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || sa[v] != sb[w]) continue;
            bool ok = adja[v][v] == adjb[w][w];
            for (int u = 0; ok && u < v; ++u)
                if (adja[v][u] != adjb[w][map[u]]) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (self(self, v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

MultiGraph petersen_reference() {
    // Vertices: 2-subsets of {0..4} in lexicographic order; edges join
    // disjoint subsets.
    std::vector<std::pair<int, int>> subsets;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
    std::vector<std::pair<int, int>> edges;
    for (size_t u = 0; u < subsets.size(); ++u)
        for (size_t v = u + 1; v < subsets.size(); ++v) {
            auto [a, b] = subsets[u];
            auto [c, d] = subsets[v];
            if (a != c && a != d && b != c && b != d) edges.emplace_back(int(u), int(v));
        }
    return make_graph(10, std::move(edges));
}

MultiGraph complete_reference(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

MultiGraph bouquet_reference(int loops) {
    std::vector<std::pair<int, int>> edges(size_t(loops), {0, 0});
    return make_graph(1, std::move(edges));
}

int stable_genus(const MultiGraph& g, const std::vector<int>& genera) {
    if (!genera.empty() && int(genera.size()) != g.vertices)
        throw std::invalid_argument("stable_genus: need one genus per vertex");
    int total = first_betti(g);
    for (int gv : genera) {
        if (gv < 0) throw std::invalid_argument("stable_genus: negative component genus");
        total += gv;
    }
    return total;
}

OrbifoldSig make_orbifold(std::vector<int> cone_orders) {
    if (cone_orders.size() < 3)
        throw std::invalid_argument("orbifold: need at least 3 cone points");
    for (int p : cone_orders)
        if (p < 2) throw std::invalid_argument("orbifold: cone orders must be >= 2");
    return OrbifoldSig{std::move(cone_orders)};
}

Rat orbifold_euler(const OrbifoldSig& sig) {
    Rat e(2);
    for (int p : sig.cone_orders) e -= Rat(1) - Rat(1, p);
    return e;
}

int cover_genus(long long degree, const OrbifoldSig& sig) {
    if (degree < 1) throw std::invalid_argument("cover_genus: degree must be positive");
    for (int p : sig.cone_orders)
        if (degree % p != 0)
            throw std::invalid_argument("cover_genus: cone order does not divide the degree");
    Rat g = Rat(1) - Rat(degree) * orbifold_euler(sig) / Rat(2);
    if (g.denominator() != 1 || g.numerator() < 0)
        throw std::invalid_argument("cover_genus: no smooth cover with this data");
    return int(g.numerator());
}

std::string dump_graph(const MultiGraph& g) {
    std::ostringstream os;
    os << g.vertices << " vertices, " << g.edges.size() << " edges\n";
    for (auto& [a, b] : g.edges) os << a << '-' << b << '\n';
    return os.str();
}

}  // namespace wedge
