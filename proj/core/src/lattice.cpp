#include "wedge/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wedge {

Mat3 Mat3::identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.a[i][i] = 1;
    return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r.a[i][j] += x.a[i][k] * y.a[k][j];
    return r;
}

Vec3 operator*(const Mat3& x, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r[i] += x.a[i][k] * v[k];
    return r;
}

Mat3 transpose(const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = x.a[j][i];
    return r;
}

long long det(const Mat3& x) {
    const auto& a = x.a;
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

std::string to_string(const Mat3& x) {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < 3; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < 3; ++j) {
            if (j) os << ' ';
            os << x.a[i][j];
        }
    }
    os << ']';
    return os.str();
}

const Mat3& gram() {
    static const Mat3 g = [] {
        Mat3 m;
        m.a = {{{4, 0, -2}, {0, 6, -3}, {-2, -3, 2}}};
        return m;
    }();
    return g;
}

long long bform(const Vec3& x, const Vec3& y) {
    long long s = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i] * gram().a[i][j] * y[j];
    return s;
}

long long qform(const Vec3& x) {
    // 2x1^2 + 3x2^2 + x3^2 - 2x1x3 - 3x2x3, the integer polynomial b(x,x)/2.
    long long b = bform(x, x);
    return b / 2;
}

Rat bform_q(const VecQ& x, const VecQ& y) {
    Rat s(0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += x[i] * Rat(gram().a[i][j]) * y[j];
    return s;
}

Rat qform_q(const VecQ& x) { return bform_q(x, x) / Rat(2); }

long long discriminant() { return det(gram()); }

LatIsometry::LatIsometry(const Mat3& m) : m_(m) {
    long long d = det(m);
    if (d != 1 && d != -1)
        throw std::invalid_argument("LatIsometry: determinant must be +-1");
    if (!(transpose(m) * gram() * m == gram()))
        throw std::invalid_argument("LatIsometry: matrix does not preserve the form");
    det_ = int(d);
}

LatIsometry isometry_identity() { return LatIsometry(Mat3::identity()); }

LatIsometry compose(const LatIsometry& a, const LatIsometry& b) {
    return LatIsometry(a.mat() * b.mat());
}

LatIsometry inverse(const LatIsometry& a) {
    // Adjugate divided by det; entries stay integral for det = +-1.
    const auto& m = a.mat().a;
    Mat3 adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            long long minor = m[(j + 1) % 3][(i + 1) % 3] * m[(j + 2) % 3][(i + 2) % 3] -
                              m[(j + 1) % 3][(i + 2) % 3] * m[(j + 2) % 3][(i + 1) % 3];
            adj.a[i][j] = minor;
        }
    long long d = det(a.mat());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) adj.a[i][j] *= d;
    return LatIsometry(adj);
}

std::optional<int> isometry_order(const LatIsometry& m, int cap) {
    Mat3 p = m.mat();
    for (int n = 1; n <= cap; ++n) {
        if (p == Mat3::identity()) return n;
        p = p * m.mat();
    }
    return std::nullopt;
}

LatIsometry reflection(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("reflection: index must be 1..3");
    Vec3 alpha{};
    alpha[i - 1] = 1;
    long long q = qform(alpha);
    Mat3 m;
    for (int j = 0; j < 3; ++j) {
        Vec3 e{};
        e[j] = 1;
        long long num = bform(e, alpha);
        if (num % q != 0) throw std::logic_error("reflection: non-integral action");
        Vec3 img = e;
        img[i - 1] -= num / q;
        for (int k = 0; k < 3; ++k) m.a[k][j] = img[k];
    }
    return LatIsometry(m);
}

std::array<LatIsometry, 3> rotations() {
    LatIsometry s1 = reflection(1), s2 = reflection(2), s3 = reflection(3);
    return {compose(s2, s3), compose(s3, s1), compose(s1, s2)};
}

namespace {

long long squarefree_part(long long n) {
    long long r = 1;
    for (long long p = 2; p * p <= n; ++p)
        while (n % (p * p) == 0) n /= p * p;
    return r * n;
}

}  // namespace

SquareClass square_class(const Rat& r) {
    if (r == 0) throw std::invalid_argument("square_class: zero has no square class");
    long long n = r.numerator() * r.denominator();
    SquareClass c;
    c.sign = n < 0 ? -1 : 1;
    c.part = squarefree_part(n < 0 ? -n : n);
    return c;
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    SquareClass c;
    c.sign = a.sign * b.sign;
    c.part = squarefree_part(a.part * b.part);
    return c;
}

std::string to_string(const SquareClass& c) {
    return (c.sign < 0 ? "-" : "+") + std::to_string(c.part);
}

namespace {

VecQ to_vecq(const Vec3& v) { return {Rat(v[0]), Rat(v[1]), Rat(v[2])}; }

VecQ apply_q(const Mat3& m, const VecQ& v) {
    VecQ r{Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r[i] += Rat(m.a[i][k]) * v[k];
    return r;
}

VecQ sub(const VecQ& x, const VecQ& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
VecQ add(const VecQ& x, const VecQ& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
VecQ scale(const Rat& s, const VecQ& x) { return {s * x[0], s * x[1], s * x[2]}; }
bool is_zero_vec(const VecQ& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

VecQ reflect_in(const VecQ& u, const VecQ& x) {
    return sub(x, scale(bform_q(x, u) / qform_q(u), u));
}

// Orthogonal pivot basis for b over Q (Gram-Schmidt; q is anisotropic over
// Q, so no pivot degenerates).
const std::array<VecQ, 3>& ortho_basis() {
    static const std::array<VecQ, 3> basis = [] {
        std::array<VecQ, 3> w;
        for (int i = 0; i < 3; ++i) {
            Vec3 e{};
            e[i] = 1;
            w[i] = to_vecq(e);
            for (int j = 0; j < i; ++j)
                w[i] = sub(w[i], scale(bform_q(w[i], w[j]) / bform_q(w[j], w[j]), w[j]));
            if (qform_q(w[i]) == 0) throw std::logic_error("ortho_basis: degenerate pivot");
        }
        return w;
    }();
    return basis;
}

}  // namespace

SquareClass spinor_norm(const LatIsometry& m) {
    // Cartan-Dieudonne on the orthogonalized basis; each pivot is fixed by at
    // most two further reflections, all orthogonal to the pivots already fixed.
    std::vector<VecQ> factors;
    Mat3 cur = m.mat();
    std::array<VecQ, 3> w = ortho_basis();
    std::vector<VecQ> pending(w.begin(), w.end());

    auto apply_all = [&](const VecQ& v) {
        VecQ r = apply_q(cur, v);
        for (const VecQ& u : factors) r = reflect_in(u, r);
        return r;
    };

    for (const VecQ& v : pending) {
        VecQ img = apply_all(v);
        if (img == v) continue;
        VecQ u1 = sub(img, v);
        if (qform_q(u1) != 0) {
            factors.push_back(u1);
            continue;
        }
        VecQ u2 = add(img, v);
        if (qform_q(u2) == 0) throw std::logic_error("spinor_norm: both pivot moves isotropic");
        factors.push_back(u2);  // sends img to -v
        factors.push_back(v);   // sends -v to v
    }
    // The residual isometry must now be the identity.
    for (int i = 0; i < 3; ++i) {
        Vec3 e{};
        e[i] = 1;
        VecQ img = apply_all(to_vecq(e));
        if (!(img == to_vecq(e)))
            throw std::logic_error("spinor_norm: factorization did not terminate");
    }

    SquareClass c{1, 1};
    for (const VecQ& u : factors) c = c * square_class(qform_q(u));
    return c;
}

bool in_so_sharp(const LatIsometry& m) {
    return m.det_sign() == 1 && spinor_norm(m).sign > 0;
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int mod_p(long long v, int p) {
    int r = int(v % p);
    return r < 0 ? r + p : r;
}

int inv_mod(int a, int p) {
    int r = 1;
    for (int e = p - 2; e > 0; e >>= 1) {
        // Fermat inverse by fast exponentiation.
        static_assert(sizeof(long long) >= 8);
        if (e & 1) r = int(1LL * r * a % p);
        a = int(1LL * a * a % p);
    }
    return r;
}

std::array<int, 3> normalize_proj(std::array<int, 3> c, int p) {
    for (int i = 0; i < 3; ++i) {
        if (c[i] == 0) continue;
        int s = inv_mod(c[i], p);
        for (int j = 0; j < 3; ++j) c[j] = int(1LL * c[j] * s % p);
        return c;
    }
    throw std::invalid_argument("normalize_proj: zero vector");
}

}  // namespace

std::string to_string(const ProjPointFp& pt) {
    std::ostringstream os;
    os << '[' << pt.c[0] << ':' << pt.c[1] << ':' << pt.c[2] << ']';
    return os.str();
}

std::vector<ProjPointFp> conic_points(int p) {
    if (!is_prime(p) || p > 97)
        throw std::invalid_argument("conic_points: p must be a prime <= 97");
    std::vector<ProjPointFp> out;
    auto consider = [&](std::array<int, 3> c) {
        Vec3 v{c[0], c[1], c[2]};
        if (mod_p(qform(v), p) == 0) out.push_back(ProjPointFp{p, c});
    };
    consider({0, 0, 1});
    for (int z = 0; z < p; ++z) consider({0, 1, z});
    for (int y = 0; y < p; ++y)
        for (int z = 0; z < p; ++z) consider({1, y, z});
    std::sort(out.begin(), out.end());
    return out;
}

NoRationalPointCert no_rational_point_certificate() {
    NoRationalPointCert cert;
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y)
            for (int z = 0; z < 27; ++z) {
                if (x % 3 == 0 && y % 3 == 0 && z % 3 == 0) continue;
                ++cert.primitive_vectors_mod27;
                if (mod_p(qform({x, y, z}), 27) == 0) ++cert.primitive_zeros_mod27;
            }
    cert.box_bound = 50;
    for (long long x = -50; x <= 50 && !cert.zero_in_box; ++x)
        for (long long y = -50; y <= 50 && !cert.zero_in_box; ++y)
            for (long long z = -50; z <= 50; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (qform({x, y, z}) == 0) {
                    cert.zero_in_box = true;
                    break;
                }
            }
    cert.sample = {3, 2, 6};
    cert.sample_q = qform(cert.sample);
    return cert;
}

MobiusF5 make_mobius(std::array<int, 4> m) {
    for (int& v : m) v = mod_p(v, 5);
    long long d = mod_p(1LL * m[0] * m[3] - 1LL * m[1] * m[2], 5);
    if (d == 0) throw std::invalid_argument("make_mobius: singular matrix");
    for (int v : m)
        if (v != 0) {
            int s = inv_mod(v, 5);
            MobiusF5 r;
            for (int i = 0; i < 4; ++i) r.m[i] = int(1LL * m[i] * s % 5);
            return r;
        }
    throw std::invalid_argument("make_mobius: zero matrix");
}

MobiusF5 mobius_compose(const MobiusF5& x, const MobiusF5& y) {
    return make_mobius({x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
                        x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]});
}

int mobius_order(const MobiusF5& x) {
    MobiusF5 p = x;
    const MobiusF5 id;
    for (int n = 1; n <= 240; ++n) {
        if (p == id) return n;
        p = mobius_compose(p, x);
    }
    throw std::logic_error("mobius_order: order exceeds |PGL2(F5)|");
}

namespace {

// Stereographic chart: directions in the plane spanned by alpha2, alpha3
// through the base point, the reduction of -alpha1 + 2 alpha2 + 2 alpha3.
struct ConicChart {
    std::array<int, 3> base;                       // normalized
    std::array<std::array<int, 3>, 6> point_of;    // P^1 index -> conic point
    std::map<std::array<int, 3>, int> index_of;    // conic point -> P^1 index

    // P^1(F5) indices: 0 -> [1:0], 1+z -> [z:1] for z = 0..4... fixed below.
    static std::array<std::array<int, 2>, 6> directions() {
        return {{{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}}};
    }
};

const ConicChart& chart() {
    static const ConicChart c = [] {
        ConicChart ch;
        ch.base = normalize_proj({mod_p(-1, 5), 2, 2}, 5);
        Vec3 b{ch.base[0], ch.base[1], ch.base[2]};
        if (mod_p(qform(b), 5) != 0) throw std::logic_error("chart: base point not on conic");

        auto dirs = ConicChart::directions();
        for (int t = 0; t < 6; ++t) {
            Vec3 d{0, dirs[t][0], dirs[t][1]};
            int bd = mod_p(bform(b, d), 5);     // b(B, d); q(B + s d) = s(b + s q(d))
            int qd = mod_p(qform(d), 5);
            std::array<int, 3> pt;
            if (bd == 0) {
                pt = ch.base;  // tangent direction
            } else if (qd == 0) {
                pt = normalize_proj({int(d[0]), int(d[1]), int(d[2])}, 5);
            } else {
                int s = mod_p(-1LL * bd * inv_mod(qd, 5), 5);
                pt = normalize_proj({mod_p(b[0] + s * d[0], 5), mod_p(b[1] + s * d[1], 5),
                                     mod_p(b[2] + s * d[2], 5)},
                                    5);
            }
            ch.point_of[t] = pt;
            if (!ch.index_of.emplace(pt, t).second)
                throw std::logic_error("chart: parametrization not injective");
        }
        if (ch.index_of.size() != 6) throw std::logic_error("chart: parametrization not onto");
        for (auto& [pt, t] : ch.index_of) {
            Vec3 v{pt[0], pt[1], pt[2]};
            if (mod_p(qform(v), 5) != 0) throw std::logic_error("chart: image off the conic");
        }
        return ch;
    }();
    return c;
}

// Solve [c1 c2] x = c3 over F5 (2x2 from projective directions).
std::array<int, 2> solve2(std::array<int, 2> c1, std::array<int, 2> c2, std::array<int, 2> c3) {
    int d = mod_p(c1[0] * c2[1] - c1[1] * c2[0], 5);
    if (d == 0) throw std::logic_error("solve2: singular system");
    int di = inv_mod(d, 5);
    int x = mod_p((c3[0] * c2[1] - c3[1] * c2[0]) * 1LL * di, 5);
    int y = mod_p((c1[0] * c3[1] - c1[1] * c3[0]) * 1LL * di, 5);
    return {x, y};
}

// Matrix sending [1:0], [0:1], [1:1] to the three given directions.
std::array<int, 4> basis_to(const std::array<std::array<int, 2>, 3>& r) {
    auto [lam, mu] = solve2(r[0], r[1], r[2]);
    if (lam == 0 || mu == 0) throw std::logic_error("basis_to: degenerate triple");
    return {mod_p(lam * r[0][0], 5), mod_p(mu * r[1][0], 5), mod_p(lam * r[0][1], 5),
            mod_p(mu * r[1][1], 5)};
}

std::array<int, 2> apply_mobius(const MobiusF5& m, const std::array<int, 2>& t) {
    return {mod_p(m.m[0] * t[0] + m.m[1] * t[1], 5), mod_p(m.m[2] * t[0] + m.m[3] * t[1], 5)};
}

bool same_direction(const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return mod_p(x[0] * y[1] - x[1] * y[0], 5) == 0;
}

}  // namespace

MobiusF5 to_pgl2f5(const LatIsometry& m) {
    if (!in_so_sharp(m))
        throw std::invalid_argument("to_pgl2f5: isometry not in SO#");
    const ConicChart& ch = chart();
    auto dirs = ConicChart::directions();

    // Point permutation on the conic, transported to P^1 indices.
    std::array<int, 6> perm;
    for (int t = 0; t < 6; ++t) {
        const std::array<int, 3>& pt = ch.point_of[t];
        Vec3 v{pt[0], pt[1], pt[2]};
        Vec3 img = m.apply(v);
        std::array<int, 3> ic =
            normalize_proj({mod_p(img[0], 5), mod_p(img[1], 5), mod_p(img[2], 5)}, 5);
        auto it = ch.index_of.find(ic);
        if (it == ch.index_of.end())
            throw std::logic_error("to_pgl2f5: image left the conic");
        perm[t] = it->second;
    }

    std::array<int, 4> b1 = basis_to({dirs[0], dirs[1], dirs[2]});
    std::array<int, 4> b2 = basis_to({dirs[perm[0]], dirs[perm[1]], dirs[perm[2]]});
    // M = b2 * b1^{-1}; with b1 built on the standard triple, b1 is
    // invertible and the adjugate works projectively.
    std::array<int, 4> b1inv{b1[3], mod_p(-b1[1], 5), mod_p(-b1[2], 5), b1[0]};
    MobiusF5 mob = mobius_compose(make_mobius(b2), make_mobius(b1inv));

    for (int t = 0; t < 6; ++t)
        if (!same_direction(apply_mobius(mob, dirs[t]), dirs[perm[t]]))
            throw std::logic_error("to_pgl2f5: point map is not a Mobius transformation");
    return mob;
}

int image_group_order(const std::vector<LatIsometry>& gens) {
    std::vector<MobiusF5> g;
    for (const LatIsometry& m : gens) g.push_back(to_pgl2f5(m));
    std::set<MobiusF5> seen{MobiusF5{}};
    std::vector<MobiusF5> queue{MobiusF5{}};
    while (!queue.empty()) {
        MobiusF5 x = queue.back();
        queue.pop_back();
        for (const MobiusF5& h : g) {
            MobiusF5 y = mobius_compose(h, x);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return int(seen.size());
}

bool level5_membership(const LatIsometry& m) {
    const Mat3 id = Mat3::identity();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (mod_p(m.mat().a[i][j] - id.a[i][j], 5) != 0) return false;
    return true;
}

Level5Cert level5_word_certificate(int max_len) {
    if (max_len < 1) throw std::invalid_argument("level5_word_certificate: max_len must be >= 1");
    auto rot = rotations();
    Level5Cert cert;
    const MobiusF5 id;

    std::vector<LatIsometry> frontier{isometry_identity()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<LatIsometry> next;
        next.reserve(frontier.size() * 3);
        for (const LatIsometry& w : frontier)
            for (const LatIsometry& g : rot) {
                LatIsometry wg = compose(w, g);
                ++cert.words_checked;
                bool lev = level5_membership(wg);
                bool triv = to_pgl2f5(wg) == id;
                if (lev) ++cert.level5_words;
                if (lev != triv) cert.kernel_matches = false;
                next.push_back(wg);
            }
        frontier = std::move(next);
    }
    return cert;
}

ParityCert reflection_parity_certificate() {
    // Defining relations as generator-index words: s_i^2 and (s_{i+1} s_{i-1})^{p_i}
    // with (p_1, p_2, p_3) = (6, 4, 2).
    std::vector<std::vector<int>> relations = {
        {1, 1}, {2, 2}, {3, 3},
        // (s2 s3)^6, (s3 s1)^4, (s1 s2)^2
        {}, {}, {},
    };
    for (int k = 0; k < 6; ++k) { relations[3].push_back(2); relations[3].push_back(3); }
    for (int k = 0; k < 4; ++k) { relations[4].push_back(3); relations[4].push_back(1); }
    for (int k = 0; k < 2; ++k) { relations[5].push_back(1); relations[5].push_back(2); }

    ParityCert cert;
    cert.relations_even = true;
    for (const auto& rel : relations) {
        std::array<int, 3> sums{};
        for (int g : rel) ++sums[g - 1];
        for (int s : sums)
            if (s % 2 != 0) cert.relations_even = false;
    }
    // Images of s1, s2, s3 in (Z/2)^3 are the standard basis vectors.
    cert.generator_vectors_distinct = true;
    return cert;
}

}  // namespace wedge
