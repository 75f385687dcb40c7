#include "wedge/clifford.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace wedge {

namespace {

// q(alpha_i) and b(alpha_i, alpha_j), 1-indexed, from the Gram matrix.
constexpr long long kQ[4] = {0, 2, 3, 1};
constexpr long long kB[4][4] = {
    {0, 0, 0, 0},
    {0, 4, 0, -2},
    {0, 0, 6, -3},
    {0, -2, -3, 2},
};

const int kMaskToIdx[8] = {0, 1, 2, 4, 3, 5, 6, 7};
const std::vector<int> kWordOfIdx[8] = {
    {}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3},
};

// Normal order a generator word into basis coordinates, accumulating.
void add_word(std::array<long long, 8>& out, std::vector<int> w, long long coef) {
    for (size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] == w[k + 1]) {
            std::vector<int> shorter(w.begin(), w.end());
            shorter.erase(shorter.begin() + k, shorter.begin() + k + 2);
            add_word(out, std::move(shorter), coef * kQ[w[k]]);
            return;
        }
        if (w[k] > w[k + 1]) {
            // alpha_j alpha_i = b(alpha_i, alpha_j) - alpha_i alpha_j, i < j.
            std::vector<int> dropped(w.begin(), w.end());
            dropped.erase(dropped.begin() + k, dropped.begin() + k + 2);
            add_word(out, std::move(dropped), coef * kB[w[k]][w[k + 1]]);
            std::swap(w[k], w[k + 1]);
            add_word(out, std::move(w), -coef);
            return;
        }
    }
    int mask = 0;
    for (int g : w) mask |= 1 << (g - 1);
    out[kMaskToIdx[mask]] += coef;
}

}  // namespace

const CliffTable& clifford_mul_table() {
    static const CliffTable table = [] {
        CliffTable t{};
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                std::vector<int> w = kWordOfIdx[a];
                w.insert(w.end(), kWordOfIdx[b].begin(), kWordOfIdx[b].end());
                add_word(t[a][b], std::move(w), 1);
            }
        return t;
    }();
    return table;
}

const StarTable& clifford_star_table() {
    static const StarTable table = [] {
        StarTable t{};
        for (int a = 0; a < 8; ++a) {
            std::vector<int> w = kWordOfIdx[a];
            std::reverse(w.begin(), w.end());
            add_word(t[a], std::move(w), 1);
        }
        return t;
    }();
    return table;
}

int basis_degree(int k) { return int(kWordOfIdx[k].size()); }

CliffQ quat_a(int i) {
    CliffQ r;
    switch (i) {
        case 1: r.c[6] = Rat(1); break;                      // alpha2 alpha3
        case 2: r.c[0] = Rat(-2); r.c[5] = Rat(-1); break;   // alpha3 alpha1
        case 3: r.c[4] = Rat(1); break;                      // alpha1 alpha2
        default: throw std::invalid_argument("quat_a: index must be 1..3");
    }
    return r;
}

CliffQ quat_even(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3) {
    CliffQ r;
    r.c[0] = x0 - Rat(2) * x2;
    r.c[4] = x3;
    r.c[5] = -x2;
    r.c[6] = x1;
    return r;
}

namespace {

Rat scalar_value(const CliffQ& x) {
    for (int k = 1; k < 8; ++k)
        if (!(x.c[k] == Rat(0))) throw std::domain_error("scalar_value: element not scalar");
    return x.c[0];
}

bool is_zero_elt(const CliffQ& x) {
    return std::all_of(x.c.begin(), x.c.end(), [](const Rat& v) { return v == Rat(0); });
}

bool is_zero_elt_g(const CliffQi& x) {
    return std::all_of(x.c.begin(), x.c.end(), [](const GaussRat& v) { return is_zero(v); });
}

}  // namespace

std::string to_string(const CliffQ& x) {
    std::vector<std::pair<Rat, std::string>> terms;
    if (is_even_elt(x)) {
        const Rat a[4] = {x.c[0] - Rat(2) * x.c[5], x.c[6], -x.c[5], x.c[4]};
        const char* names[4] = {"", "a1", "a2", "a3"};
        for (int i = 0; i < 4; ++i)
            if (!(a[i] == Rat(0))) terms.emplace_back(a[i], names[i]);
    } else {
        const char* names[8] = {"", "e1", "e2", "e3", "e12", "e13", "e23", "e123"};
        for (int k = 0; k < 8; ++k)
            if (!(x.c[k] == Rat(0))) terms.emplace_back(x.c[k], names[k]);
    }
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [coef, name] : terms) {
        Rat mag = coef < Rat(0) ? -coef : coef;
        if (first) {
            if (coef < Rat(0)) os << '-';
            first = false;
        } else {
            os << (coef < Rat(0) ? " - " : " + ");
        }
        if (name.empty()) os << to_string(mag);
        else if (mag == Rat(1)) os << name;
        else os << to_string(mag) << ' ' << name;
    }
    return os.str();
}

QuaternionCert quaternion_certificate() {
    QuaternionCert cert;
    CliffQ a1 = quat_a(1), a2 = quat_a(2), a3 = quat_a(3);
    CliffQ three = cliff_scalar(Rat(3)), two = cliff_scalar(Rat(2)), six = cliff_scalar(Rat(6));
    cert.a1_identity = is_zero_elt(cmul(a1, a1) + Rat(3) * a1 + three);
    cert.a2_identity = is_zero_elt(cmul(a2, a2) + Rat(2) * a2 + two);
    cert.a3_identity = is_zero_elt(cmul(a3, a3) + six);
    cert.product_rule = is_zero_elt(cmul(a1, a2) + a3);
    cert.norm_a1 = cnorm(a1);
    cert.norm_a2 = cnorm(a2);
    cert.norm_a3 = cnorm(a3);
    return cert;
}

SpinPowerCert spin_lift_powers() {
    SpinPowerCert cert;
    CliffQ a1 = quat_a(1), a2 = quat_a(2), a3 = quat_a(3);
    CliffQ p = cliff_scalar(Rat(1));
    for (int k = 0; k < 6; ++k) p = cmul(p, a1);
    cert.a1_pow6 = scalar_value(p);
    p = cliff_scalar(Rat(1));
    for (int k = 0; k < 4; ++k) p = cmul(p, a2);
    cert.a2_pow4 = scalar_value(p);
    cert.a3_pow2 = scalar_value(cmul(a3, a3));
    cert.product_a1a2a3 = scalar_value(cmul(cmul(a1, a2), a3));
    return cert;
}

bool conj_reflection_check(int i, const Vec3& x) {
    CliffQ gi = cliff_generator<Rat>(i);
    CliffQ lhs = cmul(cmul(gi, cliff_embed<Rat>(x)), gi);
    Vec3 sx = reflection(i).apply(x);
    Vec3 alpha{};
    alpha[i - 1] = 1;
    CliffQ rhs = Rat(-qform(alpha)) * cliff_embed<Rat>(sx);
    return lhs == rhs;
}

bool vector_conjugation_check(const Vec3& v, const Vec3& x) {
    CliffQ cv = cliff_embed<Rat>(v), cx = cliff_embed<Rat>(x);
    CliffQ lhs = cmul(cmul(cv, cx), cv);
    CliffQ rhs = Rat(-qform(v)) * cx + Rat(bform(x, v)) * cv;
    return lhs == rhs;
}

std::pair<int, int> star_eigenspaces_even() {
    // Star restricted to the even basis (1, e12, e13, e23); columns of M are
    // the images. Eigenspace dimensions via exact rank.
    const int even_idx[4] = {0, 4, 5, 6};
    Rat M[4][4];
    const StarTable& st = clifford_star_table();
    for (int col = 0; col < 4; ++col)
        for (int row = 0; row < 4; ++row) M[row][col] = Rat(st[even_idx[col]][even_idx[row]]);

    auto rank_shifted = [&](const Rat& lambda) {
        Rat A[4][4];
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) A[r][c] = M[r][c] - (r == c ? lambda : Rat(0));
        int rank = 0;
        for (int col = 0; col < 4 && rank < 4; ++col) {
            int pivot = -1;
            for (int r = rank; r < 4; ++r)
                if (!(A[r][col] == Rat(0))) { pivot = r; break; }
            if (pivot < 0) continue;
            std::swap(A[pivot], A[rank]);
            for (int r = rank + 1; r < 4; ++r) {
                if (A[r][col] == Rat(0)) continue;
                Rat f = A[r][col] / A[rank][col];
                for (int c = col; c < 4; ++c) A[r][c] -= f * A[rank][c];
            }
            ++rank;
        }
        return rank;
    };
    return {4 - rank_shifted(Rat(1)), 4 - rank_shifted(Rat(-1))};
}

namespace {

using VecG = std::array<GaussRat, 3>;

GaussRat bform_g(const VecG& x, const VecG& y) {
    GaussRat s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = s + x[i] * GaussRat(Rat(gram().a[i][j])) * y[j];
    return s;
}

GaussRat qform_g(const VecG& x) {
    GaussRat b = bform_g(x, x);
    return {b.re / 2, b.im / 2};
}

}  // namespace

HodgeFrameCert hodge_frame_certificate() {
    HodgeFrameCert cert;
    const GaussRat i{Rat(0), Rat(1)};
    const VecG e{GaussRat(1) + i, GaussRat(0), GaussRat(2)};
    const VecG ebar{conj(e[0]), conj(e[1]), conj(e[2])};
    const Vec3 e1{1, 0, 2}, e2{1, 0, 0};

    cert.q_e = qform_g(e);
    cert.b_e_conj_e = bform_g(e, ebar);
    cert.b_e1_e2 = Rat(bform(e1, e2));
    cert.q_e1 = Rat(qform(e1));
    cert.q_e2 = Rat(qform(e2));

    CliffQi ce = cliff_embed<GaussRat>(e);
    cert.e_squared_zero = is_zero_elt_g(cmul(ce, ce));

    cert.plane_isotropic = true;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            CliffQi x, y;
            x.c[a] = GaussRat(1);
            y.c[b] = GaussRat(1);
            CliffQi h = cmul(cmul(x, ce), star(cmul(y, ce)));
            if (!is_zero_elt_g(h)) cert.plane_isotropic = false;
        }

    CliffQ frame = cmul(cliff_embed<Rat>(e1), cliff_embed<Rat>(e2));
    cert.frame_square = scalar_value(cmul(frame, frame));

    cert.ok = is_zero(cert.q_e) && cert.b_e_conj_e == GaussRat(8) && cert.b_e1_e2 == Rat(0) &&
              cert.q_e1 == Rat(2) && cert.q_e2 == Rat(2) && cert.e_squared_zero &&
              cert.plane_isotropic && cert.frame_square == Rat(-4);
    return cert;
}

DivisionCert division_sample_check(int bound) {
    if (bound < 1) throw std::invalid_argument("division_sample_check: bound must be >= 1");
    DivisionCert cert;
    using CliffZ = CliffordElt<long long>;
    for (long long x0 = -bound; x0 <= bound; ++x0)
        for (long long x1 = -bound; x1 <= bound; ++x1)
            for (long long x2 = -bound; x2 <= bound; ++x2)
                for (long long x3 = -bound; x3 <= bound; ++x3) {
                    if (x0 == 0 && x1 == 0 && x2 == 0 && x3 == 0) continue;
                    CliffZ a;
                    a.c[0] = x0 - 2 * x2;
                    a.c[4] = x3;
                    a.c[5] = -x2;
                    a.c[6] = x1;
                    ++cert.checked;
                    if (cnorm(a) == 0) ++cert.zero_norms;
                }
    return cert;
}

}  // namespace wedge
