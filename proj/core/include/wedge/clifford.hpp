#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "wedge/lattice.hpp"
#include "wedge/rational.hpp"

namespace wedge {

// Clifford algebra C(q) of the (6,4,2) lattice over the rationals or the
// Gaussian rationals, coordinates on the fixed basis
//   (1, a1, a2, a3, a1a2, a1a3, a2a3, a1a2a3)
// where a_i abbreviates alpha_i. Products are normal-ordered with
// alpha_j alpha_i = -alpha_i alpha_j + b(alpha_i, alpha_j) for i < j and
// alpha_i^2 = q(alpha_i).
inline constexpr int kCliffDim = 8;

// Integer structure constants: mul_table()[a][b][k] is the coefficient of
// basis monomial k in the product of basis monomials a and b.
using CliffTable = std::array<std::array<std::array<long long, 8>, 8>, 8>;
using StarTable = std::array<std::array<long long, 8>, 8>;

const CliffTable& clifford_mul_table();
const StarTable& clifford_star_table();

// Degree of basis monomial k (number of generators), 0..3.
int basis_degree(int k);

template <class S>
struct CliffordElt {
    std::array<S, 8> c{};

    bool operator==(const CliffordElt&) const = default;
};

template <class S>
CliffordElt<S> cliff_scalar(const S& x) {
    CliffordElt<S> r;
    r.c[0] = x;
    return r;
}

// alpha_i for i in {1,2,3}: basis indices 1..3.
template <class S>
CliffordElt<S> cliff_generator(int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("cliff_generator: index must be 1..3");
    CliffordElt<S> r;
    r.c[i] = S(1);
    return r;
}

template <class S>
CliffordElt<S> operator+(const CliffordElt<S>& x, const CliffordElt<S>& y) {
    CliffordElt<S> r;
    for (int k = 0; k < 8; ++k) r.c[k] = x.c[k] + y.c[k];
    return r;
}

template <class S>
CliffordElt<S> operator-(const CliffordElt<S>& x, const CliffordElt<S>& y) {
    CliffordElt<S> r;
    for (int k = 0; k < 8; ++k) r.c[k] = x.c[k] - y.c[k];
    return r;
}

template <class S>
CliffordElt<S> operator*(const S& s, const CliffordElt<S>& x) {
    CliffordElt<S> r;
    for (int k = 0; k < 8; ++k) r.c[k] = s * x.c[k];
    return r;
}

template <class S>
CliffordElt<S> cmul(const CliffordElt<S>& x, const CliffordElt<S>& y) {
    const CliffTable& t = clifford_mul_table();
    CliffordElt<S> r;
    for (int a = 0; a < 8; ++a) {
        if (x.c[a] == S(0)) continue;
        for (int b = 0; b < 8; ++b) {
            if (y.c[b] == S(0)) continue;
            const S xy = x.c[a] * y.c[b];
            for (int k = 0; k < 8; ++k) {
                long long coef = t[a][b][k];
                if (coef != 0) r.c[k] = r.c[k] + xy * S(coef);
            }
        }
    }
    return r;
}

// Reversal anti-involution: star(xy) = star(y) star(x), identity on L.
template <class S>
CliffordElt<S> star(const CliffordElt<S>& x) {
    const StarTable& t = clifford_star_table();
    CliffordElt<S> r;
    for (int a = 0; a < 8; ++a) {
        if (x.c[a] == S(0)) continue;
        for (int k = 0; k < 8; ++k) {
            long long coef = t[a][k];
            if (coef != 0) r.c[k] = r.c[k] + x.c[a] * S(coef);
        }
    }
    return r;
}

template <class S>
bool is_even_elt(const CliffordElt<S>& x) {
    for (int k = 0; k < 8; ++k)
        if (basis_degree(k) % 2 == 1 && !(x.c[k] == S(0))) return false;
    return true;
}

// a a* for even a, where it is scalar valued; throws std::domain_error on an
// element with odd components (the norm is not scalar on mixed parity).
template <class S>
S cnorm(const CliffordElt<S>& a) {
    if (!is_even_elt(a)) throw std::domain_error("cnorm: element not in the even subalgebra");
    CliffordElt<S> p = cmul(a, star(a));
    for (int k = 1; k < 8; ++k)
        if (!(p.c[k] == S(0))) throw std::domain_error("cnorm: product is not scalar");
    return p.c[0];
}

template <class S, class V>
CliffordElt<S> cliff_embed(const V& v) {
    CliffordElt<S> r;
    for (int i = 0; i < 3; ++i) r.c[i + 1] = S(v[i]);
    return r;
}

using CliffQ = CliffordElt<Rat>;
using CliffQi = CliffordElt<GaussRat>;

// Even-part quaternion basis: b1 = alpha2 alpha3, b2 = alpha3 alpha1,
// b3 = alpha1 alpha2 (printed a1, a2, a3).
CliffQ quat_a(int i);
CliffQ quat_even(const Rat& x0, const Rat& x1, const Rat& x2, const Rat& x3);

// Even elements in the a-notation ("-3 - a1"); general elements over the
// monomial basis ("2 + e13").
std::string to_string(const CliffQ& x);

struct QuaternionCert {
    bool a1_identity = false;  // a1^2 + 3 a1 + 3 = 0
    bool a2_identity = false;  // a2^2 + 2 a2 + 2 = 0
    bool a3_identity = false;  // a3^2 + 6 = 0
    bool product_rule = false; // a1 a2 = -a3
    Rat norm_a1, norm_a2, norm_a3;
};

QuaternionCert quaternion_certificate();

struct SpinPowerCert {
    Rat a1_pow6, a2_pow4, a3_pow2;  // -27, -4, -6
    Rat product_a1a2a3;             // +6 (normalized value +1)
};

SpinPowerCert spin_lift_powers();

// alpha_i x alpha_i = -q(alpha_i) s_i(x) inside C(q), x a lattice vector.
bool conj_reflection_check(int i, const Vec3& x);

// v x v = -q(v) x + b(x, v) v for lattice vectors v, x.
bool vector_conjugation_check(const Vec3& v, const Vec3& x);

// Dimensions of the +1 and -1 eigenspaces of star on the even part.
std::pair<int, int> star_eigenspaces_even();

struct HodgeFrameCert {
    GaussRat q_e;          // 0
    GaussRat b_e_conj_e;   // 8
    Rat b_e1_e2;           // 0
    Rat q_e1, q_e2;        // 2, 2
    bool e_squared_zero = false;
    bool plane_isotropic = false;  // (x e) star(y e) = 0 for all basis x, y
    Rat frame_square;      // (e' e'')^2 = -4
    bool ok = false;
};

// e = (1+i) alpha1 + 2 alpha3 = e' + i e'' with e' = alpha1 + 2 alpha3,
// e'' = alpha1.
HodgeFrameCert hodge_frame_certificate();

struct DivisionCert {
    long long checked = 0;
    long long zero_norms = 0;
};

// cnorm is nonzero on all nonzero integer combinations x0 + x1 a1 + x2 a2
// + x3 a3 with |x_i| <= bound.
DivisionCert division_sample_check(int bound);

}  // namespace wedge
