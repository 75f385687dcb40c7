#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wedge/rational.hpp"

namespace wedge {

using Vec3 = std::array<long long, 3>;
using VecQ = std::array<Rat, 3>;

struct Mat3 {
    std::array<std::array<long long, 3>, 3> a{};

    static Mat3 identity();
    bool operator==(const Mat3&) const = default;
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Vec3 operator*(const Mat3& x, const Vec3& v);
Mat3 transpose(const Mat3& x);
long long det(const Mat3& x);
std::string to_string(const Mat3& x);  // row-major

// Gram matrix of the bilinear form b on the root basis (alpha1, alpha2, alpha3).
const Mat3& gram();

long long bform(const Vec3& x, const Vec3& y);  // x^T G y
long long qform(const Vec3& x);                 // b(x,x)/2, integer valued
Rat bform_q(const VecQ& x, const VecQ& y);
Rat qform_q(const VecQ& x);
long long discriminant();  // det G = -12

// Integer isometry of (L, b): M^T G M = G and det = +-1, checked at
// construction (throws std::invalid_argument).
class LatIsometry {
public:
    explicit LatIsometry(const Mat3& m);
    const Mat3& mat() const { return m_; }
    int det_sign() const { return det_; }
    Vec3 apply(const Vec3& v) const { return m_ * v; }
    bool operator==(const LatIsometry& o) const { return m_ == o.m_; }

private:
    Mat3 m_;
    int det_;
};

LatIsometry isometry_identity();
LatIsometry compose(const LatIsometry& a, const LatIsometry& b);  // a.m * b.m
LatIsometry inverse(const LatIsometry& a);

// Multiplicative order, or nullopt if it exceeds the cap (isometries of a
// hyperbolic lattice can have infinite order).
std::optional<int> isometry_order(const LatIsometry& m, int cap = 1000);

// s_i(x) = x - (b(x, alpha_i) / q(alpha_i)) alpha_i, i in {1,2,3}.
LatIsometry reflection(int i);

// g1 = s2 s3, g2 = s3 s1, g3 = s1 s2 (matrices acting on column vectors),
// so that g1 g2 g3 = I with orders 6, 4, 2.
std::array<LatIsometry, 3> rotations();

// Rational square class: sign and squarefree positive part.
struct SquareClass {
    int sign = 1;
    long long part = 1;
    bool operator==(const SquareClass&) const = default;
};

SquareClass square_class(const Rat& r);  // throws on zero
SquareClass operator*(const SquareClass& a, const SquareClass& b);
std::string to_string(const SquareClass& c);  // "+2", "-3", "+1"

// Product of q(u) over a rational reflection factorization (Cartan-Dieudonne
// with an orthogonalized pivot basis). Factorization-independent.
SquareClass spinor_norm(const LatIsometry& m);

// det = +1 and positive spinor norm.
bool in_so_sharp(const LatIsometry& m);

// Point of P^2(F_p), first nonzero coordinate normalized to 1.
struct ProjPointFp {
    int p = 0;
    std::array<int, 3> c{};
    bool operator==(const ProjPointFp&) const = default;
    bool operator<(const ProjPointFp& o) const { return c < o.c; }
};

std::string to_string(const ProjPointFp& pt);  // "[x:y:z]"

// Zero locus of q in P^2(F_p), sorted. Requires p prime, p <= 97.
std::vector<ProjPointFp> conic_points(int p);

struct NoRationalPointCert {
    long long primitive_vectors_mod27 = 0;
    long long primitive_zeros_mod27 = 0;
    long long box_bound = 0;
    bool zero_in_box = false;
    Vec3 sample{};
    long long sample_q = 0;
};

// q has no primitive zero mod 27 and no nonzero integer zero with
// |coordinates| <= 50; sample value q(3,2,6) = -6 recorded as a non-witness.
NoRationalPointCert no_rational_point_certificate();

// Element of PGL2(F_5), normalized so the first nonzero entry of
// (a, b, c, d) is 1. Determinant nonzero mod 5.
struct MobiusF5 {
    std::array<int, 4> m{1, 0, 0, 1};
    bool operator==(const MobiusF5&) const = default;
    bool operator<(const MobiusF5& o) const { return m < o.m; }
};

MobiusF5 make_mobius(std::array<int, 4> m);
MobiusF5 mobius_compose(const MobiusF5& x, const MobiusF5& y);
int mobius_order(const MobiusF5& x);

// Image in PGL2(F_5) via the conic over F_5, parametrized by stereographic
// projection from the reduction of -alpha1 + 2 alpha2 + 2 alpha3. The input
// must lie in SO# (throws otherwise); throws if the induced point map is not
// a Mobius transformation (cannot happen for isometries).
MobiusF5 to_pgl2f5(const LatIsometry& m);

// Order of the subgroup of PGL2(F_5) generated by the images.
int image_group_order(const std::vector<LatIsometry>& gens);

// m congruent to the identity mod 5, entrywise.
bool level5_membership(const LatIsometry& m);

struct Level5Cert {
    long long words_checked = 0;
    long long level5_words = 0;
    bool kernel_matches = true;  // level5_membership <=> trivial Mobius image
};

// All nonempty words of length <= max_len in the rotations g1, g2, g3.
Level5Cert level5_word_certificate(int max_len);

struct ParityCert {
    // Exponent sums mod 2 of each defining relation of the (2,2,2; 6,4,2)
    // reflection presentation; all must vanish for the (Z/2)^3 grading.
    bool relations_even = false;
    bool generator_vectors_distinct = false;
};

ParityCert reflection_parity_certificate();

}  // namespace wedge
