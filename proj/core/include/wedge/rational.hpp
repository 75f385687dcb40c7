#pragma once

#include <boost/rational.hpp>
#include <string>

namespace wedge {

using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);

// Gaussian rational a + b*i with exact rational parts.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(long long n) : re(n) {}
    GaussRat(const Rat& r) : re(r) {}
    GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

    bool operator==(const GaussRat&) const = default;
};

inline GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
}
inline GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
}
inline GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
inline GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline GaussRat conj(const GaussRat& a) { return {a.re, -a.im}; }
inline bool is_zero(const GaussRat& a) { return a.re == 0 && a.im == 0; }

std::string to_string(const GaussRat& z);

}  // namespace wedge
