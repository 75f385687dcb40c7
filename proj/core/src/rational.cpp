#include "wedge/rational.hpp"

#include <sstream>

namespace wedge {

std::string to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

std::string to_string(const GaussRat& z) {
    if (z.im == 0) return to_string(z.re);
    std::ostringstream os;
    Rat im = z.im;
    if (!(z.re == 0)) {
        os << to_string(z.re) << (im < Rat(0) ? " - " : " + ");
        if (im < Rat(0)) im = -im;
    } else if (im < Rat(0)) {
        os << '-';
        im = -im;
    }
    if (!(im == Rat(1))) os << to_string(im);
    os << 'i';
    return os.str();
}

}  // namespace wedge
