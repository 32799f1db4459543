#include "gramspec/scalar.hpp"

#include <sstream>

namespace gramspec {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string GaussianRational::str() const {
    if (is_real()) return rational_str(re_);
    std::string im_part = rational_str(im_) + "i";
    if (sgn(re_) == 0) return im_part;
    if (sgn(im_) > 0) return rational_str(re_) + "+" + im_part;
    return rational_str(re_) + im_part; // sign carried by im
}

bool lex_less(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re(), b.re());
    if (c != 0) return c < 0;
    return cmp(a.im(), b.im()) < 0;
}

} // namespace gramspec
