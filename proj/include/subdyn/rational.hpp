#pragma once

#include <boost/rational.hpp>
#include <string>

namespace subdyn {

using Rational = boost::rational<long long>;

inline std::string format_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational pow2_inverse(int r) {
    Rational out(1);
    for (int i = 0; i < r; ++i) out /= 2;
    return out;
}

}  // namespace subdyn
