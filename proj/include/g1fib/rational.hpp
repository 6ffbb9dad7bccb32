#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace g1fib {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Largest integer <= r.
inline long long floor_rat(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline long long ceil_rat(const Rational& r) {
    return -floor_rat(-r);
}

}  // namespace g1fib
