#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace zetasaw {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

inline double to_double(const bigrat& q) { return q.template convert_to<double>(); }
inline double to_double(const bigint& n) { return n.template convert_to<double>(); }

// cpp_int division truncates toward zero; continued fractions need floor semantics.
inline bigint floor_div(const bigint& num, const bigint& den) {
    if (den == 0) throw std::domain_error("floor_div: zero denominator");
    bigint q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

inline bigint binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline bigint pow10(unsigned d) {
    bigint r = 1;
    for (unsigned i = 0; i < d; ++i) r *= 10;
    return r;
}

// Renders p/q in decimal ("3/4" style) for CLI/report output.
inline std::string to_string(const bigrat& q) {
    const bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace zetasaw
