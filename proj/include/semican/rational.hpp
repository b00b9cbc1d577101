#pragma once

#include <gmpxx.h>

#include <string>

namespace semican {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form.
inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Always "p/q", with q = 1 for integers. This is the wire form used in reports.
inline std::string to_pq_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& text) {
    Rational r(text);
    r.canonicalize();
    return r;
}

}  // namespace semican
