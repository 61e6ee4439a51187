#pragma once

#include <gmpxx.h>

#include <string>

namespace hcz {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational Q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Floor as an Integer.
inline Integer floor_q(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

// Small integer value; caller guarantees it fits.
inline long to_long(const Rational& r) { return Integer(floor_q(r)).get_si(); }

// "p" or "p/q".
inline std::string to_str(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s);

}  // namespace hcz
