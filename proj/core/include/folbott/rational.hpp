#pragma once

#include <gmpxx.h>

#include <string>

namespace folbott {

// mpq_class keeps num/den reduced with den > 0 after every arithmetic op.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; result is canonicalized.
Rational parse_rational(const std::string& s);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational pow(const Rational& base, unsigned e);

}  // namespace folbott
