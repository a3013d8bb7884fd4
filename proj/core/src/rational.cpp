#include "folbott/rational.hpp"

#include <stdexcept>

namespace folbott {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& base, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

}  // namespace folbott
