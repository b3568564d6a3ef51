#include "qcw/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qcw {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(unsigned e) const {
  mpq_class r(1);
  mpq_class base = v_;
  unsigned k = e;
  while (k > 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return Rational(r);
}

long Rational::round_to_long() const {
  if (!is_integer()) throw std::domain_error("Rational: round_to_long on non-integer");
  if (!v_.get_num().fits_slong_p()) throw std::overflow_error("Rational: value does not fit in long");
  return v_.get_num().get_si();
}

std::string Rational::to_string() const {
  return v_.get_str();
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(mpq_class(r));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(mpq_class(r));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace qcw
