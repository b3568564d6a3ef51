#include "qcw/series.hpp"

#include <stdexcept>

namespace qcw {

TruncatedSeries::TruncatedSeries(UniversePtr u, unsigned order)
    : uni_(std::move(u)), order_(order) {
  coeffs_.assign(order_ + 1, Polynomial::zero(uni_));
}

void TruncatedSeries::set_coefficient(unsigned m, Polynomial p) {
  if (m > order_) throw std::out_of_range("TruncatedSeries: index beyond order");
  if (!p.universe()->same_as(*uni_))
    throw std::invalid_argument("TruncatedSeries: coefficient universe mismatch");
  coeffs_[m] = std::move(p);
}

TruncatedSeries TruncatedSeries::generic(UniversePtr u, const std::vector<std::string>& vars,
                                         unsigned order) {
  TruncatedSeries s(u, order);
  s.set_coefficient(0, Polynomial::constant(u, Rational(1)));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i + 1 > order) break;
    s.set_coefficient(static_cast<unsigned>(i + 1), Polynomial::variable(u, vars[i]));
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
  TruncatedSeries r(uni_, order_);
  for (unsigned m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] + o.coeffs_[m];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
  TruncatedSeries r(uni_, order_);
  for (unsigned m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m] - o.coeffs_[m];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("TruncatedSeries: order mismatch");
  TruncatedSeries r(uni_, order_);
  for (unsigned m = 0; m <= order_; ++m)
    for (unsigned i = 0; i <= m; ++i) r.coeffs_[m] += coeffs_[i] * o.coeffs_[m - i];
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (order_ != o.order_) return false;
  for (unsigned m = 0; m <= order_; ++m)
    if (coeffs_[m] != o.coeffs_[m]) return false;
  return true;
}

bool TruncatedSeries::has_unit_constant_term() const {
  return coeffs_[0] == Polynomial::constant(uni_, Rational(1));
}

TruncatedSeries TruncatedSeries::diff(const std::string& var) const {
  TruncatedSeries r(uni_, order_);
  for (unsigned m = 0; m <= order_; ++m) r.coeffs_[m] = coeffs_[m].diff(var);
  return r;
}

TruncatedSeries TruncatedSeries::shift(unsigned i) const {
  TruncatedSeries r(uni_, order_);
  for (unsigned m = 0; m + i <= order_; ++m) r.coeffs_[m + i] = coeffs_[m];
  return r;
}

TruncatedSeries series_invert(const TruncatedSeries& c) {
  if (!c.has_unit_constant_term())
    throw std::domain_error("series_invert: constant term must be 1");
  const auto& u = c.universe();
  TruncatedSeries s(u, c.order());
  s.set_coefficient(0, Polynomial::constant(u, Rational(1)));
  for (unsigned m = 1; m <= c.order(); ++m) {
    Polynomial acc = Polynomial::zero(u);
    for (unsigned i = 1; i <= m; ++i) acc += c.coefficient(i) * s.coefficient(m - i);
    s.set_coefficient(m, -acc);
  }
  return s;
}

TruncatedSeries series_log(const TruncatedSeries& c) {
  if (!c.has_unit_constant_term())
    throw std::domain_error("series_log: constant term must be 1");
  const auto& u = c.universe();
  TruncatedSeries w(u, c.order());
  for (unsigned m = 1; m <= c.order(); ++m) {
    Polynomial acc = c.coefficient(m);
    for (unsigned j = 1; j < m; ++j)
      acc -= c.coefficient(j) * w.coefficient(m - j) *
             Rational(static_cast<long>(m - j), static_cast<long>(m));
    w.set_coefficient(m, acc);
  }
  return w;
}

TruncatedSeries series_exp(const TruncatedSeries& w) {
  if (!w.coefficient(0).is_zero())
    throw std::domain_error("series_exp: constant term must be 0");
  const auto& u = w.universe();
  TruncatedSeries c(u, w.order());
  c.set_coefficient(0, Polynomial::constant(u, Rational(1)));
  // c' = w' c, coefficient-wise: m c_m = sum_{j=1..m} j w_j c_{m-j}.
  for (unsigned m = 1; m <= w.order(); ++m) {
    Polynomial acc = Polynomial::zero(u);
    for (unsigned j = 1; j <= m; ++j)
      acc += w.coefficient(j) * c.coefficient(m - j) *
             Rational(static_cast<long>(j), static_cast<long>(m));
    c.set_coefficient(m, acc);
  }
  return c;
}

}  // namespace qcw
