#pragma once

#include <vector>

#include "qcw/polynomial.hpp"

namespace qcw {

/// Formal power series in one parameter t, truncated at a fixed order, with
/// Polynomial coefficients. coefficient(m) is the coefficient of t^m.
class TruncatedSeries {
 public:
  TruncatedSeries(UniversePtr u, unsigned order);

  unsigned order() const { return order_; }
  const UniversePtr& universe() const { return uni_; }
  const Polynomial& coefficient(unsigned m) const { return coeffs_.at(m); }
  void set_coefficient(unsigned m, Polynomial p);

  /// Series whose t^i coefficient is the variable c_i for i = 1..k (constant
  /// term 1): the generic total-class series 1 + c_1 t + ... + c_k t^k.
  static TruncatedSeries generic(UniversePtr u, const std::vector<std::string>& vars,
                                 unsigned order);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const;

  bool has_unit_constant_term() const;

  /// Coefficient-wise partial derivative with respect to a ring variable.
  TruncatedSeries diff(const std::string& var) const;
  /// Multiply by t^i (shifts coefficients, drops overflow past the order).
  TruncatedSeries shift(unsigned i) const;

 private:
  UniversePtr uni_;
  unsigned order_;
  std::vector<Polynomial> coeffs_;
};

/// Inverse series s with c*s = 1 + O(t^{order+1}), by the triangular
/// recursion s_m = -sum_{i=1..m} c_i s_{m-i}. Requires constant term 1.
TruncatedSeries series_invert(const TruncatedSeries& c);

/// Logarithm w = log c with w_m = c_m - (1/m) sum_{j=1..m-1} (m-j) c_j w_{m-j}.
/// Requires constant term 1; the result has zero constant term.
TruncatedSeries series_log(const TruncatedSeries& c);

/// Exponential of a series with zero constant term (test oracle for log).
TruncatedSeries series_exp(const TruncatedSeries& w);

}  // namespace qcw
