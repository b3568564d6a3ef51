#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qcw/rational.hpp"

namespace qcw {

/// Ordered set of variables with assigned even cohomological degrees.
/// Variables flagged as quantum parameters form the q-block of the term
/// order; their degrees are 2<c1 TM, D_i>.
class Universe {
 public:
  struct Var {
    std::string name;
    int degree = 2;
    bool quantum = false;
  };

  static std::shared_ptr<const Universe> make(std::vector<Var> vars);

  std::size_t size() const { return vars_.size(); }
  const Var& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Var>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;

  bool same_as(const Universe& o) const;

 private:
  explicit Universe(std::vector<Var> vars) : vars_(std::move(vars)) {}
  std::vector<Var> vars_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// Exponent vector aligned with a Universe. Dense; absent variables carry
/// exponent zero, so equality is plain vector equality.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> e) : e_(std::move(e)) {}

  std::size_t size() const { return e_.size(); }
  unsigned exp(std::size_t i) const { return e_[i]; }
  void set_exp(std::size_t i, unsigned v) { e_[i] = v; }
  bool is_constant() const;

  int weighted_degree(const Universe& u) const;
  int quantum_degree(const Universe& u) const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  /// Quotient this / d; caller must ensure divisibility.
  Monomial divide_by(const Monomial& d) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  const std::vector<unsigned>& exponents() const { return e_; }

 private:
  std::vector<unsigned> e_;
};

/// Term order: graded by weighted degree, refined so that monomials with a
/// smaller q-block degree come later (i.e. classical monomials lead), then
/// lexicographic in the declared variable order. For universes without
/// quantum variables this is plain graded lex.
struct TermOrder {
  const Universe* u = nullptr;
  /// true when a precedes b (a is smaller in the term order).
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial over the rationals, tied to a Universe.
/// Terms are kept in canonical order with no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  explicit Polynomial(UniversePtr u);
  static Polynomial zero(UniversePtr u) { return Polynomial(std::move(u)); }
  static Polynomial constant(UniversePtr u, const Rational& c);
  static Polynomial variable(UniversePtr u, const std::string& name, unsigned power = 1);
  static Polynomial from_monomial(UniversePtr u, const Monomial& m, const Rational& c);

  const UniversePtr& universe() const { return uni_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial pow(unsigned e) const;

  /// Formal partial derivative with respect to a named variable.
  Polynomial diff(const std::string& var) const;

  /// Largest weighted degree among terms; nullopt for the zero polynomial.
  std::optional<int> weighted_degree() const;
  /// True when every term has the same weighted degree. On failure and when
  /// offending != nullptr, *offending receives a term of non-maximal degree.
  bool is_homogeneous(Monomial* offending = nullptr) const;

  /// Leading (largest) term under the canonical order.
  const std::pair<const Monomial, Rational>& leading_term() const;

  /// Map each variable to a polynomial over a target universe. Variables not
  /// present in the map must exist in the target universe with the same name.
  Polynomial map_variables(const UniversePtr& target,
                           const std::map<std::string, Polynomial>& images) const;

  std::complex<double> eval(std::span<const std::complex<double>> point) const;
  Rational eval_rational(std::span<const Rational> point) const;

  /// Canonical text form: terms in descending order, explicit `*` and `^`.
  std::string to_string() const;
  /// JSON-oriented rendering: list of {exponents, numerator, denominator}.
  std::string to_json() const;

  /// Parse the canonical syntax (+ - * ^, integer or a/b coefficients,
  /// parentheses) over the given universe.
  static Polynomial parse(UniversePtr u, const std::string& text);

  void add_term(const Monomial& m, const Rational& c);

 private:
  void require_same_universe(const Polynomial& o) const;

  UniversePtr uni_;
  TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace qcw
