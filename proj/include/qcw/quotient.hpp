#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qcw/polynomial.hpp"

namespace qcw {

/// Generators with even degrees (quantum parameters flagged in the universe)
/// plus homogeneous relation polynomials.
struct GradedPresentation {
  UniversePtr universe;
  std::vector<Polynomial> relations;
  std::string label;

  /// Declarative text format: one `generator`/`quantum`/`relation` line each.
  std::string to_text() const;
  static GradedPresentation from_text(const std::string& text);
};

/// A confluent rewriting basis for the relation ideal, certified up to a
/// weighted-degree cap. Reduction refuses inputs above the cap rather than
/// ever returning a wrong answer.
class NormalFormEngine {
 public:
  struct Rule {
    Monomial lead;
    Polynomial tail;  // lead rewrites to tail
  };

  static NormalFormEngine complete(GradedPresentation pres, int degree_cap);

  const GradedPresentation& presentation() const { return pres_; }
  int degree_cap() const { return cap_; }
  const std::vector<Rule>& rules() const { return rules_; }

  Polynomial normal_form(const Polynomial& p) const;
  bool ideal_membership(const Polynomial& p) const;

  /// Standard (irreducible) monomials of the given weighted degree, in
  /// ascending term order.
  std::vector<Monomial> monomial_basis(int degree) const;
  /// Standard monomials free of quantum variables, degrees 0..max_degree.
  /// For a classical presentation this lists the whole additive basis.
  std::vector<Monomial> classical_basis(int max_degree) const;

 private:
  explicit NormalFormEngine(GradedPresentation pres, int cap)
      : pres_(std::move(pres)), cap_(cap) {}

  GradedPresentation pres_;
  int cap_;
  std::vector<Rule> rules_;
};

/// One basis class of the quotient: a display label plus its lift polynomial.
struct BasisClass {
  std::string label;
  Polynomial lift;
};

/// Expansion of a homogeneous element in the lifted cohomology basis with
/// q-monomial coefficients: element = sum over entries of coeff * q_mono *
/// NF(lift of basis[index]).
struct BasisExpansion {
  struct Entry {
    std::size_t basis_index;
    Monomial q_monomial;  // over the engine universe, q-variables only
    Rational coeff;
  };
  std::vector<Entry> entries;

  /// Render as a polynomial expression in the basis labels and q-variables.
  std::string to_string(const std::vector<BasisClass>& basis, const Universe& u) const;
  Polynomial to_polynomial(const std::vector<BasisClass>& basis, const UniversePtr& u) const;
};

/// Expand NF(p) in { q^D * NF(basis[i].lift) }. Exact linear solve per graded
/// piece; throws if the lifted classes fail to span (basis lift failure).
BasisExpansion expand_in_basis(const NormalFormEngine& engine,
                               const std::vector<BasisClass>& basis, const Polynomial& p);

/// Matrix of quantum multiplication by `x` on the lifted basis; entry (i,j)
/// is the C[q]-coefficient of basis i in x * basis j.
std::vector<std::vector<Polynomial>> multiplication_matrix(
    const NormalFormEngine& engine, const std::vector<BasisClass>& basis, const Polynomial& x);

struct SpectrumSample {
  std::vector<std::complex<double>> q_values;
  std::vector<std::vector<std::complex<double>>> eigen_tuples;  // one tuple per branch
  double max_residual = 0.0;
  bool diagonalizable = true;
  bool pass = false;
};

struct SpectrumReport {
  std::vector<SpectrumSample> samples;
  double tolerance = 0.0;
  bool pass = false;
};

/// Joint eigenvalues of the quantum multiplication operators by the given
/// degree-2 generators at numeric q, substituted back into every relation.
SpectrumReport spectrum_check(const NormalFormEngine& engine,
                              const std::vector<BasisClass>& basis,
                              const std::vector<std::string>& degree2_generators,
                              const std::vector<std::vector<std::complex<double>>>& q_samples,
                              double tol);

}  // namespace qcw
