#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qcw/polynomial.hpp"

namespace qcw {

/// Landau-Ginzburg potential for Gr_k(C^n): the classical body is w_{n+1}
/// from the logarithm of the total-class series; the quantum version appends
/// (-1)^{n-k} c_1 q.
struct Potential {
  Polynomial body;  // over c_1..c_k (and q when quantum)
  int k = 0;
  int n = 0;
  bool quantum = false;
};

Potential lg_potential(int k, int n, bool quantum);

/// True iff dP/dc_i = s_{n+1-i} for i = 1..k, with the s_j produced by
/// series inversion; this is the property that dP generates the relations.
bool check_gradient(const Potential& pot);

struct CriticalPoint {
  std::vector<std::complex<double>> coordinates;  // c_1..c_k
  double residual = 0.0;
  std::complex<double> hessian_det;
};

/// All solutions of dP~ = 0 at the given q, by multistart Newton with a
/// deterministic seed grid. Throws if the root count does not reach the
/// quotient dimension C(n,k) within the start budget.
std::vector<CriticalPoint> critical_points(const Potential& pot, std::complex<double> q_value,
                                           double tol = 1e-10);

std::complex<double> hessian_det(const Potential& pot, const std::vector<std::complex<double>>& pt,
                                 std::complex<double> q_value);

struct ResidueReport {
  std::vector<CriticalPoint> roots;
  std::complex<double> sum;
  long rounded_abs = 0;       // |sum| rounded
  long oracle = 0;            // intersection number from the classical quotient
  bool integer_within_tol = false;
  bool match = false;
};

/// Vafa-Intriligator residue sum for a polynomial T of top weighted degree
/// 2 k(n-k), compared in absolute value against the classical quotient-ring
/// intersection number.
ResidueReport vafa_intriligator(int k, int n, const Polynomial& T, std::complex<double> q_value,
                                double tol = 1e-6);

/// Top-class coefficient of T in the classical Gr_k(C^n) quotient.
Rational intersection_oracle(int k, int n, const Polynomial& T);

/// Universe of the classical potential (c-variables only), for parsing T.
UniversePtr lg_classical_universe(int k, int n);

}  // namespace qcw
