#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qcw/quotient.hpp"

namespace qcw {

/// Canonical coordinates on T*B: p[i] is conjugate to q[i] in the bracket
/// {f,g} = -sum_i q_i (df/dp_i dg/dq_i - dg/dp_i df/dq_i).
struct SymplecticChart {
  std::vector<std::string> p;
  std::vector<std::string> q;
};

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, const SymplecticChart& chart);

struct BracketPairReport {
  std::size_t i = 0, j = 0;
  std::string bracket;
  bool in_ideal = false;
  bool is_zero = false;
};

struct LagrangianReport {
  std::vector<BracketPairReport> pairs;
  bool l1 = true;  // every bracket stays in the ideal
  bool l2 = true;  // every bracket vanishes identically
};

/// Checks (L1) and (L2) for all pairs of relations of a quantum presentation
/// in the given chart. The engine cap is raised once if a bracket degree
/// exceeds it.
LagrangianReport lagrangian_check(const GradedPresentation& pres, const SymplecticChart& chart,
                                  int degree_cap);

// ---------------------------------------------------------------------------
// 3-site open Toda lattice

/// Phase-space point with a_i > 0 and b_1+b_2+b_3 = 0.
struct TodaState {
  double a1, a2;
  double b1, b2, b3;

  TodaState(double a1_, double a2_, double b1_, double b2_, double b3_);
};

std::array<double, 5> toda_vector_field(const TodaState& s);

/// Conserved quantities (g, h): the lambda^1 and lambda^0 coefficients of
/// det(X + lambda I).
std::pair<double, double> conserved_quantities(const TodaState& s);

/// Lax matrices X, Y at the state.
std::array<std::array<double, 3>, 3> lax_x(const TodaState& s);
std::array<std::array<double, 3>, 3> lax_y(const TodaState& s);
std::vector<std::complex<double>> lax_x_eigenvalues(const TodaState& s);

struct TodaTrajectory {
  std::vector<double> times;
  std::vector<TodaState> states;
  double max_drift_g = 0.0;
  double max_drift_h = 0.0;
  double max_trace = 0.0;
  double max_spectrum_drift = 0.0;
};

/// Fixed-step RK4; throws with the step index if a_i <= 0 is reached.
/// sample_stride controls how many steps separate stored samples.
TodaTrajectory toda_integrate(const TodaState& s0, double t_end, double dt,
                              std::size_t sample_stride = 100, bool track_spectrum = false);

/// Symbolic Toda data over the universe (a1,a2,b1,b2,b3): the five displayed
/// time-derivatives, the entries of [X,Y], and the coefficients of
/// det(X + lambda I) by power of lambda (indices 0..3).
UniversePtr toda_symbolic_universe();
std::vector<Polynomial> toda_symbolic_vector_field();
std::vector<std::vector<Polynomial>> toda_symbolic_commutator();
std::vector<Polynomial> toda_char_poly_coefficients();
Polynomial toda_symbolic_g();
Polynomial toda_symbolic_h();

struct TodaFlagMatch {
  bool matched = false;
  int a_sign = 0;  // recorded substitution a_i -> a_sign * q_i
  int b_sign = 0;  // b_i -> b_sign * x_i
};

/// Substitutes b_i -> x_i, a_i -> -q_i (found by searching sign assignments)
/// into (g, h) and verifies the results are exactly the F3 Borel relations.
TodaFlagMatch toda_matches_flag_relations();

}  // namespace qcw
