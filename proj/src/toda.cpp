#include "qcw/toda.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcw/spaces.hpp"

namespace qcw {

Polynomial poisson_bracket(const Polynomial& f, const Polynomial& g, const SymplecticChart& chart) {
  if (chart.p.size() != chart.q.size())
    throw std::invalid_argument("poisson_bracket: chart rank mismatch");
  const auto& u = f.universe();
  if (!u->same_as(*g.universe()))
    throw std::invalid_argument("poisson_bracket: mismatched universes");
  for (const auto& v : u->vars()) {
    bool known = std::find(chart.p.begin(), chart.p.end(), v.name) != chart.p.end() ||
                 std::find(chart.q.begin(), chart.q.end(), v.name) != chart.q.end();
    if (!known)
      throw std::invalid_argument("poisson_bracket: variable '" + v.name + "' outside chart");
  }
  Polynomial acc = Polynomial::zero(u);
  for (std::size_t i = 0; i < chart.p.size(); ++i) {
    Polynomial qi = Polynomial::variable(u, chart.q[i]);
    acc -= qi * (f.diff(chart.p[i]) * g.diff(chart.q[i]) - g.diff(chart.p[i]) * f.diff(chart.q[i]));
  }
  return acc;
}

LagrangianReport lagrangian_check(const GradedPresentation& pres, const SymplecticChart& chart,
                                  int degree_cap) {
  int needed = degree_cap;
  for (const auto& r : pres.relations)
    for (const auto& s : pres.relations) {
      int d = r.weighted_degree().value_or(0) + s.weighted_degree().value_or(0);
      needed = std::max(needed, d);
    }
  NormalFormEngine engine = NormalFormEngine::complete(pres, needed);

  LagrangianReport report;
  for (std::size_t i = 0; i < pres.relations.size(); ++i) {
    for (std::size_t j = i + 1; j < pres.relations.size(); ++j) {
      Polynomial br = poisson_bracket(pres.relations[i], pres.relations[j], chart);
      BracketPairReport pr;
      pr.i = i;
      pr.j = j;
      pr.bracket = br.to_string();
      pr.is_zero = br.is_zero();
      pr.in_ideal = br.is_zero() || engine.ideal_membership(br);
      report.pairs.push_back(pr);
      report.l1 = report.l1 && pr.in_ideal;
      report.l2 = report.l2 && pr.is_zero;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Numeric Toda lattice

TodaState::TodaState(double a1_, double a2_, double b1_, double b2_, double b3_)
    : a1(a1_), a2(a2_), b1(b1_), b2(b2_), b3(b3_) {
  if (!(a1 > 0.0) || !(a2 > 0.0)) throw std::invalid_argument("TodaState: need a_i > 0");
  if (std::abs(b1 + b2 + b3) > 1e-12)
    throw std::invalid_argument("TodaState: need b1+b2+b3 = 0");
}

std::array<double, 5> toda_vector_field(const TodaState& s) {
  return {s.a1 * (s.b1 - s.b2), s.a2 * (s.b2 - s.b3), -s.a1, s.a1 - s.a2, s.a2};
}

std::pair<double, double> conserved_quantities(const TodaState& s) {
  double g = s.b1 * s.b2 + s.b2 * s.b3 + s.b3 * s.b1 - s.a1 - s.a2;
  double h = s.b1 * s.b2 * s.b3 - s.b3 * s.a1 - s.b1 * s.a2;
  return {g, h};
}

std::array<std::array<double, 3>, 3> lax_x(const TodaState& s) {
  return {{{s.b1, s.a1, 0.0}, {1.0, s.b2, s.a2}, {0.0, 1.0, s.b3}}};
}

std::array<std::array<double, 3>, 3> lax_y(const TodaState& s) {
  return {{{0.0, s.a1, 0.0}, {0.0, 0.0, s.a2}, {0.0, 0.0, 0.0}}};
}

std::vector<std::complex<double>> lax_x_eigenvalues(const TodaState& s) {
  Eigen::Matrix3d x;
  auto xm = lax_x(s);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(i, j) = xm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::EigenSolver<Eigen::Matrix3d> es(x);
  std::vector<std::complex<double>> ev{es.eigenvalues()(0), es.eigenvalues()(1),
                                       es.eigenvalues()(2)};
  std::sort(ev.begin(), ev.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return ev;
}

TodaTrajectory toda_integrate(const TodaState& s0, double t_end, double dt,
                              std::size_t sample_stride, bool track_spectrum) {
  if (dt <= 0.0) throw std::invalid_argument("toda_integrate: need dt > 0");
  using V = std::array<double, 5>;
  auto deriv = [](const V& v) -> V {
    return {v[0] * (v[2] - v[3]), v[1] * (v[3] - v[4]), -v[0], v[0] - v[1], v[1]};
  };
  auto axpy = [](const V& v, double s, const V& w) -> V {
    V r;
    for (int i = 0; i < 5; ++i) r[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] + s * w[static_cast<std::size_t>(i)];
    return r;
  };

  V v{s0.a1, s0.a2, s0.b1, s0.b2, s0.b3};
  auto [g0, h0] = conserved_quantities(s0);
  auto spec0 = track_spectrum ? lax_x_eigenvalues(s0) : std::vector<std::complex<double>>{};

  TodaTrajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(s0);

  std::size_t steps = static_cast<std::size_t>(std::llround(t_end / dt));
  for (std::size_t step = 1; step <= steps; ++step) {
    V k1 = deriv(v);
    V k2 = deriv(axpy(v, dt / 2.0, k1));
    V k3 = deriv(axpy(v, dt / 2.0, k2));
    V k4 = deriv(axpy(v, dt, k3));
    for (int i = 0; i < 5; ++i)
      v[static_cast<std::size_t>(i)] += dt / 6.0 *
                                        (k1[static_cast<std::size_t>(i)] + 2.0 * k2[static_cast<std::size_t>(i)] +
                                         2.0 * k3[static_cast<std::size_t>(i)] + k4[static_cast<std::size_t>(i)]);
    if (v[0] <= 0.0 || v[1] <= 0.0)
      throw std::runtime_error("toda_integrate: a_i <= 0 at step " + std::to_string(step) +
                               " (dt too large)");
    TodaState s(v[0], v[1], v[2], v[3], v[4]);
    auto [g, h] = conserved_quantities(s);
    traj.max_drift_g = std::max(traj.max_drift_g, std::abs(g - g0));
    traj.max_drift_h = std::max(traj.max_drift_h, std::abs(h - h0));
    traj.max_trace = std::max(traj.max_trace, std::abs(v[2] + v[3] + v[4]));
    if (track_spectrum) {
      auto spec = lax_x_eigenvalues(s);
      for (std::size_t i = 0; i < spec.size(); ++i)
        traj.max_spectrum_drift = std::max(traj.max_spectrum_drift, std::abs(spec[i] - spec0[i]));
    }
    if (step % sample_stride == 0 || step == steps) {
      traj.times.push_back(static_cast<double>(step) * dt);
      traj.states.push_back(s);
    }
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Symbolic Toda identities

UniversePtr toda_symbolic_universe() {
  return Universe::make({{"a1", 2, false},
                         {"a2", 2, false},
                         {"b1", 2, false},
                         {"b2", 2, false},
                         {"b3", 2, false}});
}

namespace {

std::vector<std::vector<Polynomial>> symbolic_x(const UniversePtr& u) {
  auto var = [&](const char* n) { return Polynomial::variable(u, n); };
  auto one = Polynomial::constant(u, Rational(1));
  auto zero = Polynomial::zero(u);
  return {{var("b1"), var("a1"), zero}, {one, var("b2"), var("a2")}, {zero, one, var("b3")}};
}

std::vector<std::vector<Polynomial>> symbolic_y(const UniversePtr& u) {
  auto var = [&](const char* n) { return Polynomial::variable(u, n); };
  auto zero = Polynomial::zero(u);
  return {{zero, var("a1"), zero}, {zero, zero, var("a2")}, {zero, zero, zero}};
}

}  // namespace

std::vector<Polynomial> toda_symbolic_vector_field() {
  auto u = toda_symbolic_universe();
  auto var = [&](const char* n) { return Polynomial::variable(u, n); };
  return {var("a1") * (var("b1") - var("b2")), var("a2") * (var("b2") - var("b3")), -var("a1"),
          var("a1") - var("a2"), var("a2")};
}

std::vector<std::vector<Polynomial>> toda_symbolic_commutator() {
  auto u = toda_symbolic_universe();
  auto x = symbolic_x(u);
  auto y = symbolic_y(u);
  std::vector<std::vector<Polynomial>> c(3, std::vector<Polynomial>(3, Polynomial::zero(u)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
            x[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] * y[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] -
            y[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] * x[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
  return c;
}

std::vector<Polynomial> toda_char_poly_coefficients() {
  // det(X + lambda I) expanded by lambda powers: index s holds the
  // coefficient of lambda^s.
  auto u = toda_symbolic_universe();
  auto x = symbolic_x(u);
  auto one = Polynomial::constant(u, Rational(1));
  auto zero = Polynomial::zero(u);
  // Represent entries as pairs (constant part, lambda part): X + lambda I has
  // lambda only on the diagonal, so expand the 3x3 determinant directly.
  auto det_term = [&](int i0, int i1, int i2, int sign) {
    std::array<int, 3> cols{i0, i1, i2};
    std::vector<Polynomial> coeffs(4, zero);  // by lambda power
    // product over rows of (x[r][cols[r]] + lambda [r==cols[r]])
    coeffs[0] = one;
    std::size_t top = 0;
    for (int r = 0; r < 3; ++r) {
      std::vector<Polynomial> next(4, zero);
      for (std::size_t s = 0; s <= top; ++s) {
        next[s] += coeffs[s] * x[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[static_cast<std::size_t>(r)])];
        if (r == cols[static_cast<std::size_t>(r)]) next[s + 1] += coeffs[s];
      }
      coeffs = next;
      ++top;
    }
    if (sign < 0)
      for (auto& c : coeffs) c = -c;
    return coeffs;
  };
  std::vector<Polynomial> acc(4, zero);
  const std::array<std::tuple<int, int, int, int>, 6> perms{
      std::tuple{0, 1, 2, +1}, std::tuple{1, 2, 0, +1}, std::tuple{2, 0, 1, +1},
      std::tuple{0, 2, 1, -1}, std::tuple{2, 1, 0, -1}, std::tuple{1, 0, 2, -1}};
  for (const auto& [c0, c1, c2, sg] : perms) {
    auto t = det_term(c0, c1, c2, sg);
    for (int s = 0; s < 4; ++s) acc[static_cast<std::size_t>(s)] += t[static_cast<std::size_t>(s)];
  }
  return acc;
}

Polynomial toda_symbolic_g() {
  auto u = toda_symbolic_universe();
  auto var = [&](const char* n) { return Polynomial::variable(u, n); };
  return var("b1") * var("b2") + var("b2") * var("b3") + var("b3") * var("b1") - var("a1") -
         var("a2");
}

Polynomial toda_symbolic_h() {
  auto u = toda_symbolic_universe();
  auto var = [&](const char* n) { return Polynomial::variable(u, n); };
  return var("b1") * var("b2") * var("b3") - var("b3") * var("a1") - var("b1") * var("a2");
}

TodaFlagMatch toda_matches_flag_relations() {
  auto target = flag3_raw_universe();
  auto raw = flag3_raw_relations();
  Polynomial g = toda_symbolic_g();
  Polynomial h = toda_symbolic_h();

  TodaFlagMatch match;
  for (int sa : {1, -1}) {
    for (int sb : {1, -1}) {
      std::map<std::string, Polynomial> images;
      for (int i = 1; i <= 2; ++i)
        images["a" + std::to_string(i)] =
            Polynomial::variable(target, "q" + std::to_string(i)) * Rational(sa);
      for (int i = 1; i <= 3; ++i)
        images["b" + std::to_string(i)] =
            Polynomial::variable(target, "x" + std::to_string(i)) * Rational(sb);
      if (g.map_variables(target, images) == raw[0] && h.map_variables(target, images) == raw[1]) {
        if (match.matched) throw std::logic_error("toda_matches_flag_relations: ambiguous match");
        match.matched = true;
        match.a_sign = sa;
        match.b_sign = sb;
      }
    }
  }
  return match;
}

}  // namespace qcw
