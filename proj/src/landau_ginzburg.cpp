#include "qcw/landau_ginzburg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qcw/series.hpp"
#include "qcw/spaces.hpp"

namespace qcw {

namespace {

UniversePtr lg_universe(int k, int n, bool quantum) {
  std::vector<Universe::Var> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({"c" + std::to_string(i), 2 * i, false});
  if (quantum) vars.push_back({"q", 2 * n, true});
  return Universe::make(vars);
}

std::vector<std::string> chern_names(int k) {
  std::vector<std::string> cs;
  for (int i = 1; i <= k; ++i) cs.push_back("c" + std::to_string(i));
  return cs;
}

}  // namespace

UniversePtr lg_classical_universe(int k, int n) { return lg_universe(k, n, false); }

Potential lg_potential(int k, int n, bool quantum) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("lg_potential: need 1 <= k <= n-1");
  auto u = lg_universe(k, n, quantum);
  TruncatedSeries c = TruncatedSeries::generic(u, chern_names(k), static_cast<unsigned>(n + 1));
  TruncatedSeries w = series_log(c);
  Polynomial body = w.coefficient(static_cast<unsigned>(n + 1));
  if (quantum) {
    Rational sign((n - k) % 2 == 0 ? 1 : -1);
    body += Polynomial::variable(u, "c1") * Polynomial::variable(u, "q") * sign;
  }
  return Potential{std::move(body), k, n, quantum};
}

bool check_gradient(const Potential& pot) {
  if (pot.quantum) throw std::invalid_argument("check_gradient: classical potential expected");
  const auto& u = pot.body.universe();
  TruncatedSeries c = TruncatedSeries::generic(u, chern_names(pot.k), static_cast<unsigned>(pot.n + 1));
  TruncatedSeries s = series_invert(c);
  for (int i = 1; i <= pot.k; ++i) {
    Polynomial lhs = pot.body.diff("c" + std::to_string(i));
    const Polynomial& rhs = s.coefficient(static_cast<unsigned>(pot.n + 1 - i));
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

struct GradientSystem {
  std::vector<Polynomial> grad;                    // dP~/dc_i
  std::vector<std::vector<Polynomial>> hess;       // second derivatives
  UniversePtr u;
  int k;
  std::size_t q_index;

  std::vector<std::complex<double>> full_point(const std::vector<std::complex<double>>& c,
                                               std::complex<double> q) const {
    std::vector<std::complex<double>> pt(u->size(), 0.0);
    for (int i = 0; i < k; ++i) pt[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
    if (q_index < u->size()) pt[q_index] = q;
    return pt;
  }
};

GradientSystem gradient_system(const Potential& pot) {
  GradientSystem sys;
  sys.u = pot.body.universe();
  sys.k = pot.k;
  sys.q_index = sys.u->index_of("q").value_or(sys.u->size());
  for (int i = 1; i <= pot.k; ++i) sys.grad.push_back(pot.body.diff("c" + std::to_string(i)));
  for (int i = 1; i <= pot.k; ++i) {
    std::vector<Polynomial> row;
    for (int j = 1; j <= pot.k; ++j) row.push_back(sys.grad[static_cast<std::size_t>(i - 1)].diff("c" + std::to_string(j)));
    sys.hess.push_back(std::move(row));
  }
  return sys;
}

double gradient_residual(const GradientSystem& sys, const std::vector<std::complex<double>>& c,
                         std::complex<double> q) {
  auto pt = sys.full_point(c, q);
  double r = 0.0;
  for (const auto& g : sys.grad) r = std::max(r, std::abs(g.eval(pt)));
  return r;
}

std::complex<double> hessian_det_at(const GradientSystem& sys,
                                    const std::vector<std::complex<double>>& c,
                                    std::complex<double> q) {
  auto pt = sys.full_point(c, q);
  Eigen::MatrixXcd h(sys.k, sys.k);
  for (int i = 0; i < sys.k; ++i)
    for (int j = 0; j < sys.k; ++j)
      h(i, j) = sys.hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(pt);
  return h.determinant();
}

}  // namespace

std::vector<CriticalPoint> critical_points(const Potential& pot, std::complex<double> q_value,
                                           double tol) {
  if (!pot.quantum) throw std::invalid_argument("critical_points: quantum potential expected");
  if (std::abs(q_value) == 0.0) throw std::invalid_argument("critical_points: q must be nonzero");
  GradientSystem sys = gradient_system(pot);
  const int k = pot.k;
  const long expected = binomial(static_cast<unsigned>(pot.n), static_cast<unsigned>(k)).round_to_long();

  // Deterministic seed grid, scaled degree-aware with |q|^(1/2n) so the
  // roots stay covered when q is rescaled.
  double scale = std::pow(std::abs(q_value), 1.0 / (2.0 * pot.n));
  std::vector<std::complex<double>> start_values;
  for (double mag : {0.35, 0.8, 1.5}) {
    for (int ph = 0; ph < 8; ++ph) {
      double th = 2.0 * M_PI * ph / 8.0 + 0.1;
      start_values.push_back(std::polar(mag, th));
    }
  }

  std::vector<CriticalPoint> roots;
  auto try_start = [&](const std::vector<std::complex<double>>& start) {
    std::vector<std::complex<double>> c = start;
    for (int iter = 0; iter < 80; ++iter) {
      auto pt = sys.full_point(c, q_value);
      Eigen::VectorXcd g(k);
      Eigen::MatrixXcd h(k, k);
      for (int i = 0; i < k; ++i) {
        g(i) = sys.grad[static_cast<std::size_t>(i)].eval(pt);
        for (int j = 0; j < k; ++j)
          h(i, j) = sys.hess[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(pt);
      }
      if (g.norm() < 1e-13) break;
      Eigen::VectorXcd step = h.fullPivLu().solve(g);
      if (!step.allFinite()) return;
      for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] -= step(i);
      if (step.norm() > 1e6) return;  // diverged
    }
    double res = gradient_residual(sys, c, q_value);
    if (res >= tol) return;
    for (const auto& r : roots) {
      double d = 0.0;
      for (int i = 0; i < k; ++i) d += std::abs(r.coordinates[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)]);
      if (d < 1e-7 * std::max(1.0, scale)) return;  // duplicate
    }
    roots.push_back({c, res, hessian_det_at(sys, c, q_value)});
  };

  if (k == 1) {
    for (const auto& v : start_values) try_start({v * scale});
  } else if (k == 2) {
    for (const auto& v1 : start_values)
      for (const auto& v2 : start_values)
        try_start({v1 * scale, v2 * scale * scale});
  } else {
    throw std::invalid_argument("critical_points: implemented for k <= 2");
  }

  if (static_cast<long>(roots.size()) != expected)
    throw std::runtime_error("critical_points: found " + std::to_string(roots.size()) +
                             " roots, expected " + std::to_string(expected));
  std::sort(roots.begin(), roots.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    for (std::size_t i = 0; i < a.coordinates.size(); ++i) {
      double ra = a.coordinates[i].real(), rb = b.coordinates[i].real();
      if (std::abs(ra - rb) > 1e-9) return ra < rb;
      double ia = a.coordinates[i].imag(), ib = b.coordinates[i].imag();
      if (std::abs(ia - ib) > 1e-9) return ia < ib;
    }
    return false;
  });
  return roots;
}

std::complex<double> hessian_det(const Potential& pot, const std::vector<std::complex<double>>& pt,
                                 std::complex<double> q_value) {
  GradientSystem sys = gradient_system(pot);
  return hessian_det_at(sys, pt, q_value);
}

Rational intersection_oracle(int k, int n, const Polynomial& T) {
  Space space = make_grassmannian(k, n);
  NormalFormEngine engine = make_engine(space, /*quantum=*/false);
  const auto& u = engine.presentation().universe;
  Polynomial t_mapped = T.map_variables(u, {});
  Polynomial nf = engine.normal_form(t_mapped);
  std::vector<Monomial> top = engine.monomial_basis(2 * k * (n - k));
  if (top.size() != 1) throw std::logic_error("intersection_oracle: top graded piece not 1-dim");
  return nf.coefficient(top[0]);
}

ResidueReport vafa_intriligator(int k, int n, const Polynomial& T, std::complex<double> q_value,
                                double tol) {
  int want = 2 * k * (n - k);
  if (T.is_zero() || !T.is_homogeneous() || *T.weighted_degree() != want)
    throw std::invalid_argument("vafa_intriligator: T must be homogeneous of weighted degree " +
                                std::to_string(want));
  Potential pot = lg_potential(k, n, /*quantum=*/true);
  ResidueReport report;
  report.roots = critical_points(pot, q_value);

  GradientSystem dummy;  // T is over the classical universe: evaluate on c only
  std::complex<double> sum = 0.0;
  for (const auto& root : report.roots) {
    if (std::abs(root.hessian_det) < 1e-8)
      throw std::runtime_error("vafa_intriligator: degenerate critical point (zero Hessian)");
    std::vector<std::complex<double>> cpt(T.universe()->size(), 0.0);
    for (int i = 0; i < k; ++i) cpt[static_cast<std::size_t>(i)] = root.coordinates[static_cast<std::size_t>(i)];
    sum += T.eval(cpt) / root.hessian_det;
  }
  report.sum = sum;
  double nearest = std::round(sum.real());
  report.integer_within_tol =
      std::abs(sum.real() - nearest) < tol && std::abs(sum.imag()) < tol;
  report.rounded_abs = static_cast<long>(std::llabs(static_cast<long long>(nearest)));
  Rational oracle = intersection_oracle(k, n, T);
  if (!oracle.is_integer()) throw std::logic_error("vafa_intriligator: non-integer oracle");
  report.oracle = std::labs(oracle.round_to_long());
  report.match = report.integer_within_tol && report.rounded_abs == report.oracle;
  return report;
}

}  // namespace qcw
