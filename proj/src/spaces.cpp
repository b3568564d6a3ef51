#include "qcw/spaces.hpp"

#include <sstream>
#include <stdexcept>

#include "qcw/series.hpp"

namespace qcw {

const GradedPresentation& Space::quantum_presentation() const {
  if (!quantum) throw std::domain_error("space " + id + " has no quantum presentation");
  return *quantum;
}

// ---------------------------------------------------------------------------
// CP^n

GradedPresentation cpn_presentation(int n, bool quantum) {
  if (n < 1) throw std::invalid_argument("cpn: need n >= 1");
  std::vector<Universe::Var> vars{{"p", 2, false}};
  if (quantum) vars.push_back({"q", 2 * n + 2, true});
  GradedPresentation pres;
  pres.universe = Universe::make(vars);
  pres.label = "cpn:" + std::to_string(n) + (quantum ? "" : ":classical");
  Polynomial rel = Polynomial::variable(pres.universe, "p").pow(static_cast<unsigned>(n + 1));
  if (quantum) rel -= Polynomial::variable(pres.universe, "q");
  pres.relations.push_back(rel);
  return pres;
}

Space make_cpn(int n, FlagChart) {
  Space s;
  s.id = "cpn:" + std::to_string(n);
  s.family = "projective";
  s.complex_dim = n;
  s.c1_pairing = {n + 1};
  s.degree2_generated = true;
  s.classical = cpn_presentation(n, false);
  s.quantum = cpn_presentation(n, true);
  s.sympl_p = {"p"};
  s.sympl_q = {"q"};
  const auto& u = s.quantum->universe;
  for (int i = 0; i <= n; ++i) {
    std::string label = i == 0 ? "1" : (i == 1 ? "p" : "p^" + std::to_string(i));
    s.basis.push_back({label, Polynomial::variable(u, "p").pow(static_cast<unsigned>(i))});
  }
  s.top_label = s.basis.back().label;
  s.default_cap = 4 * n + 2 * (2 * n + 2);
  return s;
}

// ---------------------------------------------------------------------------
// Grassmannian Gr_k(C^n)

namespace {

/// Inversion polynomials s_1..s_order of C(t) = 1 + c_1 t + ... + c_k t^k.
std::vector<Polynomial> dual_chern_polynomials(const UniversePtr& u, int k, unsigned order) {
  std::vector<std::string> cs;
  for (int i = 1; i <= k; ++i) cs.push_back("c" + std::to_string(i));
  TruncatedSeries c = TruncatedSeries::generic(u, cs, order);
  TruncatedSeries s = series_invert(c);
  std::vector<Polynomial> out;
  for (unsigned m = 1; m <= order; ++m) out.push_back(s.coefficient(m));
  return out;
}

}  // namespace

GradedPresentation grassmannian_presentation(int k, int n, bool quantum) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("grassmannian: need 1 <= k <= n-1");
  std::vector<Universe::Var> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({"c" + std::to_string(i), 2 * i, false});
  if (quantum) vars.push_back({"q", 2 * n, true});
  GradedPresentation pres;
  pres.universe = Universe::make(vars);
  pres.label = "gr:" + std::to_string(k) + ":" + std::to_string(n) + (quantum ? "" : ":classical");
  auto s = dual_chern_polynomials(pres.universe, k, static_cast<unsigned>(n));
  for (int j = n - k + 1; j <= n; ++j) {
    Polynomial rel = s[static_cast<std::size_t>(j - 1)];
    if (quantum && j == n) {
      Rational sign((n - k) % 2 == 0 ? 1 : -1);
      rel += Polynomial::variable(pres.universe, "q") * sign;
    }
    pres.relations.push_back(rel);
  }
  return pres;
}

Space make_grassmannian(int k, int n) {
  Space s;
  s.id = "gr:" + std::to_string(k) + ":" + std::to_string(n);
  s.family = "grassmannian";
  s.complex_dim = k * (n - k);
  s.c1_pairing = {n};
  s.degree2_generated = (k == 1 || k == n - 1);
  s.classical = grassmannian_presentation(k, n, false);
  s.quantum = grassmannian_presentation(k, n, true);
  s.sympl_p = {"c1"};
  s.sympl_q = {"q"};
  s.top_label = "";  // basis computed from standard monomials
  s.default_cap = 4 * s.complex_dim + 2 * (2 * n);
  return s;
}

// ---------------------------------------------------------------------------
// F3 = F_{1,2}(C^3)

UniversePtr flag3_raw_universe() {
  return Universe::make({{"x1", 2, false},
                         {"x2", 2, false},
                         {"x3", 2, false},
                         {"q1", 4, true},
                         {"q2", 4, true}});
}

std::vector<Polynomial> flag3_raw_relations() {
  auto u = flag3_raw_universe();
  Polynomial x1 = Polynomial::variable(u, "x1"), x2 = Polynomial::variable(u, "x2"),
             x3 = Polynomial::variable(u, "x3"), q1 = Polynomial::variable(u, "q1"),
             q2 = Polynomial::variable(u, "q2");
  return {x1 * x2 + x2 * x3 + x3 * x1 + q1 + q2, x1 * x2 * x3 + x3 * q1 + x1 * q2};
}

GradedPresentation flag3_presentation(bool quantum, FlagChart chart) {
  const char* n1 = chart == FlagChart::X ? "x1" : "p1";
  const char* n2 = chart == FlagChart::X ? "x2" : "p2";
  std::vector<Universe::Var> vars{{n1, 2, false}, {n2, 2, false}};
  if (quantum) {
    vars.push_back({"q1", 4, true});
    vars.push_back({"q2", 4, true});
  }
  GradedPresentation pres;
  pres.universe = Universe::make(vars);
  pres.label = std::string("flag3") + (chart == FlagChart::X ? ":x" : ":p") +
               (quantum ? "" : ":classical");

  // Substitute into the raw relations: x3 = -x1-x2 for the x-chart, and
  // additionally x1 = p1, x2 = p2-p1 for the p-chart.
  auto raw = flag3_raw_relations();
  Polynomial v1 = Polynomial::variable(pres.universe, n1);
  Polynomial v2 = Polynomial::variable(pres.universe, n2);
  std::map<std::string, Polynomial> images;
  if (chart == FlagChart::X) {
    images["x1"] = v1;
    images["x2"] = v2;
    images["x3"] = -(v1 + v2);
  } else {
    images["x1"] = v1;
    images["x2"] = v2 - v1;
    images["x3"] = -v2;
  }
  Polynomial zero = Polynomial::zero(pres.universe);
  images["q1"] = quantum ? Polynomial::variable(pres.universe, "q1") : zero;
  images["q2"] = quantum ? Polynomial::variable(pres.universe, "q2") : zero;
  for (const auto& r : raw) pres.relations.push_back(r.map_variables(pres.universe, images));
  return pres;
}

Space make_flag3(FlagChart chart) {
  Space s;
  s.id = "flag3";
  s.family = "flag3";
  s.complex_dim = 3;
  s.c1_pairing = {2, 2};
  s.degree2_generated = true;
  s.classical = flag3_presentation(false, chart);
  s.quantum = flag3_presentation(true, chart);
  const auto& u = s.quantum->universe;
  const char* n1 = chart == FlagChart::X ? "x1" : "p1";
  const char* n2 = chart == FlagChart::X ? "x2" : "p2";
  Polynomial v1 = Polynomial::variable(u, n1), v2 = Polynomial::variable(u, n2),
             q1 = Polynomial::variable(u, "q1"), q2 = Polynomial::variable(u, "q2");
  // Schubert generators a = x1, b = x1+x2; in the p-chart a = p1, b = p2.
  Polynomial a = v1;
  Polynomial b = chart == FlagChart::X ? v1 + v2 : v2;
  // Quantum basis lifts: the paper's Propositions 1, 2 and 5 pin the lifts
  // of a^2, b^2 and a^2b; the remaining twelve products of the table are
  // then derived from the ring presentation alone.
  Polynomial one = Polynomial::constant(u, Rational(1));
  s.basis.push_back({"1", one});
  s.basis.push_back({"a", a});
  s.basis.push_back({"b", b});
  s.basis.push_back({"a2", a * a - q1});
  s.basis.push_back({"b2", b * b - q2});
  s.basis.push_back({"a2b", (a * a - q1) * b});
  s.top_label = "a2b";
  s.sympl_p = {"p1", "p2"};
  s.sympl_q = {"q1", "q2"};
  s.default_cap = 4 * 3 + 2 * 4;
  return s;
}

// ---------------------------------------------------------------------------
// Hirzebruch surfaces

GradedPresentation hirzebruch_presentation(int k, bool quantum) {
  if (k < 0) throw std::invalid_argument("hirzebruch: need k >= 0");
  if (quantum && k >= 2)
    throw std::invalid_argument(
        "hirzebruch: quantum presentation refused for k >= 2 (Sigma_k is not convex and the "
        "paper derives no ring)");
  std::vector<Universe::Var> vars{{"x1", 2, false}, {"x4", 2, false}};
  if (quantum) {
    vars.push_back({"q1", 4, true});
    vars.push_back({"q2", 2 * (2 - k), true});
  }
  GradedPresentation pres;
  pres.universe = Universe::make(vars);
  pres.label = "hirzebruch:" + std::to_string(k) + (quantum ? "" : ":classical");
  Polynomial x1 = Polynomial::variable(pres.universe, "x1");
  Polynomial x4 = Polynomial::variable(pres.universe, "x4");
  if (!quantum) {
    // H*(Sigma_k) = Z[x1,x4]/<x1^2, x4^2 - k z>, z = x1 x4.
    pres.relations.push_back(x1 * x1);
    pres.relations.push_back(x4 * x4 - x1 * x4 * Rational(k));
    return pres;
  }
  Polynomial q1 = Polynomial::variable(pres.universe, "q1");
  Polynomial q2 = Polynomial::variable(pres.universe, "q2");
  if (k == 0) {
    pres.relations.push_back(x1 * x1 - q2);
    pres.relations.push_back(x4 * x4 - q1);
  } else {
    // x2 = x4 - k x1, z = x1 x4.
    pres.relations.push_back(x1 * x1 - (x4 - x1 * Rational(k)) * q2);
    pres.relations.push_back(x4 * x4 - x1 * x4 - q1);
  }
  return pres;
}

Space make_hirzebruch(int k) {
  if (k != 0 && k != 1)
    throw std::invalid_argument(
        "hirzebruch: only k in {0,1} carries a quantum ring (non-convexity for k >= 2)");
  Space s;
  s.id = "hirzebruch:" + std::to_string(k);
  s.family = "hirzebruch";
  s.complex_dim = 2;
  s.c1_pairing = {2, 2 - k};
  s.degree2_generated = true;
  s.classical = hirzebruch_presentation(k, false);
  s.quantum = hirzebruch_presentation(k, true);
  const auto& u = s.quantum->universe;
  Polynomial x1 = Polynomial::variable(u, "x1"), x4 = Polynomial::variable(u, "x4");
  s.basis.push_back({"1", Polynomial::constant(u, Rational(1))});
  s.basis.push_back({"x1", x1});
  s.basis.push_back({"x4", x4});
  s.basis.push_back({"z", x1 * x4});
  s.top_label = "z";
  // Section 5 pairs p1 = x4 with q1 and p2 = x1 with q2.
  s.sympl_p = {"x4", "x1"};
  s.sympl_q = {"q1", "q2"};
  s.default_cap = 4 * 2 + 2 * 4;
  return s;
}

// ---------------------------------------------------------------------------

Space parse_space(const std::string& id, FlagChart flag_chart) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 2 && parts[0] == "cpn") return make_cpn(std::stoi(parts[1]));
    if (parts.size() == 3 && parts[0] == "gr")
      return make_grassmannian(std::stoi(parts[1]), std::stoi(parts[2]));
    if (parts.size() == 1 && parts[0] == "flag3") return make_flag3(flag_chart);
    if (parts.size() == 2 && parts[0] == "hirzebruch") return make_hirzebruch(std::stoi(parts[1]));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    // fall through to the unknown-identifier error
  }
  throw std::invalid_argument("unknown space '" + id +
                              "' (valid: cpn:<n>, gr:<k>:<n>, flag3, hirzebruch:<k>)");
}

std::vector<std::string> known_space_ids() {
  return {"cpn:<n>", "gr:<k>:<n>", "flag3", "hirzebruch:0", "hirzebruch:1"};
}

long cpn_gw_triple(int n, int i, int j, int k, int s) {
  if (n < 1 || i < 0 || j < 0 || k < 0 || i > n || j > n || k > n || s < 0)
    throw std::invalid_argument("cpn_gw_triple: indices out of range");
  if (s == 0 && i + j + k == n) return 1;
  if (s == 1 && i + j + k == 2 * n + 1) return 1;
  return 0;
}

NormalFormEngine make_engine(const Space& space, bool quantum, int cap_override) {
  int cap = cap_override > 0 ? cap_override : space.default_cap;
  return NormalFormEngine::complete(quantum ? space.quantum_presentation() : space.classical, cap);
}

std::vector<BasisClass> space_basis(const Space& space, const NormalFormEngine& engine) {
  std::vector<BasisClass> basis;
  if (!space.basis.empty() &&
      engine.presentation().universe->same_as(*space.quantum_presentation().universe)) {
    basis = space.basis;
  } else {
    const auto& u = engine.presentation().universe;
    for (const auto& m : engine.classical_basis(2 * space.complex_dim))
      basis.push_back({Polynomial::from_monomial(u, m, Rational(1)).to_string(),
                       Polynomial::from_monomial(u, m, Rational(1))});
  }
  // The lifted classes must stay independent per graded piece of the
  // quantum quotient: counts have to match the engine's standard monomials.
  std::map<int, std::size_t> lift_count, std_count;
  for (const auto& b : basis) lift_count[b.lift.weighted_degree().value_or(0)]++;
  for (const auto& m : engine.classical_basis(2 * space.complex_dim))
    std_count[m.weighted_degree(*engine.presentation().universe)]++;
  if (lift_count != std_count)
    throw std::runtime_error("space_basis: lifted basis does not match quotient rank for " +
                             space.id);
  return basis;
}

ProductTable quantum_product_table(const NormalFormEngine& engine,
                                   const std::vector<BasisClass>& basis) {
  ProductTable table;
  table.basis = basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      table.entries[{i, j}] = expand_in_basis(engine, basis, basis[i].lift * basis[j].lift);
  return table;
}

}  // namespace qcw
