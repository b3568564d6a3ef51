#include "qcw/quotient.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qcw {

// ---------------------------------------------------------------------------
// Presentation text format

std::string GradedPresentation::to_text() const {
  std::ostringstream os;
  if (!label.empty()) os << "space " << label << "\n";
  for (const auto& v : universe->vars())
    os << (v.quantum ? "quantum " : "generator ") << v.name << " " << v.degree << "\n";
  for (const auto& r : relations) os << "relation " << r.to_string() << "\n";
  return os.str();
}

GradedPresentation GradedPresentation::from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<Universe::Var> vars;
  std::vector<std::string> relation_lines;
  std::string label;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw.empty() || kw[0] == '#') continue;
    if (kw == "space") {
      ls >> label;
    } else if (kw == "generator" || kw == "quantum") {
      Universe::Var v;
      ls >> v.name >> v.degree;
      if (v.name.empty() || ls.fail())
        throw std::invalid_argument("presentation: bad line '" + line + "'");
      v.quantum = (kw == "quantum");
      vars.push_back(v);
    } else if (kw == "relation") {
      std::string rest;
      std::getline(ls, rest);
      relation_lines.push_back(rest);
    } else {
      throw std::invalid_argument("presentation: unknown keyword '" + kw + "'");
    }
  }
  GradedPresentation pres;
  pres.universe = Universe::make(std::move(vars));
  pres.label = label;
  for (const auto& rl : relation_lines) pres.relations.push_back(Polynomial::parse(pres.universe, rl));
  return pres;
}

// ---------------------------------------------------------------------------
// Completion (Buchberger restricted to the degree cap)

namespace {

/// Reduce p fully against the rules; always picks the lowest-indexed
/// applicable rule for the largest reducible term.
Polynomial reduce_full(const Polynomial& p, const std::vector<NormalFormEngine::Rule>& rules) {
  Polynomial work = p;
  const auto& uni = p.universe();
  while (true) {
    bool reduced = false;
    // Scan terms from the largest; the first reducible one is rewritten.
    for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
      const Monomial& m = it->first;
      for (const auto& rule : rules) {
        if (!rule.lead.divides(m)) continue;
        Rational c = it->second;
        Monomial cof = m.divide_by(rule.lead);
        Polynomial replacement = rule.tail * Polynomial::from_monomial(uni, cof, c);
        work.add_term(m, -c);
        work += replacement;
        reduced = true;
        break;
      }
      if (reduced) break;
    }
    if (!reduced) return work;
  }
}

NormalFormEngine::Rule make_rule(const Polynomial& p) {
  const auto& [lead, c] = p.leading_term();
  Polynomial tail = p * c.inverse();
  tail.add_term(lead, Rational(-1));
  return NormalFormEngine::Rule{lead, -tail};
}

}  // namespace

NormalFormEngine NormalFormEngine::complete(GradedPresentation pres, int degree_cap) {
  for (const auto& r : pres.relations) {
    Monomial bad;
    if (!r.is_homogeneous(&bad)) {
      throw std::invalid_argument(
          "complete: relation '" + r.to_string() + "' is not homogeneous (offending term " +
          Polynomial::from_monomial(pres.universe, bad, r.coefficient(bad)).to_string() + ")");
    }
  }
  NormalFormEngine e(std::move(pres), degree_cap);
  const auto& uni = e.pres_.universe;

  std::vector<Rule> rules;
  for (const auto& r : e.pres_.relations) {
    if (r.is_zero()) continue;
    Polynomial red = reduce_full(r, rules);
    if (!red.is_zero()) rules.push_back(make_rule(red));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = i + 1; j < rules.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const Monomial& a = rules[i].lead;
    const Monomial& b = rules[j].lead;
    if (Monomial::coprime(a, b)) continue;  // S-polynomial reduces to zero
    Monomial l = Monomial::lcm(a, b);
    if (l.weighted_degree(*uni) > degree_cap) continue;
    Polynomial s = rules[i].tail * Polynomial::from_monomial(uni, l.divide_by(a), Rational(1)) -
                   rules[j].tail * Polynomial::from_monomial(uni, l.divide_by(b), Rational(1));
    Polynomial red = reduce_full(s, rules);
    if (red.is_zero()) continue;
    rules.push_back(make_rule(red));
    for (std::size_t k = 0; k + 1 < rules.size(); ++k) pairs.emplace_back(k, rules.size() - 1);
  }

  // Inter-reduce tails and drop rules whose lead is reducible by another
  // rule, then order by leading monomial for deterministic reduction.
  std::vector<Rule> minimal;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      if (i == j) continue;
      if (rules[j].lead.divides(rules[i].lead) &&
          !(rules[i].lead == rules[j].lead && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(rules[i]);
  }
  TermOrder less{uni.get()};
  std::sort(minimal.begin(), minimal.end(),
            [&](const Rule& x, const Rule& y) { return less(x.lead, y.lead); });
  for (auto& r : minimal) {
    std::vector<Rule> others;
    for (const auto& o : minimal)
      if (!(o.lead == r.lead)) others.push_back(o);
    r.tail = reduce_full(r.tail, others);
  }
  e.rules_ = std::move(minimal);

  for (const auto& r : e.pres_.relations) {
    if (r.weighted_degree().value_or(0) <= degree_cap && !e.normal_form(r).is_zero())
      throw std::logic_error("complete: relation does not reduce to zero");
  }
  return e;
}

Polynomial NormalFormEngine::normal_form(const Polynomial& p) const {
  if (!p.universe()->same_as(*pres_.universe))
    throw std::invalid_argument("normal_form: universe mismatch");
  if (p.weighted_degree().value_or(0) > cap_)
    throw std::domain_error("normal_form: weighted degree " +
                            std::to_string(*p.weighted_degree()) + " exceeds certified cap " +
                            std::to_string(cap_));
  return reduce_full(p, rules_);
}

bool NormalFormEngine::ideal_membership(const Polynomial& p) const {
  return normal_form(p).is_zero();
}

namespace {

void enumerate_rec(const Universe& u, int degree, std::size_t var, Monomial& m,
                   std::vector<Monomial>& out, bool skip_quantum) {
  if (degree == 0) {
    out.push_back(m);
    return;
  }
  if (var >= u.size()) return;
  const auto& v = u.var(var);
  if (skip_quantum && v.quantum) {
    enumerate_rec(u, degree, var + 1, m, out, skip_quantum);
    return;
  }
  if (v.degree <= 0) throw std::logic_error("monomial enumeration requires positive degrees");
  for (unsigned e = 0; e * v.degree <= static_cast<unsigned>(degree); ++e) {
    m.set_exp(var, e);
    enumerate_rec(u, degree - static_cast<int>(e) * v.degree, var + 1, m, out, skip_quantum);
  }
  m.set_exp(var, 0);
}

}  // namespace

std::vector<Monomial> NormalFormEngine::monomial_basis(int degree) const {
  if (degree > cap_) throw std::domain_error("monomial_basis: degree exceeds certified cap");
  const auto& u = *pres_.universe;
  std::vector<Monomial> all;
  Monomial m(u.size());
  enumerate_rec(u, degree, 0, m, all, /*skip_quantum=*/false);
  std::vector<Monomial> basis;
  for (const auto& cand : all) {
    bool reducible = std::any_of(rules_.begin(), rules_.end(),
                                 [&](const Rule& r) { return r.lead.divides(cand); });
    if (!reducible) basis.push_back(cand);
  }
  TermOrder less{&u};
  std::sort(basis.begin(), basis.end(), less);
  return basis;
}

std::vector<Monomial> NormalFormEngine::classical_basis(int max_degree) const {
  const auto& u = *pres_.universe;
  std::vector<Monomial> basis;
  for (int d = 0; d <= max_degree; d += 2) {
    std::vector<Monomial> all;
    Monomial m(u.size());
    enumerate_rec(u, d, 0, m, all, /*skip_quantum=*/true);
    for (const auto& cand : all) {
      bool reducible = std::any_of(rules_.begin(), rules_.end(),
                                   [&](const Rule& r) { return r.lead.divides(cand); });
      if (!reducible) basis.push_back(cand);
    }
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Basis expansion (exact linear solve per graded piece)

namespace {

/// All monomials in the quantum variables only with the given weighted degree.
std::vector<Monomial> quantum_monomials(const Universe& u, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial m(u.size());
  // Reuse the general enumeration, then keep pure-q monomials.
  std::vector<Monomial> all;
  enumerate_rec(u, degree, 0, m, all, /*skip_quantum=*/false);
  for (const auto& cand : all) {
    bool pure = true;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (cand.exp(i) > 0 && !u.var(i).quantum) pure = false;
    if (pure) out.push_back(cand);
  }
  return out;
}

/// Exact Gaussian elimination solving A x = b; returns false when the system
/// is inconsistent or underdetermined on the used columns.
bool solve_exact(std::vector<std::vector<Rational>>& a, std::vector<Rational>& b,
                 std::vector<Rational>& x) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  x.assign(cols, Rational(0));
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    Rational inv = a[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return false;  // inconsistent
  if (pivot_col.size() < cols) {
    // Underdetermined: acceptable only if the free columns carry zero.
    // For a genuine basis this does not happen; report failure.
    return false;
  }
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

BasisExpansion expand_in_basis(const NormalFormEngine& engine,
                               const std::vector<BasisClass>& basis, const Polynomial& p) {
  const auto& uni = engine.presentation().universe;
  Polynomial nf = engine.normal_form(p);
  BasisExpansion result;
  if (nf.is_zero()) return result;
  Monomial bad;
  if (!nf.is_homogeneous(&bad))
    throw std::invalid_argument("expand_in_basis: element not homogeneous");
  int d = *nf.weighted_degree();

  // Candidate columns: q^D * NF(lift_i) matching the degree.
  struct Candidate {
    std::size_t basis_index;
    Monomial q_mono;
    Polynomial value;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& lift = basis[i].lift;
    int dl = lift.weighted_degree().value_or(0);
    if (lift.is_zero()) continue;
    for (const auto& qm : quantum_monomials(*uni, d - dl)) {
      Polynomial v = engine.normal_form(lift * Polynomial::from_monomial(uni, qm, Rational(1)));
      cands.push_back({i, qm, std::move(v)});
    }
  }
  // Row space: all standard monomials of degree d.
  std::vector<Monomial> rows = engine.monomial_basis(d);
  std::map<std::vector<unsigned>, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i].exponents()] = i;

  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cands.size(), Rational(0)));
  std::vector<Rational> b(rows.size(), Rational(0));
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (const auto& [m, coef] : cands[c].value.terms()) a[row_index.at(m.exponents())][c] = coef;
  for (const auto& [m, coef] : nf.terms()) b[row_index.at(m.exponents())] = coef;

  std::vector<Rational> x;
  if (!solve_exact(a, b, x))
    throw std::runtime_error("expand_in_basis: basis lift failure (singular solve) in degree " +
                             std::to_string(d));
  for (std::size_t c = 0; c < cands.size(); ++c)
    if (!x[c].is_zero()) result.entries.push_back({cands[c].basis_index, cands[c].q_mono, x[c]});
  return result;
}

std::string BasisExpansion::to_string(const std::vector<BasisClass>& basis,
                                      const Universe& u) const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries) {
    Rational a = e.coeff.abs();
    if (first) {
      if (e.coeff.is_negative()) os << "-";
      first = false;
    } else {
      os << (e.coeff.is_negative() ? " - " : " + ");
    }
    bool first_factor = true;
    if (!a.is_one()) {
      os << a.to_string();
      first_factor = false;
    }
    const std::string& lbl = basis[e.basis_index].label;
    if (lbl != "1") {
      if (!first_factor) os << "*";
      os << lbl;
      first_factor = false;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      unsigned ex = e.q_monomial.exp(i);
      if (ex == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      os << u.var(i).name;
      if (ex > 1) os << "^" << ex;
    }
    if (first_factor) os << "1";
  }
  return os.str();
}

Polynomial BasisExpansion::to_polynomial(const std::vector<BasisClass>& basis,
                                         const UniversePtr& u) const {
  Polynomial r = Polynomial::zero(u);
  for (const auto& e : entries)
    r += basis[e.basis_index].lift * Polynomial::from_monomial(u, e.q_monomial, e.coeff);
  return r;
}

std::vector<std::vector<Polynomial>> multiplication_matrix(
    const NormalFormEngine& engine, const std::vector<BasisClass>& basis, const Polynomial& x) {
  const auto& uni = engine.presentation().universe;
  std::size_t n = basis.size();
  std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n, Polynomial::zero(uni)));
  for (std::size_t j = 0; j < n; ++j) {
    BasisExpansion col = expand_in_basis(engine, basis, x * basis[j].lift);
    for (const auto& e : col.entries)
      mat[e.basis_index][j] += Polynomial::from_monomial(uni, e.q_monomial, e.coeff);
  }
  return mat;
}

// ---------------------------------------------------------------------------
// Spectrum check

SpectrumReport spectrum_check(const NormalFormEngine& engine,
                              const std::vector<BasisClass>& basis,
                              const std::vector<std::string>& degree2_generators,
                              const std::vector<std::vector<std::complex<double>>>& q_samples,
                              double tol) {
  const auto& uni = engine.presentation().universe;
  std::vector<std::size_t> qvar_index;
  for (std::size_t i = 0; i < uni->size(); ++i)
    if (uni->var(i).quantum) qvar_index.push_back(i);

  std::vector<std::vector<std::vector<Polynomial>>> mats;
  for (const auto& g : degree2_generators)
    mats.push_back(multiplication_matrix(engine, basis, Polynomial::variable(uni, g)));

  SpectrumReport report;
  report.tolerance = tol;
  report.pass = true;
  const std::size_t n = basis.size();
  const std::size_t r = degree2_generators.size();

  for (const auto& qs : q_samples) {
    if (qs.size() != qvar_index.size())
      throw std::invalid_argument("spectrum_check: wrong number of q-values");
    SpectrumSample sample;
    sample.q_values = qs;

    // Point in the full universe: generators get placeholder 0, q-vars get qs.
    std::vector<std::complex<double>> point(uni->size(), 0.0);
    for (std::size_t i = 0; i < qvar_index.size(); ++i) point[qvar_index[i]] = qs[i];

    std::vector<Eigen::MatrixXcd> num(r, Eigen::MatrixXcd::Zero(n, n));
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) num[k](i, j) = mats[k][i][j].eval(point);

    // Joint eigenvectors from a generic combination of the commuting family.
    Eigen::MatrixXcd generic = Eigen::MatrixXcd::Zero(n, n);
    for (std::size_t k = 0; k < r; ++k)
      generic += std::complex<double>(1.0 + 0.17 * static_cast<double>(k),
                                      0.31 + 0.07 * static_cast<double>(k)) *
                 num[k];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(generic);
    Eigen::MatrixXcd vecs = es.eigenvectors();
    // Non-diagonalizable multiplication is reported, not fatal.
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(vecs);
    double cond = svd.singularValues()(0) /
                  std::max(svd.singularValues()(static_cast<Eigen::Index>(n) - 1), 1e-300);
    sample.diagonalizable = cond < 1e8;

    for (std::size_t b = 0; b < n; ++b) {
      Eigen::VectorXcd v = vecs.col(static_cast<Eigen::Index>(b));
      std::vector<std::complex<double>> tuple(r);
      for (std::size_t k = 0; k < r; ++k) {
        std::complex<double> lam = (v.adjoint() * num[k] * v)(0, 0) / (v.adjoint() * v)(0, 0);
        tuple[k] = lam;
      }
      sample.eigen_tuples.push_back(tuple);
    }

    // Substitute (q, lambda) into each relation.
    for (const auto& tuple : sample.eigen_tuples) {
      std::vector<std::complex<double>> full(uni->size(), 0.0);
      for (std::size_t i = 0; i < qvar_index.size(); ++i) full[qvar_index[i]] = qs[i];
      for (std::size_t k = 0; k < r; ++k) full[uni->require(degree2_generators[k])] = tuple[k];
      for (const auto& rel : engine.presentation().relations)
        sample.max_residual = std::max(sample.max_residual, std::abs(rel.eval(full)));
    }
    sample.pass = sample.max_residual < tol;
    report.pass = report.pass && sample.pass;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace qcw
