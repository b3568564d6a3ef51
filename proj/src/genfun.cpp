#include "qcw/genfun.hpp"

#include <map>
#include <stdexcept>

namespace qcw {

UniversePtr genfun_universe(const Space& space) {
  std::vector<Universe::Var> vars;
  for (std::size_t i = 0; i < space.sympl_p.size(); ++i)
    vars.push_back({"t" + std::to_string(i + 1), 2, false});
  for (const auto& v : space.quantum_presentation().universe->vars())
    if (v.quantum) vars.push_back(v);
  return Universe::make(vars);
}

namespace {

unsigned t_degree(const Polynomial& p, std::size_t r) {
  unsigned d = 0;
  for (const auto& [m, c] : p.terms()) {
    unsigned td = 0;
    for (std::size_t i = 0; i < r; ++i) td += m.exp(i);
    d = std::max(d, td);
  }
  return d;
}

Polynomial truncate_t(const Polynomial& p, std::size_t r, unsigned max_t) {
  Polynomial out = Polynomial::zero(p.universe());
  for (const auto& [m, c] : p.terms()) {
    unsigned td = 0;
    for (std::size_t i = 0; i < r; ++i) td += m.exp(i);
    if (td <= max_t) out.add_term(m, c);
  }
  return out;
}

}  // namespace

GeneratingFunction scalar_generating_function(const Space& space, const NormalFormEngine& engine,
                                              unsigned order) {
  const auto& uni = engine.presentation().universe;
  std::vector<BasisClass> basis = space_basis(space, engine);
  std::size_t top = basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].label == space.top_label) top = i;
  if (top == basis.size())
    throw std::logic_error("scalar_generating_function: top class label not found");

  const std::size_t r = space.sympl_p.size();
  auto tq = genfun_universe(space);

  GeneratingFunction gf;
  gf.order = order;
  gf.reliable_order = order;
  for (std::size_t i = 0; i < r; ++i) gf.t_names.push_back("t" + std::to_string(i + 1));
  gf.body = Polynomial::zero(tq);

  // Normal forms of the quantum powers b^j, built up one multiplication at a
  // time over the multi-index lattice.
  std::map<std::vector<unsigned>, Polynomial> power_nf;
  power_nf[std::vector<unsigned>(r, 0)] = Polynomial::constant(uni, Rational(1));
  std::vector<Polynomial> gens;
  for (const auto& name : space.sympl_p) gens.push_back(Polynomial::variable(uni, name));

  std::vector<std::vector<unsigned>> frontier{std::vector<unsigned>(r, 0)};
  for (unsigned level = 0; level <= order; ++level) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& j : frontier) {
      const Polynomial& nf = power_nf.at(j);
      // Top-class coefficient with q-powers retained.
      BasisExpansion exp = expand_in_basis(engine, basis, nf);
      Polynomial qcoef = Polynomial::zero(tq);
      for (const auto& e : exp.entries) {
        if (e.basis_index != top) continue;
        Monomial qm(tq->size());
        for (std::size_t v = 0; v < uni->size(); ++v) {
          if (e.q_monomial.exp(v) == 0) continue;
          qm.set_exp(tq->require(uni->var(v).name), e.q_monomial.exp(v));
        }
        qcoef.add_term(qm, e.coeff);
      }
      if (!qcoef.is_zero()) {
        Rational denom(1);
        Monomial tm(tq->size());
        for (std::size_t i = 0; i < r; ++i) {
          tm.set_exp(i, j[i]);
          denom *= factorial(j[i]);
        }
        gf.body += qcoef * Polynomial::from_monomial(tq, tm, denom.inverse());
      }
      if (level == order) continue;
      // Extend by one generator; canonical successor rule avoids duplicates.
      for (std::size_t i = 0; i < r; ++i) {
        bool later_nonzero = false;
        for (std::size_t l = i + 1; l < r; ++l)
          if (j[l] > 0) later_nonzero = true;
        if (later_nonzero) continue;
        std::vector<unsigned> jj = j;
        jj[i] += 1;
        if (!power_nf.count(jj)) {
          power_nf[jj] = engine.normal_form(gens[i] * nf);
          next.push_back(jj);
        }
      }
    }
    frontier = std::move(next);
  }
  return gf;
}

GeneratingFunction cpn_V_closed_form(int n, unsigned order) {
  if (n < 1) throw std::invalid_argument("cpn_V_closed_form: need n >= 1");
  if (order < static_cast<unsigned>(n))
    throw std::invalid_argument("cpn_V_closed_form: order below first term");
  Space space = make_cpn(n);
  auto tq = genfun_universe(space);
  GeneratingFunction gf;
  gf.order = order;
  gf.reliable_order = order;
  gf.t_names = {"t1"};
  gf.body = Polynomial::zero(tq);
  for (unsigned s = 0;; ++s) {
    unsigned e = static_cast<unsigned>(n + 1) * s + static_cast<unsigned>(n);
    if (e > order) break;
    Monomial m(tq->size());
    m.set_exp(0, e);
    m.set_exp(tq->require("q"), s);
    gf.body.add_term(m, factorial(e).inverse());
  }
  return gf;
}

GeneratingFunction apply_operator(const Space& space, const Polynomial& R,
                                  const GeneratingFunction& V) {
  const auto& uni = R.universe();
  const std::size_t r = space.sympl_p.size();
  const auto& tq = V.body.universe();

  unsigned p_degree = 0;
  for (const auto& [m, c] : R.terms()) {
    unsigned pd = 0;
    for (std::size_t i = 0; i < r; ++i) pd += m.exp(uni->require(space.sympl_p[i]));
    p_degree = std::max(p_degree, pd);
  }

  GeneratingFunction out;
  out.order = V.order;
  out.t_names = V.t_names;
  out.reliable_order = V.reliable_order >= p_degree ? V.reliable_order - p_degree : 0;
  out.body = Polynomial::zero(tq);

  for (const auto& [m, c] : R.terms()) {
    Polynomial part = V.body * c;
    for (std::size_t i = 0; i < r; ++i) {
      unsigned e = m.exp(uni->require(space.sympl_p[i]));
      for (unsigned d = 0; d < e; ++d) part = part.diff(V.t_names[i]);
    }
    Monomial qm(tq->size());
    for (std::size_t v = 0; v < uni->size(); ++v) {
      if (!uni->var(v).quantum || m.exp(v) == 0) continue;
      qm.set_exp(tq->require(uni->var(v).name), m.exp(v));
    }
    out.body += part * Polynomial::from_monomial(tq, qm, Rational(1));
  }
  out.body = truncate_t(out.body, r, out.reliable_order);
  return out;
}

AnnihilationReport annihilation_check(const Space& space, unsigned order) {
  if (!space.degree2_generated)
    throw std::invalid_argument(
        "annihilation_check: " + space.id +
        " is not generated in degree 2; the generating-function construction assumes "
        "H^2 generates H^* and the paper excludes this case");
  const auto& pres = space.quantum_presentation();
  NormalFormEngine engine = NormalFormEngine::complete(pres, static_cast<int>(2 * order) + 2);
  GeneratingFunction V = scalar_generating_function(space, engine, order);

  AnnihilationReport report;
  report.space_id = space.id;
  report.order = order;
  report.pass = true;
  for (const auto& rel : pres.relations) {
    GeneratingFunction rv = apply_operator(space, rel, V);
    AnnihilationReport::Item item;
    item.operator_text = rel.to_string();
    item.reliable_order = rv.reliable_order;
    item.residual_terms = rv.body.term_count();
    item.annihilated = rv.body.is_zero();
    report.pass = report.pass && item.annihilated;
    report.relations.push_back(item);
  }
  // Converse direction: a degree-2 generator is not in the ideal, so its
  // operator must leave a nonzero residual.
  Polynomial nonmember = Polynomial::variable(pres.universe, space.sympl_p[0]);
  GeneratingFunction nm = apply_operator(space, nonmember, V);
  report.non_member.operator_text = nonmember.to_string();
  report.non_member.reliable_order = nm.reliable_order;
  report.non_member.residual_terms = nm.body.term_count();
  report.non_member.annihilated = nm.body.is_zero();
  report.pass = report.pass && !report.non_member.annihilated;
  return report;
}

}  // namespace qcw
