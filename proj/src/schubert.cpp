#include "qcw/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qcw/series.hpp"

namespace qcw {

YoungDiagram::YoungDiagram(std::vector<int> r, int k_, int n_) : rows(std::move(r)), k(k_), n(n_) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("YoungDiagram: bad (k,n)");
  rows.resize(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    if (rows[static_cast<std::size_t>(i)] < 0 || rows[static_cast<std::size_t>(i)] > n - k)
      throw std::invalid_argument("YoungDiagram: row out of box");
    if (i > 0 && rows[static_cast<std::size_t>(i)] > rows[static_cast<std::size_t>(i - 1)])
      throw std::invalid_argument("YoungDiagram: rows not weakly decreasing");
  }
}

int YoungDiagram::codegree() const {
  int s = 0;
  for (int r : rows) s += r;
  return s;
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ",";
    os << rows[i];
  }
  os << "]";
  return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& text, int k, int n) {
  std::string t = text;
  if (!t.empty() && t.front() == '[') t = t.substr(1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  std::vector<int> rows;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) rows.push_back(std::stoi(item));
  return YoungDiagram(std::move(rows), k, n);
}

std::vector<YoungDiagram> enumerate_diagrams(int k, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("enumerate_diagrams: bad (k,n)");
  std::vector<YoungDiagram> out;
  std::vector<int> rows(static_cast<std::size_t>(k), 0);
  // Recursive descent over weakly decreasing tuples bounded by n-k.
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == k) {
      out.emplace_back(rows, k, n);
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      rows[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v);
    }
  };
  rec(rec, 0, n - k);
  std::sort(out.begin(), out.end(), [](const YoungDiagram& a, const YoungDiagram& b) {
    if (a.codegree() != b.codegree()) return a.codegree() < b.codegree();
    return a.rows < b.rows;
  });
  return out;
}

UniversePtr schubert_universe(int k, int n) {
  std::vector<Universe::Var> vars;
  for (int j = 1; j <= n - k; ++j) vars.push_back({"s" + std::to_string(j), 2 * j, false});
  return Universe::make(vars);
}

namespace {

Polynomial special_class(const UniversePtr& u, int k, int n, int j) {
  if (j == 0) return Polynomial::constant(u, Rational(1));
  if (j < 0 || j > n - k) return Polynomial::zero(u);
  return Polynomial::variable(u, "s" + std::to_string(j));
}

Polynomial det_recursive(const std::vector<std::vector<Polynomial>>& m, std::vector<std::size_t> cols,
                         std::size_t row, const UniversePtr& u) {
  if (cols.empty()) return Polynomial::constant(u, Rational(1));
  Polynomial acc = Polynomial::zero(u);
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    std::vector<std::size_t> rest;
    for (std::size_t cj = 0; cj < cols.size(); ++cj)
      if (cj != ci) rest.push_back(cols[cj]);
    Polynomial minor = det_recursive(m, rest, row + 1, u);
    Polynomial term = m[row][cols[ci]] * minor;
    acc += (ci % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

Polynomial giambelli(const YoungDiagram& lambda) {
  auto u = schubert_universe(lambda.k, lambda.n);
  int k = lambda.k;
  std::vector<std::vector<Polynomial>> m(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m[static_cast<std::size_t>(i)].push_back(
          special_class(u, lambda.k, lambda.n, lambda.rows[static_cast<std::size_t>(i)] + j - i));
  std::vector<std::size_t> cols(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) cols[static_cast<std::size_t>(j)] = static_cast<std::size_t>(j);
  return det_recursive(m, cols, 0, u);
}

SignedDiagram chern_as_schubert(int j, int k, int n) {
  if (j < 1 || j > k) throw std::invalid_argument("chern_as_schubert: need 1 <= j <= k");
  std::vector<int> rows(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < j; ++i) rows[static_cast<std::size_t>(i)] = 1;
  return SignedDiagram{j % 2 == 0 ? 1 : -1, YoungDiagram(std::move(rows), k, n)};
}

Polynomial giambelli_in_chern(const YoungDiagram& lambda, const UniversePtr& chern_universe) {
  auto su = schubert_universe(lambda.k, lambda.n);
  // s_j as the inversion polynomial of the total Chern class series.
  std::vector<std::string> cs;
  for (int i = 1; i <= lambda.k; ++i) cs.push_back("c" + std::to_string(i));
  TruncatedSeries c = TruncatedSeries::generic(chern_universe, cs, static_cast<unsigned>(lambda.n));
  TruncatedSeries s = series_invert(c);
  std::map<std::string, Polynomial> images;
  for (int j = 1; j <= lambda.n - lambda.k; ++j)
    images["s" + std::to_string(j)] = s.coefficient(static_cast<unsigned>(j));
  return giambelli(lambda).map_variables(chern_universe, images);
}

std::string SchubertProduct::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational a = t.coeff.abs();
    if (first) {
      if (t.coeff.is_negative()) os << "-";
      first = false;
    } else {
      os << (t.coeff.is_negative() ? " - " : " + ");
    }
    if (!a.is_one()) os << a.to_string() << "*";
    os << t.diagram.to_string();
    if (t.q_power == 1) os << "*q";
    if (t.q_power > 1) os << "*q^" << t.q_power;
  }
  return os.str();
}

SchubertProduct schubert_product(const YoungDiagram& lambda, const YoungDiagram& mu, bool quantum) {
  if (lambda.k != mu.k || lambda.n != mu.n)
    throw std::invalid_argument("schubert_product: diagrams from different Grassmannians");
  int k = lambda.k, n = lambda.n;
  Space space = make_grassmannian(k, n);
  NormalFormEngine engine = make_engine(space, quantum);
  const auto& u = engine.presentation().universe;

  std::vector<BasisClass> basis;
  std::vector<YoungDiagram> diagrams = enumerate_diagrams(k, n);
  for (const auto& d : diagrams) basis.push_back({d.to_string(), giambelli_in_chern(d, u)});

  Polynomial prod = giambelli_in_chern(lambda, u) * giambelli_in_chern(mu, u);
  BasisExpansion exp = expand_in_basis(engine, basis, prod);

  SchubertProduct out;
  std::size_t q_index = u->size();  // absent for classical engines
  if (auto qi = u->index_of("q")) q_index = *qi;
  for (const auto& e : exp.entries) {
    unsigned qp = q_index < u->size() ? e.q_monomial.exp(q_index) : 0;
    out.terms.push_back({diagrams[e.basis_index], qp, e.coeff});
  }
  return out;
}

}  // namespace qcw
