#include "qcw/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcw {

// ---------------------------------------------------------------------------
// Universe

std::shared_ptr<const Universe> Universe::make(std::vector<Var> vars) {
  for (const auto& v : vars) {
    if (v.name.empty()) throw std::invalid_argument("Universe: empty variable name");
    if (v.degree % 2 != 0) throw std::invalid_argument("Universe: variable '" + v.name + "' has odd degree");
  }
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name)
        throw std::invalid_argument("Universe: duplicate variable '" + vars[i].name + "'");
  return std::shared_ptr<const Universe>(new Universe(std::move(vars)));
}

std::optional<std::size_t> Universe::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Universe::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("Universe: unknown variable '" + name + "'");
  return *i;
}

bool Universe::same_as(const Universe& o) const {
  if (this == &o) return true;
  if (vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree ||
        vars_[i].quantum != o.vars_[i].quantum)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial

bool Monomial::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
}

int Monomial::weighted_degree(const Universe& u) const {
  int d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) d += static_cast<int>(e_[i]) * u.var(i).degree;
  return d;
}

int Monomial::quantum_degree(const Universe& u) const {
  int d = 0;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (u.var(i).quantum) d += static_cast<int>(e_[i]) * u.var(i).degree;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Monomial Monomial::divide_by(const Monomial& d) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= d.e_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a);
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] > 0 && b.e_[i] > 0) return false;
  return true;
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.weighted_degree(*u), db = b.weighted_degree(*u);
  if (da != db) return da < db;
  // Within a graded piece, larger q-part means smaller monomial, so leading
  // terms of homogeneous quantum relations stay classical.
  int qa = a.quantum_degree(*u), qb = b.quantum_degree(*u);
  if (qa != qb) return qa > qb;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(UniversePtr u) : uni_(std::move(u)), terms_(TermOrder{uni_.get()}) {
  if (!uni_) throw std::invalid_argument("Polynomial: null universe");
}

Polynomial Polynomial::constant(UniversePtr u, const Rational& c) {
  Polynomial p(std::move(u));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.uni_->size()), c);
  return p;
}

Polynomial Polynomial::variable(UniversePtr u, const std::string& name, unsigned power) {
  Polynomial p(std::move(u));
  std::size_t i = p.uni_->require(name);
  Monomial m(p.uni_->size());
  m.set_exp(i, power);
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::from_monomial(UniversePtr u, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(u));
  if (m.size() != p.uni_->size()) throw std::invalid_argument("Polynomial: monomial size mismatch");
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::require_same_universe(const Polynomial& o) const {
  if (!uni_->same_as(*o.uni_))
    throw std::invalid_argument("Polynomial: mismatched variable universes");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(uni_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(*this);
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(*this);
  r -= o;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_universe(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_universe(o);
  Polynomial r(uni_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(uni_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& o) const {
  if (!uni_->same_as(*o.uni_)) return false;
  return std::equal(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                    [](const auto& a, const auto& b) { return a.first == b.first && a.second == b.second; }) &&
         terms_.size() == o.terms_.size();
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(uni_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Polynomial Polynomial::diff(const std::string& var) const {
  std::size_t i = uni_->require(var);
  Polynomial r(uni_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp(i);
    if (e == 0) continue;
    Monomial d = m;
    d.set_exp(i, e - 1);
    r.add_term(d, c * Rational(static_cast<long>(e)));
  }
  return r;
}

std::optional<int> Polynomial::weighted_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.weighted_degree(*uni_);
}

bool Polynomial::is_homogeneous(Monomial* offending) const {
  if (terms_.empty()) return true;
  int d = terms_.rbegin()->first.weighted_degree(*uni_);
  for (const auto& [m, c] : terms_) {
    if (m.weighted_degree(*uni_) != d) {
      if (offending) *offending = m;
      return false;
    }
  }
  return true;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
  return *terms_.rbegin();
}

Polynomial Polynomial::map_variables(const UniversePtr& target,
                                     const std::map<std::string, Polynomial>& images) const {
  std::vector<Polynomial> image_of;
  image_of.reserve(uni_->size());
  for (std::size_t i = 0; i < uni_->size(); ++i) {
    const std::string& name = uni_->var(i).name;
    auto it = images.find(name);
    if (it != images.end()) {
      if (!it->second.universe()->same_as(*target))
        throw std::invalid_argument("map_variables: image of '" + name + "' not over target universe");
      image_of.push_back(it->second);
    } else {
      image_of.push_back(Polynomial::variable(target, name));
    }
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < uni_->size(); ++i)
      if (m.exp(i) > 0) t = t * image_of[i].pow(m.exp(i));
    r += t;
  }
  return r;
}

std::complex<double> Polynomial::eval(std::span<const std::complex<double>> point) const {
  if (point.size() != uni_->size()) throw std::invalid_argument("eval: wrong point dimension");
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_double();
    for (std::size_t i = 0; i < uni_->size(); ++i)
      for (unsigned e = 0; e < m.exp(i); ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Rational Polynomial::eval_rational(std::span<const Rational> point) const {
  if (point.size() != uni_->size()) throw std::invalid_argument("eval: wrong point dimension");
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < uni_->size(); ++i)
      if (m.exp(i) > 0) t *= point[i].pow(m.exp(i));
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_monomial(std::ostream& os, const Universe& u, const Monomial& m, bool* first_factor) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    unsigned e = m.exp(i);
    if (e == 0) continue;
    if (!*first_factor) os << "*";
    *first_factor = false;
    os << u.var(i).name;
    if (e > 1) os << "^" << e;
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c.abs();
    if (first) {
      if (c.is_negative()) os << "-";
      first = false;
    } else {
      os << (c.is_negative() ? " - " : " + ");
    }
    bool first_factor = true;
    if (!a.is_one() || m.is_constant()) {
      os << a.to_string();
      first_factor = false;
    }
    render_monomial(os, *uni_, m, &first_factor);
  }
  return os.str();
}

std::string Polynomial::to_json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << ",";
    first = false;
    os << "{\"exponents\":{";
    bool fe = true;
    for (std::size_t i = 0; i < uni_->size(); ++i) {
      if (m.exp(i) == 0) continue;
      if (!fe) os << ",";
      fe = false;
      os << "\"" << uni_->var(i).name << "\":" << m.exp(i);
    }
    os << "},\"numerator\":\"" << c.numerator_string() << "\",\"denominator\":\""
       << c.denominator_string() << "\"}";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser for the canonical syntax.

namespace {

struct Parser {
  UniversePtr uni;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + why +
                                " in '" + s + "'");
  }

  unsigned parse_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected integer");
    return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (true) {
      if (eat('+')) {
        acc += parse_term();
      } else if (eat('-')) {
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    if (eat('-')) return -parse_factor();
    if (eat('+')) return parse_factor();
    Polynomial base = parse_base();
    if (eat('^')) {
      unsigned e = parse_uint();
      return base.pow(e);
    }
    return base;
  }

  Polynomial parse_base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned num = parse_uint();
      if (eat('/')) {
        unsigned den = parse_uint();
        return Polynomial::constant(uni, Rational(static_cast<long>(num), static_cast<long>(den)));
      }
      return Polynomial::constant(uni, Rational(static_cast<long>(num)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (!uni->index_of(name)) fail("unknown variable '" + name + "'");
      return Polynomial::variable(uni, name);
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial Polynomial::parse(UniversePtr u, const std::string& text) {
  Parser p{std::move(u), text};
  Polynomial r = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace qcw
