#include "asaut/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace asaut::mpoly {

VarSet VarSet::curve(unsigned n) {
  std::vector<std::string> params;
  params.reserve(n);
  for (unsigned i = 0; i < n; ++i) params.push_back("a_" + std::to_string(i));
  return curve(n, std::move(params));
}

VarSet VarSet::curve(unsigned n, std::vector<std::string> param_names) {
  std::vector<std::string> names;
  names.reserve(n + 3 + param_names.size());
  for (unsigned j = 0; j <= n; ++j) names.push_back("gamma_" + std::to_string(n - j));
  names.push_back("beta");
  names.push_back("alpha");
  for (auto& p : param_names) names.push_back(std::move(p));
  if (names.size() > Monomial::kMaxVars)
    throw std::invalid_argument("VarSet: too many variables");
  return VarSet(n, std::move(names));
}

int VarSet::index_of(const std::string& nm) const {
  for (unsigned i = 0; i < names_.size(); ++i)
    if (names_[i] == nm) return static_cast<int>(i);
  return -1;
}

Monomial Monomial::var(unsigned idx, unsigned exp) {
  if (idx >= kMaxVars) throw std::invalid_argument("Monomial: variable index out of range");
  Monomial m;
  m.e[idx] = static_cast<std::uint16_t>(exp);
  if (m.e[idx] != exp) throw std::overflow_error("Monomial: exponent overflow");
  m.deg = exp;
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg > o.deg) return false;
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (e[i] && o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    const std::uint32_t s = std::uint32_t{e[i]} + o.e[i];
    if (s > 0xFFFFu) throw std::overflow_error("Monomial: exponent overflow");
    m.e[i] = static_cast<std::uint16_t>(s);
  }
  m.deg = deg + o.deg;
  if (m.deg > kMaxTotalDegree) throw std::overflow_error("Monomial: total degree overflow");
  return m;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial m;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    if (o.e[i] > e[i]) throw std::domain_error("Monomial: division is not exact");
    m.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
  }
  m.deg = deg - o.deg;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  std::uint32_t d = 0;
  for (unsigned i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    d += m.e[i];
  }
  m.deg = d;
  return m;
}

const char* order_name(Order o) { return o == Order::lex ? "lex" : "grevlex"; }

Order order_from_name(const std::string& s) {
  if (s == "lex") return Order::lex;
  if (s == "grevlex") return Order::grevlex;
  throw std::invalid_argument("unknown monomial order: " + s);
}

int cmp(Order o, const Monomial& a, const Monomial& b, unsigned nvars) {
  if (o == Order::lex) {
    for (unsigned i = 0; i < nvars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    return 0;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (unsigned i = nvars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

MPoly::MPoly(const VarSet* vs, Order o, std::vector<Monomial> terms)
    : vs_(vs), order_(o), terms_(std::move(terms)) {
  normalize();
}

void MPoly::normalize() {
  const unsigned nv = vs_->size();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Monomial& a, const Monomial& b) { return cmp(order_, a, b, nv) > 0; });
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (size_t i = 0; i < terms_.size();) {
    size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) & 1) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("MPoly: zero polynomial has no leading monomial");
  return terms_.front();
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (vs_ == nullptr) return o;
  if (o.vs_ == nullptr) return *this;
  MPoly r(vs_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  const unsigned nv = vs_->size();
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const int c = cmp(order_, terms_[i], o.terms_[j], nv);
    if (c > 0) r.terms_.push_back(terms_[i++]);
    else if (c < 0) r.terms_.push_back(o.terms_[j++]);
    else { ++i; ++j; }  // equal monomials cancel over GF(2)
  }
  r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
  return r;
}

MPoly MPoly::times(const Monomial& m) const {
  MPoly r(vs_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(t * m);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly acc(vs_, order_);
  for (const auto& t : o.terms_) acc = acc + times(t);
  return acc;
}

MPoly MPoly::square() const {
  MPoly r(vs_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(t * t);
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  if (k == 0) return one(vs_, order_);
  MPoly base = *this, acc = one(vs_, order_);
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base.square();
  }
  return acc;
}

bool MPoly::contains_var(unsigned idx) const {
  for (const auto& t : terms_)
    if (t.e[idx]) return true;
  return false;
}

unsigned MPoly::degree_in(unsigned idx) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.e[idx]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.deg);
  return d;
}

MPoly MPoly::with_order(Order o) const {
  if (o == order_) return *this;
  return MPoly(vs_, o, terms_);
}

MPoly formal_derivative(const MPoly& f, unsigned var) {
  std::vector<Monomial> out;
  for (const auto& t : f.terms()) {
    if (!(t.e[var] & 1u)) continue;
    Monomial m = t;
    m.e[var] -= 1;
    m.deg -= 1;
    out.push_back(m);  // relative order is preserved by dividing out one var
  }
  MPoly r(f.varset(), f.order(), std::move(out));
  return r;
}

MPoly substitute(const MPoly& f, const VarSet* target, Order order,
                 const std::map<unsigned, MPoly>& images) {
  MPoly acc(target, order);
  for (const auto& t : f.terms()) {
    MPoly prod = MPoly::one(target, order);
    for (unsigned i = 0; i < f.varset()->size(); ++i) {
      if (!t.e[i]) continue;
      auto it = images.find(i);
      MPoly img;
      if (it != images.end()) {
        img = it->second;
      } else {
        const int idx = target->index_of(f.varset()->name(i));
        if (idx < 0)
          throw std::invalid_argument("substitute: no image for variable " + f.varset()->name(i));
        img = MPoly::var(target, order, static_cast<unsigned>(idx));
      }
      prod = prod * img.pow(t.e[i]);
      if (prod.is_zero()) break;
    }
    acc = acc + prod;
  }
  return acc;
}

MPoly substitute_consts(const MPoly& f, const std::map<unsigned, unsigned>& consts) {
  std::map<unsigned, MPoly> images;
  for (const auto& [v, c] : consts) {
    if (c > 1) throw std::invalid_argument("substitute_consts: constants must be 0 or 1");
    images.emplace(v, c ? MPoly::one(f.varset(), f.order()) : MPoly::zero(f.varset(), f.order()));
  }
  return substitute(f, f.varset(), f.order(), images);
}

std::uint32_t evaluate(const MPoly& f, const ff2::Field& field,
                       const std::vector<std::uint32_t>& values) {
  std::uint32_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint32_t p = 1;
    for (unsigned i = 0; i < f.varset()->size() && p; ++i)
      if (t.e[i]) p = field.mul(p, field.pow(values.at(i), t.e[i]));
    acc ^= p;
  }
  return acc;
}

ff2::UPoly specialize(const MPoly& f, const ff2::Field& field, unsigned var,
                      const std::vector<std::uint32_t>& values) {
  std::vector<std::uint32_t> coeffs(f.degree_in(var) + 1, 0u);
  for (const auto& t : f.terms()) {
    std::uint32_t p = 1;
    for (unsigned i = 0; i < f.varset()->size() && p; ++i) {
      if (i == var || !t.e[i]) continue;
      p = field.mul(p, field.pow(values.at(i), t.e[i]));
    }
    coeffs[t.e[var]] ^= p;
  }
  return ff2::UPoly(&field, std::move(coeffs));
}

std::string to_string(const Monomial& m, const VarSet& vs) {
  if (m.is_one()) return "1";
  std::string s;
  for (unsigned i = 0; i < vs.size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vs.name(i);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

std::string to_string(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(t, *f.varset());
  }
  return s;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// Parses one term into m; returns false for an explicit "0" term.
bool parse_term(const VarSet& vs, const std::string& s, size_t& i, Monomial& m) {
  m = Monomial::one();
  bool first = true;
  while (true) {
    skip_ws(s, i);
    if (first && i < s.size() && (s[i] == '0' || s[i] == '1') &&
        (i + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[i + 1])))) {
      return s[i++] == '1';
    }
    size_t j = i;
    while (j < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
    if (j == i) throw std::invalid_argument("parse: expected variable at '" + s.substr(i) + "'");
    const int idx = vs.index_of(s.substr(i, j - i));
    if (idx < 0) throw std::invalid_argument("parse: unknown variable '" + s.substr(i, j - i) + "'");
    i = j;
    unsigned exp = 1;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip_ws(s, i);
      size_t k = i;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      if (k == i) throw std::invalid_argument("parse: expected exponent after '^'");
      exp = static_cast<unsigned>(std::stoul(s.substr(i, k - i)));
      i = k;
    }
    m = m * Monomial::var(static_cast<unsigned>(idx), exp);
    first = false;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '*') { ++i; continue; }
    return true;
  }
}

}  // namespace

MPoly parse(const VarSet* vs, Order o, const std::string& text) {
  std::vector<Monomial> terms;
  size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw std::invalid_argument("parse: empty input");
  while (true) {
    Monomial m;
    if (parse_term(*vs, text, i, m)) terms.push_back(m);
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '+') throw std::invalid_argument("parse: expected '+' at '" + text.substr(i) + "'");
    ++i;
  }
  return MPoly(vs, o, std::move(terms));
}

}  // namespace asaut::mpoly
