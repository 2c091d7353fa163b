#include "asaut/curve.hpp"

#include <algorithm>
#include <utility>

namespace asaut::curve {

namespace {

using ff2::Field;
using ff2::UPoly;
using mpoly::Monomial;

std::shared_ptr<const VarSet> family_varset(const CurveSpec& spec) {
  return std::make_shared<const VarSet>(VarSet::curve(spec.n, spec.params));
}

bool is_plain_symbolic(const CurveSpec& spec) {
  return spec.params.empty() && spec.images.empty();
}

// Supplies the polynomial standing for the curve coefficient a_i in whatever
// ring the system is being built in: the parameter variable itself for the
// plain ring, or the family's image expression.
using CoeffMap = std::vector<MPoly>;

CoeffMap plain_coeffs(const VarSet* vs, Order o) {
  CoeffMap coeffs;
  for (unsigned i = 0; i < vs->curve_n(); ++i)
    coeffs.push_back(MPoly::var(vs, o, vs->param(i)));
  return coeffs;
}

CoeffMap family_coeffs(const CurveSpec& spec, const VarSet* vs, Order o) {
  CoeffMap coeffs(spec.n, MPoly::zero(vs, o));
  for (const auto& [i, expr] : spec.images) {
    if (i >= spec.n) throw std::invalid_argument("coefficient image index beyond curve degree");
    coeffs[i] = mpoly::parse(vs, o, expr);
  }
  return coeffs;
}

MPoly condition_target(const VarSet* vs, Order o, unsigned l) {
  const unsigned n = vs->curve_n();
  if (l == 2 * n + 1) return MPoly::one(vs, o);
  if (l % 2 == 1) return MPoly::var(vs, o, vs->param((l - 1) / 2));
  return MPoly::zero(vs, o);
}

void require_concrete(const CurveSpec& spec) {
  if (!spec.field) throw FieldMismatch("curve is not in concrete mode");
  if (spec.values.size() != spec.n) throw FieldMismatch("curve needs n coefficient values");
}

void require_element(const CurveSpec& spec, std::uint32_t v) {
  if (!spec.field->contains(v)) throw FieldMismatch("element outside the curve's field");
}

UPoly gamma_poly(const Field& field, const Automorphism& a) {
  return UPoly(&field, a.gamma);
}

}  // namespace

CurveSpec symbolic_curve(unsigned n) {
  if (n == 0) throw std::invalid_argument("curve needs n >= 1");
  CurveSpec spec;
  spec.n = n;
  return spec;
}

CurveSpec concrete_curve(const Field& field, std::vector<std::uint32_t> values) {
  CurveSpec spec;
  spec.n = static_cast<unsigned>(values.size());
  if (spec.n == 0) throw std::invalid_argument("curve needs n >= 1");
  spec.field = &field;
  spec.values = std::move(values);
  for (std::uint32_t v : spec.values) require_element(spec, v);
  return spec;
}

CurveSpec scholten_zhu_family(unsigned genus) {
  CurveSpec spec;
  spec.n = genus;
  switch (genus) {
    case 1:
      spec.images = {{0, "0"}};
      break;
    case 2:
      spec.params = {"c_3"};
      spec.images = {{1, "c_3"}};
      break;
    case 4:
      spec.params = {"c_3", "c_5"};
      spec.images = {{2, "c_5"}, {1, "c_3"}};
      break;
    case 5:
    case 6:
      spec.params = {"c_1", "c_3"};
      spec.images = {{1, "c_3"}, {0, "c_1"}};
      break;
    case 8:
      spec.params = {"c_3", "c_5", "c_9"};
      spec.images = {{4, "c_9"}, {2, "c_5"}, {1, "c_3"}};
      break;
    case 9:
      spec.params = {"c"};
      spec.images = {{4, "c^8"}, {0, "c^3"}};
      break;
    default:
      throw UnsupportedGenus(genus);
  }
  return spec;
}

CurveSpec scholten_zhu(unsigned genus, const Field& field,
                       const std::map<std::string, std::uint32_t>& coeffs) {
  const CurveSpec fam = scholten_zhu_family(genus);
  const auto vs = family_varset(fam);
  std::vector<std::uint32_t> point(vs->size(), 0);
  for (const auto& [name, value] : coeffs) {
    const int idx = vs->index_of(name);
    if (idx < 0 || static_cast<unsigned>(idx) < vs->param(0))
      throw std::invalid_argument("unknown curve parameter " + name);
    if (!field.contains(value)) throw FieldMismatch("parameter value outside the field");
    point[static_cast<unsigned>(idx)] = value;
  }
  CurveSpec out;
  out.n = fam.n;
  out.field = &field;
  out.values.assign(fam.n, 0);
  for (const auto& [i, expr] : fam.images)
    out.values[i] = mpoly::evaluate(mpoly::parse(vs.get(), Order::lex, expr), field, point);
  return out;
}

MPoly c_coeff(const VarSet* vs, Order o, unsigned l) {
  const unsigned n = vs->curve_n();
  if (vs->param_count() != n)
    throw std::invalid_argument("coefficient formula needs the plain parameter ring");
  if (l > 2 * n + 1) throw std::out_of_range("coefficient index beyond curve degree");
  std::vector<Monomial> terms;
  const auto alpha_beta = [&](unsigned ae, unsigned be) {
    Monomial m;
    if (ae) m = m * Monomial::var(vs->alpha(), ae);
    if (be) m = m * Monomial::var(vs->beta(), be);
    return m;
  };
  if (mpoly::binom_mod2(2 * n + 1, l)) terms.push_back(alpha_beta(l, 2 * n + 1 - l));
  for (unsigned i = l / 2; i < n; ++i)
    if (mpoly::binom_mod2(2 * i + 1, l))
      terms.push_back(alpha_beta(l, 2 * i + 1 - l) * Monomial::var(vs->param(i)));
  if (l % 2 == 0 && l / 2 <= n) terms.push_back(Monomial::var(vs->gamma(l / 2), 2));
  if (l <= n) terms.push_back(Monomial::var(vs->gamma(l)));
  return MPoly(vs, o, std::move(terms));
}

namespace {

// c(l) plus its target, built against an arbitrary coefficient map so plain
// and family rings share one construction (c(l) is linear in the a_i).
MPoly condition_poly(const VarSet* vs, Order o, unsigned l, const CoeffMap& coeffs) {
  const unsigned n = vs->curve_n();
  const auto alpha_beta = [&](unsigned ae, unsigned be) {
    Monomial m;
    if (ae) m = m * Monomial::var(vs->alpha(), ae);
    if (be) m = m * Monomial::var(vs->beta(), be);
    return MPoly(vs, o, {m});
  };
  MPoly out = MPoly::zero(vs, o);
  if (mpoly::binom_mod2(2 * n + 1, l)) out = out + alpha_beta(l, 2 * n + 1 - l);
  for (unsigned i = l / 2; i < n; ++i)
    if (mpoly::binom_mod2(2 * i + 1, l)) out = out + coeffs[i] * alpha_beta(l, 2 * i + 1 - l);
  if (l % 2 == 0 && l / 2 <= n) out = out + MPoly::var(vs, o, vs->gamma(l / 2), 2);
  if (l <= n) out = out + MPoly::var(vs, o, vs->gamma(l));
  if (l == 2 * n + 1) out = out + MPoly::one(vs, o);
  if (l % 2 == 1 && l != 2 * n + 1) out = out + coeffs[(l - 1) / 2];
  return out;
}

ConditionSystem build_system(unsigned n, Order o, std::shared_ptr<const VarSet> varset,
                             const CoeffMap& coeffs) {
  ConditionSystem sys;
  sys.n = n;
  sys.order = o;
  sys.varset = std::move(varset);
  for (unsigned l = 2 * n + 2; l-- > 0;)
    sys.generators.push_back(condition_poly(sys.varset.get(), o, l, coeffs));
  return sys;
}

}  // namespace

ConditionSystem condition_system(unsigned n, Order o) {
  if (n == 0) throw std::invalid_argument("curve needs n >= 1");
  auto varset = std::make_shared<const VarSet>(VarSet::curve(n));
  const CoeffMap coeffs = plain_coeffs(varset.get(), o);
  return build_system(n, o, std::move(varset), coeffs);
}

ConditionSystem condition_system(const CurveSpec& spec, Order o) {
  if (spec.field) throw std::invalid_argument("condition system needs a symbolic curve");
  if (is_plain_symbolic(spec)) return condition_system(spec.n, o);
  auto varset = family_varset(spec);
  const CoeffMap coeffs = family_coeffs(spec, varset.get(), o);
  return build_system(spec.n, o, std::move(varset), coeffs);
}

namespace {

ConditionSystem build_by_substitution(unsigned n, Order o,
                                      std::shared_ptr<const VarSet> varset,
                                      const CoeffMap& coeffs) {
  ConditionSystem sys;
  sys.n = n;
  sys.order = o;
  sys.varset = std::move(varset);
  const VarSet* vs = sys.varset.get();

  // Polynomials in x with MPoly coefficients, index = x-degree.
  using XPoly = std::vector<MPoly>;
  const auto xp_mul = [&](const XPoly& a, const XPoly& b) {
    XPoly prod(a.size() + b.size() - 1, MPoly::zero(vs, o));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) prod[i + j] = prod[i + j] + a[i] * b[j];
    }
    return prod;
  };

  XPoly h(2 * n + 2, MPoly::zero(vs, o));
  const auto add_at = [&](unsigned deg, const MPoly& p) { h[deg] = h[deg] + p; };

  // f(x) + target side: x^{2n+1} + sum a_i x^{2i+1} (the conditions compare
  // against these same coefficients).
  add_at(2 * n + 1, MPoly::one(vs, o));
  for (unsigned i = 0; i < n; ++i) add_at(2 * i + 1, coeffs[i]);

  // f(alpha*x + beta): odd powers of T = alpha*x + beta via T^{2i+1} = T^{2i-1}*T^2.
  const XPoly t{MPoly::var(vs, o, vs->beta()), MPoly::var(vs, o, vs->alpha())};
  const XPoly t2 = xp_mul(t, t);
  XPoly cur = t;
  for (unsigned i = 0; i <= n; ++i) {
    if (i > 0) cur = xp_mul(cur, t2);
    const bool top = i == n;
    for (unsigned d = 0; d < cur.size(); ++d) {
      if (cur[d].is_zero()) continue;
      add_at(d, top ? cur[d] : cur[d] * coeffs[i]);
    }
  }

  // g(x)^2 + g(x) for g = sum gamma_j x^j.
  for (unsigned j = 0; j <= n; ++j) {
    add_at(j, MPoly::var(vs, o, vs->gamma(j)));
    add_at(2 * j, MPoly::var(vs, o, vs->gamma(j), 2));
  }

  for (unsigned l = 2 * n + 2; l-- > 0;) sys.generators.push_back(std::move(h[l]));
  return sys;
}

}  // namespace

ConditionSystem condition_system_by_substitution(unsigned n, Order o) {
  if (n == 0) throw std::invalid_argument("curve needs n >= 1");
  auto varset = std::make_shared<const VarSet>(VarSet::curve(n));
  const CoeffMap coeffs = plain_coeffs(varset.get(), o);
  return build_by_substitution(n, o, std::move(varset), coeffs);
}

ConditionSystem condition_system_by_substitution(const CurveSpec& spec, Order o) {
  if (spec.field) throw std::invalid_argument("condition system needs a symbolic curve");
  if (is_plain_symbolic(spec)) return condition_system_by_substitution(spec.n, o);
  auto varset = family_varset(spec);
  const CoeffMap coeffs = family_coeffs(spec, varset.get(), o);
  return build_by_substitution(spec.n, o, std::move(varset), coeffs);
}

Automorphism identity(unsigned n) {
  Automorphism a;
  a.gamma.assign(n + 1, 0);
  return a;
}

Automorphism sigma(unsigned n) {
  Automorphism a = identity(n);
  a.gamma[0] = 1;
  return a;
}

UPoly curve_rhs(const CurveSpec& concrete) {
  require_concrete(concrete);
  std::vector<std::uint32_t> coeffs(2 * concrete.n + 2, 0);
  coeffs[2 * concrete.n + 1] = 1;
  for (unsigned i = 0; i < concrete.n; ++i) coeffs[2 * i + 1] = concrete.values[i];
  return UPoly(concrete.field, std::move(coeffs));
}

UPoly affine_compose(const Field& field, const UPoly& p, std::uint32_t alpha,
                     std::uint32_t beta) {
  const UPoly line(&field, {beta, alpha});
  UPoly acc(&field, {});
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * line + UPoly(&field, {p.coeff(static_cast<unsigned>(k))});
  return acc;
}

bool is_automorphism(const CurveSpec& concrete, const Automorphism& a) {
  require_concrete(concrete);
  if (a.gamma.size() != concrete.n + 1)
    throw FieldMismatch("gamma vector must have n+1 entries");
  require_element(concrete, a.alpha);
  require_element(concrete, a.beta);
  for (std::uint32_t g : a.gamma) require_element(concrete, g);
  if (a.alpha == 0) return false;
  const Field& field = *concrete.field;
  const UPoly f = curve_rhs(concrete);
  const UPoly g = gamma_poly(field, a);
  return g * g + g == affine_compose(field, f, a.alpha, a.beta) + f;
}

Automorphism compose(const CurveSpec& concrete, const Automorphism& a, const Automorphism& b) {
  if (!is_automorphism(concrete, a) || !is_automorphism(concrete, b))
    throw NotAnAutomorphism("compose requires two automorphisms of the curve");
  const Field& field = *concrete.field;
  Automorphism r;
  r.alpha = field.mul(a.alpha, b.alpha);
  r.beta = field.add(field.mul(a.alpha, b.beta), a.beta);
  const UPoly g = gamma_poly(field, b) + affine_compose(field, gamma_poly(field, a), b.alpha, b.beta);
  if (g.degree() > static_cast<int>(concrete.n))
    throw NotAnAutomorphism("composite y-offset degree exceeds n");
  r.gamma.assign(concrete.n + 1, 0);
  for (int k = 0; k <= g.degree(); ++k)
    r.gamma[static_cast<unsigned>(k)] = g.coeff(static_cast<unsigned>(k));
  return r;
}

Automorphism inverse(const CurveSpec& concrete, const Automorphism& a) {
  if (!is_automorphism(concrete, a))
    throw NotAnAutomorphism("inverse requires an automorphism of the curve");
  const Field& field = *concrete.field;
  Automorphism r;
  r.alpha = field.inv(a.alpha);
  r.beta = field.mul(r.alpha, a.beta);
  const UPoly g = affine_compose(field, gamma_poly(field, a), r.alpha, r.beta);
  r.gamma.assign(concrete.n + 1, 0);
  for (int k = 0; k <= g.degree(); ++k)
    r.gamma[static_cast<unsigned>(k)] = g.coeff(static_cast<unsigned>(k));
  return r;
}

}  // namespace asaut::curve
