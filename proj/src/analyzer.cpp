#include "asaut/analyzer.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "asaut/goldens.hpp"

namespace asaut::analyzer {

namespace {

using curve::CurveSpec;
using ff2::UPoly;
using groebner::Limits;
using mpoly::Monomial;
using mpoly::VarSet;

std::map<unsigned, unsigned> resolve_presets(const VarSet* vs, const Presets& presets) {
  std::map<unsigned, unsigned> consts;
  for (const auto& [name, value] : presets) {
    const int idx = vs->index_of(name);
    if (idx < 0 || static_cast<unsigned>(idx) < vs->param(0))
      throw std::invalid_argument("preset is not a family parameter: " + name);
    if (value > 1) throw std::invalid_argument("presets must be GF(2) constants: " + name);
    consts[static_cast<unsigned>(idx)] = value;
  }
  return consts;
}

IdealBasis build_ideal(curve::ConditionSystem sys, const Presets& presets, bool unipotent,
                       const Limits& limits) {
  const VarSet* vs = sys.varset.get();
  std::map<unsigned, unsigned> consts = resolve_presets(vs, presets);
  if (unipotent) consts[vs->alpha()] = 1;

  std::vector<MPoly> gens;
  gens.reserve(sys.generators.size() + 1);
  if (unipotent) gens.push_back(mpoly::parse(vs, sys.order, "alpha + 1"));
  for (const MPoly& f : sys.generators) {
    MPoly g = consts.empty() ? f : mpoly::substitute_consts(f, consts);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }

  IdealBasis out;
  out.n = sys.n;
  out.varset = sys.varset;
  out.order = sys.order;
  out.presets = presets;
  out.elements = groebner::groebner_basis(gens, limits);
  return out;
}

// Rebinds a polynomial onto an equivalent ring instance.  Extraction products
// are read off short-lived bases; rebinding them onto the varset the caller
// actually keeps stops them from dangling once the basis goes out of scope.
MPoly onto(const MPoly& f, const std::shared_ptr<const VarSet>& vs) {
  if (f.varset() == vs.get()) return f;
  if (!(*f.varset() == *vs)) throw std::logic_error("cannot rebind across different rings");
  return MPoly(vs.get(), f.order(), f.terms());
}

bool mentions_transform_vars(const MPoly& f, const VarSet* vs, bool* has_alpha, bool* has_beta) {
  *has_alpha = f.contains_var(vs->alpha());
  *has_beta = f.contains_var(vs->beta());
  for (unsigned j = 0; j <= vs->curve_n(); ++j)
    if (f.contains_var(vs->gamma(j))) return true;
  return false;
}

// Iterated square root: strips the largest 2-power from a perfect-power
// polynomial, so a_1^2, c_3^4, c^32 all collapse to their base.
MPoly radical2(MPoly p) {
  while (!p.is_zero()) {
    bool all_even = true;
    for (const Monomial& m : p.terms()) {
      for (unsigned i = 0; i < Monomial::kMaxVars && all_even; ++i)
        if (m.exp(i) % 2 != 0) all_even = false;
      if (!all_even) break;
    }
    if (!all_even || p.is_one()) break;
    std::vector<Monomial> halved;
    halved.reserve(p.term_count());
    for (const Monomial& m : p.terms()) {
      Monomial h;
      for (unsigned i = 0; i < Monomial::kMaxVars; ++i)
        h.e[i] = static_cast<std::uint16_t>(m.exp(i) / 2);
      h.deg = m.deg / 2;
      halved.push_back(h);
    }
    p = MPoly(p.varset(), p.order(), std::move(halved));
  }
  return p;
}

// The recognized unipotent relation shapes.  `cofactor` is meaningful for
// linear and quadratic, `count_log2` for additive.
enum class RelShape { bare, pure_power, linear, additive, quadratic };

struct RelView {
  RelShape shape;
  MPoly cofactor;
  unsigned count_log2 = 0;
};

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

unsigned log2_exact(std::uint64_t v) {
  unsigned l = 0;
  while (v > 1) {
    v >>= 1;
    ++l;
  }
  return l;
}

std::optional<RelView> view_relation(const MPoly& S) {
  const VarSet* vs = S.varset();
  const unsigned beta = vs->beta();
  if (S.is_zero()) return std::nullopt;

  if (S.term_count() == 1) {
    const Monomial& m = S.terms()[0];
    const unsigned e = m.exp(beta);
    if (e == 0) return std::nullopt;
    if (m.deg == e)
      return RelView{e == 1 ? RelShape::bare : RelShape::pure_power, MPoly(), 0};
    // beta^e times a coefficient monomial: beta is killed wherever the
    // cofactor is nonzero, which is exactly the linear decision.
    return RelView{RelShape::linear, MPoly(vs, S.order(), {m / Monomial::var(beta, e)}), 0};
  }

  bool all_linear = true;
  for (const Monomial& m : S.terms())
    if (m.exp(beta) != 1) all_linear = false;
  if (all_linear) {
    std::vector<Monomial> stripped;
    stripped.reserve(S.term_count());
    for (const Monomial& m : S.terms()) stripped.push_back(m / Monomial::var(beta));
    return RelView{RelShape::linear, MPoly(vs, S.order(), std::move(stripped)), 0};
  }

  const unsigned emax = S.degree_in(beta);
  const Monomial& lead = S.terms()[0];
  if (beta_derivative_is_one(S) && lead.exp(beta) == emax && lead.exp(beta) == lead.deg &&
      is_power_of_two(emax) && emax >= 2)
    return RelView{RelShape::additive, MPoly(), log2_exact(emax)};

  // beta^2 + C*beta with the square a lone pure term.
  if (emax == 2) {
    std::vector<Monomial> tail;
    bool ok = true;
    for (const Monomial& m : S.terms()) {
      if (m.exp(beta) == 2) {
        if (m.deg != 2) ok = false;
      } else if (m.exp(beta) == 1) {
        tail.push_back(m / Monomial::var(beta));
      } else {
        ok = false;
      }
    }
    if (ok && !tail.empty())
      return RelView{RelShape::quadratic, MPoly(vs, S.order(), std::move(tail)), 0};
  }
  return std::nullopt;
}

AnalysisData analyze_pair(const IdealBasis& full, const IdealBasis& unipotent, bool heuristic) {
  AnalysisData d;
  d.n = full.n;
  d.varset = full.varset;
  d.heuristic = heuristic;
  d.alpha = extract_alpha_constraints(full);
  if (full.order != Order::lex)
    for (AlphaConstraint& c : d.alpha.constraints) c.cofactor = c.cofactor.with_order(Order::lex);
  d.beta_relations = extract_beta_polynomial(unipotent);
  for (MPoly& r : d.beta_relations) r = onto(r, d.varset);
  return d;
}

void merge_constraints(AlphaExtraction& into, const AlphaExtraction& from) {
  if (into.root_exponent == 0) into.root_exponent = from.root_exponent;
  if (from.root_exponent != 0 && from.root_exponent != into.root_exponent)
    throw PatternMiss("alpha root exponent disagrees between runs", {});
  for (const AlphaConstraint& c : from.constraints) {
    bool present = false;
    for (const AlphaConstraint& have : into.constraints)
      if (have.d == c.d && have.cofactor == c.cofactor) present = true;
    if (!present) into.constraints.push_back(c);
  }
}

// Runs a published family workflow: every alpha leg, constraints merged, plus
// the unpreset unipotent leg.
AnalysisData run_family(const goldens::FamilySpec& fam, const Limits& limits) {
  AnalysisData d;
  d.n = fam.n;
  AlphaExtraction merged;
  for (const goldens::AlphaLeg& leg : fam.alpha_legs) {
    IdealBasis basis = fam.sz_genus >= 0
                           ? automorphism_ideal(curve::scholten_zhu_family(
                                                    static_cast<unsigned>(fam.sz_genus)),
                                                leg.order, leg.presets, limits)
                           : automorphism_ideal(fam.n, leg.order, leg.presets, limits);
    if (!d.varset) d.varset = basis.varset;
    AlphaExtraction e = extract_alpha_constraints(basis);
    for (AlphaConstraint& c : e.constraints) {
      if (leg.order != Order::lex) c.cofactor = c.cofactor.with_order(Order::lex);
      c.cofactor = onto(c.cofactor, d.varset);
    }
    merge_constraints(merged, e);
  }
  d.alpha = merged;
  IdealBasis uni = fam.sz_genus >= 0
                       ? unipotent_ideal(curve::scholten_zhu_family(
                                             static_cast<unsigned>(fam.sz_genus)),
                                         {}, limits)
                       : unipotent_ideal(fam.n, {}, limits);
  if (!d.varset) d.varset = uni.varset;
  d.beta_relations = extract_beta_polynomial(uni);
  for (MPoly& r : d.beta_relations) r = onto(r, d.varset);
  return d;
}

const goldens::FamilySpec& family_by_label(const std::vector<goldens::FamilySpec>& fams,
                                           const std::string& label) {
  for (const goldens::FamilySpec& f : fams)
    if (f.label == label) return f;
  throw std::logic_error("missing family " + label);
}

std::string alias_for(unsigned n, unsigned l, unsigned r) {
  return (n == 1 && l == 2 && r == 3) ? "A_4" : "";
}

}  // namespace

IdealBasis automorphism_ideal(const CurveSpec& spec, Order order, const Presets& presets,
                              const Limits& limits) {
  return build_ideal(curve::condition_system(spec, order), presets, false, limits);
}

IdealBasis automorphism_ideal(unsigned n, Order order, const Presets& presets,
                              const Limits& limits) {
  return build_ideal(curve::condition_system(n, order), presets, false, limits);
}

IdealBasis unipotent_ideal(const CurveSpec& spec, const Presets& presets, const Limits& limits) {
  return build_ideal(curve::condition_system(spec, Order::lex), presets, true, limits);
}

IdealBasis unipotent_ideal(unsigned n, const Presets& presets, const Limits& limits) {
  return build_ideal(curve::condition_system(n, Order::lex), presets, true, limits);
}

AlphaExtraction extract_alpha_constraints(const IdealBasis& basis) {
  const VarSet* vs = basis.varset.get();
  const unsigned alpha = vs->alpha();
  AlphaExtraction out;
  std::vector<MPoly> missed;

  for (const MPoly& f : basis.elements) {
    bool has_alpha = false, has_beta = false;
    const bool has_gamma = mentions_transform_vars(f, vs, &has_alpha, &has_beta);
    if (!has_alpha || has_beta || has_gamma) continue;

    // The root-of-unity element alpha^k + 1.
    if (f.term_count() == 2 && f.terms()[1].is_one()) {
      const Monomial& m = f.terms()[0];
      if (m.exp(alpha) == m.deg) {
        out.root_exponent = m.exp(alpha);
        continue;
      }
    }

    // Split terms by alpha-divisibility; cofactor*(alpha^d + 1) has the two
    // halves equal after dividing the alpha side by alpha^d.
    unsigned d = 0;
    bool uniform = true;
    std::vector<Monomial> with_alpha, without;
    for (const Monomial& m : f.terms()) {
      const unsigned e = m.exp(alpha);
      if (e == 0) {
        without.push_back(m);
        continue;
      }
      if (d == 0) d = e;
      if (e != d) {
        uniform = false;
        break;
      }
      with_alpha.push_back(m / Monomial::var(alpha, e));
    }
    if (!uniform || with_alpha.empty() || without.empty()) {
      missed.push_back(f);
      continue;
    }
    MPoly halved(vs, basis.order, std::move(with_alpha));
    MPoly rest(vs, basis.order, std::move(without));
    if (halved == rest)
      out.constraints.push_back({std::move(rest), d});
    else
      missed.push_back(f);
  }

  if (!missed.empty())
    throw PatternMiss("basis elements outside the cofactor*(alpha^d + 1) shape", missed);
  return out;
}

std::vector<MPoly> extract_beta_polynomial(const IdealBasis& unipotent_basis) {
  const VarSet* vs = unipotent_basis.varset.get();
  std::vector<MPoly> out;
  for (const MPoly& f : unipotent_basis.elements) {
    bool has_alpha = false, has_beta = false;
    const bool has_gamma = mentions_transform_vars(f, vs, &has_alpha, &has_beta);
    if (has_beta && !has_alpha && !has_gamma) out.push_back(f);
  }
  if (out.empty())
    throw PatternMiss("no beta-relations present in the basis", {});
  return out;
}

bool beta_derivative_is_one(const MPoly& relation) {
  return mpoly::formal_derivative(relation, relation.varset()->beta()).is_one();
}

std::string ra_structure_name(unsigned l, unsigned r) {
  if (l == 0 && r == 1) return "Z_1";
  const std::string u = l == 1 ? "Z_2" : "Z_2^" + std::to_string(l);
  if (l == 0) return "Z_" + std::to_string(r);
  if (r == 1) return u;
  return u + " x| Z_" + std::to_string(r);
}

AnalysisData analyze_family(unsigned n, Order order, const Limits& limits) {
  IdealBasis full = automorphism_ideal(n, order, {}, limits);
  IdealBasis uni = unipotent_ideal(n, {}, limits);
  return analyze_pair(full, uni, n >= 7);
}

AnalysisData analyze_family(const CurveSpec& spec, Order order, const Limits& limits) {
  IdealBasis full = automorphism_ideal(spec, order, {}, limits);
  IdealBasis uni = unipotent_ideal(spec, {}, limits);
  return analyze_pair(full, uni, false);
}

AnalysisData analyze_n6(const Limits& limits) {
  return run_family(family_by_label(goldens::theorem2_families(), "n=6"), limits);
}

const AnalysisData& n6_analysis() {
  static const AnalysisData data = [] {
    AnalysisData d;
    d.n = 6;
    auto vs = std::make_shared<VarSet>(VarSet::curve(6));
    d.varset = vs;
    d.alpha.root_exponent = 13;
    const auto add = [&](const char* text, unsigned dd) {
      d.alpha.constraints.push_back({mpoly::parse(vs.get(), Order::lex, text), dd});
    };
    add("a_5", 1);
    add("a_3", 1);
    add("a_4^4 + a_2^2", 1);
    add("a_4 + a_1^16", 1);
    add("a_4^24 + a_4^4*a_1^8 + a_4*a_1^4 + a_0^8", 1);
    d.beta_relations = {
        goldens::parse_beta_relation(vs.get(), Order::lex,
                                     "beta^2 + beta*a_3^2*a_5 + beta*a_5^7"),
        goldens::parse_beta_relation(vs.get(), Order::lex, goldens::t_beta_token()),
        goldens::parse_beta_relation(vs.get(), Order::lex,
                                     "beta*a_3^4*a_5 + beta*a_5^13 + beta")};
    return d;
  }();
  return data;
}

GroupReport classify_at(const AnalysisData& data, const Field& field,
                        const std::vector<std::uint32_t>& point) {
  const VarSet* vs = data.varset.get();
  const unsigned modulus = 2 * data.n + 1;

  GroupReport rep;
  rep.n = data.n;
  rep.varset = data.varset;
  rep.heuristic = data.heuristic;

  unsigned r = data.alpha.root_exponent != 0 ? data.alpha.root_exponent : modulus;
  for (const AlphaConstraint& c : data.alpha.constraints) {
    const bool vanishes = mpoly::evaluate(c.cofactor, field, point) == 0;
    rep.conditions.emplace_back(c.cofactor, vanishes);
    if (!vanishes) r = std::gcd(r, c.d);
  }
  rep.r = r;

  // Report the relation cofactors too (the paper's n=6 stratum conditions),
  // skipping ones already present from the alpha side.
  const auto add_condition = [&](const MPoly& p) {
    if (p.is_zero() || p.is_one()) return;
    for (const auto& [have, st] : rep.conditions)
      if (have == p) return;
    rep.conditions.emplace_back(p, mpoly::evaluate(p, field, point) == 0);
  };
  for (const MPoly& rel : data.beta_relations) {
    const std::optional<RelView> v = view_relation(rel);
    if (v && (v->shape == RelShape::linear || v->shape == RelShape::quadratic))
      add_condition(v->cofactor);
  }

  UPoly g = UPoly::zero(&field);
  for (const MPoly& rel : data.beta_relations) {
    UPoly u = mpoly::specialize(rel, field, vs->beta(), point);
    if (u.is_zero()) continue;
    g = g.is_zero() ? u : UPoly::gcd(g, u);
  }
  if (g.is_zero())
    throw SquarefreenessUnknown("every unipotent relation vanishes at this point");
  if (g.derivative().is_zero())
    throw SquarefreenessUnknown("specialized beta-polynomial has vanishing derivative");
  const unsigned count = UPoly::distinct_root_count(g);
  if (!is_power_of_two(count))
    throw SquarefreenessUnknown("unipotent root count is not a power of two");
  rep.l = log2_exact(count);

  rep.ra_structure = ra_structure_name(rep.l, rep.r);
  rep.alias = alias_for(rep.n, rep.l, rep.r);
  rep.aut_order = (std::uint64_t{1} << (rep.l + 1)) * rep.r;
  return rep;
}

GroupReport classify(unsigned n, const Field& field,
                     const std::map<unsigned, std::uint32_t>& coeffs, const Limits& limits) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const AnalysisData* data = nullptr;
  AnalysisData live;
  if (n == 6) {
    data = &n6_analysis();
  } else {
    live = analyze_family(n, Order::lex, limits);
    data = &live;
  }
  const VarSet* vs = data->varset.get();
  std::vector<std::uint32_t> point(vs->size(), 0);
  for (const auto& [i, v] : coeffs) {
    if (i >= n) throw std::invalid_argument("coefficient index " + std::to_string(i) +
                                            " out of range for n=" + std::to_string(n));
    if (!field.contains(v)) throw std::invalid_argument("coefficient value outside the field");
    point[vs->param(i)] = v;
  }
  return classify_at(*data, field, point);
}

GroupReport classify_sz(unsigned genus, const Field& field,
                        const std::map<std::string, std::uint32_t>& coeffs,
                        const Limits& limits) {
  const CurveSpec spec = curve::scholten_zhu_family(genus);
  const AnalysisData data = analyze_family(spec, Order::lex, limits);
  const VarSet* vs = data.varset.get();
  std::vector<std::uint32_t> point(vs->size(), 0);
  for (const auto& [name, v] : coeffs) {
    const int idx = vs->index_of(name);
    if (idx < 0 || static_cast<unsigned>(idx) < vs->param(0))
      throw std::invalid_argument("unknown family parameter: " + name);
    if (!field.contains(v)) throw std::invalid_argument("coefficient value outside the field");
    point[static_cast<unsigned>(idx)] = v;
  }
  return classify_at(data, field, point);
}

MPoly t_polynomial() {
  static const MPoly t =
      mpoly::parse(n6_analysis().varset.get(), Order::lex, goldens::t_text());
  return t;
}

namespace {

// --- theorem_table internals -----------------------------------------------

struct FamilyRun {
  AnalysisData data;
  std::vector<MPoly> cond_polys;
  std::vector<std::vector<bool>> divides;  // divides[k][j]: cond k | cond j
};

std::string join_mpolys(const std::vector<MPoly>& v) {
  std::string out;
  for (const MPoly& p : v) {
    if (!out.empty()) out += "; ";
    out += mpoly::to_string(p);
  }
  return out;
}

// Compares the extracted pipeline products against the family's golden
// conditions and beta-relations; returns a diagnostic or "" on success.
std::string check_extraction(const goldens::FamilySpec& fam, const FamilyRun& run) {
  const VarSet* vs = run.data.varset.get();
  if (run.data.alpha.root_exponent != 2 * fam.n + 1)
    return "alpha root exponent " + std::to_string(run.data.alpha.root_exponent) +
           ", expected " + std::to_string(2 * fam.n + 1);

  // Beta-relations must match the golden set exactly (order-insensitively).
  std::vector<std::string> got, want;
  for (const MPoly& r : run.data.beta_relations) got.push_back(mpoly::to_string(r));
  for (const std::string& text : fam.beta_relations)
    want.push_back(mpoly::to_string(goldens::parse_beta_relation(vs, Order::lex, text)));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want)
    return "unipotent relations differ from the published set";

  // Every extracted alpha constraint must match a golden condition with the
  // same exponent d, up to an even power of the cofactor; every alpha-side
  // golden condition must be hit.
  std::vector<bool> hit(fam.conditions.size(), false);
  for (const AlphaConstraint& c : run.data.alpha.constraints) {
    const MPoly rad = radical2(c.cofactor);
    bool matched = false;
    for (std::size_t j = 0; j < fam.conditions.size(); ++j) {
      if (fam.conditions[j].alpha_d < 0) continue;
      if (static_cast<unsigned>(fam.conditions[j].alpha_d) != c.d) continue;
      if (radical2(run.cond_polys[j]) == rad) {
        hit[j] = true;
        matched = true;
      }
    }
    if (!matched)
      return "unexpected alpha constraint " + mpoly::to_string(c.cofactor) +
             " (alpha^" + std::to_string(c.d) + " + 1)";
  }
  for (std::size_t j = 0; j < fam.conditions.size(); ++j)
    if (fam.conditions[j].alpha_d >= 0 && !hit[j])
      return "missing alpha constraint for condition " + fam.conditions[j].poly;

  // Unipotent-side golden conditions must appear as relation cofactors.
  for (std::size_t j = 0; j < fam.conditions.size(); ++j) {
    if (fam.conditions[j].alpha_d >= 0) continue;
    bool found = false;
    for (const MPoly& rel : run.data.beta_relations) {
      const std::optional<RelView> v = view_relation(rel);
      if (v && (v->shape == RelShape::linear || v->shape == RelShape::quadratic) &&
          v->cofactor == run.cond_polys[j])
        found = true;
    }
    if (!found)
      return "condition " + fam.conditions[j].poly + " not among the relation cofactors";
  }
  return "";
}

// Mark vector entries: -1 free, 0 forced zero, 1 forced nonzero.
// Returns false when the combination is contradictory.
bool propagate_marks(const FamilyRun& run, std::vector<int>& mark) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < mark.size(); ++j) {
      for (std::size_t k = 0; k < mark.size(); ++k) {
        if (j == k || !run.divides[k][j]) continue;
        // cond k divides cond j: j nonzero forces k nonzero, k zero forces
        // j zero.
        if (mark[j] == 1 && mark[k] != 1) {
          if (mark[k] == 0) return false;
          mark[k] = 1;
          changed = true;
        }
        if (mark[k] == 0 && mark[j] != 0) {
          if (mark[j] == 1) return false;
          mark[j] = 0;
          changed = true;
        }
      }
    }
  }
  return true;
}

struct RowValue {
  unsigned r = 1;
  unsigned l = 0;
};

// Evaluates the row's (r, l) under one complete choice of marks; returns a
// diagnostic when the published conditions do not pin the structure down.
std::string eval_marks(const goldens::FamilySpec& fam, const FamilyRun& run,
                       const std::vector<int>& mark, RowValue& out) {
  const unsigned modulus = 2 * fam.n + 1;

  // r: the gcd rule must give the same answer whether the unmarked
  // conditions vanish or not.
  unsigned guaranteed = modulus, possible = modulus;
  for (std::size_t j = 0; j < fam.conditions.size(); ++j) {
    if (fam.conditions[j].alpha_d < 0) continue;
    const unsigned d = static_cast<unsigned>(fam.conditions[j].alpha_d);
    if (mark[j] == 1) guaranteed = std::gcd(guaranteed, d);
    if (mark[j] != 0) possible = std::gcd(possible, d);
  }
  if (guaranteed != possible)
    return "conditions leave #Im rho between " + std::to_string(possible) + " and " +
           std::to_string(guaranteed);
  out.r = guaranteed;

  // l: substitute the single-variable zero conditions, then read the shapes.
  std::map<unsigned, unsigned> zeros;
  for (std::size_t j = 0; j < fam.conditions.size(); ++j) {
    const MPoly& p = run.cond_polys[j];
    if (mark[j] == 0 && p.term_count() == 1 && p.terms()[0].deg == 1) {
      for (unsigned i = 0; i < Monomial::kMaxVars; ++i)
        if (p.terms()[0].exp(i) == 1) zeros[i] = 0;
    }
  }

  bool forced_trivial = false, undetermined = false;
  std::optional<unsigned> count;
  for (const MPoly& rel : run.data.beta_relations) {
    const MPoly s = zeros.empty() ? rel : mpoly::substitute_consts(rel, zeros);
    if (s.is_zero()) continue;
    const std::optional<RelView> v = view_relation(s);
    if (!v) return "unrecognized relation shape " + mpoly::to_string(s);

    const auto mark_of = [&](const MPoly& cof) {
      for (std::size_t j = 0; j < run.cond_polys.size(); ++j)
        if (run.cond_polys[j] == cof) return mark[j];
      return -1;
    };
    switch (v->shape) {
      case RelShape::bare:
      case RelShape::pure_power:
        forced_trivial = true;
        break;
      case RelShape::linear: {
        const int m = mark_of(v->cofactor);
        if (m == 1)
          forced_trivial = true;
        else if (m != 0)
          undetermined = true;
        break;
      }
      case RelShape::additive:
        if (count && *count != v->count_log2)
          return "additive relations disagree on the root count";
        count = v->count_log2;
        break;
      case RelShape::quadratic: {
        const int m = mark_of(v->cofactor);
        if (m == 1) {
          if (count && *count != 1) return "relations disagree on the root count";
          count = 1;
        } else if (m == 0) {
          forced_trivial = true;
        } else {
          undetermined = true;
        }
        break;
      }
    }
  }
  if (forced_trivial) {
    out.l = 0;
    return "";
  }
  if (count && !undetermined) {
    out.l = *count;
    return "";
  }
  return "conditions do not determine the unipotent part";
}

// All disjunct choices of the row must agree on (r, l).
std::string eval_row(const goldens::FamilySpec& fam, const FamilyRun& run,
                     const goldens::RowSpec& row, RowValue& out) {
  std::vector<std::size_t> choice(row.groups.size(), 0);
  bool have_value = false;
  while (true) {
    std::vector<int> mark(fam.conditions.size(), -1);
    bool consistent = true;
    for (std::size_t g = 0; g < row.groups.size() && consistent; ++g) {
      const goldens::RowLiteral& lit = row.groups[g][choice[g]];
      const int want = lit.nonzero ? 1 : 0;
      if (mark[lit.condition] != -1 && mark[lit.condition] != want)
        consistent = false;
      else
        mark[lit.condition] = want;
    }
    if (consistent) consistent = propagate_marks(run, mark);
    if (consistent) {
      RowValue v;
      const std::string err = eval_marks(fam, run, mark, v);
      if (!err.empty()) return err;
      if (have_value && (v.r != out.r || v.l != out.l))
        return "disjunct choices disagree on the structure";
      out = v;
      have_value = true;
    }
    // Next cartesian choice.
    std::size_t g = 0;
    while (g < choice.size() && ++choice[g] == row.groups[g].size()) {
      choice[g] = 0;
      ++g;
    }
    if (g == choice.size()) break;
  }
  if (!have_value) return "row conditions are contradictory";
  return "";
}

std::string render_conditions(const goldens::FamilySpec& fam, const goldens::RowSpec& row,
                              std::vector<std::string>& out) {
  for (const auto& group : row.groups) {
    std::string text;
    for (const goldens::RowLiteral& lit : group) {
      if (!text.empty()) text += " or ";
      const auto ab = fam.abbrev.find(lit.condition);
      text += (ab != fam.abbrev.end() ? ab->second : fam.conditions[lit.condition].poly);
      text += lit.nonzero ? " != 0" : " = 0";
    }
    out.push_back(std::move(text));
  }
  return "";
}

}  // namespace

Table theorem_table(unsigned which, const Limits& limits) {
  if (which != 2 && which != 3) throw std::invalid_argument("no such table");
  const std::vector<goldens::FamilySpec>& fams =
      which == 2 ? goldens::theorem2_families() : goldens::theorem3_families();

  Table table;
  table.which = which;
  table.ok = true;

  for (const goldens::FamilySpec& fam : fams) {
    std::string family_error;
    bool family_limit = false;
    FamilyRun run;
    try {
      run.data = run_family(fam, limits);
      const VarSet* vs = run.data.varset.get();
      for (const goldens::ConditionSpec& c : fam.conditions)
        run.cond_polys.push_back(mpoly::parse(vs, Order::lex, c.poly));
      run.divides.assign(run.cond_polys.size(),
                         std::vector<bool>(run.cond_polys.size(), false));
      for (std::size_t k = 0; k < run.cond_polys.size(); ++k)
        for (std::size_t j = 0; j < run.cond_polys.size(); ++j)
          if (k != j)
            run.divides[k][j] =
                groebner::normal_form(run.cond_polys[j], {run.cond_polys[k]}).is_zero();
      family_error = check_extraction(fam, run);
    } catch (const groebner::LimitExceeded& e) {
      family_error = std::string("limit exceeded: ") + e.what();
      family_limit = true;
    } catch (const PatternMiss& e) {
      family_error = std::string("pattern miss: ") + e.what();
      if (!e.unmatched().empty()) family_error += " [" + join_mpolys(e.unmatched()) + "]";
    }

    for (const goldens::RowSpec& rowspec : fam.rows) {
      TableRow row;
      row.label = fam.label;
      render_conditions(fam, rowspec, row.conditions);
      if (family_error.empty()) {
        RowValue v;
        const std::string err = eval_row(fam, run, rowspec, v);
        if (err.empty()) {
          row.structure = ra_structure_name(v.l, v.r);
          row.alias = alias_for(fam.n, v.l, v.r);
          row.aut_order = (std::uint64_t{1} << (v.l + 1)) * v.r;
          if (row.structure != rowspec.structure)
            row.mismatch = "computed " + row.structure + ", published " + rowspec.structure;
          else if (row.aut_order != rowspec.aut_order)
            row.mismatch = "computed order " + std::to_string(row.aut_order) +
                           ", published " + std::to_string(rowspec.aut_order);
          else if (row.alias != rowspec.alias)
            row.mismatch = "computed alias '" + row.alias + "', published '" +
                           rowspec.alias + "'";
        } else {
          row.mismatch = err;
        }
      } else {
        row.mismatch = family_error;
      }
      row.matches_golden = row.mismatch.empty();
      if (!row.matches_golden) table.ok = false;
      if (family_limit) table.limit_hit = true;
      table.rows.push_back(std::move(row));
    }
    for (const auto& [idx, name] : fam.abbrev)
      table.legend.push_back(name + " = " + fam.conditions[idx].poly);
  }
  return table;
}

}  // namespace asaut::analyzer
