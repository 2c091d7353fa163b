#pragma once
// The curve family y^2 - y = x(x^{2n} + a_{n-1}x^{2(n-1)} + ... + a_0) in
// characteristic 2: symbolic automorphism conditions (two independent
// constructions), the Scholten-Zhu supersingular catalog, and concrete
// automorphism arithmetic over GF(2^m).

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "asaut/gf2m.hpp"
#include "asaut/mpoly.hpp"

namespace asaut::curve {

using mpoly::MPoly;
using mpoly::Order;
using mpoly::VarSet;

class UnsupportedGenus : public std::runtime_error {
public:
  explicit UnsupportedGenus(unsigned g)
      : std::runtime_error("no curve of this type exists for genus " + std::to_string(g)) {}
};
class FieldMismatch : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class NotAnAutomorphism : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A member of the family.  Symbolic mode (field == nullptr): the a_i are
// expressions in the named family parameters; an empty `params` means every
// a_i is its own free parameter.  Concrete mode (field set): `values[i]`
// holds a_i as a field element.
struct CurveSpec {
  unsigned n = 1;
  // symbolic mode
  std::vector<std::string> params;        // family parameter names
  std::map<unsigned, std::string> images; // i -> expression for a_i; absent = "0"
  // concrete mode
  const ff2::Field* field = nullptr;
  std::vector<std::uint32_t> values;      // a_0..a_{n-1}
};

CurveSpec symbolic_curve(unsigned n);
CurveSpec concrete_curve(const ff2::Field& field, std::vector<std::uint32_t> values);

// Scholten-Zhu supersingular curves, rewritten into the family form.  The
// symbolic variant keeps the catalog's c-parameters; the concrete variant
// substitutes given parameter values.  Genus 3 and 7 rows are "none".
CurveSpec scholten_zhu_family(unsigned genus);
CurveSpec scholten_zhu(unsigned genus, const ff2::Field& field,
                       const std::map<std::string, std::uint32_t>& coeffs);

// The automorphism conditions as an ideal in gamma_n..gamma_0, beta, alpha
// and the family parameters.
struct ConditionSystem {
  unsigned n = 0;
  std::shared_ptr<const VarSet> varset;
  Order order = Order::lex;
  std::vector<MPoly> generators;  // indexed by l = 2n+1 down to 0
};

// x^l coefficient of the transformed right-hand side as the closed formula
// over the plain parameter ring (vs must have param_count() == curve_n()).
MPoly c_coeff(const VarSet* vs, Order o, unsigned l);

// Generators c(l) + target(l), l = 2n+1..0, with target 1 / a_{(l-1)/2} / 0
// for l = 2n+1 / odd / even; family images applied when spec is a family.
ConditionSystem condition_system(const CurveSpec& spec, Order o);
ConditionSystem condition_system(unsigned n, Order o);

// Independent derivation: transform y^2 + y + f(x) literally with coefficient
// vector arithmetic in x (the y-terms cancel) and collect the x-coefficients.
ConditionSystem condition_system_by_substitution(const CurveSpec& spec, Order o);
ConditionSystem condition_system_by_substitution(unsigned n, Order o);

// A coordinate transformation x -> alpha*x + beta, y -> y + sum gamma[j] x^j.
// gamma[j] is the coefficient of x^j (size n+1).
struct Automorphism {
  std::uint32_t alpha = 1;
  std::uint32_t beta = 0;
  std::vector<std::uint32_t> gamma;

  bool operator==(const Automorphism& o) const = default;
};

Automorphism identity(unsigned n);
Automorphism sigma(unsigned n);  // y -> y + 1, the hyperelliptic involution

// f(x) = x^{2n+1} + sum values[i] x^{2i+1} over the curve's field.
ff2::UPoly curve_rhs(const CurveSpec& concrete);
// p(alpha*x + beta) by Horner in the polynomial ring.
ff2::UPoly affine_compose(const ff2::Field& field, const ff2::UPoly& p, std::uint32_t alpha,
                          std::uint32_t beta);

// Defining membership test: alpha != 0 and g(x)^2 + g(x) = f(alpha*x+beta) + f(x)
// where g is the gamma polynomial.
bool is_automorphism(const CurveSpec& concrete, const Automorphism& a);

// a after b (apply b first): x-part (alpha_a*alpha_b, alpha_a*beta_b + beta_a),
// y-offset g_b(x) + g_a(alpha_b*x + beta_b).  Inputs are validated.
Automorphism compose(const CurveSpec& concrete, const Automorphism& a, const Automorphism& b);
Automorphism inverse(const CurveSpec& concrete, const Automorphism& a);

}  // namespace asaut::curve
