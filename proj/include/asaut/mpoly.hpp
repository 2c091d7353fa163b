#pragma once
// Sparse multivariate polynomials over GF(2) in the curve's parameter ring
// gamma_n > ... > gamma_0 > beta > alpha > a_0 > ... > a_{n-1}, with lex and
// graded-reverse-lex monomial orders, a text grammar, and specialization
// helpers into univariate polynomials over GF(2^m).

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asaut/gf2m.hpp"

namespace asaut::mpoly {

// Ordered list of variable names; index 0 carries the highest precedence.
// The curve layout places gamma_n..gamma_0 first, then beta, alpha, and the
// coefficient slots (a_0..a_{n-1} by default, renameable for curve families
// given by other parameters).
class VarSet {
public:
  static VarSet curve(unsigned n);
  static VarSet curve(unsigned n, std::vector<std::string> param_names);

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::string& name(unsigned i) const { return names_[i]; }
  int index_of(const std::string& nm) const;

  unsigned curve_n() const { return n_; }
  unsigned gamma(unsigned j) const { return n_ - j; }
  unsigned beta() const { return n_ + 1; }
  unsigned alpha() const { return n_ + 2; }
  unsigned param(unsigned i) const { return n_ + 3 + i; }
  unsigned param_count() const { return size() - n_ - 3; }
  bool is_gamma(unsigned i) const { return i <= n_; }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

private:
  VarSet(unsigned n, std::vector<std::string> names) : n_(n), names_(std::move(names)) {}
  unsigned n_;
  std::vector<std::string> names_;
};

struct Monomial {
  static constexpr unsigned kMaxVars = 24;
  static constexpr std::uint32_t kMaxTotalDegree = 1u << 20;

  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial var(unsigned idx, unsigned exp = 1);

  bool is_one() const { return deg == 0; }
  unsigned exp(unsigned i) const { return e[i]; }
  bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;  // throws on exponent overflow
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
};

enum class Order { lex, grevlex };

const char* order_name(Order o);
Order order_from_name(const std::string& s);

// Three-way comparison in the given order over the first nvars variables;
// positive when a is the larger monomial.
int cmp(Order o, const Monomial& a, const Monomial& b, unsigned nvars);

// GF(2) polynomial: set of monomials, kept strictly descending in the ring's
// active order so the leading monomial is front().  Addition is symmetric
// difference; squaring doubles exponents termwise (char 2).
class MPoly {
public:
  MPoly() = default;
  MPoly(const VarSet* vs, Order o) : vs_(vs), order_(o) {}
  MPoly(const VarSet* vs, Order o, std::vector<Monomial> terms);

  static MPoly zero(const VarSet* vs, Order o) { return MPoly(vs, o); }
  static MPoly one(const VarSet* vs, Order o) { return MPoly(vs, o, {Monomial::one()}); }
  static MPoly var(const VarSet* vs, Order o, unsigned idx, unsigned exp = 1) {
    return MPoly(vs, o, {Monomial::var(idx, exp)});
  }

  const VarSet* varset() const { return vs_; }
  Order order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Monomial& leading_monomial() const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly times(const Monomial& m) const;
  MPoly square() const;
  MPoly pow(unsigned k) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  bool contains_var(unsigned idx) const;
  unsigned degree_in(unsigned idx) const;
  std::uint32_t total_degree() const;

  // Same monomial set re-sorted under another order.
  MPoly with_order(Order o) const;

private:
  void normalize();  // sort descending, cancel duplicate pairs mod 2
  const VarSet* vs_ = nullptr;
  Order order_ = Order::lex;
  std::vector<Monomial> terms_;
};

// Lucas in characteristic 2: 1 exactly when k's binary digits are a subset of
// n's.
inline unsigned binom_mod2(std::uint64_t n, std::uint64_t k) { return (k & ~n) == 0 ? 1u : 0u; }

// d/d(var) in characteristic 2: odd exponents step down, even ones vanish.
MPoly formal_derivative(const MPoly& f, unsigned var);

// Ring homomorphism defined by images[i] = image of source variable i in the
// target ring; throws when an image is missing for a variable that occurs.
MPoly substitute(const MPoly& f, const VarSet* target, Order order,
                 const std::map<unsigned, MPoly>& images);
// Convenience: same ring, listed variables replaced by the GF(2) constants
// 0/1, everything else fixed.
MPoly substitute_consts(const MPoly& f, const std::map<unsigned, unsigned>& consts);

// Full evaluation at field points (values indexed by variable).
std::uint32_t evaluate(const MPoly& f, const ff2::Field& field,
                       const std::vector<std::uint32_t>& values);

// Specialization to a univariate polynomial in `var`: every other occurring
// variable must have a value.  Values for `var` itself are ignored.
ff2::UPoly specialize(const MPoly& f, const ff2::Field& field, unsigned var,
                      const std::vector<std::uint32_t>& values);

std::string to_string(const Monomial& m, const VarSet& vs);
std::string to_string(const MPoly& f);
MPoly parse(const VarSet* vs, Order o, const std::string& text);

}  // namespace asaut::mpoly
