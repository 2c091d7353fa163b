#pragma once
// Binary field arithmetic GF(2^m) on bit-packed elements, plus univariate
// polynomial helpers (gcd, squarefree degree, root scan) over such fields.

#include <cstdint>
#include <vector>

namespace asaut::ff2 {

// GF(2^m) with the canonical modulus: the irreducible monic polynomial of
// degree m whose coefficient bits (bit i = coefficient of x^i) form the
// smallest integer.  Elements are std::uint32_t with bit i = coefficient of
// g^i, g the residue of x.  Degrees 1..24 are supported; the element 0/1
// encodings therefore agree across fields and with the CLI serialization.
class Field {
public:
  explicit Field(unsigned degree);

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << m_; }
  std::uint32_t generator() const { return m_ == 1 ? 1u : 2u; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sqr(std::uint32_t a) const { return mul(a, a); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws std::domain_error on 0

  // x -> x^(2^(m-1)), the inverse of squaring; evaluated via a precomputed
  // basis table since squaring is GF(2)-linear.
  std::uint32_t sqrt(std::uint32_t a) const;
  unsigned trace(std::uint32_t a) const;
  std::uint32_t frobenius(std::uint32_t a) const { return sqr(a); }
  // a^(2^k)
  std::uint32_t pow2k(std::uint32_t a, unsigned k) const;

  // Roots of z^2 + z = t: empty when trace(t) = 1, else {z, z+1} with z
  // minimal, solved through the precomputed linear system (z^2+z is linear).
  std::vector<std::uint32_t> artin_schreier_roots(std::uint32_t t) const;

  // Smallest e (necessarily dividing m) with a^(2^e) = a, i.e. the degree of
  // the subfield GF(2^e) generated by a.
  unsigned element_degree(std::uint32_t a) const;

  bool contains(std::uint32_t a) const { return (a >> m_) == 0; }

private:
  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t trace_mask_;                 // trace(a) = parity(a & mask)
  std::vector<std::uint32_t> sqrt_basis_;    // sqrt(g^i)
  std::vector<std::uint32_t> as_basis_;      // solves z^2+z = (image basis i)
  std::vector<std::uint32_t> as_pivot_;      // matching image basis vectors
};

// Univariate polynomial over a shared Field; coefficient i belongs to x^i and
// the representation is normalized (no trailing zero coefficients).
class UPoly {
public:
  UPoly() = default;
  UPoly(const Field* f, std::vector<std::uint32_t> coeffs);
  static UPoly zero(const Field* f) { return UPoly(f, {}); }
  static UPoly constant(const Field* f, std::uint32_t c) { return UPoly(f, {c}); }
  static UPoly monomial(const Field* f, unsigned deg, std::uint32_t c);

  const Field* field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::uint32_t coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : 0u; }
  std::uint32_t leading_coeff() const;
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }

  UPoly monic() const;
  UPoly derivative() const;
  std::uint32_t eval(std::uint32_t x) const;

  static void divmod(const UPoly& num, const UPoly& den, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);  // monic, deterministic
  // x^(2^e) mod p, by e successive squarings mod p
  static UPoly x_pow2_mod(unsigned e, const UPoly& p);

  // Degree of p / gcd(p, p'), the number of distinct roots in the algebraic
  // closure.  Works for any p != 0 without factoring.
  static unsigned distinct_root_count(const UPoly& p);
  // Smallest e <= cap such that all distinct roots of p lie in GF(2^e);
  // returns 0 when no such e exists within the cap.
  static unsigned splitting_degree(const UPoly& p, unsigned cap);

  // All roots in the field itself, by exhaustive evaluation (fields this
  // project scans stay small; cost 2^m evaluations).
  std::vector<std::uint32_t> roots() const;

private:
  void normalize();
  const Field* field_ = nullptr;
  std::vector<std::uint32_t> coeffs_;
};

}  // namespace asaut::ff2
