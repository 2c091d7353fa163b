#include "asaut/gf2m.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace asaut::ff2 {
namespace {

constexpr unsigned kMaxDegree = 24;

int bit_degree(std::uint64_t p) {
  int d = -1;
  while (p) { ++d; p >>= 1; }
  return d;
}

// Remainder of GF(2)[x] division on bit-packed polynomials.
std::uint64_t bit_mod(std::uint64_t num, std::uint64_t den) {
  const int dd = bit_degree(den);
  int dn = bit_degree(num);
  while (dn >= dd) {
    num ^= den << (dn - dd);
    dn = bit_degree(num);
  }
  return num;
}

bool irreducible(std::uint64_t p, unsigned m) {
  for (unsigned d = 1; 2 * d <= m; ++d) {
    for (std::uint64_t div = std::uint64_t{1} << d; div < (std::uint64_t{2} << d); ++div) {
      if (bit_mod(p, div) == 0) return false;
    }
  }
  return true;
}

unsigned parity(std::uint32_t v) { return __builtin_parity(v); }

}  // namespace

Field::Field(unsigned degree) : m_(degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("Field: degree must be in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(degree));
  // Smallest irreducible monic modulus; candidates keep constant term 1 so the
  // residue of x generates a genuine field element (for m = 1 this picks x+1).
  modulus_ = 0;
  for (std::uint32_t cand = (1u << m_) | 1u; cand < (2u << m_); cand += 2) {
    if (irreducible(cand, m_)) { modulus_ = cand; break; }
  }
  if (modulus_ == 0) throw std::logic_error("Field: no irreducible modulus found");

  sqrt_basis_.resize(m_);
  for (unsigned i = 0; i < m_; ++i) sqrt_basis_[i] = pow2k(1u << i, m_ - 1);

  trace_mask_ = 0;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t t = 0, v = 1u << i;
    for (unsigned j = 0; j < m_; ++j) { t ^= v; v = sqr(v); }
    if (t) trace_mask_ |= 1u << i;
  }

  // Row-reduce the linear map z -> z^2 + z so artin_schreier_roots can solve
  // membership in its image in O(m).
  as_pivot_.assign(m_, 0);
  as_basis_.assign(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t v = sqr(1u << i) ^ (1u << i);
    std::uint32_t s = 1u << i;
    for (int b = static_cast<int>(m_) - 1; b >= 0; --b) {
      if (!(v >> b & 1u)) continue;
      if (as_pivot_[b]) { v ^= as_pivot_[b]; s ^= as_basis_[b]; continue; }
      as_pivot_[b] = v;
      as_basis_[b] = s;
      break;
    }
  }
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> m_ & 1u) a ^= modulus_;
  }
  return acc;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t acc = 1, base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
  return pow(a, size() - 2);
}

std::uint32_t Field::pow2k(std::uint32_t a, unsigned k) const {
  for (unsigned i = 0; i < k; ++i) a = sqr(a);
  return a;
}

std::uint32_t Field::sqrt(std::uint32_t a) const {
  std::uint32_t r = 0;
  while (a) {
    const unsigned b = static_cast<unsigned>(__builtin_ctz(a));
    r ^= sqrt_basis_[b];
    a &= a - 1;
  }
  return r;
}

unsigned Field::trace(std::uint32_t a) const { return parity(a & trace_mask_); }

std::vector<std::uint32_t> Field::artin_schreier_roots(std::uint32_t t) const {
  std::uint32_t s = 0;
  for (int b = static_cast<int>(m_) - 1; b >= 0; --b) {
    if (!(t >> b & 1u)) continue;
    if (!as_pivot_[b]) return {};  // trace(t) = 1, no solution
    t ^= as_pivot_[b];
    s ^= as_basis_[b];
  }
  const std::uint32_t z = std::min(s, s ^ 1u);
  return {z, z ^ 1u};
}

unsigned Field::element_degree(std::uint32_t a) const {
  for (unsigned e = 1; e <= m_; ++e) {
    if (m_ % e) continue;
    if (pow2k(a, e) == a) return e;
  }
  return m_;
}

UPoly::UPoly(const Field* f, std::vector<std::uint32_t> coeffs)
    : field_(f), coeffs_(std::move(coeffs)) {
  normalize();
}

UPoly UPoly::monomial(const Field* f, unsigned deg, std::uint32_t c) {
  std::vector<std::uint32_t> v(deg + 1, 0u);
  v[deg] = c;
  return UPoly(f, std::move(v));
}

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t UPoly::leading_coeff() const {
  if (coeffs_.empty()) throw std::domain_error("UPoly: zero polynomial has no leading coeff");
  return coeffs_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<std::uint32_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0u);
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] ^= coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] ^= o.coeffs_[i];
  return UPoly(field_ ? field_ : o.field_, std::move(v));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return zero(field_ ? field_ : o.field_);
  std::vector<std::uint32_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0u);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] ^= field_->mul(coeffs_[i], o.coeffs_[j]);
  }
  return UPoly(field_, std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint32_t lc = leading_coeff();
  if (lc == 1) return *this;
  const std::uint32_t ilc = field_->inv(lc);
  std::vector<std::uint32_t> v(coeffs_);
  for (auto& c : v) c = field_->mul(c, ilc);
  return UPoly(field_, std::move(v));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero(field_);
  std::vector<std::uint32_t> v(coeffs_.size() - 1, 0u);
  for (size_t i = 1; i < coeffs_.size(); i += 2) v[i - 1] = coeffs_[i];
  return UPoly(field_, std::move(v));
}

std::uint32_t UPoly::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = field_->mul(acc, x) ^ coeffs_[i];
  return acc;
}

void UPoly::divmod(const UPoly& num, const UPoly& den, UPoly& q, UPoly& r) {
  if (den.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
  const Field* f = den.field_;
  const std::uint32_t ilc = f->inv(den.leading_coeff());
  std::vector<std::uint32_t> rem = num.coeffs_;
  std::vector<std::uint32_t> quo(
      num.coeffs_.size() >= den.coeffs_.size() ? num.coeffs_.size() - den.coeffs_.size() + 1 : 0,
      0u);
  const size_t dd = den.coeffs_.size() - 1;
  while (true) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    if (rem.size() <= dd) break;
    const size_t shift = rem.size() - 1 - dd;
    const std::uint32_t c = f->mul(rem.back(), ilc);
    quo[shift] ^= c;
    for (size_t i = 0; i <= dd; ++i) rem[shift + i] ^= f->mul(c, den.coeffs_[i]);
  }
  q = UPoly(f, std::move(quo));
  r = UPoly(f, std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::x_pow2_mod(unsigned e, const UPoly& p) {
  if (p.degree() < 1) throw std::domain_error("UPoly::x_pow2_mod: modulus must be nonconstant");
  UPoly q, r;
  divmod(monomial(p.field_, 1, 1u), p, q, r);
  for (unsigned i = 0; i < e; ++i) divmod(r * r, p, q, r);
  return r;
}

namespace {

// p with only even exponents is s(x)^2; recover s by halving exponents and
// taking square roots of the coefficients.
UPoly dehalve(const UPoly& p) {
  const Field* f = p.field();
  std::vector<std::uint32_t> v(p.coeffs().size() / 2 + 1, 0u);
  for (size_t i = 0; i < p.coeffs().size(); i += 2) v[i / 2] = f->sqrt(p.coeffs()[i]);
  return UPoly(f, std::move(v));
}

// Squarefree polynomial with the same root set as p (char-2-safe radical).
UPoly radical(UPoly p) {
  p = p.monic();
  if (p.degree() <= 0) return UPoly::constant(p.field(), 1u);
  UPoly d = p.derivative();
  if (d.is_zero()) return radical(dehalve(p));
  UPoly g = UPoly::gcd(p, d);
  UPoly w, r0;
  UPoly::divmod(p, g, w, r0);
  UPoly r2 = radical(g);
  UPoly cross = UPoly::gcd(w, r2);
  UPoly lcm, r1;
  UPoly::divmod(w * r2, cross, lcm, r1);
  return lcm.monic();
}

}  // namespace

unsigned UPoly::distinct_root_count(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("UPoly::distinct_root_count: zero polynomial");
  return static_cast<unsigned>(radical(p).degree());
}

unsigned UPoly::splitting_degree(const UPoly& p, unsigned cap) {
  const UPoly rad = radical(p);
  if (rad.degree() < 1) return 1;
  UPoly q, frob;
  divmod(monomial(p.field_, 1, 1u), rad, q, frob);
  const UPoly x_mod = frob;
  for (unsigned e = 1; e <= cap; ++e) {
    divmod(frob * frob, rad, q, frob);
    if (frob == x_mod) return e;
  }
  return 0;
}

std::vector<std::uint32_t> UPoly::roots() const {
  std::vector<std::uint32_t> out;
  if (is_zero()) throw std::domain_error("UPoly::roots: zero polynomial");
  for (std::uint64_t x = 0; x < field_->size(); ++x)
    if (eval(static_cast<std::uint32_t>(x)) == 0) out.push_back(static_cast<std::uint32_t>(x));
  return out;
}

}  // namespace asaut::ff2
