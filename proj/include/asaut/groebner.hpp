#pragma once
// Buchberger engine over GF(2): S-polynomials, normal forms, the
// Gebauer-Moeller pair update, and reduction to the unique reduced basis.
// All routines honor hard work limits and throw LimitExceeded (with a
// progress snapshot) instead of running away.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asaut/mpoly.hpp"

namespace asaut::groebner {

using mpoly::MPoly;

struct Limits {
  std::size_t max_pairs = 1000000;       // S-pairs processed
  std::size_t max_basis_size = 10000;    // intermediate basis elements
  std::size_t max_poly_terms = 1000000;  // terms in any intermediate polynomial
  // Invoked every few thousand processed S-pairs with (pairs processed, basis
  // size, pending pairs) so long runs can report liveness; null disables.
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

class LimitExceeded : public std::runtime_error {
public:
  LimitExceeded(const std::string& which, std::size_t pairs, std::size_t basis,
                std::size_t terms);
  std::size_t pairs_processed() const { return pairs_; }
  std::size_t basis_size() const { return basis_; }
  std::size_t largest_poly_terms() const { return terms_; }

private:
  std::size_t pairs_, basis_, terms_;
};

// lcm(lm f, lm g)/lm(f) * f + lcm(lm f, lm g)/lm(g) * g (leading coefficients
// are 1 in GF(2)).
MPoly s_polynomial(const MPoly& f, const MPoly& g);

// Full remainder of f modulo basis: top term reduced by the first (lowest
// index) element whose leading monomial divides it, irreducible terms move to
// the remainder.  Deterministic for a fixed basis sequence.
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis,
                  const Limits* limits = nullptr);

// Buchberger with sugar selection, Gebauer-Moeller pair pruning, and the
// product criterion.  Returns a (non-reduced) Groebner basis of the input
// ideal.
std::vector<MPoly> buchberger(const std::vector<MPoly>& generators, const Limits& limits = {});

// Minimal + interreduced form, sorted by decreasing leading monomial.  Input
// must already be a Groebner basis; the result is the unique reduced basis.
std::vector<MPoly> reduce_basis(std::vector<MPoly> basis, const Limits* limits = nullptr);

// buchberger followed by reduce_basis.
std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const Limits& limits = {});

// Ideal membership via normal form against a Groebner basis.
bool is_member(const MPoly& f, const std::vector<MPoly>& groebner);

// Mutual membership; both arguments must be Groebner bases of their ideals.
bool same_ideal(const std::vector<MPoly>& gb_a, const std::vector<MPoly>& gb_b);

}  // namespace asaut::groebner
