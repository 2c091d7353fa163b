#pragma once
// Brute-force cross-check of the symbolic classification: enumerate every
// automorphism of a concrete curve over GF(2^m) by direct gamma-solving,
// decide via a root-counting certificate when the list has provably reached
// its eventual size, and verify the claimed group structure empirically.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "asaut/analyzer.hpp"
#include "asaut/curve.hpp"
#include "asaut/gf2m.hpp"

namespace asaut::oracle {

using curve::Automorphism;
using curve::CurveSpec;

// The field schedule was exhausted without the enumeration count reaching the
// certified eventual value.
class NotStabilized : public std::runtime_error {
public:
  NotStabilized(const std::string& what, std::vector<unsigned> schedule,
                std::vector<std::uint64_t> counts)
      : std::runtime_error(what), schedule_(std::move(schedule)), counts_(std::move(counts)) {}
  const std::vector<unsigned>& schedule() const noexcept { return schedule_; }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

private:
  std::vector<unsigned> schedule_;
  std::vector<std::uint64_t> counts_;
};

// A group axiom or a Theorem-1 structural claim failed on enumerated data;
// the message carries the counterexample.
class StructureViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EnumerationResult {
  unsigned m = 1;  // degree of the enumeration field
  std::shared_ptr<const ff2::Field> field;
  CurveSpec curve;  // concrete, rebound to *field
  std::vector<Automorphism> automorphisms;  // sorted by (alpha, beta, gamma)
  bool stabilized = false;
  std::uint64_t certificate = 0;  // certified eventual count (0 when unknown)
  analyzer::GroupReport report;   // derived from counting alone
};

// All automorphisms over the curve's own field: alpha runs over the roots of
// alpha^{2n+1} = 1, beta over the field; the gammas are solved top-down
// (even-index coefficients by square roots, odd ones linearly, gamma_0 as an
// Artin-Schreier root) and every candidate is re-checked defensively.
EnumerationResult enumerate(const CurveSpec& concrete, unsigned threads = 1);

// The eventual automorphism count over the algebraic closure: for each
// 2n+1-st root of unity alpha, the admissible betas are the distinct roots of
// the per-alpha constraint gcd, and each pair lifts in exactly two ways.
std::uint64_t certified_count(const CurveSpec& base);

// Field degrees worth enumerating over: the degree where all alpha-roots
// exist, the degree m* where every admissible (alpha, beta) is rational, and
// 2*m* (where the gamma_0 trace obstruction provably disappears), capped at
// the supported field sizes.
std::vector<unsigned> default_schedule(const CurveSpec& base);

// Runs enumerate over the schedule (default_schedule when empty) until the
// count reaches certified_count, and marks the result stabilized.  Base
// coefficients may live in any small field; they are re-embedded into each
// extension.  Throws NotStabilized when the schedule is exhausted.
EnumerationResult stabilize(const CurveSpec& base, const std::vector<unsigned>& m_schedule = {},
                            unsigned threads = 1);

// Checks Ker tau = {id, sigma}, U elementary abelian, Im rho cyclic of order
// dividing 2n+1, sigma central, the tau product law (all pairs up to 1000
// elements, 10^5 seeded samples above), and the order formula; returns the
// counting-derived report.  Throws StructureViolation with a counterexample.
analyzer::GroupReport verify_group_structure(const EnumerationResult& res);

struct ClosureCertificate {
  std::size_t elements = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  bool full = false;  // every pair checked, not a sample
};

// Group-axiom sweep over the enumerated list: closure under composition,
// inverses present, associativity on sampled triples.  Full pair table up to
// 2000 elements, seeded samples beyond.
ClosureCertificate composition_table(const EnumerationResult& res);

}  // namespace asaut::oracle
