#include "asaut/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "asaut/mpoly.hpp"

namespace asaut::oracle {

using ff2::Field;
using ff2::UPoly;
using mpoly::binom_mod2;

namespace {

constexpr unsigned kMaxDegree = 24;         // largest supported GF(2^m)
constexpr std::uint64_t kSeed = 0x5EED;     // sampling seed for pair/triple checks
constexpr std::size_t kSampleLimit = 100000;

void require_concrete(const CurveSpec& spec, const char* who) {
  if (!spec.field) throw std::invalid_argument(std::string(who) + ": curve must be concrete");
  if (spec.values.size() != spec.n)
    throw std::invalid_argument(std::string(who) + ": expected " + std::to_string(spec.n) +
                                " coefficient values");
  for (std::uint32_t v : spec.values)
    if (!spec.field->contains(v))
      throw std::invalid_argument(std::string(who) + ": coefficient outside the field");
}

// Multiplicative order of 2 modulo r (r odd); the smallest field degree whose
// multiplicative group contains all r-th roots of unity.
unsigned ord2_mod(unsigned r) {
  if (r == 1) return 1;
  unsigned e = 1;
  std::uint64_t t = 2 % r;
  while (t != 1) {
    t = (t * 2) % r;
    ++e;
  }
  return e;
}

// Coefficients of f(x) = x^{2n+1} + sum values[i] x^{2i+1}, indexed by degree.
std::vector<std::uint32_t> rhs_coeffs(unsigned n, const std::vector<std::uint32_t>& values) {
  std::vector<std::uint32_t> fc(2 * n + 2, 0u);
  fc[2 * n + 1] = 1u;
  for (unsigned i = 0; i < n; ++i) fc[2 * i + 1] = values[i];
  return fc;
}

// rbuf[l] = coefficient of x^l in f(alpha*x + beta); buffers are reused across
// the (alpha, beta) double loop, so no allocation happens per pair.
void transformed_coeffs(const Field& F, const std::vector<std::uint32_t>& fc, std::uint32_t alpha,
                        std::uint32_t beta, std::vector<std::uint32_t>& bpow,
                        std::vector<std::uint32_t>& rbuf) {
  const std::size_t d = fc.size();
  bpow[0] = 1u;
  for (std::size_t i = 1; i < d; ++i) bpow[i] = F.mul(bpow[i - 1], beta);
  std::uint32_t apow = 1u;
  for (std::size_t l = 0; l < d; ++l) {
    std::uint32_t acc = 0u;
    for (std::size_t k = l; k < d; ++k)
      if (fc[k] && binom_mod2(k, l)) acc ^= F.mul(fc[k], bpow[k - l]);
    rbuf[l] = F.mul(apow, acc);
    apow = F.mul(apow, alpha);
  }
}

// Solves the gamma coefficients for one (alpha, beta): even-degree equations
// give gamma_j = sqrt(r[2j] + gamma_{2j}) top-down, the odd-degree equations
// are pure consistency checks.  gamma[0] is left for the Artin-Schreier step.
bool solve_gammas(const Field& F, unsigned n, const std::vector<std::uint32_t>& values,
                  const std::vector<std::uint32_t>& r, std::vector<std::uint32_t>& gamma) {
  for (unsigned j = n; j >= 1; --j) {
    std::uint32_t t = r[2 * j];
    if (2 * j <= n) t ^= gamma[2 * j];
    gamma[j] = F.sqrt(t);
  }
  for (unsigned l = 1; l <= 2 * n - 1; l += 2) {
    const std::uint32_t rhs = r[l] ^ values[(l - 1) / 2];
    const std::uint32_t lhs = l <= n ? gamma[l] : 0u;
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<std::uint32_t> roots_of_unity(const Field& F, unsigned order) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t a = 1; a < F.size(); ++a)
    if (F.pow(static_cast<std::uint32_t>(a), order) == 1u)
      out.push_back(static_cast<std::uint32_t>(a));
  return out;
}

// Composition without the validation overhead of curve::compose; used for the
// bulk pair/triple sweeps.  Cross-checked against curve::compose in tests.
Automorphism lean_compose(const Field& F, unsigned n, const Automorphism& a,
                          const Automorphism& b) {
  Automorphism out;
  out.alpha = F.mul(a.alpha, b.alpha);
  out.beta = F.mul(a.alpha, b.beta) ^ a.beta;
  out.gamma.assign(n + 1, 0u);
  std::uint32_t apow = 1u;
  for (unsigned l = 0; l <= n; ++l) {
    std::uint32_t acc = 0u;
    std::uint32_t bp = 1u;
    for (unsigned j = l; j <= n; ++j) {
      if (binom_mod2(j, l) && a.gamma[j]) acc ^= F.mul(a.gamma[j], bp);
      bp = F.mul(bp, b.beta);
    }
    out.gamma[l] = b.gamma[l] ^ F.mul(apow, acc);
    apow = F.mul(apow, b.alpha);
  }
  return out;
}

Automorphism lean_inverse(const Field& F, unsigned n, const Automorphism& a) {
  Automorphism out;
  out.alpha = F.inv(a.alpha);
  out.beta = F.mul(out.alpha, a.beta);
  out.gamma.assign(n + 1, 0u);
  std::uint32_t apow = 1u;
  for (unsigned l = 0; l <= n; ++l) {
    std::uint32_t acc = 0u;
    std::uint32_t bp = 1u;
    for (unsigned j = l; j <= n; ++j) {
      if (binom_mod2(j, l) && a.gamma[j]) acc ^= F.mul(a.gamma[j], bp);
      bp = F.mul(bp, out.beta);
    }
    out.gamma[l] = F.mul(apow, acc);
    apow = F.mul(apow, out.alpha);
  }
  return out;
}

std::vector<std::uint32_t> key_of(const Automorphism& a) {
  std::vector<std::uint32_t> k;
  k.reserve(2 + a.gamma.size());
  k.push_back(a.alpha);
  k.push_back(a.beta);
  k.insert(k.end(), a.gamma.begin(), a.gamma.end());
  return k;
}

bool exact_log2(std::uint64_t v, unsigned& out) {
  if (v == 0 || (v & (v - 1))) return false;
  out = 0;
  while (v > 1) {
    v >>= 1;
    ++out;
  }
  return true;
}

void fill_report(EnumerationResult& res) {
  std::set<std::uint32_t> alphas, unipotent;
  for (const Automorphism& a : res.automorphisms) {
    alphas.insert(a.alpha);
    if (a.alpha == 1u) unipotent.insert(a.beta);
  }
  analyzer::GroupReport& rep = res.report;
  rep.n = res.curve.n;
  rep.r = static_cast<unsigned>(alphas.size());
  unsigned l = 0;
  exact_log2(unipotent.size(), l);
  rep.l = l;
  rep.ra_structure = analyzer::ra_structure_name(rep.l, rep.r);
  rep.alias = (rep.n == 1 && rep.l == 2 && rep.r == 3) ? "A_4" : "";
  rep.aut_order = res.automorphisms.size();
  rep.conditions.clear();
  rep.heuristic = false;
}

// Per-alpha closure data: the gcd of the beta-constraint polynomials, its
// distinct-root count, and the field degree where those roots become rational.
struct AlphaCert {
  std::uint32_t alpha = 1;
  unsigned distinct_roots = 0;
  unsigned degree = 1;  // lcm(deg(alpha), splitting degree); 0 when unknown
};

struct CertData {
  unsigned m0 = 1;   // lcm(ord_2 mod 2n+1, coefficient field degree)
  unsigned mstar = 1;
  bool mstar_known = true;
  std::uint64_t count = 0;
  std::vector<AlphaCert> per_alpha;
};

UPoly poly_pow2k(UPoly p, unsigned k) {
  for (unsigned i = 0; i < k; ++i) p = p * p;
  return p;
}

// Smallest k >= 1 with j * 2^k > n: the number of squarings after which the
// gamma_j chain leaves the variable range.
unsigned chain_length(unsigned j, unsigned n) {
  unsigned k = 0;
  std::uint64_t x = j;
  while (x <= n) {
    x *= 2;
    ++k;
  }
  return k == 0 ? 1 : k;
}

// Finds the smallest root in `dst` of the canonical modulus of `src`, the
// anchor for re-encoding subfield coefficients.
std::uint32_t subfield_root(const Field& src, const Field& dst) {
  std::vector<std::uint32_t> coeffs(src.degree() + 1, 0u);
  for (unsigned i = 0; i <= src.degree(); ++i) coeffs[i] = (src.modulus() >> i) & 1u;
  const std::vector<std::uint32_t> roots = UPoly(&dst, std::move(coeffs)).roots();
  if (roots.empty())
    throw std::invalid_argument("subfield embedding: modulus has no root in the extension");
  return roots.front();
}

std::uint32_t embed_value(const Field& src, const Field& dst, std::uint32_t rho, std::uint32_t v) {
  std::uint32_t out = 0u, p = 1u;
  for (unsigned i = 0; i < src.degree(); ++i) {
    if ((v >> i) & 1u) out ^= p;
    p = dst.mul(p, rho);
  }
  return out;
}

CurveSpec embed_curve(const CurveSpec& base, const Field& dst) {
  const Field& src = *base.field;
  CurveSpec out = base;
  out.field = &dst;
  if (src.degree() == 1) return out;
  const std::uint32_t rho = subfield_root(src, dst);
  for (std::uint32_t& v : out.values) v = embed_value(src, dst, rho, v);
  return out;
}

CertData certificate_data(const CurveSpec& base) {
  const unsigned n = base.n;
  const unsigned d = ord2_mod(2 * n + 1);
  const unsigned m0 = std::lcm(d, base.field->degree());
  if (m0 > kMaxDegree)
    throw NotStabilized("certificate needs GF(2^" + std::to_string(m0) +
                            "), beyond the supported field sizes",
                        {}, {});

  const Field F(m0);
  const CurveSpec curve = embed_curve(base, F);
  const std::vector<std::uint32_t> fc = rhs_coeffs(n, curve.values);

  CertData cert;
  cert.m0 = m0;
  for (std::uint32_t alpha : roots_of_unity(F, 2 * n + 1)) {
    // R_l(beta) = coefficient of x^l in f(alpha*x + beta), as a polynomial in
    // beta of degree 2n+1-l.
    std::vector<UPoly> R(2 * n + 2);
    std::uint32_t apow = 1u;
    for (unsigned l = 0; l <= 2 * n + 1; ++l) {
      std::vector<std::uint32_t> coeffs(2 * n + 2 - l, 0u);
      for (unsigned k = l; k <= 2 * n + 1; ++k)
        if (fc[k] && binom_mod2(k, l)) coeffs[k - l] = F.mul(apow, fc[k]);
      R[l] = UPoly(&F, std::move(coeffs));
      apow = F.mul(apow, alpha);
    }
    // gamma_j^(2^k(j)) = sum_t R_{j*2^t}^(2^(k(j)-t)): the even-degree
    // equations composed until the index leaves the gamma range.
    const auto gamma_chain = [&](unsigned j) {
      const unsigned k = chain_length(j, n);
      UPoly acc = UPoly::zero(&F);
      for (unsigned t = 1; t <= k; ++t) acc = acc + poly_pow2k(R[j << t], k - t);
      return acc;
    };
    // The odd-degree consistency checks as polynomials in beta; a beta is
    // admissible for this alpha exactly when all of them vanish.
    std::vector<UPoly> constraints;
    for (unsigned l = 1; l <= 2 * n - 1; l += 2) {
      const UPoly target = R[l] + UPoly::constant(&F, curve.values[(l - 1) / 2]);
      const UPoly c =
          l <= n ? poly_pow2k(target, chain_length(l, n)) + gamma_chain(l) : target;
      if (!c.is_zero()) constraints.push_back(c);
    }
    if (constraints.empty())
      throw NotStabilized("certificate degenerate: no beta constraints for alpha", {}, {});
    UPoly g = constraints.front();
    for (std::size_t i = 1; i < constraints.size(); ++i) g = UPoly::gcd(g, constraints[i]);

    AlphaCert ac;
    ac.alpha = alpha;
    ac.distinct_roots = g.degree() <= 0 ? 0u : UPoly::distinct_root_count(g);
    if (ac.distinct_roots > 0) {
      const unsigned split = UPoly::splitting_degree(g, kMaxDegree);
      if (split == 0) {
        ac.degree = 0;
        cert.mstar_known = false;
      } else {
        ac.degree = std::lcm(std::lcm(F.element_degree(alpha), split), base.field->degree());
        cert.mstar = std::lcm(cert.mstar, ac.degree);
      }
      cert.count += 2 * ac.distinct_roots;
    }
    cert.per_alpha.push_back(ac);
  }
  return cert;
}

std::vector<unsigned> schedule_from(const CertData& cert) {
  std::vector<unsigned> sched{cert.m0};
  if (cert.mstar_known) {
    sched.push_back(cert.mstar);
    sched.push_back(2 * cert.mstar);
  }
  std::sort(sched.begin(), sched.end());
  sched.erase(std::unique(sched.begin(), sched.end()), sched.end());
  sched.erase(std::remove_if(sched.begin(), sched.end(),
                             [](unsigned m) { return m < 1 || m > kMaxDegree; }),
              sched.end());
  return sched;
}

}  // namespace

EnumerationResult enumerate(const CurveSpec& concrete, unsigned threads) {
  require_concrete(concrete, "enumerate");
  const unsigned n = concrete.n;

  EnumerationResult res;
  res.m = concrete.field->degree();
  res.field = std::make_shared<Field>(*concrete.field);
  res.curve = concrete;
  res.curve.field = res.field.get();

  const Field& F = *res.field;
  const std::vector<std::uint32_t> fc = rhs_coeffs(n, res.curve.values);
  const std::vector<std::uint32_t> alphas = roots_of_unity(F, 2 * n + 1);
  const std::uint64_t q = F.size();

  const auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<Automorphism>& out) {
    std::vector<std::uint32_t> bpow(2 * n + 2), rbuf(2 * n + 2), gamma(n + 1, 0u);
    for (std::uint32_t alpha : alphas) {
      for (std::uint64_t b = lo; b < hi; ++b) {
        const std::uint32_t beta = static_cast<std::uint32_t>(b);
        transformed_coeffs(F, fc, alpha, beta, bpow, rbuf);
        if (!solve_gammas(F, n, res.curve.values, rbuf, gamma)) continue;
        for (std::uint32_t z : F.artin_schreier_roots(rbuf[0])) {
          gamma[0] = z;
          Automorphism a{alpha, beta, gamma};
          if (curve::is_automorphism(res.curve, a)) out.push_back(std::move(a));
        }
      }
    }
  };

  if (threads <= 1) {
    scan(0, q, res.automorphisms);
  } else {
    std::vector<std::vector<Automorphism>> parts(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.emplace_back(scan, q * t / threads, q * (t + 1) / threads, std::ref(parts[t]));
    for (std::thread& w : workers) w.join();
    for (std::vector<Automorphism>& p : parts)
      res.automorphisms.insert(res.automorphisms.end(), std::make_move_iterator(p.begin()),
                               std::make_move_iterator(p.end()));
  }

  std::sort(res.automorphisms.begin(), res.automorphisms.end(),
            [](const Automorphism& a, const Automorphism& b) {
              if (a.alpha != b.alpha) return a.alpha < b.alpha;
              if (a.beta != b.beta) return a.beta < b.beta;
              return a.gamma < b.gamma;
            });
  fill_report(res);
  return res;
}

std::uint64_t certified_count(const CurveSpec& base) {
  require_concrete(base, "certified_count");
  return certificate_data(base).count;
}

std::vector<unsigned> default_schedule(const CurveSpec& base) {
  require_concrete(base, "default_schedule");
  return schedule_from(certificate_data(base));
}

EnumerationResult stabilize(const CurveSpec& base, const std::vector<unsigned>& m_schedule,
                            unsigned threads) {
  require_concrete(base, "stabilize");
  const unsigned k = base.field->degree();
  const CertData cert = certificate_data(base);

  std::vector<unsigned> sched = m_schedule.empty() ? schedule_from(cert) : m_schedule;
  for (unsigned m : sched) {
    if (m < 1 || m > kMaxDegree)
      throw std::invalid_argument("stabilize: schedule degree " + std::to_string(m) +
                                  " outside the supported range");
    if (m % k)
      throw std::invalid_argument("stabilize: schedule degree " + std::to_string(m) +
                                  " is not a multiple of the coefficient field degree");
  }

  std::vector<std::uint64_t> counts;
  for (unsigned m : sched) {
    const Field Fm(m);
    EnumerationResult res = enumerate(embed_curve(base, Fm), threads);
    counts.push_back(res.automorphisms.size());
    if (counts.back() == cert.count) {
      res.stabilized = true;
      res.certificate = cert.count;
      return res;
    }
  }
  std::string msg = "count never reached the certified value " + std::to_string(cert.count) + ":";
  for (std::size_t i = 0; i < sched.size(); ++i)
    msg += " m=" + std::to_string(sched[i]) + " -> " + std::to_string(counts[i]);
  throw NotStabilized(msg, std::move(sched), std::move(counts));
}

analyzer::GroupReport verify_group_structure(const EnumerationResult& res) {
  const CurveSpec& spec = res.curve;
  require_concrete(spec, "verify_group_structure");
  const Field& F = *spec.field;
  const unsigned n = spec.n;
  const std::vector<Automorphism>& list = res.automorphisms;
  if (list.empty()) throw StructureViolation("empty automorphism list");

  std::set<std::vector<std::uint32_t>> index;
  for (const Automorphism& a : list) {
    if (a.gamma.size() != n + 1)
      throw StructureViolation("element with malformed gamma vector");
    if (!curve::is_automorphism(spec, a))
      throw StructureViolation("listed element is not an automorphism (alpha=" +
                               std::to_string(a.alpha) + ", beta=" + std::to_string(a.beta) + ")");
    if (!index.insert(key_of(a)).second)
      throw StructureViolation("duplicate element (alpha=" + std::to_string(a.alpha) +
                               ", beta=" + std::to_string(a.beta) + ")");
  }
  const auto contains = [&](const Automorphism& a) { return index.count(key_of(a)) != 0; };

  const Automorphism id = curve::identity(n);
  const Automorphism sig = curve::sigma(n);
  if (!contains(id)) throw StructureViolation("identity missing");
  if (!contains(sig)) throw StructureViolation("hyperelliptic involution missing");

  // Ker tau must be exactly {id, sigma}.
  for (const Automorphism& a : list)
    if (a.alpha == 1u && a.beta == 0u && a != id && a != sig)
      throw StructureViolation("kernel of the x-projection larger than {id, sigma}");

  // U = betas over alpha = 1: closed under addition, order a power of two.
  std::set<std::uint32_t> unipotent;
  for (const Automorphism& a : list)
    if (a.alpha == 1u) unipotent.insert(a.beta);
  unsigned l = 0;
  if (!exact_log2(unipotent.size(), l))
    throw StructureViolation("unipotent part has non-2-power order " +
                             std::to_string(unipotent.size()));
  for (std::uint32_t b1 : unipotent)
    for (std::uint32_t b2 : unipotent)
      if (!unipotent.count(b1 ^ b2))
        throw StructureViolation("unipotent betas not closed under addition (" +
                                 std::to_string(b1) + ", " + std::to_string(b2) + ")");

  // Im rho: a cyclic group of order dividing 2n+1.
  std::set<std::uint32_t> rho;
  for (const Automorphism& a : list) rho.insert(a.alpha);
  const unsigned r = static_cast<unsigned>(rho.size());
  if ((2 * n + 1) % r)
    throw StructureViolation("alpha image order " + std::to_string(r) +
                             " does not divide 2n+1");
  bool has_generator = false;
  for (std::uint32_t a : rho) {
    if (!rho.count(F.inv(a))) throw StructureViolation("alpha image not closed under inverse");
    for (std::uint32_t b : rho)
      if (!rho.count(F.mul(a, b)))
        throw StructureViolation("alpha image not closed under multiplication");
    unsigned order = 1;
    std::uint32_t p = a;
    while (p != 1u) {
      p = F.mul(p, a);
      ++order;
    }
    if (order == r) has_generator = true;
  }
  if (!has_generator) throw StructureViolation("alpha image is not cyclic");

  if (list.size() != (std::uint64_t{1} << (l + 1)) * r)
    throw StructureViolation("order " + std::to_string(list.size()) +
                             " != 2^(l+1) * r with l=" + std::to_string(l) +
                             ", r=" + std::to_string(r));

  // sigma is central and the alpha = 1 layer squares into {id, sigma}.
  for (const Automorphism& a : list) {
    if (lean_compose(F, n, a, sig) != lean_compose(F, n, sig, a))
      throw StructureViolation("sigma does not commute with (alpha=" + std::to_string(a.alpha) +
                               ", beta=" + std::to_string(a.beta) + ")");
    if (a.alpha == 1u) {
      const Automorphism sq = lean_compose(F, n, a, a);
      if (sq != id && sq != sig)
        throw StructureViolation("non-involutive unipotent element (beta=" +
                                 std::to_string(a.beta) + ")");
    }
  }

  // tau product law: the x-parts multiply as (alpha_a*alpha_b, alpha_a*beta_b
  // + beta_a) and compositions stay inside the list.
  const auto check_pair = [&](const Automorphism& a, const Automorphism& b) {
    const Automorphism c = lean_compose(F, n, a, b);
    if (c.alpha != F.mul(a.alpha, b.alpha) || c.beta != (F.mul(a.alpha, b.beta) ^ a.beta) ||
        !contains(c))
      throw StructureViolation("product law failed for (alpha=" + std::to_string(a.alpha) +
                               ", beta=" + std::to_string(a.beta) + ") * (alpha=" +
                               std::to_string(b.alpha) + ", beta=" + std::to_string(b.beta) + ")");
  };
  if (list.size() <= 1000) {
    for (const Automorphism& a : list)
      for (const Automorphism& b : list) check_pair(a, b);
  } else {
    std::mt19937_64 rng(kSeed);
    for (std::size_t i = 0; i < kSampleLimit; ++i)
      check_pair(list[rng() % list.size()], list[rng() % list.size()]);
  }

  EnumerationResult derived = res;
  fill_report(derived);
  return derived.report;
}

ClosureCertificate composition_table(const EnumerationResult& res) {
  const CurveSpec& spec = res.curve;
  require_concrete(spec, "composition_table");
  const Field& F = *spec.field;
  const unsigned n = spec.n;
  const std::vector<Automorphism>& list = res.automorphisms;
  if (list.empty()) throw StructureViolation("empty automorphism list");

  std::set<std::vector<std::uint32_t>> index;
  for (const Automorphism& a : list) index.insert(key_of(a));
  const auto contains = [&](const Automorphism& a) { return index.count(key_of(a)) != 0; };

  ClosureCertificate cert;
  cert.elements = list.size();
  cert.full = list.size() <= 2000;

  const auto check_closure = [&](const Automorphism& a, const Automorphism& b) {
    if (!contains(lean_compose(F, n, a, b)))
      throw StructureViolation("composition escapes the list: (alpha=" +
                               std::to_string(a.alpha) + ", beta=" + std::to_string(a.beta) +
                               ") * (alpha=" + std::to_string(b.alpha) + ", beta=" +
                               std::to_string(b.beta) + ")");
  };
  std::mt19937_64 rng(kSeed);
  if (cert.full) {
    for (const Automorphism& a : list)
      for (const Automorphism& b : list) check_closure(a, b);
    cert.pairs_checked = list.size() * list.size();
  } else {
    for (std::size_t i = 0; i < kSampleLimit; ++i)
      check_closure(list[rng() % list.size()], list[rng() % list.size()]);
    cert.pairs_checked = kSampleLimit;
  }

  for (const Automorphism& a : list)
    if (!contains(lean_inverse(F, n, a)))
      throw StructureViolation("inverse missing for (alpha=" + std::to_string(a.alpha) +
                               ", beta=" + std::to_string(a.beta) + ")");

  const std::uint64_t cube = static_cast<std::uint64_t>(list.size()) * list.size() * list.size();
  if (cube <= kSampleLimit) {
    for (const Automorphism& a : list)
      for (const Automorphism& b : list)
        for (const Automorphism& c : list) {
          if (lean_compose(F, n, lean_compose(F, n, a, b), c) !=
              lean_compose(F, n, a, lean_compose(F, n, b, c)))
            throw StructureViolation("associativity failed");
          ++cert.triples_checked;
        }
  } else {
    for (std::size_t i = 0; i < kSampleLimit; ++i) {
      const Automorphism& a = list[rng() % list.size()];
      const Automorphism& b = list[rng() % list.size()];
      const Automorphism& c = list[rng() % list.size()];
      if (lean_compose(F, n, lean_compose(F, n, a, b), c) !=
          lean_compose(F, n, a, lean_compose(F, n, b, c)))
        throw StructureViolation("associativity failed for sampled triple");
      ++cert.triples_checked;
    }
  }
  return cert;
}

}  // namespace asaut::oracle
