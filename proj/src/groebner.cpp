#include "asaut/groebner.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace asaut::groebner {

using mpoly::cmp;
using mpoly::Monomial;
using mpoly::Order;

LimitExceeded::LimitExceeded(const std::string& which, std::size_t pairs, std::size_t basis,
                             std::size_t terms)
    : std::runtime_error("groebner limit exceeded (" + which + "): pairs=" +
                         std::to_string(pairs) + " basis=" + std::to_string(basis) +
                         " largest_poly=" + std::to_string(terms)),
      pairs_(pairs),
      basis_(basis),
      terms_(terms) {}

MPoly s_polynomial(const MPoly& f, const MPoly& g) {
  const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  return f.times(l / f.leading_monomial()) + g.times(l / g.leading_monomial());
}

namespace {

constexpr std::size_t kNoSkip = static_cast<std::size_t>(-1);

// Geobucket accumulator (Yan): terms live in buckets of geometrically growing
// capacity, so adding an m-term polynomial costs O(m + carries) instead of a
// full re-merge of the accumulated tail.  Buckets hold strictly descending
// monomials; a cursor marks how far the front has been consumed.
class Geobucket {
public:
  Geobucket(Order ord, unsigned nvars, std::vector<Monomial> init) : ord_(ord), nv_(nvars) {
    add(std::move(init));
  }

  void add(std::vector<Monomial> terms) {
    if (terms.empty()) return;
    std::size_t k = 0;
    while (capacity(k) < terms.size()) ++k;
    while (true) {
      if (k >= buckets_.size()) buckets_.resize(k + 1);
      Bucket& b = buckets_[k];
      if (b.len() == 0 && terms.size() <= capacity(k)) {
        b.t = std::move(terms);
        b.pos = 0;
        return;
      }
      if (b.len() != 0) {
        terms = merged(b, terms);
        b.t.clear();
        b.pos = 0;
        if (terms.empty()) return;
      }
      ++k;
    }
  }

  // Extract the overall leading monomial, resolving cross-bucket
  // cancellations (a monomial present in an even number of fronts is zero).
  bool pop_leading(Monomial& out) {
    while (true) {
      int found = 0;
      for (Bucket& b : buckets_) {
        if (b.len() == 0) continue;
        const Monomial& m = b.t[b.pos];
        if (found == 0 || cmp(ord_, m, out, nv_) > 0) {
          out = m;
          found = 1;
        } else if (m == out) {
          ++found;
        }
      }
      if (found == 0) return false;
      for (Bucket& b : buckets_)
        if (b.len() != 0 && b.t[b.pos] == out) ++b.pos;
      if (found % 2 == 1) return true;
    }
  }

  // Upper bound on the live term count (cancellations not yet resolved).
  std::size_t size_bound() const {
    std::size_t s = 0;
    for (const Bucket& b : buckets_) s += b.len();
    return s;
  }

private:
  struct Bucket {
    std::vector<Monomial> t;
    std::size_t pos = 0;
    std::size_t len() const { return t.size() - pos; }
  };

  static std::size_t capacity(std::size_t k) { return std::size_t{4} << (2 * k); }

  // Symmetric-difference merge of two descending runs (coefficients are 1).
  std::vector<Monomial> merged(const Bucket& b, const std::vector<Monomial>& v) const {
    std::vector<Monomial> out;
    out.reserve(b.len() + v.size());
    std::size_t i = b.pos, j = 0;
    while (i < b.t.size() && j < v.size()) {
      const int c = cmp(ord_, b.t[i], v[j], nv_);
      if (c > 0) {
        out.push_back(b.t[i++]);
      } else if (c < 0) {
        out.push_back(v[j++]);
      } else {
        ++i;
        ++j;
      }
    }
    out.insert(out.end(), b.t.begin() + static_cast<std::ptrdiff_t>(i), b.t.end());
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
    return out;
  }

  std::vector<Bucket> buckets_;
  Order ord_;
  unsigned nv_;
};

// Optional sugar bookkeeping for nf_impl: `of_basis[k]` is the sugar degree
// of basis[k], and `accumulated` absorbs every reduction step's contribution
// so the caller knows the sugar of the normal form.
struct SugarTrack {
  const std::vector<unsigned>* of_basis;
  unsigned accumulated;
};

MPoly nf_impl(const MPoly& f, const std::vector<MPoly>& basis, std::size_t skip,
              const Limits* limits, SugarTrack* sugar = nullptr) {
  Geobucket acc(f.order(), f.varset() ? f.varset()->size() : 0, f.terms());
  std::vector<Monomial> remainder;
  Monomial lm;
  while (true) {
    if (limits && acc.size_bound() > limits->max_poly_terms)
      throw LimitExceeded("terms", 0, basis.size(), acc.size_bound());
    if (!acc.pop_leading(lm)) break;
    const MPoly* reducer = nullptr;
    std::size_t ridx = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].is_zero()) continue;
      if (basis[k].leading_monomial().divides(lm)) {
        reducer = &basis[k];
        ridx = k;
        break;
      }
    }
    if (!reducer) {
      remainder.push_back(lm);
      continue;
    }
    // The popped head cancels against the reducer's; only the shifted tail
    // enters the accumulator.
    const Monomial q = lm / reducer->leading_monomial();
    if (sugar)
      sugar->accumulated = std::max(sugar->accumulated, (*sugar->of_basis)[ridx] + q.deg);
    const std::vector<Monomial>& rt = reducer->terms();
    std::vector<Monomial> shifted;
    shifted.reserve(rt.size() - 1);
    for (std::size_t t = 1; t < rt.size(); ++t) shifted.push_back(rt[t] * q);
    acc.add(std::move(shifted));
  }
  return MPoly(f.varset(), f.order(), std::move(remainder));
}

}  // namespace

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& basis, const Limits* limits) {
  return nf_impl(f, basis, kNoSkip, limits);
}

namespace {

struct Pair {
  unsigned i, j;      // indices into the basis, i < j
  Monomial l;         // lcm of the two leading monomials
  unsigned sugar = 0; // sugar degree of the s-polynomial
};

// Gebauer-Moeller update: prune the pending pair list against the newcomer,
// build its own pair candidates, drop the lcm-redundant and coprime ones, and
// append h to the basis.
void update_pairs(std::vector<MPoly>& basis, std::vector<unsigned>& sugars,
                  std::vector<Pair>& pairs, MPoly h, unsigned hsugar) {
  const Monomial& lth = h.leading_monomial();
  const unsigned hidx = static_cast<unsigned>(basis.size());

  std::vector<Monomial> cand(basis.size());
  for (unsigned k = 0; k < basis.size(); ++k)
    cand[k] = Monomial::lcm(basis[k].leading_monomial(), lth);

  // Keep (k,h) when the leading monomials are coprime (still useful for
  // pruning, dropped again below) or no other candidate lcm divides its lcm.
  std::vector<bool> in_c(basis.size(), true), kept(basis.size(), false);
  for (unsigned k = 0; k < basis.size(); ++k) {
    in_c[k] = false;
    bool dominated = false;
    for (unsigned k2 = 0; k2 < basis.size() && !dominated; ++k2) {
      if ((in_c[k2] || kept[k2]) && cand[k2].divides(cand[k])) dominated = true;
    }
    if (basis[k].leading_monomial().coprime(lth) || !dominated) kept[k] = true;
  }

  // Chain criterion on the old pairs: drop (i,j) when lth divides lcm(i,j)
  // and both replacement pairs have strictly smaller lcms.
  std::vector<Pair> next;
  next.reserve(pairs.size() + basis.size());
  for (const Pair& p : pairs) {
    if (!lth.divides(p.l) || cand[p.i] == p.l || cand[p.j] == p.l) next.push_back(p);
  }
  for (unsigned k = 0; k < basis.size(); ++k) {
    if (kept[k] && !basis[k].leading_monomial().coprime(lth)) {
      const unsigned s = std::max(sugars[k] + cand[k].deg - basis[k].leading_monomial().deg,
                                  hsugar + cand[k].deg - lth.deg);
      next.push_back(Pair{k, hidx, cand[k], s});
    }
  }
  pairs = std::move(next);
  basis.push_back(std::move(h));
  sugars.push_back(hsugar);
}

// Sugar selection: lowest sugar degree first, then smallest lcm in the active
// order, then lowest index pair — fully deterministic.
std::size_t pop_min_pair(std::vector<Pair>& pairs, Order ord, unsigned nv) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].sugar != pairs[best].sugar) {
      if (pairs[k].sugar < pairs[best].sugar) best = k;
      continue;
    }
    const int c = cmp(ord, pairs[k].l, pairs[best].l, nv);
    if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                             (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
      best = k;
  }
  return best;
}

}  // namespace

std::vector<MPoly> buchberger(const std::vector<MPoly>& generators, const Limits& limits) {
  std::vector<MPoly> basis;
  std::vector<unsigned> sugars;
  std::vector<Pair> pairs;
  std::size_t processed = 0;

  for (const MPoly& f : generators) {
    if (f.is_zero()) continue;
    SugarTrack st{&sugars, f.total_degree()};
    MPoly h = nf_impl(f, basis, kNoSkip, &limits, &st);
    if (!h.is_zero()) update_pairs(basis, sugars, pairs, std::move(h), st.accumulated);
  }
  if (basis.empty()) return basis;

  const Order ord = basis.front().order();
  const unsigned nv = basis.front().varset()->size();
  while (!pairs.empty()) {
    if (++processed > limits.max_pairs)
      throw LimitExceeded("pairs", processed, basis.size(), 0);
    if (limits.progress && processed % 4096 == 0)
      limits.progress(processed, basis.size(), pairs.size());
    const std::size_t at = pop_min_pair(pairs, ord, nv);
    const Pair p = pairs[at];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(at));
    SugarTrack st{&sugars, p.sugar};
    MPoly h = nf_impl(s_polynomial(basis[p.i], basis[p.j]), basis, kNoSkip, &limits, &st);
    if (h.is_zero()) continue;
    if (basis.size() + 1 > limits.max_basis_size)
      throw LimitExceeded("basis", processed, basis.size() + 1, 0);
    update_pairs(basis, sugars, pairs, std::move(h), st.accumulated);
  }
  return basis;
}

std::vector<MPoly> reduce_basis(std::vector<MPoly> basis, const Limits* limits) {
  std::erase_if(basis, [](const MPoly& f) { return f.is_zero(); });
  if (basis.empty()) return basis;
  const Order ord = basis.front().order();
  const unsigned nv = basis.front().varset()->size();

  // Minimalize: drop any element whose leading monomial another one divides
  // (the earlier element wins a tie on equal leading monomials).
  std::vector<bool> drop(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      const Monomial &mi = basis[i].leading_monomial(), &mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) drop[i] = true;
    }
  }
  std::vector<MPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!drop[i]) minimal.push_back(std::move(basis[i]));

  // Interreduce to a fixpoint: tails may expose new reductions.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      MPoly r = nf_impl(minimal[i], minimal, i, limits);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const MPoly& a, const MPoly& b) {
    return cmp(ord, a.leading_monomial(), b.leading_monomial(), nv) > 0;
  });
  return minimal;
}

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& generators, const Limits& limits) {
  return reduce_basis(buchberger(generators, limits), &limits);
}

bool is_member(const MPoly& f, const std::vector<MPoly>& groebner) {
  return normal_form(f, groebner).is_zero();
}

bool same_ideal(const std::vector<MPoly>& gb_a, const std::vector<MPoly>& gb_b) {
  for (const MPoly& f : gb_a)
    if (!is_member(f, gb_b)) return false;
  for (const MPoly& g : gb_b)
    if (!is_member(g, gb_a)) return false;
  return true;
}

}  // namespace asaut::groebner
