#include "asaut/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"

#include "asaut/curve.hpp"
#include "asaut/gf2m.hpp"

using namespace asaut;
using curve::Automorphism;
using curve::CurveSpec;
using oracle::EnumerationResult;

namespace {

bool in_list(const EnumerationResult& res, const Automorphism& a) {
  return std::find(res.automorphisms.begin(), res.automorphisms.end(), a) !=
         res.automorphisms.end();
}

std::size_t unipotent_size(const EnumerationResult& res) {
  std::set<std::uint32_t> betas;
  for (const Automorphism& a : res.automorphisms)
    if (a.alpha == 1u) betas.insert(a.beta);
  return betas.size();
}

std::size_t alpha_image_size(const EnumerationResult& res) {
  std::set<std::uint32_t> alphas;
  for (const Automorphism& a : res.automorphisms) alphas.insert(a.alpha);
  return alphas.size();
}

}  // namespace

TEST_CASE("enumerate lists the full genus-1 automorphism group over GF(4)") {
  ff2::Field f(2);
  const EnumerationResult res = oracle::enumerate(curve::concrete_curve(f, {0}));

  CHECK(res.m == 2);
  CHECK(res.automorphisms.size() == 24);
  CHECK_FALSE(res.stabilized);
  CHECK(in_list(res, curve::identity(1)));
  CHECK(in_list(res, curve::sigma(1)));

  // defining property holds for every element, against the result's own field
  for (const Automorphism& a : res.automorphisms) CHECK(curve::is_automorphism(res.curve, a));

  // kernel of the x-projection is exactly {id, sigma}
  std::size_t kernel = 0;
  for (const Automorphism& a : res.automorphisms)
    if (a.alpha == 1u && a.beta == 0u) ++kernel;
  CHECK(kernel == 2);

  // canonical order: sorted by (alpha, beta, gamma)
  CHECK(std::is_sorted(res.automorphisms.begin(), res.automorphisms.end(),
                       [](const Automorphism& x, const Automorphism& y) {
                         return std::tie(x.alpha, x.beta, x.gamma) <
                                std::tie(y.alpha, y.beta, y.gamma);
                       }));

  CHECK(res.report.r == 3);
  CHECK(res.report.l == 2);
  CHECK(res.report.ra_structure == "Z_2^2 x| Z_3");
  CHECK(res.report.alias == "A_4");
  CHECK(res.report.aut_order == 24);
}

TEST_CASE("enumerate satisfies the order factorization on partial groups too") {
  ff2::Field f2(2), f4(4);
  for (const auto& values : {std::vector<std::uint32_t>{0, 0}, std::vector<std::uint32_t>{0, 1}}) {
    for (const ff2::Field* f : {&f2, &f4}) {
      const EnumerationResult res = oracle::enumerate(curve::concrete_curve(*f, values));
      CHECK(res.automorphisms.size() == 2 * unipotent_size(res) * alpha_image_size(res));
    }
  }
}

TEST_CASE("enumerate composes within itself and respects the x-part product law") {
  ff2::Field f(4);
  const EnumerationResult res = oracle::enumerate(curve::concrete_curve(f, {0, 0}));
  REQUIRE(res.automorphisms.size() == 160);

  // spot-check closure with the validated composition from the curve module
  const auto& L = res.automorphisms;
  for (std::size_t i = 0; i < L.size(); i += 13) {
    for (std::size_t j = 0; j < L.size(); j += 17) {
      const Automorphism c = curve::compose(res.curve, L[i], L[j]);
      CHECK(in_list(res, c));
      CHECK(c.alpha == f.mul(L[i].alpha, L[j].alpha));
      CHECK(c.beta == (f.mul(L[i].alpha, L[j].beta) ^ L[i].beta));
      CHECK(in_list(res, curve::inverse(res.curve, L[i])));
    }
  }
}

TEST_CASE("enumeration counts grow along subfield chains") {
  ff2::Field f1(1), f2(2), f3(3), f6(6);
  const std::vector<std::uint32_t> values{0, 0, 0};
  const std::size_t c1 = oracle::enumerate(curve::concrete_curve(f1, values)).automorphisms.size();
  const std::size_t c2 = oracle::enumerate(curve::concrete_curve(f2, values)).automorphisms.size();
  const std::size_t c3 = oracle::enumerate(curve::concrete_curve(f3, values)).automorphisms.size();
  const std::size_t c6 = oracle::enumerate(curve::concrete_curve(f6, values)).automorphisms.size();
  CHECK(c1 <= c2);
  CHECK(c1 <= c3);
  CHECK(c2 <= c6);
  CHECK(c3 <= c6);
  CHECK(c3 == 14);  // all alpha-roots already live in GF(8)
  CHECK(c6 == 14);
}

TEST_CASE("enumerate validates its input") {
  ff2::Field f(2);
  CHECK_THROWS_AS(oracle::enumerate(curve::symbolic_curve(2)), std::invalid_argument);
  CurveSpec bad = curve::concrete_curve(f, {0, 0});
  bad.values = {0};  // wrong arity
  CHECK_THROWS_AS(oracle::enumerate(bad), std::invalid_argument);
  bad.values = {0, 9};  // 9 is not a GF(4) element
  CHECK_THROWS_AS(oracle::enumerate(bad), std::invalid_argument);
}

TEST_CASE("certified counts match the symbolic classification") {
  ff2::Field f(1);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0})) == 24);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 1})) == 32);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0})) == 160);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0, 0})) == 14);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0, 0, 1})) == 2);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0, 1, 0})) == 128);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 1, 0, 0})) == 384);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0, 0, 0})) == 1152);
  CHECK(oracle::certified_count(curve::concrete_curve(f, {0, 0, 0, 0, 0})) == 22);
  CHECK(oracle::certified_count(curve::scholten_zhu(9, f, {{"c", 1}})) == 2);
}

TEST_CASE("default schedules follow the certificate geometry") {
  ff2::Field f(1);
  CHECK(oracle::default_schedule(curve::concrete_curve(f, {0})) ==
        std::vector<unsigned>{2, 4});
  // alpha-roots need GF(2^4) but the unipotent betas only split in GF(2^6)
  CHECK(oracle::default_schedule(curve::concrete_curve(f, {0, 1})) ==
        std::vector<unsigned>{4, 6, 12});
  CHECK(oracle::default_schedule(curve::concrete_curve(f, {0, 0, 1, 0})) ==
        std::vector<unsigned>{6, 10, 20});
}

TEST_CASE("stabilize certifies the eventual count across the published strata") {
  ff2::Field f(1);
  struct Case {
    std::vector<std::uint32_t> values;
    unsigned m;
    std::uint64_t count;
    std::string structure;
  };
  const std::vector<Case> cases = {
      {{0}, 2, 24, "Z_2^2 x| Z_3"},
      {{0, 0}, 4, 160, "Z_2^4 x| Z_5"},
      {{0, 0, 0}, 3, 14, "Z_7"},
      {{0, 0, 0, 1}, 1, 2, "Z_1"},
      {{0, 1, 0, 0}, 8, 384, "Z_2^6 x| Z_3"},
      {{0, 0, 0, 0}, 6, 1152, "Z_2^6 x| Z_9"},
  };
  for (const Case& c : cases) {
    const EnumerationResult res = oracle::stabilize(curve::concrete_curve(f, c.values));
    CHECK(res.stabilized);
    CHECK(res.m == c.m);
    CHECK(res.automorphisms.size() == c.count);
    CHECK(res.certificate == c.count);
    CHECK(res.report.ra_structure == c.structure);
  }
}

TEST_CASE("stabilize survives a gamma_0 trace obstruction at the rational degree") {
  ff2::Field f(1);
  // all betas are rational in GF(2^6), but some gamma_0 equations only become
  // solvable in the quadratic extension: naive consecutive-count agreement
  // over degrees 4 and 8 would have frozen the count at 8.
  const EnumerationResult res = oracle::stabilize(curve::concrete_curve(f, {0, 1}));
  CHECK(res.stabilized);
  CHECK(res.m == 12);
  CHECK(res.automorphisms.size() == 32);
  CHECK(res.report.ra_structure == "Z_2^4");

  CHECK_THROWS_AS(oracle::stabilize(curve::concrete_curve(f, {0, 1}), {4, 8}),
                  oracle::NotStabilized);
  try {
    oracle::stabilize(curve::concrete_curve(f, {0, 1}), {4, 8});
  } catch (const oracle::NotStabilized& e) {
    CHECK(e.schedule() == std::vector<unsigned>{4, 8});
    CHECK(e.counts() == std::vector<std::uint64_t>{8, 8});
  }
}

TEST_CASE("stabilize re-encodes small-subfield coefficients per extension") {
  ff2::Field f4(2);
  // a_2 = w in GF(4): the generic genus-3 stratum (w^8 + w + 0 != 0)
  const EnumerationResult res = oracle::stabilize(curve::concrete_curve(f4, {0, 0, 2}));
  CHECK(res.stabilized);
  CHECK(res.m == 2);
  CHECK(res.automorphisms.size() == 2);
  CHECK(res.report.ra_structure == "Z_1");

  // schedule degrees must stay multiples of the coefficient field degree
  CHECK_THROWS_AS(oracle::stabilize(curve::concrete_curve(f4, {0, 0, 2}), {3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::stabilize(curve::concrete_curve(f4, {0, 0, 2}), {26}),
                  std::invalid_argument);
}

TEST_CASE("verify_group_structure accepts stabilized lists and reports the structure") {
  ff2::Field f(1);
  const EnumerationResult res = oracle::stabilize(curve::concrete_curve(f, {0, 0}));
  const analyzer::GroupReport rep = oracle::verify_group_structure(res);
  CHECK(rep.r == 5);
  CHECK(rep.l == 4);
  CHECK(rep.ra_structure == "Z_2^4 x| Z_5");
  CHECK(rep.aut_order == 160);
  CHECK(rep.alias.empty());
  CHECK_FALSE(rep.heuristic);
  CHECK(rep.conditions.empty());
}

TEST_CASE("verify_group_structure rejects tampered lists with a counterexample") {
  ff2::Field f(2);
  const EnumerationResult good = oracle::enumerate(curve::concrete_curve(f, {0}));

  EnumerationResult truncated = good;
  truncated.automorphisms.pop_back();
  CHECK_THROWS_AS(oracle::verify_group_structure(truncated), oracle::StructureViolation);

  EnumerationResult corrupted = good;
  corrupted.automorphisms[5].gamma[0] ^= 1u;  // breaks the defining equation or dedup
  CHECK_THROWS_AS(oracle::verify_group_structure(corrupted), oracle::StructureViolation);

  EnumerationResult duplicated = good;
  duplicated.automorphisms.push_back(duplicated.automorphisms.front());
  CHECK_THROWS_AS(oracle::verify_group_structure(duplicated), oracle::StructureViolation);

  EnumerationResult nosigma = good;
  std::erase(nosigma.automorphisms, curve::sigma(1));
  CHECK_THROWS_AS(oracle::verify_group_structure(nosigma), oracle::StructureViolation);
}

TEST_CASE("composition_table sweeps the full table on small groups") {
  ff2::Field f(2);
  const EnumerationResult res = oracle::enumerate(curve::concrete_curve(f, {0}));
  const oracle::ClosureCertificate cert = oracle::composition_table(res);
  CHECK(cert.elements == 24);
  CHECK(cert.full);
  CHECK(cert.pairs_checked == 24 * 24);
  CHECK(cert.triples_checked == 24 * 24 * 24);

  EnumerationResult broken = res;
  broken.automorphisms.pop_back();
  CHECK_THROWS_AS(oracle::composition_table(broken), oracle::StructureViolation);
}

TEST_CASE("composition_table samples beyond the full-table threshold") {
  ff2::Field f(1);
  const EnumerationResult res = oracle::stabilize(curve::concrete_curve(f, {0, 0}));
  const oracle::ClosureCertificate cert = oracle::composition_table(res);
  CHECK(cert.elements == 160);
  CHECK(cert.full);  // 160 <= 2000: pairs in full
  CHECK(cert.pairs_checked == 160 * 160);
  CHECK(cert.triples_checked == 100000);  // 160^3 exceeds the sample budget
}
