#include "asaut/groebner.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

using namespace asaut::groebner;
using namespace asaut::mpoly;

namespace {

// Readable shorthand: x := beta, y := alpha, z := a_0 inside VarSet::curve(1).
struct Ring {
  VarSet vs = VarSet::curve(1);
  Order ord;
  explicit Ring(Order o) : ord(o) {}
  MPoly operator()(const std::string& s) const { return parse(&vs, ord, s); }
};

bool satisfies_buchberger_criterion(const std::vector<MPoly>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

std::vector<std::string> strings(const std::vector<MPoly>& basis) {
  std::vector<std::string> out;
  for (const MPoly& f : basis) out.push_back(to_string(f));
  return out;
}

}  // namespace

TEST_CASE("s-polynomial cancels the leading terms") {
  Ring R(Order::lex);
  // lcm(beta^2, beta*alpha) = beta^2*alpha: alpha*f + beta*g.
  CHECK(s_polynomial(R("beta^2 + alpha"), R("beta*alpha + beta")) == R("beta^2 + alpha^2"));
  // Coprime leads: the s-polynomial is g's tail shifted plus f's tail shifted.
  CHECK(s_polynomial(R("beta + 1"), R("alpha + 1")) == R("beta + alpha"));
}

TEST_CASE("normal form reduces by the earliest divisor and collects the tail") {
  Ring R(Order::lex);
  std::vector<MPoly> basis{R("beta^2 + alpha"), R("beta^2")};
  CHECK(normal_form(R("beta^2"), basis) == R("alpha"));
  std::vector<MPoly> swapped{R("beta^2"), R("beta^2 + alpha")};
  CHECK(normal_form(R("beta^2"), swapped).is_zero());
  // Irreducible heads move to the remainder and reduction continues below.
  std::vector<MPoly> one{R("alpha^2 + 1")};
  CHECK(normal_form(R("beta^3 + alpha^2 + alpha"), one) == R("beta^3 + alpha + 1"));
  CHECK(normal_form(R("0"), one) + R("0") == MPoly::zero(&R.vs, R.ord));
}

TEST_CASE("worked example: ideal (beta^2+alpha, beta*alpha+beta) under lex") {
  Ring R(Order::lex);
  // By hand: S(f1,f2) = beta^2 + alpha^2 -> alpha^2 + alpha joins; all later
  // s-polynomials reduce to zero.
  std::vector<MPoly> gens{R("beta^2 + alpha"), R("beta*alpha + beta")};
  std::vector<MPoly> gb = groebner_basis(gens);
  CHECK(strings(gb) == std::vector<std::string>{"beta^2 + alpha", "beta*alpha + beta",
                                                "alpha^2 + alpha"});
  CHECK(satisfies_buchberger_criterion(gb));
  CHECK(is_member(R("beta^3 + beta"), gb));
  CHECK(is_member(R("beta^2*alpha + alpha"), gb));
  CHECK(!is_member(R("beta + alpha"), gb));
  for (const MPoly& g : gens) CHECK(is_member(g, gb));
}

TEST_CASE("reduced basis is canonical: generator presentation does not matter") {
  Ring R(Order::lex);
  std::vector<MPoly> a{R("beta^2 + alpha"), R("beta*alpha + beta")};
  std::vector<MPoly> b{R("beta^2 + beta*alpha + beta + alpha"), R("beta*alpha + beta"),
                       R("beta^2 + alpha")};
  CHECK(strings(groebner_basis(a)) == strings(groebner_basis(b)));
  // Idempotence on an already reduced basis.
  std::vector<MPoly> gb = groebner_basis(a);
  CHECK(strings(groebner_basis(gb)) == strings(gb));
  CHECK(strings(reduce_basis(gb)) == strings(gb));
  CHECK(same_ideal(groebner_basis(a), groebner_basis(b)));
  CHECK(!same_ideal(groebner_basis(a), groebner_basis({R("beta")})));
}

TEST_CASE("genus-one curve system has the expected reduced shape") {
  // Conditions for y^2 - y = x^3 + a_0*x carrying (alpha,beta;gamma_1,gamma_0):
  // the four generators below; reduced lex basis pins gamma_1, gamma_0^2,
  // beta^4 and alpha^3 as the stairs.
  VarSet vs = VarSet::curve(1);
  auto P = [&](const char* s) { return parse(&vs, Order::lex, s); };
  std::vector<MPoly> gens{
      P("alpha^3 + 1"),
      P("gamma_1^2 + alpha^2*beta"),
      P("gamma_1 + beta^2*alpha + alpha*a_0 + a_0"),
      P("gamma_0^2 + gamma_0 + beta^3 + beta*a_0"),
  };
  std::vector<MPoly> gb = groebner_basis(gens);
  REQUIRE(gb.size() == 4);
  CHECK(to_string(gb[0]) == "gamma_1 + beta^2*alpha + alpha*a_0 + a_0");
  CHECK(to_string(gb[1]) == "gamma_0^2 + gamma_0 + beta^3 + beta*a_0");
  CHECK(to_string(gb[2]) == "beta^4 + beta + alpha*a_0^2 + a_0^2");
  CHECK(to_string(gb[3]) == "alpha^3 + 1");
  CHECK(satisfies_buchberger_criterion(gb));
  for (const MPoly& g : gens) CHECK(is_member(g, gb));
}

TEST_CASE("random systems: criterion holds, generators are members, shuffles agree") {
  std::mt19937 rng(0x5EED);
  for (Order ord : {Order::lex, Order::grevlex}) {
    VarSet vs = VarSet::curve(2);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<MPoly> gens;
      const int npolys = 2 + static_cast<int>(rng() % 2);
      for (int p = 0; p < npolys; ++p) {
        std::vector<Monomial> terms;
        const int nterms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nterms; ++t) {
          Monomial m;
          for (unsigned v = 0; v < 4; ++v) {
            const unsigned e = rng() % 3;
            if (e) m = m * Monomial::var(v, e);
          }
          terms.push_back(m);
        }
        gens.emplace_back(&vs, ord, terms);
      }
      std::vector<MPoly> gb = groebner_basis(gens);
      CHECK(satisfies_buchberger_criterion(gb));
      for (const MPoly& g : gens) CHECK(is_member(g, gb));
      std::vector<MPoly> shuffled = gens;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(strings(groebner_basis(shuffled)) == strings(gb));
    }
  }
}

TEST_CASE("limits stop the computation with a snapshot") {
  Ring R(Order::lex);
  std::vector<MPoly> gens{R("beta^2 + alpha"), R("beta*alpha + beta")};
  Limits pair_cap;
  pair_cap.max_pairs = 0;
  CHECK_THROWS_AS(buchberger(gens, pair_cap), LimitExceeded);
  Limits basis_cap;
  basis_cap.max_basis_size = 2;
  CHECK_THROWS_AS(buchberger(gens, basis_cap), LimitExceeded);
  Limits term_cap;
  term_cap.max_poly_terms = 1;
  try {
    buchberger({R("beta^2 + beta + 1"), R("alpha")}, term_cap);
    FAIL("expected LimitExceeded");
  } catch (const LimitExceeded& e) {
    CHECK(e.largest_poly_terms() == 3);
    CHECK(std::string(e.what()).find("terms") != std::string::npos);
  }
}
