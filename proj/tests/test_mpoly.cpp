#include "asaut/mpoly.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"

using namespace asaut::mpoly;
using asaut::ff2::Field;

TEST_CASE("curve varset layout and precedence indices") {
  VarSet vs = VarSet::curve(3);
  REQUIRE(vs.size() == 9);  // gamma_3..gamma_0, beta, alpha, a_0..a_2
  CHECK(vs.name(0) == "gamma_3");
  CHECK(vs.name(3) == "gamma_0");
  CHECK(vs.name(vs.beta()) == "beta");
  CHECK(vs.name(vs.alpha()) == "alpha");
  CHECK(vs.name(vs.param(0)) == "a_0");
  CHECK(vs.name(vs.param(2)) == "a_2");
  CHECK(vs.gamma(3) == 0);
  CHECK(vs.gamma(0) == 3);
  CHECK(vs.index_of("a_1") == static_cast<int>(vs.param(1)));
  CHECK(vs.index_of("bogus") == -1);

  VarSet sz = VarSet::curve(9, {"c"});
  CHECK(sz.size() == 13);
  CHECK(sz.param_count() == 1);
  CHECK(sz.name(sz.param(0)) == "c");
}

TEST_CASE("lex order eliminates gammas before beta before alpha before a_i") {
  VarSet vs = VarSet::curve(2);
  auto M = [&](const char* s) { return parse(&vs, Order::lex, s).leading_monomial(); };
  const unsigned nv = vs.size();
  CHECK(cmp(Order::lex, M("gamma_0"), M("beta^9"), nv) > 0);
  CHECK(cmp(Order::lex, M("beta"), M("alpha^5*a_1^4"), nv) > 0);
  CHECK(cmp(Order::lex, M("alpha"), M("a_0^7"), nv) > 0);
  CHECK(cmp(Order::lex, M("a_0"), M("a_1^3"), nv) > 0);
  CHECK(cmp(Order::lex, M("gamma_2"), M("gamma_1^2"), nv) > 0);
  CHECK(cmp(Order::lex, M("a_1"), M("a_1"), nv) == 0);
}

TEST_CASE("grevlex compares by total degree, then reversed tail") {
  VarSet vs = VarSet::curve(2);
  auto M = [&](const char* s) { return parse(&vs, Order::grevlex, s).leading_monomial(); };
  const unsigned nv = vs.size();
  // beta (degree 1) against alpha*a_1^2 (degree 3)
  CHECK(cmp(Order::grevlex, M("alpha*a_1^2"), M("beta"), nv) > 0);
  // equal degree: the smaller exponent on the least variable wins
  CHECK(cmp(Order::grevlex, M("beta^2"), M("beta*a_1"), nv) > 0);
  CHECK(cmp(Order::grevlex, M("gamma_2*alpha"), M("alpha^2"), nv) > 0);
  CHECK(cmp(Order::grevlex, M("beta*alpha"), M("beta*a_0"), nv) > 0);
}

TEST_CASE("GF(2) addition cancels pairs and multiplication expands") {
  VarSet vs = VarSet::curve(1);
  auto P = [&](const char* s) { return parse(&vs, Order::lex, s); };
  CHECK((P("beta + alpha") + P("beta + alpha")).is_zero());
  CHECK(P("beta + alpha") + P("alpha") == P("beta"));
  // (beta + alpha)(beta + alpha^2) = beta^2 + alpha*beta + alpha^2*beta + alpha^3
  CHECK(P("beta + alpha") * P("beta + alpha^2") ==
        P("beta^2 + beta*alpha + beta*alpha^2 + alpha^3"));
  CHECK(P("beta + alpha").square() == P("beta^2 + alpha^2"));
  CHECK(P("beta + alpha").pow(2) == P("beta^2 + alpha^2"));
  CHECK(P("beta + alpha").pow(0).is_one());
  // Frobenius is a homomorphism: (f+g)^2 = f^2 + g^2
  MPoly f = P("gamma_0*beta + alpha + a_0^3"), g = P("beta^2 + a_0");
  CHECK((f + g).square() == f.square() + g.square());
  CHECK(f.pow(5) == f * f * f * f * f);
}

TEST_CASE("printing is canonical, descending in the active order") {
  VarSet vs = VarSet::curve(3);
  // A display from the computed n=3 basis, already in canonical lex order.
  const std::string golden = "gamma_3 + alpha^3*a_1 + alpha^3*a_2^2 + a_1 + a_2^2";
  CHECK(to_string(parse(&vs, Order::lex, golden)) == golden);
  // Scrambled input normalizes to the same string.
  CHECK(to_string(parse(&vs, Order::lex, "a_2^2 + alpha^3*a_2^2 + gamma_3 + a_1 + alpha^3*a_1")) ==
        golden);
  CHECK(to_string(parse(&vs, Order::lex, "0")) == "0");
  CHECK(to_string(parse(&vs, Order::lex, "1 + 0")) == "1");
  CHECK(to_string(MPoly::zero(&vs, Order::lex)) == "0");
  CHECK_THROWS_AS(parse(&vs, Order::lex, "alpha + bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse(&vs, Order::lex, "alpha^"), std::invalid_argument);
  CHECK_THROWS_AS(parse(&vs, Order::lex, ""), std::invalid_argument);
}

TEST_CASE("binom_mod2 agrees with the Pascal triangle parity up to 24") {
  unsigned pascal[25][25] = {};
  pascal[0][0] = 1;
  for (unsigned n = 1; n <= 24; ++n) {
    pascal[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k)
      pascal[n][k] = (pascal[n - 1][k - 1] + pascal[n - 1][k]) & 1u;
  }
  for (unsigned n = 0; n <= 24; ++n)
    for (unsigned k = 0; k <= 24; ++k)
      CHECK(binom_mod2(n, k) == (k <= n ? pascal[n][k] : 0u));
}

TEST_CASE("formal derivative drops even exponents") {
  VarSet vs = VarSet::curve(2);
  auto P = [&](const char* s) { return parse(&vs, Order::lex, s); };
  CHECK(formal_derivative(P("beta^4 + beta"), vs.beta()) == P("1"));
  CHECK(formal_derivative(P("beta^16 + a_1^4*beta^8 + a_1^2*beta^2 + beta"), vs.beta()) == P("1"));
  CHECK(formal_derivative(P("beta^2 + a_0^2"), vs.beta()).is_zero());
  CHECK(formal_derivative(P("beta^3*alpha + beta^2"), vs.beta()) == P("beta^2*alpha"));
}

TEST_CASE("substitute maps rings and supports 0/1 presets") {
  VarSet vs = VarSet::curve(2);
  auto P = [&](const char* s) { return parse(&vs, Order::lex, s); };
  CHECK(substitute_consts(P("alpha^5 + a_1*alpha + a_1 + 1"), {{vs.alpha(), 1u}}) == P("a_1 + a_1 + 1 + 1") + P("0"));
  CHECK(substitute_consts(P("alpha^5 + a_1*alpha + a_1 + 1"), {{vs.alpha(), 1u}}).is_zero());
  CHECK(substitute_consts(P("beta^2*a_1 + beta + a_0"), {{vs.param(1), 0u}}) == P("beta + a_0"));

  // Exponent mapping into a one-parameter family: a_0 -> c^3, a_1 -> c^8.
  VarSet sz = VarSet::curve(2, {"c"});
  std::map<unsigned, MPoly> images{
      {vs.param(0), MPoly::var(&sz, Order::lex, sz.param(0), 3)},
      {vs.param(1), MPoly::var(&sz, Order::lex, sz.param(0), 8)},
  };
  MPoly mapped = substitute(P("a_1^2 + a_0 + beta"), &sz, Order::lex, images);
  CHECK(to_string(mapped) == "beta + c^16 + c^3");
}

TEST_CASE("evaluate and specialize against direct computation") {
  VarSet vs = VarSet::curve(1);  // gamma_1, gamma_0, beta, alpha, a_0
  auto P = [&](const char* s) { return parse(&vs, Order::lex, s); };
  Field f(4);
  MPoly g = P("gamma_1^2 + alpha^2*beta + a_0");
  for (std::uint32_t g1 : {0u, 3u, 7u}) {
    for (std::uint32_t al : {1u, 5u}) {
      std::vector<std::uint32_t> vals{g1, 2u, 9u, al, 6u};
      const std::uint32_t direct =
          f.sqr(g1) ^ f.mul(f.sqr(al), 9u) ^ 6u;
      CHECK(evaluate(g, f, vals) == direct);
    }
  }
  // Specialize to a univariate polynomial in beta.
  std::vector<std::uint32_t> vals{3u, 0u, 0u, 2u, 5u};
  auto up = specialize(P("beta^4 + alpha*beta + gamma_1 + a_0"), f, vs.beta(), vals);
  CHECK(up.degree() == 4);
  CHECK(up.coeff(4) == 1u);
  CHECK(up.coeff(1) == 2u);
  CHECK(up.coeff(0) == (3u ^ 5u));
}

TEST_CASE("exponent guards") {
  VarSet vs = VarSet::curve(1);
  CHECK_THROWS_AS(Monomial::var(vs.beta(), 70000), std::overflow_error);
  Monomial big = Monomial::var(vs.beta(), 60000);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
