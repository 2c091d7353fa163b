#include "asaut/goldens.hpp"

#include <stdexcept>

namespace asaut::goldens {

namespace {

using mpoly::Order;

constexpr const char* kTBetaToken = "<t*beta>";

// Shorthand builders keep the tables below close to their published shape.
RowLiteral nz(unsigned c) { return {c, true}; }
RowLiteral z(unsigned c) { return {c, false}; }

std::vector<FamilySpec> make_theorem2() {
  std::vector<FamilySpec> fams;

  {
    FamilySpec f;
    f.label = "n=1";
    f.n = 1;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta^4 + beta"};
    f.rows = {{{}, "Z_2^2 x| Z_3", "A_4", 24}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "n=2";
    f.n = 2;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta^16 + beta^8*a_1^4 + beta^2*a_1^2 + beta"};
    f.conditions = {{"a_1", 1}};
    f.rows = {{{{nz(0)}}, "Z_2^4", "", 32},
              {{{z(0)}}, "Z_2^4 x| Z_5", "", 160}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "n=3";
    f.n = 3;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta"};
    f.conditions = {{"a_2^8 + a_2 + a_1^4", 1},
                    {"a_2^12 + a_2*a_1^2 + a_0^4", 1}};
    f.rows = {{{{nz(0), nz(1)}}, "Z_1", "", 2},
              {{{z(0)}, {z(1)}}, "Z_7", "", 14}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "n=4";
    f.n = 4;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {
        "beta^64 + beta^32*a_2^8 + beta^16*a_1^8 + beta^4*a_1^4 + "
        "beta^2*a_2^2 + beta",
        "beta*a_3"};
    f.conditions = {{"a_3", 1}, {"a_2", 1}, {"a_1", 3}};
    f.rows = {{{{nz(0)}}, "Z_1", "", 2},
              {{{z(0)}, {nz(1)}}, "Z_2^6", "", 128},
              {{{z(0)}, {z(1)}, {nz(2)}}, "Z_2^6 x| Z_3", "", 384},
              {{{z(0)}, {z(1)}, {z(2)}}, "Z_2^6 x| Z_9", "", 1152}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "n=5";
    f.n = 5;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta"};
    f.conditions = {{"a_3", 1},
                    {"a_4 + a_2^4", 1},
                    {"a_4^8 + a_1^2", 1},
                    {"a_4^40 + a_4^18 + a_4*a_2^2 + a_0^8", 1}};
    f.rows = {{{{nz(0), nz(1), nz(2), nz(3)}}, "Z_1", "", 2},
              {{{z(0)}, {z(1)}, {z(2)}, {z(3)}}, "Z_11", "", 22}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "n=6";
    f.n = 6;
    f.alpha_legs = {{Order::grevlex, {}},
                    {Order::lex, {{"a_5", 0}, {"a_3", 0}}}};
    f.beta_relations = {"beta^2 + beta*a_3^2*a_5 + beta*a_5^7", kTBetaToken,
                        "beta*a_3^4*a_5 + beta*a_5^13 + beta"};
    f.conditions = {{"a_5*a_3^2 + a_5^7", -1},
                    {"a_5*a_3^4 + a_5^13 + 1", -1},
                    {t_text(), -1},
                    {"a_5", 1},
                    {"a_3", 1},
                    {"a_4^4 + a_2^2", 1},
                    {"a_4 + a_1^16", 1},
                    {"a_4^24 + a_4^4*a_1^8 + a_4*a_1^4 + a_0^8", 1}};
    f.rows = {{{{z(0), nz(1), nz(2)}, {nz(3), nz(4), nz(5), nz(6), nz(7)}},
               "Z_1",
               "",
               2},
              {{{nz(0)}, {z(1)}, {z(2)}, {nz(3), nz(4), nz(5), nz(6), nz(7)}},
               "Z_2",
               "",
               4},
              {{{z(3)}, {z(4)}, {z(5)}, {z(6)}, {z(7)}}, "Z_13", "", 26}};
    f.abbrev = {{2, "t"}};
    fams.push_back(std::move(f));
  }
  return fams;
}

std::vector<FamilySpec> make_theorem3() {
  std::vector<FamilySpec> fams;

  {
    FamilySpec f;
    f.label = "g=1";
    f.n = 1;
    f.sz_genus = 1;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta^4 + beta"};
    f.rows = {{{}, "Z_2^2 x| Z_3", "A_4", 24}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=2";
    f.n = 2;
    f.sz_genus = 2;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta^16 + beta^8*c_3^4 + beta^2*c_3^2 + beta"};
    f.conditions = {{"c_3", 1}};
    f.rows = {{{{nz(0)}}, "Z_2^4", "", 32},
              {{{z(0)}}, "Z_2^4 x| Z_5", "", 160}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=4";
    f.n = 4;
    f.sz_genus = 4;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {
        "beta^64 + beta^32*c_5^8 + beta^16*c_3^8 + beta^4*c_3^4 + "
        "beta^2*c_5^2 + beta"};
    f.conditions = {{"c_5", 1}, {"c_3", 3}};
    f.rows = {{{{nz(0)}}, "Z_2^6", "", 128},
              {{{z(0)}, {nz(1)}}, "Z_2^6 x| Z_3", "", 384},
              {{{z(0)}, {z(1)}}, "Z_2^6 x| Z_9", "", 1152}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=5";
    f.n = 5;
    f.sz_genus = 5;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta"};
    f.conditions = {{"c_3", 1}, {"c_1", 1}};
    f.rows = {{{{nz(0), nz(1)}}, "Z_1", "", 2},
              {{{z(0)}, {z(1)}}, "Z_11", "", 22}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=6";
    f.n = 6;
    f.sz_genus = 6;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta"};
    f.conditions = {{"c_3", 1}, {"c_1", 1}};
    f.rows = {{{{nz(0), nz(1)}}, "Z_1", "", 2},
              {{{z(0)}, {z(1)}}, "Z_13", "", 26}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=8";
    f.n = 8;
    f.sz_genus = 8;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {
        "beta^256 + beta^128*c_9^16 + beta^64*c_5^16 + beta^32*c_3^16 + "
        "beta^8*c_3^8 + beta^4*c_5^4 + beta^2*c_9^2 + beta"};
    f.conditions = {{"c_9", 1}, {"c_5", 1}, {"c_3", 1}};
    f.rows = {{{{nz(0), nz(1), nz(2)}}, "Z_2^8", "", 512},
              {{{z(0)}, {z(1)}, {z(2)}}, "Z_2^8 x| Z_17", "", 8704}};
    fams.push_back(std::move(f));
  }
  {
    FamilySpec f;
    f.label = "g=9";
    f.n = 9;
    f.sz_genus = 9;
    f.alpha_legs = {{Order::lex, {}}};
    f.beta_relations = {"beta"};
    f.conditions = {{"c", 1}};
    f.rows = {{{{nz(0)}}, "Z_1", "", 2}, {{{z(0)}}, "Z_19", "", 38}};
    fams.push_back(std::move(f));
  }
  return fams;
}

}  // namespace

const std::vector<FamilySpec>& theorem2_families() {
  static const std::vector<FamilySpec> fams = make_theorem2();
  return fams;
}

const std::vector<FamilySpec>& theorem3_families() {
  static const std::vector<FamilySpec> fams = make_theorem3();
  return fams;
}

const char* t_text() {
  return "a_1^8 + a_1^4*a_3^24 + a_1^4*a_5^72 + a_1^4*a_5^46 + a_1^4*a_5^20 + "
         "a_2^8*a_5^8 + a_2^2*a_3^28 + a_2^2*a_5^84 + a_2^2*a_5^71 + "
         "a_2^2*a_5^58 + a_2^2*a_5^45 + a_2^2*a_5^32 + a_2^2*a_5^19 + "
         "a_2^2*a_5^6 + a_3^30*a_4 + a_3^22 + a_3^4*a_4 + a_3^2*a_4*a_5^84 + "
         "a_3^2*a_4*a_5^71 + a_3^2*a_4*a_5^58 + a_3^2*a_4*a_5^45 + "
         "a_3^2*a_4*a_5^32 + a_3^2*a_4*a_5^19 + a_3^2*a_4*a_5^6 + "
         "a_3^2*a_5^60 + a_3^2*a_5^47 + a_3^2*a_5^8 + a_4^8*a_5^24 + "
         "a_4*a_5^12 + a_5^40 + a_5^14";
}

const char* t_beta_token() { return kTBetaToken; }

mpoly::MPoly parse_beta_relation(const mpoly::VarSet* vs, mpoly::Order o,
                                 const std::string& text) {
  if (text == kTBetaToken) {
    mpoly::MPoly t = mpoly::parse(vs, o, t_text());
    return t * mpoly::MPoly::var(vs, o, vs->beta());
  }
  return mpoly::parse(vs, o, text);
}

const std::vector<std::string>& n3_reduced_basis() {
  static const std::vector<std::string> basis = {
      "gamma_3 + alpha^3*a_1 + alpha^3*a_2^2 + a_1 + a_2^2",
      "gamma_2 + alpha^3*a_1^3 + alpha^3*a_1^2*a_2^2 + alpha^3*a_1*a_2^4 + "
      "alpha^3*a_2^6 + alpha^2*a_0^2 + alpha^2*a_1^3 + alpha^2*a_1*a_2^4 + "
      "alpha^2*a_2^6 + a_0^2 + a_1^2*a_2^2",
      "gamma_1 + alpha^3*a_1*a_2 + alpha^3*a_2^3 + alpha*a_0 + alpha*a_1*a_2 "
      "+ a_0 + a_2^3",
      "gamma_0^2 + gamma_0 + alpha^6*a_1^2*a_2^3 + alpha^6*a_2^7 + "
      "alpha^3*a_1^3*a_2 + alpha^3*a_1^2*a_2^3 + alpha^3*a_1*a_2^5 + "
      "alpha^3*a_2^7 + alpha^2*a_1^3*a_2 + alpha^2*a_1^2*a_2^3 + "
      "alpha^2*a_1*a_2^5 + alpha^2*a_2^7 + alpha*a_0*a_1^2 + alpha*a_0*a_2^4 "
      "+ alpha*a_1^3*a_2 + alpha*a_1*a_2^5 + a_0*a_1^2 + a_0*a_2^4 + "
      "a_1^3*a_2 + a_1^2*a_2^3 + a_1*a_2^5 + a_2^7",
      "beta + alpha*a_1^2 + alpha*a_2^4 + a_1^2 + a_2^4",
      "alpha^7 + 1",
      "alpha*a_0^4 + alpha*a_1^2*a_2 + alpha*a_2^12 + a_0^4 + a_1^2*a_2 + "
      "a_2^12",
      "alpha*a_1^4 + alpha*a_2^8 + alpha*a_2 + a_1^4 + a_2^8 + a_2"};
  return basis;
}

}  // namespace asaut::goldens
