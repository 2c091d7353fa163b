#pragma once
// Embedded golden data: the published stratification tables (conditions,
// group structures, orders), the 31-term t polynomial, and the displayed
// n=3 reduced basis.  The analyzer reproduces these live and the test suite
// compares bit-exactly against them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asaut/mpoly.hpp"

namespace asaut::goldens {

// One Groebner leg of a family's published workflow.
struct AlphaLeg {
  mpoly::Order order = mpoly::Order::lex;
  std::map<std::string, unsigned> presets;
};

// A literal inside a table row's condition clause: condition index plus the
// required status.  A group is satisfied when any literal holds; a row is the
// conjunction of its groups.
struct RowLiteral {
  unsigned condition = 0;
  bool nonzero = false;
};

struct RowSpec {
  std::vector<std::vector<RowLiteral>> groups;
  std::string structure;
  std::string alias;  // cosmetic isomorphism name, usually empty
  std::uint64_t aut_order = 0;
};

// A stratum condition polynomial (text in the family's parameter ring) and,
// when it arises on the alpha side as cofactor*(alpha^d + 1), the exponent d.
struct ConditionSpec {
  std::string poly;
  int alpha_d = -1;  // -1: the condition comes from the unipotent relations
};

struct FamilySpec {
  std::string label;  // "n=4", "g=8"
  unsigned n = 1;
  int sz_genus = -1;  // >= 0 selects the Scholten-Zhu family
  std::vector<AlphaLeg> alpha_legs;
  std::vector<std::string> beta_relations;  // expected unipotent relation texts
  std::vector<ConditionSpec> conditions;
  std::vector<RowSpec> rows;
  std::map<unsigned, std::string> abbrev;  // condition index -> display name
};

const std::vector<FamilySpec>& theorem2_families();
const std::vector<FamilySpec>& theorem3_families();

// The polynomial t from the n=6 unipotent relation t*beta = 0, as displayed
// (31 monomials).
const char* t_text();

// Placeholder token used in FamilySpec::beta_relations for the relation
// t*beta, which is too large to inline as text.
const char* t_beta_token();

// Parses a golden beta-relation text in the given ring, expanding the t*beta
// token.
mpoly::MPoly parse_beta_relation(const mpoly::VarSet* vs, mpoly::Order o,
                                 const std::string& text);

// The displayed 8-element reduced lex basis of the n=3 condition system.
const std::vector<std::string>& n3_reduced_basis();

}  // namespace asaut::goldens
