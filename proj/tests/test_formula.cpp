#include <gtest/gtest.h>

#include <set>

#include "pnsat/dimacs.hpp"
#include "pnsat/formula.hpp"
#include "pnsat/generate.hpp"
#include "pnsat/rng.hpp"
#include "support/fixtures.hpp"

namespace pnsat {
namespace {

TEST(SplitMix64, MatchesReferenceVectors) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ull);
  EXPECT_EQ(rng.next(), 0x06c45d188009454full);
  EXPECT_EQ(rng.next(), 0xf88bb8a8724c81ecull);

  SplitMix64 rng2(1234567);
  EXPECT_EQ(rng2.next(), 0x599ed017fb08fc85ull);
  EXPECT_EQ(rng2.next(), 0x2c73f08458540fa5ull);
}

TEST(Lit, BasicProperties) {
  const Lit a(3, false);
  EXPECT_EQ(a.var(), 3);
  EXPECT_FALSE(a.negated());
  EXPECT_EQ(a.to_dimacs(), 3);
  EXPECT_EQ((~a).to_dimacs(), -3);
  EXPECT_EQ(~~a, a);
  EXPECT_EQ(Lit::from_dimacs(-7), Lit(7, true));
  EXPECT_LT(Lit(1, true), Lit(2, false));
  EXPECT_LT(Lit(2, false), Lit(2, true));
}

TEST(ParseDimacs, SmallFormula) {
  const auto parsed = parse_dimacs("p cnf 3 2\n1 -3 0\n2 3 -1 0");
  EXPECT_EQ(parsed.formula.num_vars, 3);
  ASSERT_EQ(parsed.formula.clause_count(), 2u);
  EXPECT_EQ(parsed.dropped_tautologies, 0);
  EXPECT_EQ(parsed.formula.clauses[0].lits,
            (std::vector<Lit>{Lit::from_dimacs(1), Lit::from_dimacs(-3)}));
}

TEST(ParseDimacs, CommentAndUnit) {
  const auto parsed = parse_dimacs("c comment\np cnf 1 1\n1 0");
  EXPECT_EQ(parsed.formula.num_vars, 1);
  ASSERT_EQ(parsed.formula.clause_count(), 1u);
  EXPECT_EQ(parsed.formula.clauses[0].lits, std::vector<Lit>{Lit(1, false)});
}

TEST(ParseDimacs, DropsTautology) {
  const auto parsed = parse_dimacs("p cnf 2 1\n1 -1 0");
  EXPECT_EQ(parsed.formula.clause_count(), 0u);
  EXPECT_EQ(parsed.dropped_tautologies, 1);
}

TEST(ParseDimacs, RemovesDuplicateLiterals) {
  const auto parsed = parse_dimacs("p cnf 2 1\n1 1 2 0");
  ASSERT_EQ(parsed.formula.clause_count(), 1u);
  EXPECT_EQ(parsed.formula.clauses[0].lits,
            (std::vector<Lit>{Lit(1, false), Lit(2, false)}));
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs(""), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 1 1\n1 0"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0"), ParseError);   // var out of range
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2"), ParseError);   // missing 0
  EXPECT_THROW(parse_dimacs("1 0\np cnf 1 1"), ParseError);   // clause before header
  try {
    parse_dimacs("p cnf 2 2\n1 0\nbogus 0");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(EmitDimacs, UnitAndEmpty) {
  CnfFormula f;
  f.num_vars = 1;
  f.clauses.push_back(Clause{{Lit(1, false)}, false});
  EXPECT_EQ(emit_dimacs(f), "p cnf 1 1\n1 0\n");

  EXPECT_EQ(emit_dimacs(CnfFormula{}), "p cnf 0 0\n");
}

TEST(EmitDimacs, ExampleRoundTrip) {
  const CnfFormula f = testing::example_formula();
  EXPECT_EQ(f.num_vars, 12);
  EXPECT_EQ(f.clause_count(), 11u);
  EXPECT_EQ(emit_dimacs(f), testing::example_dimacs());
  const auto reparsed = parse_dimacs(emit_dimacs(f));
  EXPECT_EQ(emit_dimacs(reparsed.formula), emit_dimacs(f));
}

TEST(AvgClauseLen, Example) {
  EXPECT_NEAR(avg_clause_len(testing::example_formula()), 26.0 / 11.0, 1e-12);
}

TEST(AvgClauseLen, UniformAndSingle) {
  EXPECT_DOUBLE_EQ(avg_clause_len(generate_ksat(10, 40, 3, 5)), 3.0);

  CnfFormula f;
  f.num_vars = 5;
  f.clauses.push_back(Clause{{Lit(1, false), Lit(2, true), Lit(3, false),
                              Lit(4, true), Lit(5, false)},
                             false});
  EXPECT_DOUBLE_EQ(avg_clause_len(f), 5.0);
}

TEST(AvgClauseLen, EmptyFormulaThrows) {
  EXPECT_THROW(avg_clause_len(CnfFormula{}), std::domain_error);
}

TEST(GenerateKsat, GoldenBytes) {
  // Frozen against an independent implementation of the documented
  // algorithm (SplitMix64 + per-clause partial Fisher-Yates + coin signs).
  EXPECT_EQ(emit_dimacs(generate_ksat(5, 4, 3, 42)),
            "p cnf 5 4\n"
            "4 1 -2 0\n"
            "-1 -3 5 0\n"
            "-4 2 5 0\n"
            "-3 2 -1 0\n");
}

TEST(GenerateKsat, ShapeAndDistinctVars) {
  const CnfFormula f = generate_ksat(100, 426, 3, 1);
  EXPECT_EQ(f.num_vars, 100);
  ASSERT_EQ(f.clause_count(), 426u);
  for (const Clause& c : f.clauses) {
    ASSERT_EQ(c.lits.size(), 3u);
    std::set<int> vars;
    for (Lit l : c.lits) vars.insert(l.var());
    EXPECT_EQ(vars.size(), 3u);
  }
}

TEST(GenerateKsat, DegenerateAndErrors) {
  EXPECT_EQ(generate_ksat(5, 0, 3, 7).clause_count(), 0u);
  EXPECT_THROW(generate_ksat(3, 1, 4, 0), std::invalid_argument);
  EXPECT_THROW(generate_ksat(3, -1, 2, 0), std::invalid_argument);
}

TEST(GenerateKsat, FullWidthClausesUseAllVariables) {
  const CnfFormula f = generate_ksat(3, 1000, 3, 2);
  for (const Clause& c : f.clauses) {
    std::set<int> vars;
    for (Lit l : c.lits) vars.insert(l.var());
    ASSERT_EQ(vars, (std::set<int>{1, 2, 3}));
  }
}

TEST(GenerateKsat, Deterministic) {
  EXPECT_EQ(emit_dimacs(generate_ksat(60, 255, 3, 123)),
            emit_dimacs(generate_ksat(60, 255, 3, 123)));
  EXPECT_NE(emit_dimacs(generate_ksat(60, 255, 3, 123)),
            emit_dimacs(generate_ksat(60, 255, 3, 124)));
}

TEST(GenerateKsat, RoundTripThroughDimacs) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const CnfFormula f = generate_ksat(40, 170, 3, seed);
    const auto reparsed = parse_dimacs(emit_dimacs(f));
    EXPECT_EQ(reparsed.formula.num_vars, f.num_vars);
    EXPECT_EQ(emit_dimacs(reparsed.formula), emit_dimacs(f));
  }
}

TEST(GenerateKsat, PolarityMarginals) {
  const CnfFormula f = generate_ksat(50, 4000, 3, 99);  // 12000 literals
  std::size_t total = 0, positive = 0;
  for (const Clause& c : f.clauses) {
    for (Lit l : c.lits) {
      ++total;
      if (!l.negated()) ++positive;
    }
  }
  ASSERT_GE(total, 10000u);
  const double frac = static_cast<double>(positive) / static_cast<double>(total);
  EXPECT_NEAR(frac, 0.5, 0.02);
}

TEST(NormalizeClause, TautologyAndDuplicates) {
  std::vector<Lit> lits{Lit(1, false), Lit(2, true), Lit(1, true)};
  EXPECT_TRUE(normalize_clause(lits));

  std::vector<Lit> dup{Lit(2, true), Lit(2, true), Lit(3, false)};
  EXPECT_FALSE(normalize_clause(dup));
  EXPECT_EQ(dup, (std::vector<Lit>{Lit(2, true), Lit(3, false)}));
}

}  // namespace
}  // namespace pnsat
