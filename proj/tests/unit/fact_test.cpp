#include <gtest/gtest.h>

#include "oracle.h"
#include "pwim/error.h"
#include "pwim/fact.h"

namespace pwim {
namespace {

using S = Separator;

TEST(ParseFact, ChildThenExclusive) {
  const Fact f = parse_fact("at.bar!gabe");
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.segments[0], (Segment{S::kChild, "at"}));
  EXPECT_EQ(f.segments[1], (Segment{S::kChild, "bar"}));
  EXPECT_EQ(f.segments[2], (Segment{S::kExclusive, "gabe"}));
}

TEST(ParseFact, AllExclusive) {
  const Fact f = parse_fact("mood!gabe!drunk");
  EXPECT_EQ(f.segments, (std::vector<Segment>{{S::kChild, "mood"}, {S::kExclusive, "gabe"}, {S::kExclusive, "drunk"}}));
}

TEST(ParseFact, TrimsWhitespace) { EXPECT_EQ(parse_fact("  at.bar!gabe\n").str(), "at.bar!gabe"); }

TEST(ParseFact, RejectsMalformed) {
  for (const char* bad : {"at..bar", "", "   ", ".at", "!at", "at.", "at.Bar", "at.b-r", "at. bar", "at.X"}) {
    try {
      parse_fact(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedFact) << bad;
    }
  }
}

TEST(ParseFact, RoundTripProperty) {
  oracle::Gen gen(7);
  for (int i = 0; i < 500; ++i) {
    const Fact f = gen.fact(5);
    EXPECT_EQ(parse_fact(f.str()), f);
  }
}

TEST(ParsePattern, VariablesAndPolarity) {
  const Pattern p = parse_pattern("not holding.player!Drink");
  EXPECT_TRUE(p.negated);
  EXPECT_EQ(p.variables(), std::vector<std::string>{"Drink"});
  EXPECT_EQ(p.str(), "not holding.player!Drink");
  EXPECT_FALSE(p.is_ground());
}

TEST(ParsePattern, GroundPositiveIsAFact) {
  const Pattern p = parse_pattern("at.bar!gabe");
  EXPECT_TRUE(p.is_ground());
  EXPECT_EQ(p, to_pattern(parse_fact("at.bar!gabe")));
}

TEST(ParsePattern, VariableTokenRules) {
  EXPECT_TRUE(is_variable_token("X"));
  EXPECT_TRUE(is_variable_token("Drink_2"));
  EXPECT_FALSE(is_variable_token("x"));
  EXPECT_FALSE(is_variable_token("2X"));
  EXPECT_THROW(parse_pattern("at.X-1"), Error);
  EXPECT_THROW(parse_pattern("not "), Error);
}

}  // namespace
}  // namespace pwim
