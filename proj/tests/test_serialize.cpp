#include <gtest/gtest.h>

#include "support.hpp"

using namespace alexinv;
using testsupport::P;
using testsupport::phi1;
using testsupport::phi2;

TEST(Json, PolynomialRoundTrip) {
  const IntPoly f = P({1, -3, 1});
  EXPECT_EQ(to_json(f), "[1,-3,1]");
  EXPECT_EQ(poly_from_json(parse_exact_json("[1,-3,1]")), f);
  EXPECT_EQ(to_json(IntPoly{}), "[]");
}

TEST(Json, BigIntegersStayExact) {
  const std::string text = "[123456789012345678901234567890,-98765432109876543210987654321,18446744073709551615]";
  const IntPoly f = poly_from_json(parse_exact_json(text));
  EXPECT_EQ(f[0], Integer("123456789012345678901234567890"));
  EXPECT_EQ(f[1], Integer("-98765432109876543210987654321"));
  EXPECT_EQ(f[2], Integer("18446744073709551615"));
  EXPECT_EQ(to_json(f), text);
}

TEST(Json, RejectsNonIntegers) {
  EXPECT_THROW(poly_from_json(parse_exact_json("[1.5]")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(parse_exact_json("[\"x\"]")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(parse_exact_json("{}")), std::invalid_argument);
  EXPECT_THROW(parse_exact_json("[1,"), std::invalid_argument);
}

TEST(Json, MatrixMustBeSquare) {
  EXPECT_NO_THROW(matrix_from_json(parse_exact_json("[[[1],[0,1]],[[2],[3]]]")));
  try {
    matrix_from_json(parse_exact_json("[[[1],[0,1]],[[2]]]"));
    FAIL();
  } catch (const std::invalid_argument& ex) {
    EXPECT_NE(std::string(ex.what()).find("row 2"), std::string::npos);
  }
}

TEST(Json, InvariantsRoundTripIsByteIdentical) {
  const auto inv = compute_invariants(testsupport::pd_of("le10.csv", "8_18"));
  const std::string text = to_json(inv);
  EXPECT_EQ(text, R"({"delta":[[1,-4,5,-4,1],[1,-1,1]],"Delta":[[1,-5,10,-13,10,-5,1],[1,-1,1]],"ambiguous":[],"method":"fast"})");
  const auto back = parse_invariants(text);
  EXPECT_TRUE(back.same_values(inv));
  EXPECT_EQ(to_json(back), text);
}

TEST(Json, PolicyNames) {
  EXPECT_EQ(policy_from_string("fast"), Policy::fast);
  EXPECT_EQ(policy_from_string("fast-with-fallback"), Policy::fast_with_fallback);
  EXPECT_EQ(policy_from_string("oracle-only"), Policy::oracle_only);
  EXPECT_THROW(policy_from_string("slow"), std::invalid_argument);
}

TEST(Pretty, Factored) {
  EXPECT_EQ(to_factored(phi1() * phi2()), "(t^2 - 3*t + 1)*(t^2 - t + 1)");
  EXPECT_EQ(to_factored(phi1() * phi1()), "(t^2 - t + 1)^2");
  EXPECT_EQ(to_factored(phi1()), "t^2 - t + 1");
  EXPECT_EQ(to_factored(P({1})), "1");
}

TEST(Pretty, Invariants) {
  const auto inv = compute_invariants(testsupport::pd_of("le10.csv", "8_18"));
  const std::string out = to_pretty(inv);
  EXPECT_NE(out.find("delta_2 = t^2 - t + 1\n"), std::string::npos);
  EXPECT_NE(out.find("Delta_3 = 1\n"), std::string::npos);
  EXPECT_NE(out.find("method: fast\n"), std::string::npos);
}
