#include <random>

#include <gtest/gtest.h>

#include "krk0/cyclotomic.hpp"
#include "krk0/errors.hpp"
#include "krk0/io.hpp"
#include "oracles.hpp"

using namespace krk0;

namespace {

IntPoly P(std::initializer_list<int> ascending) {
  std::vector<Integer> c;
  for (int x : ascending) c.emplace_back(x);
  return IntPoly(std::move(c));
}

std::size_t error_position(std::string_view text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return static_cast<std::size_t>(-1);
}

}  // namespace

TEST(ParsePoly, Accepts) {
  EXPECT_EQ(parse_poly("t^2 - t + 1"), cyclotomic(6));
  EXPECT_EQ(parse_poly("1-t^6"), P({1, 0, 0, 0, 0, 0, -1}));
  EXPECT_EQ(parse_poly("2*t^3-1"), P({-1, 0, 0, 2}));
  EXPECT_EQ(parse_poly("2t^3 - 1"), P({-1, 0, 0, 2}));
  EXPECT_EQ(parse_poly("-t"), P({0, -1}));
  EXPECT_EQ(parse_poly("0"), IntPoly{});
  EXPECT_EQ(parse_poly("t + t"), P({0, 2}));
  EXPECT_EQ(parse_poly(" 7 "), P({7}));
  EXPECT_EQ(parse_poly("123456789012345678901234567890"),
            IntPoly::constant(*parse_integer("123456789012345678901234567890")));
}

TEST(ParsePoly, Rejects) {
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("x + 1"), ParseError);
  EXPECT_THROW(parse_poly("t^"), ParseError);
  EXPECT_THROW(parse_poly("t^-1"), ParseError);
  EXPECT_THROW(parse_poly("1 +"), ParseError);
  EXPECT_EQ(error_position("t + x"), 4u);
  try {
    parse_poly("t + x");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("at position 4"), std::string::npos);
  }
}

TEST(FormatPoly, Examples) {
  EXPECT_EQ(format_poly(cyclotomic(6)), "t^2 - t + 1");
  EXPECT_EQ(format_poly(P({-1, 0, 0, 2})), "2t^3 - 1");
  EXPECT_EQ(format_poly(IntPoly{}), "0");
  EXPECT_EQ(format_poly(P({0, -1})), "-t");
  EXPECT_EQ(format_poly(P({5})), "5");
}

TEST(FormatPoly, RoundTrip) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const IntPoly p = oracle::random_poly(rng, 10, 1000, false) * Integer(i % 7 == 0 ? 0 : 1);
    EXPECT_EQ(parse_poly(format_poly(p)), p);
    EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  }
}

TEST(Json, Integers) {
  EXPECT_TRUE(integer_to_json(Integer(42)).is_number_integer());
  const Integer big = *parse_integer("-99999999999999999999999");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(json(7)), 7);
  EXPECT_THROW(integer_from_json(json("abc")), Error);
}

TEST(Json, RoundTrips) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    const IntMatrix m = oracle::random_matrix(rng, static_cast<Eigen::Index>(rng() % 4),
                                              static_cast<Eigen::Index>(1 + rng() % 4), 1000000);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  }
  const FinAbGroup g(2, {Integer(2), Integer(6)});
  EXPECT_EQ(group_from_json(group_to_json(g)), g);
  KRDescriptor d;
  d.kind = SecondKind{"3", 2, 5};
  d.alpha2 = 3;
  d.alpha3 = 4;
  EXPECT_EQ(descriptor_from_json(descriptor_to_json(d)), d);
  KRDescriptor n;
  EXPECT_EQ(descriptor_from_json(descriptor_to_json(n)), n);
}

TEST(Csv, FlattensLeaves) {
  json j = {{"a", 1}, {"b", {{"c", "x"}, {"d", json::array({1, 2})}}}};
  const std::string csv = json_to_csv(j);
  EXPECT_EQ(csv.rfind("path,value\n", 0), 0u);
  EXPECT_NE(csv.find("a,1\n"), std::string::npos);
  EXPECT_NE(csv.find("b.c,x\n"), std::string::npos);
  EXPECT_NE(csv.find("b.d.1,2\n"), std::string::npos);
}
