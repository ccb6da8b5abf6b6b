#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "galois/orbit.hpp"
#include "galois/permutation.hpp"

using namespace galois;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

}  // namespace

TEST_CASE("parse and format cycle notation") {
  const auto p = parse_perm("(1 2 3)(4 5)", 5);
  CHECK(p.images_one_based() == std::vector<int>{2, 3, 1, 5, 4});
  CHECK(format_perm(p) == "(1 2 3)(4 5)");
  CHECK(format_perm(parse_perm("(3,1)", 3)) == "(1 3)");
  CHECK(format_perm(parse_perm("(5 4)(3 2 1)", 5)) == "(1 3 2)(4 5)");
  CHECK(parse_perm("id", 4).is_identity());
  CHECK(parse_perm("()", 4).is_identity());
  CHECK(parse_perm("", 2).is_identity());
  CHECK(format_perm(Permutation(3)) == "id");
  CHECK(parse_perm("(1 2)(3)", 3) == parse_perm("(1 2)", 3));
}

TEST_CASE("parse errors carry kind and position") {
  auto kind_of = [](const char* text, int degree) {
    try {
      parse_perm(text, degree);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ParseError::Kind::BadHeader;
  };
  CHECK(kind_of("(1 2 1)", 3) == ParseError::Kind::RepeatedPoint);
  CHECK(kind_of("(1 2)(2 3)", 3) == ParseError::Kind::RepeatedPoint);
  CHECK(kind_of("(1 4)", 3) == ParseError::Kind::PointOutOfRange);
  CHECK(kind_of("(0 1)", 3) == ParseError::Kind::PointOutOfRange);
  CHECK(kind_of("(1 2", 3) == ParseError::Kind::MalformedParentheses);
  CHECK(kind_of(")(1 2)", 3) == ParseError::Kind::MalformedParentheses);
  CHECK(kind_of("1 2)", 3) == ParseError::Kind::InvalidToken);
  CHECK(kind_of("((1 2))", 3) == ParseError::Kind::MalformedParentheses);
  CHECK(kind_of("(1 x)", 3) == ParseError::Kind::InvalidToken);
  try {
    parse_perm("(1 2)(3 9)", 4);
  } catch (const ParseError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("composition applies the right factor first") {
  const auto p = parse_perm("(1 2)", 3);
  const auto q = parse_perm("(2 3)", 3);
  CHECK(format_perm(p * q) == "(1 2 3)");
  CHECK(format_perm(q * p) == "(1 3 2)");
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), InvalidArgument);
}

TEST_CASE("coordinate action is a right action") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % 4);
    const auto p = random_perm(n, rng), q = random_perm(n, rng);
    std::vector<int> a(n);
    for (int& v : a) v = 1 + static_cast<int>(rng() % k);
    REQUIRE(act_tuple(a, p * q) == act_tuple(act_tuple(a, p), q));
  }
}

TEST_CASE("keys, inverse and sign") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % kMaxDegree);
    const auto p = random_perm(n, rng), q = random_perm(n, rng);
    CHECK(Permutation::from_key(p.key(), n) == p);
    CHECK((p * p.inverse()).is_identity());
    CHECK(inverse_key(p.key(), n) == p.inverse().key());
    CHECK(compose_keys(p.key(), q.key(), n) == (p * q).key());
    CHECK(sign(p * q) == sign(p) * sign(q));
    CHECK(((p.key() < q.key()) == (p.images_one_based() < q.images_one_based())));
  }
  CHECK(sign(parse_perm("(1 2)", 2)) == -1);
  CHECK(sign(parse_perm("(1 2 3)", 3)) == 1);
  CHECK(sign(parse_perm("(1 2 3 4)", 4)) == -1);
  CHECK(identity_key(5) == Permutation(5).key());
}

TEST_CASE("from_images rejects non-bijections") {
  const std::vector<int> bad{0, 0, 1};
  CHECK_THROWS_AS(Permutation::from_images(bad), InvalidArgument);
  const std::vector<int> one_based{2, 3, 1};
  CHECK(format_perm(Permutation::from_images_one_based(one_based)) == "(1 2 3)");
  CHECK(parse_perm("(2 4)", 4).support() == std::vector<int>{1, 3});
  CHECK(parse_perm("(1 2)", 2).extended(4).degree() == 4);
}
