#include "urn/parser.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace urn;

namespace {

Word W(const char* letters) { return Word::from_letters(letters); }

std::size_t error_position(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.position();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(parse("2 X^3 D + 5 X D^2 X") == Process{{W("XXXD"), 2}, {W("XDDX"), 5}});
  CHECK(parse("X D + 1/2 X + 1/2 D") ==
        Process{{W("XD"), 1}, {W("X"), Rational(1, 2)}, {W("D"), Rational(1, 2)}});
  CHECK(parse("").is_zero());
  CHECK(parse("  0 ").is_zero());
  CHECK(parse("2X^3D+5XD^2X") == parse("2 X^3 D + 5 X D^2 X"));
  CHECK(parse("3*X D") == Process{{W("XD"), 3}});
  CHECK(parse("X D + X D + 2/4 X D") == Process{{W("XD"), Rational(5, 2)}});
  CHECK(parse("X ^ 2") == Process{{W("XX"), 1}});
  CHECK(parse("1") == Process{{Word{}, 1}});
  CHECK(parse("0 X + D") == Process{{W("D"), 1}});
}

TEST_CASE("parse errors carry 1-based positions") {
  CHECK(error_position("X ^") == 3);
  CHECK(error_position("X + ") == 5);
  CHECK(error_position("X Y") == 3);
  CHECK(error_position("1/0 X") == 3);
  CHECK(error_position("1/ X") == 2);
  CHECK(error_position("X^0") == 3);
  CHECK(error_position("2 * + X") == 5);
  CHECK(error_position("+ X") == 1);
  CHECK_THROWS_AS(parse("X ^"), ParseError);
}

TEST_CASE("negative coefficients are a distinct error") {
  CHECK_THROWS_AS(parse("-2 X"), NegativeCoefficient);
  CHECK_THROWS_AS(parse("X + -D"), NegativeCoefficient);
  try {
    parse("X + -D");
  } catch (const NegativeCoefficient& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("pretty examples") {
  CHECK(pretty(Process{{W("XD"), 1}}) == "X D");
  CHECK(pretty(Process{{W("XXXD"), 2}, {W("XDDX"), 5}}) == "2 X^3 D + 5 X D^2 X");
  CHECK(pretty(Process{}) == "0");
  CHECK(pretty(Process{{Word{}, 3}, {W("D"), Rational(1, 2)}}) == "1/2 D + 3");
}

TEST_CASE("parse inverts pretty on random processes") {
  std::mt19937 rng(8675309);
  std::uniform_int_distribution<int> num(1, 12), den(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    Process p;
    std::uniform_int_distribution<unsigned> terms(0, 4);
    for (unsigned t = terms(rng); t > 0; --t) {
      Rational w(num(rng), den(rng));
      w.canonicalize();
      p.add(Word::from_letters(oracle::random_letters(rng, 0, 7)), w);
    }
    CHECK(parse(pretty(p)) == p);
  }
}

TEST_CASE("pretty after parse is idempotent") {
  for (const char* src : {"2 X^3 D + 5 X D^2 X", "X D + 1/2 X + 1/2 D", "", "D X", "D^2 X^2",
                          "X D + X", "X", "D", "X^2 D^3 X^3 D", "XD+XD", "4/2 D X X"}) {
    const std::string once = pretty(parse(src));
    CHECK(pretty(parse(once)) == once);
  }
}
