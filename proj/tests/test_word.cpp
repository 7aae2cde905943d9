#include "pwrep/word.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace pwrep;

TEST_CASE("symbol basics") {
  CHECK(Symbol::hole().is_hole());
  CHECK(Symbol::letter(3).index() == 3);
  CHECK(Symbol::letter(0) != Symbol::hole());
  CHECK(compatible(Symbol::hole(), Symbol::letter(5)));
  CHECK(compatible(Symbol::letter(2), Symbol::letter(2)));
  CHECK_FALSE(compatible(Symbol::letter(1), Symbol::letter(2)));
  // Letters order before the hole.
  CHECK(Symbol::letter(1).order_key() < Symbol::hole().order_key());
}

TEST_CASE("parse digit and human conventions") {
  // 0210 over the binary alphabet is 0-hole-1-0.
  PartialWord w = PartialWord::parse("0210", 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == Symbol::letter(0));
  CHECK(w[1].is_hole());
  CHECK(w[2] == Symbol::letter(1));
  CHECK(w.digits() == "0210");
  CHECK(w.pretty() == "0.10");
  CHECK(w.pretty('*') == "0*10");

  CHECK(PartialWord::parse("0.10") == w);
  CHECK(PartialWord::parse("0◇10") == w);
  CHECK(PartialWord::parse("0 1 0", 2).size() == 3);

  // Without an explicit alphabet, digits are all letters.
  PartialWord t = PartialWord::parse("0210");
  CHECK(t.alphabet_size() == 3);
  CHECK(t.is_full());

  CHECK_THROWS_AS(PartialWord::parse("01x"), std::invalid_argument);
  CHECK_THROWS_AS(PartialWord::parse("031", 2), std::invalid_argument);
}

TEST_CASE("hole bookkeeping and factors") {
  PartialWord w = PartialWord::parse("01.0.1");
  CHECK(w.hole_count() == 2);
  CHECK_FALSE(w.is_full());
  CHECK(w.factor(1, 3) == PartialWord::parse("1.0"));
  CHECK(w.prefix(2) == PartialWord::parse("01"));
  CHECK_THROWS_AS(w.factor(4, 3), std::out_of_range);

  PartialWord v(2);
  v.push_back(Symbol::letter(1));
  v.push_back(Symbol::hole());
  CHECK(v.digits() == "12");
  v.pop_back();
  CHECK(v.digits() == "1");
  CHECK_THROWS_AS(v.push_back(Symbol::letter(2)), std::invalid_argument);
}

TEST_CASE("compatibility and containment") {
  auto p = [](const char* s) { return PartialWord::parse(s, 2); };
  CHECK(compatible(p("02"), p("00")));
  CHECK_FALSE(compatible(p("01"), p("10")));
  CHECK(compatible(p("210"), p("020")));
  CHECK_FALSE(compatible(p("0"), p("01")));

  CHECK(contained_in(PartialWord::parse("01101.011"),
                     PartialWord::parse("011011011")));
  CHECK(contained_in(p("02"), p("00")));
  CHECK_FALSE(contained_in(p("00"), p("02")));

  // Symmetry/reflexivity; containment in a full word implies
  // compatibility.
  for (const char* a : {"00", "01", "02", "20", "22", "11"}) {
    CHECK(compatible(p(a), p(a)));
    for (const char* b : {"00", "01", "10", "11"}) {
      CHECK(compatible(p(a), p(b)) == compatible(p(b), p(a)));
      if (contained_in(p(a), p(b))) CHECK(compatible(p(a), p(b)));
    }
  }
}

TEST_CASE("shortlex order with letters before hole") {
  auto p = [](const char* s) { return PartialWord::parse(s, 2); };
  CHECK(p("1") < p("00"));
  CHECK(p("0") < p("1"));
  CHECK(p("1") < p("2"));  // hole sorts last
  CHECK(p("01") < p("02"));
  CHECK_FALSE(p("02") < p("01"));
  CHECK_FALSE(p("01") < p("01"));
}
