#include "pwrep/morphism.hpp"

#include <stdexcept>

#include "doctest.h"
#include "pwrep/catalog.hpp"
#include "pwrep/repetition.hpp"

using namespace pwrep;

TEST_CASE("morphism parse, apply, round-trip") {
  Morphism h = Morphism::parse("0->1100, 1->0112, 2->1010", 2);
  CHECK(h.domain_size() == 3);
  CHECK(h.target_size() == 2);
  CHECK(h.uniform_width() == size_t{4});
  CHECK(h.image(1)[3].is_hole());
  CHECK(h.to_string() == "0->1100, 1->0112, 2->1010");

  PartialWord in = PartialWord::parse("012", 3);
  CHECK(apply(h, in).digits() == "110001121010");

  // Without an explicit target size every digit is a letter.
  Morphism walnut = Morphism::parse("0->1100, 1->0112, 2->1010");
  CHECK(walnut.target_size() == 3);
  CHECK(apply(walnut, in).is_full());

  Morphism id = Morphism::parse("0->0, 1->1, 2->2");
  CHECK(id.is_coding());
  CHECK(apply(id, in) == in);

  CHECK_THROWS_AS(Morphism::parse("0->"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("0->1, 0->0"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("1->0"), std::invalid_argument);
  CHECK_THROWS_AS(apply(h, PartialWord::parse("03", 4)),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply(h, PartialWord::parse("03", 3)),
                  std::invalid_argument);  // no hole image
}

TEST_CASE("tau maps 01 to 013023") {
  const Morphism& tau = catalog_morphism("tau");
  PartialWord out = apply(tau, PartialWord::parse("01", 2));
  CHECK(out.digits() == "013023");
  CHECK(out.hole_count() == 2);
}

TEST_CASE("fixed point prefixes match the displayed words") {
  CHECK(fixed_point_prefix(catalog_morphism("tm"), 0, 32).digits() ==
        "01101001100101101001011001101001");
  CHECK(fixed_point_prefix(catalog_morphism("vtm"), 0, 24).digits() ==
        "012021012102012021020121");
  CHECK(fixed_point_prefix(catalog_morphism("f"), 0, 8).digits() ==
        "01232451");
}

TEST_CASE("fixed point errors") {
  Morphism swap = Morphism::parse("0->10, 1->01");
  CHECK_THROWS_AS(fixed_point_prefix(swap, 0, 4), std::invalid_argument);
  // sigma's images contain holes
  CHECK_THROWS_AS(fixed_point_prefix(catalog_morphism("sigma"), 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_prefix(catalog_morphism("tm"), 7, 4),
                  std::invalid_argument);
}

TEST_CASE("fixed point coherence and homomorphism law") {
  for (const char* name : {"tm", "vtm", "f", "rho", "gamma", "psi"}) {
    const Morphism& m = catalog_morphism(name);
    PartialWord longer = fixed_point_prefix(m, 0, 4000);
    PartialWord shorter = fixed_point_prefix(m, 0, 1234);
    CHECK(longer.prefix(1234) == shorter);

    // psi(xy) = psi(x) psi(y) on a few splits
    for (size_t cut : {size_t{0}, size_t{1}, size_t{17}, size_t{100}}) {
      PartialWord u = shorter.prefix(cut);
      PartialWord v = shorter.factor(cut, 400);
      PartialWord joined = apply(m, u);
      PartialWord rest = apply(m, v);
      std::vector<Symbol> cat(joined.symbols());
      cat.insert(cat.end(), rest.symbols().begin(), rest.symbols().end());
      std::vector<Symbol> whole(u.symbols());
      whole.insert(whole.end(), v.symbols().begin(), v.symbols().end());
      CHECK(PartialWord(cat, m.target_size()) ==
            apply(m, PartialWord(whole, m.domain_size())));
    }
  }
}

TEST_CASE("catalog coverage and derived prefixes") {
  CHECK(catalog_morphism_names().size() == 18);
  CHECK(catalog_word_ids().size() == 18);
  CHECK_THROWS_AS(catalog_morphism("nope"), std::invalid_argument);
  CHECK_THROWS_AS(named_word_prefix("nope", 4), std::invalid_argument);
  CHECK_THROWS_AS(named_word_prefix("tm", kMaxPrefixLength + 1),
                  std::invalid_argument);

  CHECK(named_word_prefix("h_vtm", 12).digits() == "110001121010");
  CHECK(named_word_prefix("tau_tm", 9).digits() == "013023023");
  CHECK(named_word_prefix("g_f_fix", 8).digits() == "01010011");
  CHECK(named_word_prefix("tm", 6).digits() == "011010");

  // Image words equal morphism application to the inner prefix.
  struct Pair {
    const char* word;
    const char* morphism;
    const char* inner;
  };
  for (const Pair& p : {Pair{"h_vtm", "h", "vtm"},
                        Pair{"g_vtm", "g_full", "vtm"},
                        Pair{"g_f_fix", "g", "f_fix"},
                        Pair{"phi_psi_fix", "phi", "psi_fix"},
                        Pair{"sigma_rho_fix", "sigma", "rho_fix"},
                        Pair{"tau_tm", "tau", "tm"},
                        Pair{"delta_gamma_fix", "delta", "gamma_fix"},
                        Pair{"phi0_delta_gamma_fix", "phi0",
                             "delta_gamma_fix"}}) {
    PartialWord inner = named_word_prefix(p.inner, 500);
    PartialWord expect = apply(catalog_morphism(p.morphism), inner);
    PartialWord got = named_word_prefix(p.word, expect.size());
    CHECK(got == expect);
  }

  // phi_i substitutes the hole for letter i only.
  PartialWord base = named_word_prefix("delta_gamma_fix", 1000);
  for (int i = 0; i < 5; ++i) {
    PartialWord w =
        named_word_prefix("phi" + std::to_string(i) + "_delta_gamma_fix",
                          1000);
    REQUIRE(w.size() == 1000);
    for (size_t k = 0; k < 1000; ++k) {
      if (base[k].index() == i) {
        CHECK(w[k].is_hole());
      } else {
        CHECK(w[k] == base[k]);
      }
    }
  }
}

TEST_CASE("hole sparsity of the dense constructions") {
  CHECK(hole_sparsity(named_word_prefix("sigma_rho_fix", 40000)) == 4);
  CHECK(hole_sparsity(named_word_prefix("tau_tm", 30000)) == 3);
}

TEST_CASE("bounded repetition checks on the catalog words") {
  const size_t L = 100000;
  CHECK_FALSE(find_square(named_word_prefix("h_vtm", L), 4));
  CHECK_FALSE(find_square(named_word_prefix("g_f_fix", L), 7));
  CHECK_FALSE(find_antisquare(named_word_prefix("g_f_fix", L), 3));
  CHECK_FALSE(find_nontrivial_square(named_word_prefix("sigma_rho_fix", L)));
  CHECK_FALSE(find_cube(named_word_prefix("tau_tm", L)));
  for (int i = 0; i < 5; ++i) {
    CHECK_FALSE(find_weak_overlap(named_word_prefix(
        "phi" + std::to_string(i) + "_delta_gamma_fix", L)));
  }
  // h(vtm) does contain order-3 squares once the hole is introduced.
  CHECK(find_square(named_word_prefix("h_vtm", L), 3));
  // The full-word variant g(vtm) keeps all squares at order <= 3.
  CHECK_FALSE(find_square(named_word_prefix("g_vtm", L), 4));
}
