#include <random>

#include "catch_amalgamated.hpp"

#include "garside/families.hpp"
#include "garside/garside_structure.hpp"
#include "oracles.hpp"

using namespace garside;

namespace {
  // All ways of writing x as a product of atoms, as words.
  void factorizations(MonoidTable const& t, Element x, word_type& suffix,
                      std::vector<word_type>& out) {
    if (x.length == 0) {
      out.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (auto node : t.right_predecessors(x)) {
      suffix.push_back(t.node_letter(node));
      factorizations(t, t.node_element(x, node), suffix, out);
      suffix.pop_back();
    }
  }

  std::vector<word_type> factorizations(MonoidTable const& t, Element x) {
    std::vector<word_type> out;
    word_type              suffix;
    factorizations(t, x, suffix, out);
    return out;
  }
}  // namespace

TEST_CASE("atom conjugation") {
  SECTION("A_2: delta swaps s and t") {
    MonoidTable t(dihedral_artin_presentation(3), 6);
    auto        p = atom_conjugation(t, t.element_of("s t s"));
    REQUIRE(p(t.element_of("s")) == t.element_of("t"));
    REQUIRE(p(t.element_of("t")) == t.element_of("s"));
    REQUIRE(p.is_permutation());
    REQUIRE(p.order() == 2);
  }
  SECTION("an atom fixes itself") {
    MonoidTable t(dihedral_artin_presentation(3), 6);
    auto        s = t.element_of("s");
    auto        p = atom_conjugation(t, s);
    REQUIRE(p.domain() == std::vector<Element>{s});
    REQUIRE(p(s) == s);
  }
  SECTION("B_2: delta is central") {
    MonoidTable t(dihedral_artin_presentation(4), 6);
    REQUIRE(atom_conjugation(t, t.element_of("s t s t")).is_identity());
  }
  SECTION("unbalanced elements are rejected") {
    MonoidTable t(dihedral_artin_presentation(3), 6);
    REQUIRE_THROWS_AS(atom_conjugation(t, t.element_of("s t")),
                      PreconditionError);
  }
}

TEST_CASE("alpha") {
  MonoidTable      t(dihedral_artin_presentation(3), 8);
  GarsideStructure g(t);
  REQUIRE(g.alpha(g.delta()) == g.delta());
  REQUIRE(g.alpha(t.element_of("s t")) == t.element_of("s t"));
  REQUIRE(g.alpha(t.element_of("s s")) == t.element_of("s"));
  REQUIRE(g.alpha(t.element_of("s t s t")) == g.delta());
  REQUIRE(g.alpha(identity_element) == identity_element);

  MonoidTable      dual(bkl_dual_presentation(2), 8);
  GarsideStructure gd(dual);
  for (auto s : dual.atoms()) {
    REQUIRE(gd.alpha(dual.power(s, 2)) == s);
    REQUIRE(gd.alpha(dual.power(s, 5)) == s);
  }
}

TEST_CASE("normal forms") {
  MonoidTable      t(dihedral_artin_presentation(3), 10);
  GarsideStructure g(t);
  auto             nf = [&](char const* w) { return g.normal_form(t.element_of(w)); };
  REQUIRE(nf("s t s") == std::vector<Element>{g.delta()});
  REQUIRE(nf("s s") == std::vector<Element>{t.element_of("s"), t.element_of("s")});
  REQUIRE(nf("s t s t")
          == std::vector<Element>{t.element_of("s t s"), t.element_of("t")});
  REQUIRE(nf("1").empty());
}

TEST_CASE("normal forms multiply back and are left-weighted") {
  std::mt19937 rng(3);
  for (auto p : {artin_presentation(CoxeterMatrix::type_a(3)),
                 dihedral_artin_presentation(5), fhm_presentation(4, 3),
                 bkl_dual_presentation(3)}) {
    MonoidTable      t(p, 9);
    GarsideStructure g(t);
    for (int i = 0; i < 80; ++i) {
      auto x = t.element_of(
          oracle::random_word(rng, p.number_of_generators(), rng() % 8));
      auto f = g.normal_form(x);
      auto y = identity_element;
      for (auto s : f) {
        REQUIRE(g.is_simple(s));
        REQUIRE(s.length > 0);
        y = t.multiply(y, s);
      }
      REQUIRE(y == x);
      for (std::size_t k = 0; k < f.size(); ++k) {
        auto tail = identity_element;
        for (std::size_t j = k; j < f.size(); ++j) {
          tail = t.multiply(tail, f[j]);
        }
        REQUIRE(g.alpha(tail) == f[k]);
      }
    }
  }
}

TEST_CASE("tau") {
  MonoidTable      t(dihedral_artin_presentation(3), 8);
  GarsideStructure g(t);
  REQUIRE(g.tau(g.delta()) == g.delta());
  REQUIRE(g.tau(t.element_of("s")) == t.element_of("t"));
  REQUIRE(g.tau(t.element_of("s t")) == t.element_of("t s"));
  // delta tau(x) = x delta
  for (auto x : t.elements(3)) {
    REQUIRE(t.multiply(g.delta(), g.tau(x)) == t.multiply(x, g.delta()));
  }
}

TEST_CASE("tau is an automorphism of the order of the delta permutation") {
  std::mt19937 rng(5);
  for (auto [p, order] : {std::pair{bkl_dual_presentation(2), 3ul},
                          std::pair{bkl_dual_presentation(3), 4ul},
                          std::pair{fhm_presentation(4, 3), 3ul},
                          std::pair{dihedral_artin_presentation(4), 1ul}}) {
    MonoidTable      t(p, 8);
    GarsideStructure g(t);
    REQUIRE(g.delta_conjugation().order() == order);
    for (int i = 0; i < 60; ++i) {
      auto n = p.number_of_generators();
      auto a = t.element_of(oracle::random_word(rng, n, rng() % 4));
      auto b = t.element_of(oracle::random_word(rng, n, rng() % 4));
      REQUIRE(g.tau(t.multiply(a, b)) == t.multiply(g.tau(a), g.tau(b)));
      REQUIRE(g.tau_inverse(g.tau(a)) == a);
      REQUIRE(g.tau_power(a, static_cast<long>(order)) == a);
      REQUIRE(g.tau_power(a, -1) == g.tau_inverse(a));
      REQUIRE(g.tau_power(a, 1) == g.tau(a));
      REQUIRE(t.multiply(g.delta(), g.tau(a)) == t.multiply(a, g.delta()));
    }
  }
}

TEST_CASE("dual braid monoids") {
  for (auto [n, catalan] : {std::pair{2ul, 5ul}, std::pair{3ul, 14ul}}) {
    MonoidTable      t(bkl_dual_presentation(n), 8);
    GarsideStructure g(t);
    REQUIRE(g.delta().length == n);
    REQUIRE(g.simples().size() == catalan);
    for (auto s : g.simples()) {
      REQUIRE(is_balanced(t, s));
    }
    for (auto const& w : factorizations(t, g.delta())) {
      REQUIRE(std::set<letter_type>(w.begin(), w.end()).size() == w.size());
    }
  }
}

TEST_CASE("f(h, m): proper divisors of delta factor uniquely") {
  for (auto [h, m] : {std::pair{3ul, 2ul}, std::pair{4ul, 3ul},
                      std::pair{5ul, 3ul}, std::pair{5ul, 2ul}}) {
    MonoidTable      t(fhm_presentation(h, m), 10);
    GarsideStructure g(t);
    REQUIRE(g.delta().length == h);
    for (auto s : g.simples()) {
      if (s != g.delta()) {
        REQUIRE(factorizations(t, s).size() == 1);
      }
    }
    REQUIRE(factorizations(t, g.delta()).size() == m);
  }
}

TEST_CASE("no Garside element") {
  MonoidTable t(Presentation{{"a", "b"}, {}}, 5);
  REQUIRE_THROWS_AS(GarsideStructure(t), UnsupportedOperation);
  MonoidTable a2(dihedral_artin_presentation(3), 5);
  REQUIRE_THROWS_AS(GarsideStructure(a2, a2.element_of("s t")),
                    PreconditionError);
}
