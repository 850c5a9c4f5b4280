#include "doctest.h"

#include <map>

#include "garnorm/class_analysis.hpp"
#include "garnorm/garside_family.hpp"
#include "garnorm/garside_lattice.hpp"
#include "garnorm/instances.hpp"
#include "oracles.hpp"

using namespace garnorm;

namespace {

oracle::Atoms atoms_of(const Word& w) {
  oracle::Atoms out;
  for (Letter l : w) out.push_back(static_cast<int>(l));
  return out;
}

Word word_of(const oracle::Atoms& a) {
  std::vector<Letter> out;
  for (int x : a) out.push_back(static_cast<Letter>(x));
  return Word(out);
}

}  // namespace

TEST_CASE("presented equality matches the congruence oracle") {
  const PresentedMonoid m = presented_atilde2();
  const auto rels = oracle::atilde2_relations();
  CHECK(m.equal(m.parse_atom_word("σ1σ2σ1"), m.parse_atom_word("σ2σ1σ2")));
  CHECK_FALSE(m.equal(m.parse_atom_word("σ1σ2"), m.parse_atom_word("σ2σ1")));
  CHECK(m.format(m.parse_atom_word("")) == "1");

  for (std::size_t len = 1; len <= 5; ++len) {
    for_each_word(3, len, [&](const Word& w) {
      const auto expected = oracle::congruence(atoms_of(w), rels);
      const auto& cls = m.congruence_class(w);
      REQUIRE(cls.size() == expected.size());
      std::size_t i = 0;
      for (const auto& a : expected) CHECK(cls[i++] == word_of(a));
      CHECK(m.canonical(w) == word_of(*expected.begin()));
    });
  }
}

TEST_CASE("divisibility and quotients in presented monoids") {
  const PresentedMonoid m = presented_atilde2();
  const Element top = m.canonical(m.parse_atom_word("σ1σ2σ1"));
  CHECK(m.left_divides(m.parse_atom_word("σ2"), top));
  CHECK_FALSE(m.left_divides(m.parse_atom_word("σ3"), top));
  CHECK(m.right_divides(m.parse_atom_word("σ2"), top));
  CHECK(m.left_quotient(m.parse_atom_word("σ2"), top) == m.canonical(m.parse_atom_word("σ1σ2")));
  CHECK_FALSE(m.left_quotient(m.parse_atom_word("σ3"), top).has_value());
  CHECK(m.left_divisors(top).size() == 6);

  const PresentedMonoid e = presented_ex317(2);
  CHECK(e.left_divides(e.parse_atom_word("a"), e.parse_atom_word("bbb")));
  CHECK(e.canonical(e.parse_atom_word("bbb")) == e.parse_atom_word("abb"));
  CHECK_FALSE(e.left_divides(e.parse_atom_word("a"), e.parse_atom_word("bb")));

  for (std::size_t g = 0; g <= 4; ++g) {
    for (const Element& x : m.elements_of_grade(g)) {
      CHECK(x.size() == g);
      CHECK(m.canonical(x) == x);
    }
  }
  CHECK(m.elements_of_grade(2).size() == 9);
}

TEST_CASE("right lcm") {
  const PresentedMonoid m = presented_atilde2();
  const auto r = right_lcm(m, m.parse_atom_word("σ1"), m.parse_atom_word("σ2"), 6);
  REQUIRE(r.status == LcmStatus::Found);
  CHECK(m.equal(*r.lcm, m.parse_atom_word("σ1σ2σ1")));
  CHECK(right_lcm(m, m.parse_atom_word("σ1"), m.parse_atom_word("σ2"), 2).status ==
        LcmStatus::None);
  CHECK(right_lcm(m, m.parse_atom_word("σ1"), m.parse_atom_word("σ2σ3"), 8).status ==
        LcmStatus::None);
  const auto same = right_lcm(m, m.parse_atom_word("σ1"), m.parse_atom_word("σ1"), 4);
  CHECK(same.lcm == m.parse_atom_word("σ1"));

  const PresentedMonoid ab = presented_abelian(3);
  const auto r2 = right_lcm(ab, ab.parse_atom_word("ab"), ab.parse_atom_word("bc"), 4);
  REQUIRE(r2.status == LcmStatus::Found);
  CHECK(*r2.lcm == ab.parse_atom_word("abc"));
}

TEST_CASE("smallest Garside family closure") {
  const PresentedMonoid t = presented_atilde2();
  const FamilyCandidate ft = closure_smallest_garside(t, 6);
  CHECK(ft.fixpoint_reached);
  CHECK(ft.size_with_unit() == 16);
  CHECK(ft.size_without_unit() == 15);
  CHECK(ft.contains(Word{}));
  for (const char* name : {"σ1σ2σ1", "σ1σ2", "σ2σ3", "σ3σ1"}) {
    CHECK(ft.contains(t.canonical(t.parse_atom_word(name))));
  }
  CHECK_FALSE(ft.contains(t.canonical(t.parse_atom_word("σ1σ1"))));

  CHECK(closure_smallest_garside(presented_abelian(2), 4).size_with_unit() == 4);
  CHECK(closure_smallest_garside(presented_abelian(3), 4).size_with_unit() == 8);
  CHECK(closure_smallest_garside(presented_braid(3), 4).size_with_unit() == 6);
  CHECK(closure_smallest_garside(presented_braid(4), 8).size_with_unit() == 24);

  const PresentedMonoid e = presented_ex317(2);
  const FamilyCandidate fe = closure_smallest_garside(e, 8);
  const FamilyCandidate given = ex317_family(e, 2);
  CHECK(fe.members == given.members);
  CHECK(given.size_with_unit() == 5);

  // closure is divisor-closed on the right
  for (const Element& s : ft.members) {
    for (const Element& d : t.right_divisors(s)) CHECK(ft.contains(d));
  }
}

TEST_CASE("S-normal pairs") {
  const PresentedMonoid t = presented_atilde2();
  const FamilyCandidate ft = closure_smallest_garside(t, 6);
  const auto el = [&t](const char* s) { return t.canonical(t.parse_atom_word(s)); };
  CHECK(is_s_normal_pair(t, ft, el("σ1σ2σ1"), el("σ1")));
  CHECK(is_s_normal_pair(t, ft, el("σ1"), el("σ1")));
  CHECK(is_s_normal_pair(t, ft, el("σ1"), Word{}));
  const SNormalCheck bad = check_s_normal_pair(t, ft, el("σ1"), el("σ2"));
  CHECK_FALSE(bad.normal);
  REQUIRE(bad.s.has_value());
  CHECK(*bad.s == el("σ1σ2"));

  // pull-left verdict agrees with the head condition on closed families
  for (const Element& s1 : ft.members) {
    for (const Element& s2 : ft.members) {
      const SNormalCheck c = check_s_normal_pair(t, ft, s1, s2, 3, true);
      REQUIRE(c.head_condition.has_value());
      CHECK(*c.head_condition == c.normal);
    }
  }
  const PresentedMonoid e = presented_ex317(2);
  const FamilyCandidate fe = ex317_family(e, 2);
  for (const Element& s1 : fe.members) {
    for (const Element& s2 : fe.members) {
      const SNormalCheck c = check_s_normal_pair(e, fe, s1, s2, 4, true);
      CHECK(*c.head_condition == c.normal);
    }
  }
}

TEST_CASE("verify_garside_family") {
  const PresentedMonoid t = presented_atilde2();
  const FamilyCandidate ft = closure_smallest_garside(t, 6);
  const FamilyReport ok = verify_garside_family(t, ft, 5, 3);
  CHECK(ok.passed);
  CHECK(ok.elements_checked > 0);

  const FamilyCandidate atoms =
      make_family({t.parse_atom_word("σ1"), t.parse_atom_word("σ2"), t.parse_atom_word("σ3")});
  CHECK(atoms.size_with_unit() == 4);
  const FamilyReport fail = verify_garside_family(t, atoms, 5, 3);
  CHECK_FALSE(fail.passed);
  CHECK(fail.failed == "right-lcm");
  CHECK(fail.witness.has_value());

  const PresentedMonoid e = presented_ex317(2);
  CHECK(verify_garside_family(e, ex317_family(e, 2), 6, 4).passed);

  // dropping a member breaks right-divisor closure
  const FamilyCandidate holed =
      make_family({t.parse_atom_word("σ1"), t.parse_atom_word("σ2"), t.parse_atom_word("σ3"),
                   t.parse_atom_word("σ1σ2σ1")});
  const FamilyReport holed_report = verify_garside_family(t, holed, 5, 3);
  CHECK_FALSE(holed_report.passed);
  CHECK(holed_report.failed == "right-divisor");
}

TEST_CASE("S-normal decompositions") {
  const PresentedMonoid t = presented_atilde2();
  const FamilyCandidate ft = closure_smallest_garside(t, 6);
  CHECK(s_normal_decomposition(t, ft, Word{}).empty());
  CHECK(s_head(t, ft, t.parse_atom_word("σ1σ2σ1σ3")) ==
        t.canonical(t.parse_atom_word("σ1σ2σ1")));
  for (std::size_t len = 1; len <= 5; ++len) {
    for_each_word(3, len, [&](const Word& w) {
      const auto parts = s_normal_decomposition(t, ft, w);
      Word prod;
      for (const Element& p : parts) {
        CHECK(ft.contains(p));
        CHECK_FALSE(p.empty());
        prod = prod.concat(p);
      }
      CHECK(t.equal(prod, w));
      for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        CHECK(is_s_normal_pair(t, ft, parts[i], parts[i + 1], 3));
      }
    });
  }
}

TEST_CASE("family normaliser") {
  SUBCASE("abelian presentation reproduces the lattice table") {
    const PresentedMonoid a = presented_abelian(2);
    const Normaliser nz = family_to_normaliser(a, closure_smallest_garside(a, 4));
    const Normaliser ref = to_normaliser(build_abelian(2));
    REQUIRE(nz.alphabet().size() == ref.alphabet().size());
    std::map<Letter, Letter> to_ref;
    for (Letter l = 0; l < nz.alphabet().size(); ++l) {
      to_ref[l] = ref.alphabet().at(nz.alphabet().name(l));
    }
    for (Letter s = 0; s < nz.alphabet().size(); ++s) {
      for (Letter u = 0; u < nz.alphabet().size(); ++u) {
        const LetterPair got = nz.bar(s, u);
        const LetterPair want = ref.bar(to_ref[s], to_ref[u]);
        CHECK(to_ref[got.first] == want.first);
        CHECK(to_ref[got.second] == want.second);
      }
    }
  }

  SUBCASE("braid presentation reproduces the lattice table") {
    const PresentedMonoid b = presented_braid(3);
    const FamilyCandidate fb = closure_smallest_garside(b, 4);
    const Normaliser nz = family_to_normaliser(b, fb);
    const GarsideLattice L = build_braid(3);
    const Normaliser ref = to_normaliser(L);
    for (Letter s = 0; s < nz.alphabet().size(); ++s) {
      for (Letter u = 0; u < nz.alphabet().size(); ++u) {
        const LetterPair got = nz.bar(s, u);
        const LetterPair want = ref.bar(ref.alphabet().at(nz.alphabet().name(s)),
                                        ref.alphabet().at(nz.alphabet().name(u)));
        CHECK(ref.alphabet().at(nz.alphabet().name(got.first)) == want.first);
        CHECK(ref.alphabet().at(nz.alphabet().name(got.second)) == want.second);
      }
    }
  }

  SUBCASE("affine family normaliser") {
    const PresentedMonoid t = presented_atilde2();
    const FamilyCandidate ft = closure_smallest_garside(t, 6);
    const Normaliser nz = family_to_normaliser(t, ft);
    CHECK(nz.alphabet().size() == 16);
    CHECK(nz.alphabet().name(*nz.alphabet().neutral()) == "1");
    CHECK(verify_axioms(nz, AxiomOptions{3, 1000000, 1000, 1}).passed);
    const ClassReport cls = compute_class(nz, 6);
    CHECK(cls.right.value == 3);
    CHECK(cls.left.value == 4);
    CHECK(check_domino(nz, Side::Left).valid);
    for (Letter l = 0; l < nz.alphabet().size(); ++l) {
      CHECK(t.format(family_letter_element(ft, l)) == nz.alphabet().name(l));
    }
    // the pair normal form evaluates to the element it came from, with the same grade
    for (std::size_t len = 1; len <= 4; ++len) {
      for_each_word(static_cast<std::size_t>(nz.alphabet().size()), len, [&](const Word& w) {
        if (w.size() != len) return;
        Word value, nf_value;
        for (Letter l : w) value = value.concat(family_letter_element(ft, l));
        for (Letter l : normal_form(nz, w)) nf_value = nf_value.concat(family_letter_element(ft, l));
        CHECK(t.equal(value, nf_value));
        CHECK(value.size() == nf_value.size());
      });
    }
  }

  SUBCASE("ex317 family normaliser") {
    const PresentedMonoid e = presented_ex317(2);
    const Normaliser nz = family_to_normaliser(e, ex317_family(e, 2));
    CHECK(nz.alphabet().size() == 5);
    CHECK(verify_axioms(nz, AxiomOptions{4, 1000000, 1000, 1}).passed);
    CHECK(check_domino(nz, Side::Left).valid);
  }
}
