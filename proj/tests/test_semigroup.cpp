#include <algorithm>

#include <doctest.h>

#include "corpus.hpp"
#include "selfaut/errors.hpp"
#include "selfaut/isomorphism.hpp"
#include "selfaut/semigroup.hpp"

using namespace selfaut;

namespace {
  bool associative(FiniteSemigroup const& S) {
    for (Element i = 0; i < S.size(); ++i) {
      for (Element j = 0; j < S.size(); ++j) {
        for (Element k = 0; k < S.size(); ++k) {
          if (S.product(S.product(i, j), k) != S.product(i, S.product(j, k))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  Element at(FiniteSemigroup const& S, std::string const& name) {
    auto x = S.index_of(name);
    REQUIRE(x.has_value());
    return *x;
  }

  std::vector<std::string> names_of(Subsemigroup const& sub) {
    return sub.semigroup.names();
  }
}  // namespace

TEST_CASE("validate") {
  SUBCASE("trivial") {
    auto S = FiniteSemigroup::validate({"e"}, {{0}});
    CHECK(S.size() == 1);
    CHECK(S.product(0, 0) == 0);
  }
  SUBCASE("first failing triple") {
    // (00)1 = 11 = 0 but 0(01) = 00 = 1
    try {
      FiniteSemigroup::validate({"p", "q"}, {{1, 0}, {0, 0}});
      FAIL("expected NotAssociative");
    } catch (NotAssociative const& e) {
      CHECK(e.i == 0);
      CHECK(e.j == 0);
      CHECK(e.k == 1);
    }
  }
  SUBCASE("shape and names") {
    CHECK_THROWS_AS(FiniteSemigroup::validate({"a", "b"}, {{0, 1}}), BadIndex);
    CHECK_THROWS_AS(FiniteSemigroup::validate({"a"}, {{1}}), BadIndex);
    CHECK_THROWS_AS(FiniteSemigroup::validate({"a", "a"}, {{0, 0}, {0, 0}}),
                    DuplicateName);
    CHECK_THROWS_AS(FiniteSemigroup::validate({"a b"}, {{0}}), InvalidName);
    CHECK_THROWS_AS(FiniteSemigroup::validate({""}, {{0}}), InvalidName);
    CHECK_THROWS_AS(FiniteSemigroup::validate({}, {}), BadIndex);
  }
}

TEST_CASE("band and aperiodicity") {
  CHECK(is_band(left_zero(3)).holds);
  auto ex6  = example_s2_left_zero();
  auto band = is_band(ex6);
  CHECK_FALSE(band.holds);
  CHECK(ex6.name(*band.witness) == "a");

  auto st = steinberg();
  auto sb = is_band(st.S);
  CHECK_FALSE(sb.holds);
  CHECK(st.S.name(*sb.witness) == "(a',a)");

  auto c2 = is_aperiodic(cyclic_group(2));
  CHECK_FALSE(c2.holds);
  CHECK(c2.witness->element == 1);
  CHECK(c2.witness->period == 2);
  CHECK(c2.witness->index == 1);
  CHECK(is_aperiodic(ex6).holds);
  CHECK(index_period(ex6, at(ex6, "a")) == IndexPeriod{at(ex6, "a"), 2, 1});
  for (auto const& [name, B] : test::band_corpus()) {
    CAPTURE(name);
    CHECK(is_aperiodic(B).holds);
  }
  auto n4 = nilpotent_monogenic(4);
  CHECK(index_period(n4, 0) == IndexPeriod{0, 4, 1});
}

TEST_CASE("identities") {
  auto c2 = chain_semilattice(2);
  REQUIRE(is_monoid(c2).has_value());
  CHECK(c2.name(*is_monoid(c2)) == "e1");
  CHECK_FALSE(is_monoid(left_zero(2)).has_value());
  CHECK(has_relative_identities(left_zero(2)));
  CHECK_FALSE(is_monoid(nilpotent_monogenic(3)).has_value());
  CHECK_FALSE(has_relative_identities(nilpotent_monogenic(3)));
  CHECK(is_commutative(cyclic_group(4)));
  CHECK_FALSE(is_commutative(left_zero(2)));
  CHECK(zero(nilpotent_monogenic(3)) == Element{2});
  CHECK_FALSE(zero(left_zero(2)).has_value());
}

TEST_CASE("square") {
  auto s6 = square(example_s2_left_zero());
  CHECK(names_of(s6) == std::vector<std::string>{"b", "c", "d"});
  CHECK(find_isomorphism(s6.semigroup, left_zero(3)).has_value());
  auto s8 = square(example_s2_right_zero());
  CHECK(names_of(s8) == std::vector<std::string>{"a", "b", "c"});
  CHECK(find_isomorphism(s8.semigroup, right_zero(3)).has_value());
  for (auto const& [name, B] : test::band_corpus()) {
    CAPTURE(name);
    CHECK(square(B).semigroup == B);
  }
}

TEST_CASE("generated subsemigroup") {
  auto         n5 = nilpotent_monogenic(5);
  Element const x2[] = {1};
  auto         sub  = generated_subsemigroup(n5, x2);
  CHECK(sub.semigroup.names() == std::vector<std::string>{"x2", "x4", "x5"});
  CHECK(sub.embedding == std::vector<Element>{1, 3, 4});
}

TEST_CASE("left-regular representation") {
  auto r6 = lrr(example_s2_left_zero());
  CHECK(r6.faithful);
  CHECK(r6.kernel_pairs.empty());
  CHECK(r6.image.size() == 4);

  auto r2 = lrr(right_zero(2));
  CHECK_FALSE(r2.faithful);
  CHECK(r2.kernel_pairs == std::vector<std::pair<Element, Element>>{{0, 1}});
  CHECK(r2.image.size() == 1);

  auto st = steinberg();
  auto rt = lrr(st.That);
  CHECK_FALSE(rt.faithful);
  auto pair = std::make_pair(at(st.That, "(b'a',b)"), at(st.That, "(b'a'2,b)"));
  if (pair.first > pair.second) {
    std::swap(pair.first, pair.second);
  }
  CHECK(std::find(rt.kernel_pairs.begin(), rt.kernel_pairs.end(), pair)
        != rt.kernel_pairs.end());
}

TEST_CASE("opposite") {
  CHECK(opposite(left_zero(2)).table() == right_zero(2).table());
  auto c = cyclic_group(3);
  CHECK(opposite(c) == c);
  auto o6 = opposite(example_s2_left_zero());
  CHECK(o6.product(at(o6, "d"), at(o6, "a")) == at(o6, "c"));
}

TEST_CASE("direct product") {
  auto p = direct_product(left_zero(2), left_zero(3));
  CHECK(p.size() == 6);
  CHECK(p.name(4) == "(x2,x2)");
  CHECK(is_band(direct_product(rectangular_band(2, 2), chain_semilattice(3))).holds);
  CHECK(find_isomorphism(direct_product(left_zero(2), right_zero(2)),
                         rectangular_band(2, 2))
            .has_value());
}

TEST_CASE("nilpotency class") {
  CHECK(nilpotency_class(nilpotent_monogenic(3)) == std::size_t{3});
  CHECK(nilpotency_class(nilpotent_monogenic(2)) == std::size_t{2});
  CHECK_FALSE(nilpotency_class(chain_semilattice(3)).has_value());
  CHECK_FALSE(nilpotency_class(left_zero(2)).has_value());
  CHECK(nilpotency_class(left_zero(1)) == std::size_t{1});
}

TEST_CASE("corpus properties") {
  for (auto const& [name, S] : test::corpus()) {
    CAPTURE(name);
    CHECK(associative(S));
    CHECK(opposite(opposite(S)) == S);
    CHECK(associative(opposite(S)));
    auto r = lrr(S);
    CHECK(r.faithful == r.kernel_pairs.empty());
    CHECK(r.faithful == (r.image.size() == S.size()));
    CHECK(FiniteSemigroup::validate(S.names(), S.table()) == S);
    auto sq = square(S);
    CHECK(associative(sq.semigroup));
  }
}
