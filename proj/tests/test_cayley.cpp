#include <doctest.h>

#include "corpus.hpp"
#include "selfaut/cayley.hpp"
#include "selfaut/errors.hpp"
#include "selfaut/green.hpp"

using namespace selfaut;

namespace {
  Element at(FiniteSemigroup const& S, std::string const& name) {
    auto x = S.index_of(name);
    REQUIRE(x.has_value());
    return *x;
  }

  // every sequence over n symbols of length exactly len
  template <typename F>
  void each_sequence(std::size_t n, std::size_t len, F&& f) {
    std::vector<Element> seq(len, 0);
    while (true) {
      f(seq);
      std::size_t i = len;
      while (i > 0 && ++seq[i - 1] == n) {
        seq[--i] = 0;
      }
      if (i == 0) {
        return;
      }
    }
  }

  FiniteSemigroup sigma_of(SigmaResult const& r) {
    REQUIRE(std::holds_alternative<EnumeratedSemigroup>(r));
    return std::get<EnumeratedSemigroup>(r).semigroup;
  }
}  // namespace

TEST_CASE("cayley automaton") {
  auto const S = example_s2_left_zero();
  auto const C = cayley_automaton(S);
  auto       t = C.delta(at(S, "a"), at(S, "b"));
  CHECK(t.output == at(S, "b"));
  CHECK(t.next == at(S, "b"));

  auto const T = cayley_automaton(left_zero(1));
  CHECK(T.num_states() == 1);
  CHECK(T.delta(0, 0) == Transition{0, 0});

  auto const L = left_zero(2);
  auto       l = cayley_automaton(L).delta(0, 1);
  CHECK(l == Transition{0, 0});
}

TEST_CASE("state action") {
  auto const S = example_s2_left_zero();
  std::vector<Element> bcd{at(S, "b"), at(S, "c"), at(S, "d")};
  CHECK(state_action(S, at(S, "a"), bcd)
        == std::vector<Element>(3, at(S, "b")));
  CHECK(state_action(S, 0, {}).empty());
  std::vector<Element> bad{9};
  CHECK_THROWS_AS(state_action(S, 0, bad), UnknownSymbol);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const L = left_zero(n);
    for (Element x = 0; x < n; ++x) {
      each_sequence(n, 3, [&](auto const& seq) {
        CHECK(state_action(L, x, seq) == std::vector<Element>(3, x));
      });
    }
  }
}

TEST_CASE("state action matches act on the corpus") {
  for (auto const& [name, S] : test::corpus()) {
    if (S.size() > 6) {
      continue;
    }
    CAPTURE(name);
    auto const C = cayley_automaton(S);
    for (std::size_t len = 0; len <= (S.size() <= 3 ? 5u : 3u); ++len) {
      each_sequence(S.size(), len, [&](auto const& seq) {
        for (Element s = 0; s < S.size(); ++s) {
          CHECK(state_action(S, s, seq) == act(C, CompositeState({s}), seq));
        }
      });
    }
  }
}

TEST_CASE("canonical map") {
  auto const i6 = canonical_injective(example_s2_left_zero());
  CHECK(i6.injective);

  auto const r2 = canonical_injective(right_zero(2));
  CHECK_FALSE(r2.injective);
  CHECK(r2.kernel_pairs == std::vector<std::pair<Element, Element>>{{0, 1}});

  auto const S8 = example_s2_right_zero();
  auto const i8 = canonical_injective(S8);
  CHECK_FALSE(i8.injective);
  std::vector<std::pair<Element, Element>> abd{{at(S8, "a"), at(S8, "b")},
                                               {at(S8, "a"), at(S8, "d")},
                                               {at(S8, "b"), at(S8, "d")}};
  CHECK(i8.kernel_pairs == abd);

  CHECK(canonical_homomorphism(example_s2_left_zero()).homomorphism);
  auto const c2 = canonical_homomorphism(cyclic_group(2));
  CHECK_FALSE(c2.homomorphism);
  REQUIRE(c2.counterexample.has_value());
  CHECK(c2.counterexample->s == 0);
  CHECK(c2.counterexample->t == 0);
  for (auto const& [name, B] : test::band_corpus()) {
    CAPTURE(name);
    CHECK(canonical_homomorphism(B).homomorphism);
  }
}

TEST_CASE("singleton equality is row equality") {
  for (auto const& [name, S] : test::corpus()) {
    CAPTURE(name);
    auto const C = cayley_automaton(S);
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        bool rows = std::equal(S.row(s).begin(), S.row(s).end(), S.row(t).begin());
        CHECK(words_equal(C, CompositeState({s}), CompositeState({t})).equal
              == rows);
      }
    }
  }
}

TEST_CASE("classification examples") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(is_self_automaton(left_zero(n)).self_automaton);
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    CHECK_FALSE(is_self_automaton(right_zero(n)).self_automaton);
  }
  auto const r6 = is_self_automaton(example_s2_left_zero());
  CHECK(r6.self_automaton);
  CHECK_FALSE(r6.band);
  CHECK(r6.s_squared_band);
  CHECK(r6.lrr_faithful);

  auto const c = classify(cyclic_group(2));
  CHECK_FALSE(c.self_automaton);
  CHECK(c.sigma_infinite);
  CHECK(c.c_self_automaton == false);
  CHECK_FALSE(c.sigma_size.has_value());
  REQUIRE(c.period_witness.has_value());
  CHECK(c.period_witness->period == 2);
}

TEST_CASE("sigma and pi") {
  auto const S8 = example_s2_right_zero();
  CHECK(find_isomorphism(sigma_of(sigma(S8)), right_zero(2)).has_value());
  CHECK(sigma_of(sigma(right_zero(2))).size() == 1);
  CHECK(std::holds_alternative<KnownInfinite>(sigma(cyclic_group(2))));
  CHECK(std::holds_alternative<KnownInfinite>(pi(cyclic_group(3))));
  auto forced = sigma(cyclic_group(2), {50, 4}, true);
  CHECK(std::holds_alternative<Exhausted>(forced));

  CHECK(find_isomorphism(sigma_of(pi(left_zero(2))), right_zero(2)).has_value());
  CHECK(find_isomorphism(sigma_of(pi(S8)), left_zero(2)).has_value());

  auto const chain = chain_semilattice(3);
  auto const sc    = sigma_of(sigma(chain));
  auto const pc    = sigma_of(pi(chain));
  CHECK(sc.table() == pc.table());
  auto id = find_isomorphism(sc, pc);
  REQUIRE(id.has_value());
  for (Element x = 0; x < sc.size(); ++x) {
    CHECK(id->mapping[x] == x);
  }
}

TEST_CASE("c-self-automaton") {
  CHECK(is_c_self_automaton(left_zero(2)) == Tribool::no);
  CHECK(is_c_self_automaton(chain_semilattice(2)) == Tribool::yes);
  CHECK(is_c_self_automaton(adjoin_identity(rectangular_band(2, 2))) == Tribool::yes);
  CHECK(is_c_self_automaton(cyclic_group(2)) == Tribool::no);
  CHECK(is_c_self_automaton(steinberg().S) == Tribool::yes);
  CHECK(is_c_self_automaton(example_s2_left_zero(), {2, 12}) == Tribool::unknown);
}

TEST_CASE("right action") {
  auto const S = example_s2_left_zero();
  std::vector<Element> seq{at(S, "a"), at(S, "c")};
  std::vector<Element> none;
  CHECK(right_action(S, seq, none) == seq);
  // one step of x̄ is the prefix-product action of x
  for (Element x = 0; x < S.size(); ++x) {
    std::vector<Element> w{x};
    CHECK(right_action(S, seq, w) == state_action(S, x, seq));
  }
}

TEST_CASE("freeness") {
  auto const c2 = freeness_check(cyclic_group(2), 6);
  CHECK(c2.ok);
  CHECK(c2.words_checked == 126);
  auto const c3 = freeness_check(cyclic_group(3), 5);
  CHECK(c3.ok);
  CHECK(c3.words_checked == 363);
  auto const l2 = freeness_check(left_zero(2), 2);
  CHECK_FALSE(l2.ok);
  CHECK(l2.earlier == std::vector<Element>{0});
  CHECK(l2.later == std::vector<Element>{0, 0});
  CHECK_THROWS_AS(freeness_check(left_zero(2), 1), BadParam);
}

TEST_CASE("classifier invariants on the corpus") {
  for (auto const& [name, S] : test::corpus()) {
    CAPTURE(name);
    auto const r = classify(S);
    CHECK(r.self_automaton == (r.canonical_injective && r.canonical_homomorphism));
    CHECK(r.canonical_injective == r.lrr_faithful);
    if (r.band || r.s_squared_band) {
      CHECK(r.canonical_homomorphism);
    }
    if (r.monoid && r.self_automaton) {
      CHECK(r.band);
    }
    if (r.relative_identities && r.self_automaton) {
      CHECK(r.band);
      CHECK(r.lrr_faithful);
    }
    CHECK(r.sigma_infinite == !r.aperiodic);
    if (r.aperiodic) {
      REQUIRE(r.sigma_size.has_value());
      CHECK(r.c_self_automaton.has_value());
      auto const sig = sigma_of(sigma(S));
      CHECK(sig.size() == *r.sigma_size);
      if (r.canonical_homomorphism) {
        CHECK(find_isomorphism(sig, lrr(S).image).has_value());
      }
      if (r.self_automaton) {
        CHECK(find_isomorphism(S, sig).has_value());
      }
      if (r.self_automaton && r.self_dual) {
        CHECK(r.c_self_automaton == true);
      }
    } else {
      CHECK(r.c_self_automaton == false);
    }
  }
}
