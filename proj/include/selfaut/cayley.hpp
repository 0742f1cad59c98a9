#ifndef SELFAUT_CAYLEY_HPP_
#define SELFAUT_CAYLEY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "selfaut/isomorphism.hpp"
#include "selfaut/mealy.hpp"
#include "selfaut/semigroup.hpp"

// Throughout, s̄·t̄ means "apply t̄ first, then s̄", matching the algebraic
// product order of words acting on the left of sequences.

namespace selfaut {

  //! The Cayley automaton C(S): states and symbols are the elements of S and
  //! state s reading t outputs st and moves to st. State and symbol indices
  //! coincide with element indices.
  MealyAutomaton cayley_automaton(FiniteSemigroup const& S);

  //! s̄ applied to a_1 ... a_n, evaluated by the prefix-product formula
  //! (s a_1)(s a_1 a_2)...(s a_1 ... a_n). Throws UnknownSymbol.
  std::vector<Element> state_action(FiniteSemigroup const&   S,
                                    Element                  s,
                                    std::span<Element const> seq);

  //! The sequence acted on from the right by x_1 then x_2 ..., that is
  //! (...((seq·x̄_1)·x̄_2)...). Each single step uses the same prefix-product
  //! formula as state_action.
  std::vector<Element> right_action(FiniteSemigroup const&   S,
                                    std::span<Element const> seq,
                                    std::span<Element const> word);

  struct Injectivity {
    bool                                     injective;
    std::vector<std::pair<Element, Element>> kernel_pairs;
  };

  //! Whether s -> s̄ is injective, decided both through the left-regular
  //! representation and through pairwise equality of single-state words.
  //! Throws InternalDisagreement if the two routes differ.
  Injectivity canonical_injective(FiniteSemigroup const& S);

  struct HomomorphismCounterexample {
    Element              s;
    Element              t;
    std::vector<Element> sequence;  // distinguishes s̄·t̄ from the bar of st
  };

  struct Homomorphism {
    bool                                      homomorphism;
    std::optional<HomomorphismCounterexample> counterexample;
  };

  //! Checks s̄·t̄ = (st)‾ for every ordered pair, scanning s then t in index
  //! order; the first failure is reported.
  Homomorphism canonical_homomorphism(FiniteSemigroup const& S);

  struct ClassificationReport {
    bool band;
    bool aperiodic;
    bool monoid;
    bool relative_identities;
    bool lrr_faithful;
    bool s_squared_band;
    bool canonical_injective;
    bool canonical_homomorphism;
    bool self_automaton;
    bool self_dual;
    // Unset when the budgets ran out before Σ(C(S)) was enumerated.
    std::optional<bool> c_self_automaton;
    // Unset when Σ(C(S)) is infinite or was not enumerated.
    std::optional<std::size_t> sigma_size;
    bool                       sigma_infinite = false;

    std::vector<std::pair<Element, Element>>  kernel_pairs;
    std::optional<HomomorphismCounterexample> homomorphism_counterexample;
    std::optional<IndexPeriod>                period_witness;
    std::optional<IsoWitness>                 anti_isomorphism;
  };

  //! Every flag except c_self_automaton and sigma_size. Throws
  //! InternalDisagreement if a consequence that must hold does not.
  ClassificationReport is_self_automaton(FiniteSemigroup const& S);

  struct KnownInfinite {
    IndexPeriod period_witness;
  };

  using SigmaResult = std::variant<EnumeratedSemigroup, KnownInfinite, Exhausted>;

  //! Σ(C(S)). Non-aperiodic S gives KnownInfinite without enumerating unless
  //! `force` is set. When s -> s̄ is a homomorphism the result is checked
  //! against the image of the left-regular representation.
  SigmaResult sigma(FiniteSemigroup const& S,
                    Budgets const&         budgets = {},
                    bool                   force   = false);

  //! Π(C(S)), the semigroup of right actions: the opposite of Σ(C(S)).
  //! Small cases are cross-checked against right_action directly.
  SigmaResult pi(FiniteSemigroup const& S,
                 Budgets const&         budgets = {},
                 bool                   force   = false);

  enum class Tribool { no, yes, unknown };

  //! Whether S is isomorphic to Π(C(S)).
  Tribool is_c_self_automaton(FiniteSemigroup const& S,
                              Budgets const&         budgets = {});

  //! is_self_automaton plus Σ(C(S)) size and C-self-automaton status.
  ClassificationReport classify(FiniteSemigroup const& S,
                                Budgets const&         budgets = {});

  struct Freeness {
    bool        ok;
    std::size_t words_checked;
    // First collision in shortlex order: `later` acts like `earlier`.
    // Words are in product order.
    std::vector<Element> earlier;
    std::vector<Element> later;
  };

  //! Checks that all words of length <= max_len over C(S) act differently.
  Freeness freeness_check(FiniteSemigroup const& S, std::size_t max_len);

}  // namespace selfaut

#endif  // SELFAUT_CAYLEY_HPP_
