#ifndef SELFAUT_MEALY_HPP_
#define SELFAUT_MEALY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "selfaut/semigroup.hpp"

namespace selfaut {

  using State  = std::uint32_t;
  using Symbol = std::uint32_t;

  struct Transition {
    State  next;
    Symbol output;

    bool operator==(Transition const&) const = default;
  };

  //! A complete synchronous (Mealy) transducer.
  class MealyAutomaton {
   public:
    //! `delta` is row-major: entry q * |alphabet| + b is delta(q, b).
    //! Throws BadIndex, InvalidName or DuplicateName.
    static MealyAutomaton create(std::vector<std::string> states,
                                 std::vector<std::string> alphabet,
                                 std::vector<Transition>  delta);

    std::size_t num_states() const noexcept {
      return _states.size();
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet.size();
    }

    Transition delta(State q, Symbol b) const noexcept {
      return _delta[q * _alphabet.size() + b];
    }

    std::vector<std::string> const& states() const noexcept {
      return _states;
    }

    std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }

    std::optional<State>  state_index(std::string_view name) const;
    std::optional<Symbol> symbol_index(std::string_view name) const;

    friend bool operator==(MealyAutomaton const&, MealyAutomaton const&)
        = default;

   private:
    MealyAutomaton() = default;

    std::vector<std::string> _states;
    std::vector<std::string> _alphabet;
    std::vector<Transition>  _delta;
  };

  //! A word of states acting on sequences, stored in application order.
  //!
  //! Stage 0 reads the input first and each later stage reads the output of
  //! the one before. The algebraic product q_n ... q_2 q_1 (q_1 applied
  //! first) is therefore the stage list [q_1, q_2, ..., q_n].
  class CompositeState {
   public:
    //! Throws BadParam if `stages` is empty.
    explicit CompositeState(std::vector<State> stages);

    //! Builds the composite for the product word q_n ... q_1 written left
    //! to right, i.e. reverses it.
    static CompositeState from_product_order(std::vector<State> word);

    std::span<State const> stages() const noexcept {
      return _stages;
    }

    std::size_t length() const noexcept {
      return _stages.size();
    }

    std::vector<State> product_order() const;

    bool operator==(CompositeState const&) const = default;
    auto operator<=>(CompositeState const&) const = default;

   private:
    std::vector<State> _stages;
  };

  //! Feeds one symbol through every stage; returns the final output and the
  //! tuple of next states.
  std::pair<Symbol, CompositeState>
  step(MealyAutomaton const& A, CompositeState const& w, Symbol b);

  //! Output of w on the sequence. Throws UnknownSymbol for symbols outside
  //! the alphabet and BadIndex for stages outside the state set.
  std::vector<Symbol> act(MealyAutomaton const&   A,
                          CompositeState const&   w,
                          std::span<Symbol const> seq);

  struct Equality {
    bool equal;
    // Shortest distinguishing sequence (ties broken by alphabet order);
    // empty when equal.
    std::vector<Symbol> witness;

    explicit operator bool() const noexcept {
      return equal;
    }
  };

  //! Decides equality of composite states by breadth-first exploration of
  //! reachable state pairs.
  //!
  //! Pairs whose exploration finished without a mismatch are remembered, so
  //! repeated queries against one automaton share work. Not thread safe;
  //! use one checker per thread.
  class EquivalenceChecker {
   public:
    explicit EquivalenceChecker(MealyAutomaton const& A);
    ~EquivalenceChecker();
    EquivalenceChecker(EquivalenceChecker&&) noexcept;

    Equality equal(CompositeState const& u, CompositeState const& v);

   private:
    struct Space;

    MealyAutomaton const*                                       _automaton;
    std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<Space>> _spaces;
    std::uint32_t                                               _epoch = 0;
  };

  Equality words_equal(MealyAutomaton const& A,
                       CompositeState const& u,
                       CompositeState const& v);

  //! Canonical minimal pointed transducer for the action of a composite
  //! state. States are numbered in breadth-first order from the initial
  //! state (0) with symbols visited in alphabet order, so two composite
  //! states have equal keys iff they act identically on every sequence.
  struct ActionKey {
    std::uint32_t              num_states = 0;
    std::uint32_t              alphabet_size = 0;
    std::vector<std::uint32_t> next;    // num_states x alphabet_size
    std::vector<Symbol>        output;  // num_states x alphabet_size

    bool operator==(ActionKey const&) const = default;
  };

  struct ActionKeyHash {
    std::size_t operator()(ActionKey const& key) const noexcept;
  };

  ActionKey minimize_pointed(MealyAutomaton const& A, CompositeState const& w);

  struct Budgets {
    std::size_t max_elements = 100000;
    std::size_t max_length   = 12;
  };

  //! A completely enumerated automaton semigroup.
  struct EnumeratedSemigroup {
    // Elements are named by their shortlex-least product word, state names
    // joined by "·".
    FiniteSemigroup             semigroup;
    std::vector<CompositeState> representatives;
    // State q -> the element it represents.
    std::vector<Element>   generator_image;
    std::vector<ActionKey> keys;
  };

  //! Partial census when a budget ran out before the closure completed.
  struct Exhausted {
    std::size_t elements_found;
    std::size_t frontier_size;   // elements found but not yet expanded
    std::size_t length_reached;  // longest representative found
    std::string reason;
  };

  using Enumeration = std::variant<EnumeratedSemigroup, Exhausted>;

  //! Breadth-first enumeration of the semigroup generated by the states.
  //!
  //! Right multiplication of w by state q prepends q to the stage list (q
  //! acts first). Elements are identified by ActionKey. Never runs past
  //! `budgets`: reaching an element longer than max_length or more than
  //! max_elements elements yields Exhausted.
  Enumeration enumerate_semigroup(MealyAutomaton const& A,
                                  Budgets const&        budgets = {});

  inline constexpr std::string_view word_separator = "\xC2\xB7";  // "·"

}  // namespace selfaut

#endif  // SELFAUT_MEALY_HPP_
