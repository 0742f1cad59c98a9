#ifndef SELFAUT_ISOMORPHISM_HPP_
#define SELFAUT_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "selfaut/semigroup.hpp"

namespace selfaut {

  enum class IsoKind { isomorphism, anti_isomorphism };

  struct IsoWitness {
    std::vector<Element> mapping;
    IsoKind              kind;
  };

  //! Checks that the witness is a bijection S -> T respecting (or reversing,
  //! for anti-isomorphisms) multiplication.
  bool verify(IsoWitness const&      witness,
              FiniteSemigroup const& S,
              FiniteSemigroup const& T);

  //! Backtracking search for an isomorphism S -> T.
  //!
  //! Elements of S are assigned in ascending index order with candidates in T
  //! tried in ascending order. Every assignment is closed under products
  //! before branching again, so the first witness found is the
  //! lexicographically least one. Elements are only matched when their
  //! invariant vectors agree. Returns nullopt immediately on size
  //! mismatch.
  std::optional<IsoWitness> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T);

  // An isomorphism S -> opposite(T), reported as an anti-isomorphism S -> T.
  std::optional<IsoWitness> find_anti_isomorphism(FiniteSemigroup const& S,
                                                  FiniteSemigroup const& T);

  std::optional<IsoWitness> self_duality(FiniteSemigroup const& S);

  inline bool is_self_dual(FiniteSemigroup const& S) {
    return self_duality(S).has_value();
  }

}  // namespace selfaut

#endif  // SELFAUT_ISOMORPHISM_HPP_
