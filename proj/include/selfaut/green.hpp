#ifndef SELFAUT_GREEN_HPP_
#define SELFAUT_GREEN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "selfaut/semigroup.hpp"

namespace selfaut {

  //! A partition of the element indices. Classes are listed in order of their
  //! smallest element and each class is sorted.
  struct Partition {
    std::vector<std::size_t>          class_of;
    std::vector<std::vector<Element>> classes;

    std::size_t size() const noexcept {
      return classes.size();
    }

    static Partition from_labels(std::vector<std::size_t> const& labels);

    bool operator==(Partition const&) const = default;
  };

  // Square boolean relation on element indices.
  using Relation = std::vector<std::vector<bool>>;

  Relation  relation_of(Partition const& p);
  // a (first o second) b iff there is c with a first c and c second b.
  Relation  compose(Relation const& first, Relation const& second);
  Partition partition_of(Relation const& equivalence);

  struct GreenStructure {
    Partition r_classes;
    Partition l_classes;
    Partition h_classes;
    Partition d_classes;
    // d_leq[i][j] iff D-class i is below D-class j in the J-order.
    std::vector<std::vector<bool>> d_leq;
    std::vector<bool>              regular;

    // Sizes of the principal ideals aS^1, S^1a, S^1aS^1.
    std::vector<std::size_t> right_ideal_size;
    std::vector<std::size_t> left_ideal_size;
    std::vector<std::size_t> ideal_size;

    //! D-class indices, maximal first; among incomparable classes the one
    //! with the smaller least element comes first.
    std::vector<std::size_t> d_topological_order() const;
  };

  //! Green's relations from principal ideals with the element itself
  //! adjoined, so S^1 never needs to be built. D is computed as R o L and
  //! checked against L o R.
  GreenStructure green(FiniteSemigroup const& S);

}  // namespace selfaut

#endif  // SELFAUT_GREEN_HPP_
