#ifndef SELFAUT_SEMIGROUP_HPP_
#define SELFAUT_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace selfaut {

  // Elements are identified by their 0-based index; names only matter at the
  // I/O boundary.
  using Element = std::uint32_t;

  //! A finite semigroup given by its full Cayley table.
  //!
  //! Entry (i, j) of the table is the product of element i (the left factor)
  //! and element j. Instances can only be obtained through validate(), so
  //! every FiniteSemigroup in existence is an associative table over
  //! distinct well-formed names.
  class FiniteSemigroup {
   public:
    //! Checks the invariants and builds the semigroup.
    //!
    //! Throws BadIndex if the table shape does not match the names or an
    //! entry is out of range, InvalidName / DuplicateName for bad names.
    //! A non-associative table throws NotAssociative with the first failing
    //! triple in lexicographic order.
    static FiniteSemigroup validate(std::vector<std::string>        names,
                                    std::vector<std::vector<Element>> table);

    std::size_t size() const noexcept {
      return _names.size();
    }

    Element product(Element x, Element y) const noexcept {
      return _table[x * size() + y];
    }

    // Row x of the table, i.e. the map y -> xy.
    std::span<Element const> row(Element x) const noexcept {
      return {_table.data() + x * size(), size()};
    }

    std::string const& name(Element x) const {
      return _names[x];
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<Element> index_of(std::string_view name) const;

    std::vector<std::vector<Element>> table() const;

    // Structural equality: same names in the same order and the same table.
    friend bool operator==(FiniteSemigroup const& a, FiniteSemigroup const& b) {
      return a._names == b._names && a._table == b._table;
    }

   private:
    FiniteSemigroup() = default;

    std::vector<std::string>                 _names;
    std::vector<Element>                     _table;
    std::unordered_map<std::string, Element> _index;
  };

  // Returns true iff the name is non-empty and free of whitespace and '#'.
  bool is_valid_name(std::string_view name);

  template <typename T>
  struct Witnessed {
    bool             holds;
    std::optional<T> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  Witnessed<Element> is_band(FiniteSemigroup const& S);

  // Index and period of the monogenic subsemigroup generated by x:
  // x^index = x^(index + period), both minimal.
  struct IndexPeriod {
    Element     element;
    std::size_t index;
    std::size_t period;

    bool operator==(IndexPeriod const&) const = default;
  };

  IndexPeriod index_period(FiniteSemigroup const& S, Element x);

  // On failure the witness is the first element with period > 1.
  Witnessed<IndexPeriod> is_aperiodic(FiniteSemigroup const& S);

  bool is_idempotent(FiniteSemigroup const& S, Element x);

  std::optional<Element> is_monoid(FiniteSemigroup const& S);

  // For all s there exist e, f with se = fs = s.
  bool has_relative_identities(FiniteSemigroup const& S);

  bool is_commutative(FiniteSemigroup const& S);

  // Finds an absorbing element (there is at most one).
  std::optional<Element> zero(FiniteSemigroup const& S);

  //! A subsemigroup together with its embedding into the parent.
  struct Subsemigroup {
    FiniteSemigroup      semigroup;
    std::vector<Element> embedding;  // index in sub -> index in parent
  };

  //! The subsemigroup of all products xy, elements kept in parent order.
  Subsemigroup square(FiniteSemigroup const& S);

  //! Subsemigroup generated by the given elements, in parent index order.
  Subsemigroup generated_subsemigroup(FiniteSemigroup const&   S,
                                      std::span<Element const> generators);

  //! The left-regular representation a -> (x -> ax).
  struct LeftRegularRepresentation {
    // Composition image; element k is named after the first a with that map.
    FiniteSemigroup image;
    // Element of S -> element of image.
    std::vector<Element> representation;
    bool                 faithful;
    // All pairs a < b with identical left translations.
    std::vector<std::pair<Element, Element>> kernel_pairs;
  };

  LeftRegularRepresentation lrr(FiniteSemigroup const& S);

  // Same names, transposed table.
  FiniteSemigroup opposite(FiniteSemigroup const& S);

  // Elements (s, t) ordered by s * |T| + t, named "(s,t)".
  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);

  // Least k with S^k = {0} for the absorbing zero 0, if any.
  std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& S);

}  // namespace selfaut

#endif  // SELFAUT_SEMIGROUP_HPP_
