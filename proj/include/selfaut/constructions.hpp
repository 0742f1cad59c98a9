#ifndef SELFAUT_CONSTRUCTIONS_HPP_
#define SELFAUT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "selfaut/mealy.hpp"
#include "selfaut/semigroup.hpp"

namespace selfaut {

  // x1..xn with xi xj = xi.
  FiniteSemigroup left_zero(std::size_t n);
  // y1..yn with yi yj = yj.
  FiniteSemigroup right_zero(std::size_t n);
  // (i,j) for i <= p, j <= q with (i,j)(k,l) = (i,l).
  FiniteSemigroup rectangular_band(std::size_t p, std::size_t q);
  // e1..en with ei ej = e_max(i,j); e1 is the identity, en the zero.
  FiniteSemigroup chain_semilattice(std::size_t n);
  // g0..g(n-1), addition mod n.
  FiniteSemigroup cyclic_group(std::size_t n);
  // x, x2, ..., xk with x^i x^j = x^min(i+j,k); requires k >= 2.
  FiniteSemigroup nilpotent_monogenic(std::size_t k);

  //! Builds a family by name ("left_zero", "right_zero", "rectangular_band",
  //! "chain_semilattice", "cyclic_group", "nilpotent_monogenic"). Throws
  //! BadParam for unknown kinds or bad parameters.
  FiniteSemigroup basic_family(std::string_view                 kind,
                               std::span<std::size_t const> params);

  // The 4-element non-band self-automaton example with S^2 a left-zero band.
  FiniteSemigroup example_s2_left_zero();
  // The 4-element example with S^2 a right-zero band and Σ(C(S)) ≅ R_2.
  FiniteSemigroup example_s2_right_zero();

  //! The two-state automaton over {0,1} whose semigroup is <a,b | ab = b^2>.
  MealyAutomaton example_ab_automaton();

  //! A ⊔ B ⊔ {0}, products inside A and B kept, everything else 0. With
  //! merge_zeros an absorbing zero of A or B is identified with the new 0.
  FiniteSemigroup zero_union(FiniteSemigroup const& A,
                             FiniteSemigroup const& B,
                             bool                   merge_zeros);

  //! S_1 ⊔ ... ⊔ S_m ⊔ {a_ij} ⊔ {0} where a_ij s = a_ij for s in S_i and
  //! every other mixed product is 0.
  FiniteSemigroup tails_construction(std::vector<FiniteSemigroup> const& parts,
                                     std::vector<std::size_t> const& tail_counts);

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  struct SteinbergBundle {
    FiniteSemigroup      T;       // <a, b> acting on the right of {1..5}
    FiniteSemigroup      Tprime;  // <a', b'> acting on the left of {1'..5'}
    FiniteSemigroup      That;    // <(a',a), (b',b)> inside Tprime x T
    FiniteSemigroup      R;       // 5 x 5 rectangular band on X' x X
    FiniteSemigroup      S;       // That ∪ R
    std::vector<Element> that_in_s;
    std::vector<Element> r_in_s;
  };

  //! The 36-element self-dual, self-automaton non-band whose square is a
  //! band.
  SteinbergBundle steinberg();

}  // namespace selfaut

#endif  // SELFAUT_CONSTRUCTIONS_HPP_
