#ifndef SELFAUT_RENDER_HPP_
#define SELFAUT_RENDER_HPP_

#include <string>

#include "selfaut/mealy.hpp"
#include "selfaut/semigroup.hpp"

namespace selfaut {

  //! Graphviz digraph with one node per state and one edge per (state,
  //! target) labelled "in|out"; parallel edges are merged with comma-joined
  //! labels. Output depends only on the automaton.
  std::string export_dot(MealyAutomaton const& A);

  //! ASCII egg-box diagram: one grid per D-class, maximal classes first,
  //! rows are R-classes and columns L-classes.
  std::string render_eggbox(FiniteSemigroup const& S);

}  // namespace selfaut

#endif  // SELFAUT_RENDER_HPP_
