#ifndef SELFAUT_TABLE_IO_HPP_
#define SELFAUT_TABLE_IO_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfaut/mealy.hpp"
#include "selfaut/semigroup.hpp"

namespace selfaut {

  // Table file:
  //
  //   # comment
  //   elements: a b c d
  //   b b b c
  //   b b b b
  //   c c c c
  //   d d d d
  //
  // Row i lists the products (element i)(element j). Comment lines start
  // with '#', blank lines are ignored.

  //! Throws ParseError(line, reason); validation errors propagate as thrown
  //! by FiniteSemigroup::validate.
  FiniteSemigroup parse_table(std::string_view text);

  //! Header then one row per element, single spaces, trailing newline.
  std::string write_table(FiniteSemigroup const& S);

  // Automaton file:
  //
  //   states: a b
  //   alphabet: 0 1
  //   a 0 b 0
  //   a 1 a 1
  //   b 0 b 0
  //   b 1 a 0
  //
  // Each transition line reads "state symbol next output"; every
  // (state, symbol) pair appears exactly once.

  MealyAutomaton parse_automaton(std::string_view text);
  std::string    write_automaton(MealyAutomaton const& A);

  //! Either kind of file, told apart by the first header keyword.
  std::variant<FiniteSemigroup, MealyAutomaton> parse_any(std::string_view text);

  //! Splits a comma separated list of names. Commas inside parentheses do
  //! not split, so names such as "(a',a)" survive. Surrounding spaces are
  //! trimmed.
  std::vector<std::string> split_names(std::string_view text);

  std::string read_file(std::string const& path);

}  // namespace selfaut

#endif  // SELFAUT_TABLE_IO_HPP_
