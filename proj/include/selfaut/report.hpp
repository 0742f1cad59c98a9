#ifndef SELFAUT_REPORT_HPP_
#define SELFAUT_REPORT_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "selfaut/cayley.hpp"
#include "selfaut/semigroup.hpp"

namespace selfaut {

  //! JSON object whose keys are the ClassificationReport field names;
  //! elements appear by name.
  nlohmann::json report_to_json(FiniteSemigroup const&      S,
                                ClassificationReport const& report);

  //! One "field: value" line per flag, then witnesses.
  std::string report_to_text(FiniteSemigroup const&      S,
                             ClassificationReport const& report);

  // file,n,band,aperiodic,monoid,lrr_faithful,s2_band,self_dual,
  // self_automaton,c_self_automaton,sigma_size
  std::string census_header();

  //! Booleans as true/false, unknown as "?", infinite Σ size as "inf".
  std::string census_row(std::string const&          file,
                         FiniteSemigroup const&      S,
                         ClassificationReport const& report);

  struct CensusResult {
    std::string csv;
    std::size_t rows     = 0;
    std::size_t failures = 0;
  };

  //! Classifies every regular file in `dir` as a table file, in file name
  //! order. Files that cannot be classified are reported on
  //! `err` and skipped.
  CensusResult census(std::filesystem::path const& dir,
                      Budgets const&               budgets,
                      std::ostream&                err);

}  // namespace selfaut

#endif  // SELFAUT_REPORT_HPP_
