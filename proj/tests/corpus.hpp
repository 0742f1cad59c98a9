#ifndef SELFAUT_TESTS_CORPUS_HPP_
#define SELFAUT_TESTS_CORPUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "selfaut/constructions.hpp"
#include "selfaut/semigroup.hpp"

namespace selfaut::test {

  struct Named {
    std::string     name;
    FiniteSemigroup S;
  };

  // Bands used for the expansion property: rectangular bands up to 3 x 3,
  // chains up to 4, some products and identity adjunctions.
  inline std::vector<Named> band_corpus() {
    std::vector<Named> out;
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t q = 1; q <= 3; ++q) {
        out.push_back({"rectangular_band(" + std::to_string(p) + ","
                           + std::to_string(q) + ")",
                       rectangular_band(p, q)});
      }
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      out.push_back({"chain_semilattice(" + std::to_string(n) + ")",
                     chain_semilattice(n)});
    }
    out.push_back({"left_zero(2)xright_zero(2)",
                   direct_product(left_zero(2), right_zero(2))});
    out.push_back({"chain(2)xrectangular_band(1,2)",
                   direct_product(chain_semilattice(2), rectangular_band(1, 2))});
    out.push_back({"rectangular_band(2,1)xchain(3)",
                   direct_product(rectangular_band(2, 1), chain_semilattice(3))});
    out.push_back({"chain(2)xchain(2)",
                   direct_product(chain_semilattice(2), chain_semilattice(2))});
    out.push_back({"rectangular_band(2,2)+1",
                   adjoin_identity(rectangular_band(2, 2))});
    out.push_back({"rectangular_band(1,3)+1",
                   adjoin_identity(rectangular_band(1, 3))});
    out.push_back({"rectangular_band(3,2)+1",
                   adjoin_identity(rectangular_band(3, 2))});
    out.push_back({"left_zero(2)+1", adjoin_identity(left_zero(2))});
    out.push_back({"chain(3)+1", adjoin_identity(chain_semilattice(3))});
    return out;
  }

  // Small semigroups of every kind built in the library; nothing larger
  // than 36 elements.
  inline std::vector<Named> corpus() {
    std::vector<Named> out;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const k = std::to_string(n);
      out.push_back({"left_zero(" + k + ")", left_zero(n)});
      out.push_back({"right_zero(" + k + ")", right_zero(n)});
      out.push_back({"cyclic_group(" + k + ")", cyclic_group(n)});
    }
    for (std::size_t k = 2; k <= 5; ++k) {
      out.push_back({"nilpotent_monogenic(" + std::to_string(k) + ")",
                     nilpotent_monogenic(k)});
    }
    for (auto& b : band_corpus()) {
      out.push_back(std::move(b));
    }
    out.push_back({"ex_sec6", example_s2_left_zero()});
    out.push_back({"ex_sec8", example_s2_right_zero()});
    auto bundle = steinberg();
    out.push_back({"steinberg.T", bundle.T});
    out.push_back({"steinberg.Tprime", bundle.Tprime});
    out.push_back({"steinberg.That", bundle.That});
    out.push_back({"steinberg.R", bundle.R});
    out.push_back({"steinberg.S", bundle.S});
    out.push_back({"tails([L2],[1])", tails_construction({left_zero(2)}, {1})});
    out.push_back({"tails([L2,L3],[2,1])",
                   tails_construction({left_zero(2), left_zero(3)}, {2, 1})});
    out.push_back({"tails([B22],[1])",
                   tails_construction({rectangular_band(2, 2)}, {1})});
    out.push_back({"zero_union(L2,R2)",
                   zero_union(left_zero(2), right_zero(2), false)});
    out.push_back({"zero_union(N3,R2,merge)",
                   zero_union(nilpotent_monogenic(3), right_zero(2), true)});
    out.push_back({"zero_union(N3,R2)",
                   zero_union(nilpotent_monogenic(3), right_zero(2), false)});
    out.push_back({"L2xL3", direct_product(left_zero(2), left_zero(3))});
    out.push_back({"L2xex_sec6", direct_product(left_zero(2), example_s2_left_zero())});
    out.push_back({"R2xex_sec6",
                   direct_product(right_zero(2), example_s2_left_zero())});
    out.push_back({"N3xL2", direct_product(nilpotent_monogenic(3), left_zero(2))});
    out.push_back({"ex_sec6+1", adjoin_identity(example_s2_left_zero())});
    out.push_back({"N3+1", adjoin_identity(nilpotent_monogenic(3))});
    out.push_back({"opposite(ex_sec6)", opposite(example_s2_left_zero())});
    return out;
  }

}  // namespace selfaut::test

#endif  // SELFAUT_TESTS_CORPUS_HPP_
