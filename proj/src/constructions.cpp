#include "selfaut/constructions.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "selfaut/errors.hpp"

namespace selfaut {

  namespace {
    using Table = std::vector<std::vector<Element>>;

    FiniteSemigroup build(std::size_t                                   n,
                          std::function<std::string(std::size_t)> const& name,
                          std::function<std::size_t(std::size_t, std::size_t)> const&
                              mult) {
      std::vector<std::string> names;
      Table                    table(n);
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(name(i));
        for (std::size_t j = 0; j < n; ++j) {
          table[i].push_back(static_cast<Element>(mult(i, j)));
        }
      }
      return FiniteSemigroup::validate(std::move(names), std::move(table));
    }

    void require_size(std::size_t n, std::size_t least, char const* what) {
      if (n < least) {
        throw BadParam(std::string(what) + " needs size >= "
                       + std::to_string(least));
      }
    }

    // Keeps the parts' names when they are pairwise distinct and avoid the
    // reserved names; otherwise prefixes part i with labels[i].
    std::vector<std::vector<std::string>>
    disjoint_names(std::vector<std::vector<std::string>> parts,
                   std::vector<std::string> const&       labels,
                   std::vector<std::string> const&       reserved) {
      std::set<std::string> seen(reserved.begin(), reserved.end());
      bool                  clash = false;
      for (auto const& part : parts) {
        for (auto const& name : part) {
          clash = clash || !seen.insert(name).second;
        }
      }
      if (clash) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          for (auto& name : parts[i]) {
            name = labels[i] + name;
          }
        }
      }
      return parts;
    }
  }  // namespace

  FiniteSemigroup left_zero(std::size_t n) {
    require_size(n, 1, "left_zero");
    return build(
        n,
        [](std::size_t i) { return "x" + std::to_string(i + 1); },
        [](std::size_t i, std::size_t) { return i; });
  }

  FiniteSemigroup right_zero(std::size_t n) {
    require_size(n, 1, "right_zero");
    return build(
        n,
        [](std::size_t i) { return "y" + std::to_string(i + 1); },
        [](std::size_t, std::size_t j) { return j; });
  }

  FiniteSemigroup rectangular_band(std::size_t p, std::size_t q) {
    require_size(p, 1, "rectangular_band");
    require_size(q, 1, "rectangular_band");
    return build(
        p * q,
        [q](std::size_t x) {
          return "(" + std::to_string(x / q + 1) + "," + std::to_string(x % q + 1)
                 + ")";
        },
        [q](std::size_t x, std::size_t y) { return (x / q) * q + y % q; });
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    require_size(n, 1, "chain_semilattice");
    return build(
        n,
        [](std::size_t i) { return "e" + std::to_string(i + 1); },
        [](std::size_t i, std::size_t j) { return std::max(i, j); });
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    require_size(n, 1, "cyclic_group");
    return build(
        n,
        [](std::size_t i) { return "g" + std::to_string(i); },
        [n](std::size_t i, std::size_t j) { return (i + j) % n; });
  }

  FiniteSemigroup nilpotent_monogenic(std::size_t k) {
    require_size(k, 2, "nilpotent_monogenic");
    // element i is x^(i+1)
    return build(
        k,
        [](std::size_t i) {
          return i == 0 ? std::string("x") : "x" + std::to_string(i + 1);
        },
        [k](std::size_t i, std::size_t j) { return std::min(i + j + 1, k - 1); });
  }

  FiniteSemigroup basic_family(std::string_view             kind,
                               std::span<std::size_t const> params) {
    auto arity = [&](std::size_t expected) {
      if (params.size() != expected) {
        throw BadParam(std::string(kind) + " takes " + std::to_string(expected)
                       + " parameter(s)");
      }
    };
    if (kind == "rectangular_band") {
      arity(2);
      return rectangular_band(params[0], params[1]);
    }
    static std::map<std::string_view, FiniteSemigroup (*)(std::size_t)> const
        unary{{"left_zero", left_zero},
              {"right_zero", right_zero},
              {"chain_semilattice", chain_semilattice},
              {"cyclic_group", cyclic_group},
              {"nilpotent_monogenic", nilpotent_monogenic}};
    auto it = unary.find(kind);
    if (it == unary.end()) {
      throw BadParam("unknown family '" + std::string(kind) + "'");
    }
    arity(1);
    return it->second(params[0]);
  }

  FiniteSemigroup example_s2_left_zero() {
    // rows a: b b b c / b: b b b b / c: c c c c / d: d d d d
    return FiniteSemigroup::validate(
        {"a", "b", "c", "d"},
        {{1, 1, 1, 2}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 3, 3, 3}});
  }

  FiniteSemigroup example_s2_right_zero() {
    // rows a: a b c a / b: a b c a / c: a b c b / d: a b c a
    return FiniteSemigroup::validate(
        {"a", "b", "c", "d"},
        {{0, 1, 2, 0}, {0, 1, 2, 0}, {0, 1, 2, 1}, {0, 1, 2, 0}});
  }

  MealyAutomaton example_ab_automaton() {
    // (a,0) -> (b,0), (a,1) -> (a,1), (b,0) -> (b,0), (b,1) -> (a,0)
    return MealyAutomaton::create(
        {"a", "b"}, {"0", "1"}, {{1, 0}, {0, 1}, {1, 0}, {0, 0}});
  }

  FiniteSemigroup zero_union(FiniteSemigroup const& A,
                             FiniteSemigroup const& B,
                             bool                   merge_zeros) {
    std::optional<Element> const za = merge_zeros ? zero(A) : std::nullopt;
    std::optional<Element> const zb = merge_zeros ? zero(B) : std::nullopt;

    std::vector<std::vector<std::string>> parts(2);
    std::vector<Element> index_a(A.size()), index_b(B.size());
    std::size_t          n = 0;
    for (Element x = 0; x < A.size(); ++x) {
      if (x != za) {
        index_a[x] = static_cast<Element>(n++);
        parts[0].push_back(A.name(x));
      }
    }
    for (Element x = 0; x < B.size(); ++x) {
      if (x != zb) {
        index_b[x] = static_cast<Element>(n++);
        parts[1].push_back(B.name(x));
      }
    }
    auto const z = static_cast<Element>(n++);
    if (za) {
      index_a[*za] = z;
    }
    if (zb) {
      index_b[*zb] = z;
    }
    parts = disjoint_names(std::move(parts), {"A.", "B."}, {"0"});

    std::vector<std::string> names = parts[0];
    names.insert(names.end(), parts[1].begin(), parts[1].end());
    names.push_back("0");
    Table table(n, std::vector<Element>(n, z));
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        table[index_a[x]][index_a[y]] = index_a[A.product(x, y)];
      }
    }
    for (Element x = 0; x < B.size(); ++x) {
      for (Element y = 0; y < B.size(); ++y) {
        table[index_b[x]][index_b[y]] = index_b[B.product(x, y)];
      }
    }
    return FiniteSemigroup::validate(std::move(names), std::move(table));
  }

  FiniteSemigroup tails_construction(std::vector<FiniteSemigroup> const& parts,
                                     std::vector<std::size_t> const& tail_counts) {
    if (parts.size() != tail_counts.size() || parts.empty()) {
      throw BadParam("tails construction needs one tail count per part");
    }
    std::vector<std::vector<std::string>> part_names;
    std::vector<std::string>              labels;
    std::vector<std::string>              tails;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (tail_counts[i] < 1) {
        throw BadParam("tail counts must be at least 1");
      }
      part_names.push_back(parts[i].names());
      labels.push_back("S" + std::to_string(i + 1) + ".");
      for (std::size_t j = 0; j < tail_counts[i]; ++j) {
        tails.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
    }
    std::vector<std::string> reserved = tails;
    reserved.push_back("0");
    part_names = disjoint_names(std::move(part_names), labels, reserved);

    std::vector<std::string> names;
    std::vector<std::size_t> offset;
    for (auto const& p : part_names) {
      offset.push_back(names.size());
      names.insert(names.end(), p.begin(), p.end());
    }
    std::size_t const tails_start = names.size();
    names.insert(names.end(), tails.begin(), tails.end());
    auto const z = static_cast<Element>(names.size());
    names.push_back("0");

    Table table(names.size(), std::vector<Element>(names.size(), z));
    std::size_t tail = tails_start;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto const& P = parts[i];
      for (Element x = 0; x < P.size(); ++x) {
        for (Element y = 0; y < P.size(); ++y) {
          table[offset[i] + x][offset[i] + y]
              = static_cast<Element>(offset[i] + P.product(x, y));
        }
      }
      for (std::size_t j = 0; j < tail_counts[i]; ++j, ++tail) {
        for (Element y = 0; y < P.size(); ++y) {
          table[tail][offset[i] + y] = static_cast<Element>(tail);
        }
      }
    }
    return FiniteSemigroup::validate(std::move(names), std::move(table));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    std::string one = "1";
    while (S.index_of(one)) {
      one += "'";
    }
    auto names = S.names();
    auto table = S.table();
    names.push_back(one);
    for (Element x = 0; x < S.size(); ++x) {
      table[x].push_back(x);
    }
    auto& last = table.emplace_back();
    for (Element x = 0; x <= S.size(); ++x) {
      last.push_back(x);
    }
    return FiniteSemigroup::validate(std::move(names), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // Steinberg's example
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Map = std::array<Element, 5>;  // transformation of {0..4}

    struct Generated {
      std::vector<Map>         elements;
      std::vector<std::string> names;
      Table                    table;
    };

    // "a" "a" "b" -> "a2b"
    std::string compress(std::vector<std::string> const& letters) {
      std::string out;
      for (std::size_t i = 0; i < letters.size();) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) {
          ++j;
        }
        out += letters[i];
        if (j - i > 1) {
          out += std::to_string(j - i);
        }
        i = j;
      }
      return out;
    }

    // Breadth-first closure of the generators under right multiplication,
    // naming elements by their first word found.
    Generated generate(std::vector<Map> const&         gens,
                       std::vector<std::string> const& letters,
                       std::function<Map(Map const&, Map const&)> const& mult) {
      Generated                             g;
      std::map<Map, Element>                index;
      std::vector<std::vector<std::string>> words;
      auto add = [&](Map const& m, std::vector<std::string> word) {
        if (index.emplace(m, static_cast<Element>(g.elements.size())).second) {
          g.elements.push_back(m);
          words.push_back(std::move(word));
        }
      };
      for (std::size_t i = 0; i < gens.size(); ++i) {
        add(gens[i], {letters[i]});
      }
      for (std::size_t i = 0; i < g.elements.size(); ++i) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
          auto word = words[i];
          word.push_back(letters[k]);
          add(mult(g.elements[i], gens[k]), std::move(word));
        }
      }
      for (auto const& w : words) {
        g.names.push_back(compress(w));
      }
      for (auto const& x : g.elements) {
        auto& row = g.table.emplace_back();
        for (auto const& y : g.elements) {
          row.push_back(index.at(mult(x, y)));
        }
      }
      return g;
    }

    // a = (1 2 3 4 5 / 2 3 3 4 5), b = (1 2 3 4 5 / 4 5 4 4 5), 0-based
    constexpr Map map_a{1, 2, 2, 3, 4};
    constexpr Map map_b{3, 4, 3, 3, 4};

    // Acting on the right: x(fg) = (xf)g.
    Map right_compose(Map const& f, Map const& g) {
      Map out{};
      for (std::size_t x = 0; x < 5; ++x) {
        out[x] = g[f[x]];
      }
      return out;
    }

    // Acting on the left: (fg)(x) = f(g(x)).
    Map left_compose(Map const& f, Map const& g) {
      Map out{};
      for (std::size_t x = 0; x < 5; ++x) {
        out[x] = f[g[x]];
      }
      return out;
    }
  }  // namespace

  SteinbergBundle steinberg() {
    Generated T  = generate({map_a, map_b}, {"a", "b"}, right_compose);
    Generated Tp = generate({map_a, map_b}, {"a'", "b'"}, left_compose);

    // That as pairs (index in Tp, index in T).
    using Pair = std::pair<Element, Element>;
    std::vector<Pair>     that;
    std::map<Pair, Element> that_index;
    auto add = [&](Pair p) {
      if (that_index.emplace(p, static_cast<Element>(that.size())).second) {
        that.push_back(p);
      }
    };
    // Generators (a',a) and (b',b) are element 0 and 1 in both.
    std::vector<Pair> const gens{{0, 0}, {1, 1}};
    for (auto const& g : gens) {
      add(g);
    }
    for (std::size_t i = 0; i < that.size(); ++i) {
      for (auto const& g : gens) {
        add({Tp.table[that[i].first][g.first], T.table[that[i].second][g.second]});
      }
    }
    std::size_t const nh = that.size();

    std::vector<std::string> that_names;
    Table                    that_table(nh);
    for (auto const& [u, v] : that) {
      that_names.push_back("(" + Tp.names[u] + "," + T.names[v] + ")");
    }
    for (std::size_t i = 0; i < nh; ++i) {
      for (std::size_t j = 0; j < nh; ++j) {
        that_table[i].push_back(that_index.at(
            {Tp.table[that[i].first][that[j].first],
             T.table[that[i].second][that[j].second]}));
      }
    }

    // R = X' x X; (i,j) has index 5i + j.
    auto r_index = [](std::size_t i, std::size_t j) { return 5 * i + j; };
    std::vector<std::string> r_names;
    Table                    r_table(25);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) {
        r_names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1)
                          + ")");
      }
    }
    for (std::size_t x = 0; x < 25; ++x) {
      for (std::size_t y = 0; y < 25; ++y) {
        r_table[x].push_back(static_cast<Element>(r_index(x / 5, y % 5)));
      }
    }

    // S = That ∪ R with (u,v)(i,j) = (u(i),j) and (i,j)(u,v) = (i,jv).
    std::vector<std::string> s_names = that_names;
    s_names.insert(s_names.end(), r_names.begin(), r_names.end());
    Table s_table(nh + 25, std::vector<Element>(nh + 25));
    for (std::size_t x = 0; x < nh + 25; ++x) {
      for (std::size_t y = 0; y < nh + 25; ++y) {
        std::size_t p;
        if (x < nh && y < nh) {
          p = that_table[x][y];
        } else if (x >= nh && y >= nh) {
          p = nh + r_table[x - nh][y - nh];
        } else if (x < nh) {
          Map const&  u = Tp.elements[that[x].first];
          std::size_t i = (y - nh) / 5, j = (y - nh) % 5;
          p             = nh + r_index(u[i], j);
        } else {
          Map const&  v = T.elements[that[y].second];
          std::size_t i = (x - nh) / 5, j = (x - nh) % 5;
          p             = nh + r_index(i, v[j]);
        }
        s_table[x][y] = static_cast<Element>(p);
      }
    }

    std::vector<Element> that_in_s, r_in_s;
    for (std::size_t i = 0; i < nh; ++i) {
      that_in_s.push_back(static_cast<Element>(i));
    }
    for (std::size_t i = 0; i < 25; ++i) {
      r_in_s.push_back(static_cast<Element>(nh + i));
    }

    return SteinbergBundle{
        FiniteSemigroup::validate(std::move(T.names), std::move(T.table)),
        FiniteSemigroup::validate(std::move(Tp.names), std::move(Tp.table)),
        FiniteSemigroup::validate(std::move(that_names), std::move(that_table)),
        FiniteSemigroup::validate(std::move(r_names), std::move(r_table)),
        FiniteSemigroup::validate(std::move(s_names), std::move(s_table)),
        std::move(that_in_s),
        std::move(r_in_s)};
  }

}  // namespace selfaut
