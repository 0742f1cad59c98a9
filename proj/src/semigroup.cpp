#include "selfaut/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "selfaut/errors.hpp"

namespace selfaut {

  NotAssociative::NotAssociative(std::size_t i_, std::size_t j_, std::size_t k_)
      : Error("table is not associative: (" + std::to_string(i_) + "*"
              + std::to_string(j_) + ")*" + std::to_string(k_) + " != "
              + std::to_string(i_) + "*(" + std::to_string(j_) + "*"
              + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}

  ParseError::ParseError(std::size_t line_, std::string const& reason)
      : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}

  bool is_valid_name(std::string_view name) {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      return c == '#' || std::isspace(static_cast<unsigned char>(c));
    });
  }

  FiniteSemigroup
  FiniteSemigroup::validate(std::vector<std::string>          names,
                            std::vector<std::vector<Element>> table) {
    std::size_t const n = names.size();
    if (n == 0) {
      throw BadIndex("a semigroup needs at least one element");
    }
    if (table.size() != n) {
      throw BadIndex("table has " + std::to_string(table.size())
                     + " rows, expected " + std::to_string(n));
    }
    FiniteSemigroup S;
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_valid_name(names[i])) {
        throw InvalidName("invalid element name '" + names[i] + "'");
      }
      auto [it, inserted]
          = S._index.emplace(names[i], static_cast<Element>(i));
      if (!inserted) {
        throw DuplicateName("duplicate element name '" + names[i] + "'");
      }
    }
    S._table.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw BadIndex("row " + std::to_string(i) + " has "
                       + std::to_string(table[i].size()) + " entries, expected "
                       + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw BadIndex("entry (" + std::to_string(i) + "," + std::to_string(j)
                         + ") = " + std::to_string(table[i][j])
                         + " is out of range");
        }
        S._table.push_back(table[i][j]);
      }
    }
    S._names = std::move(names);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        Element const ij = S.product(i, j);
        for (Element k = 0; k < n; ++k) {
          if (S.product(ij, k) != S.product(i, S.product(j, k))) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
    return S;
  }

  std::optional<Element> FiniteSemigroup::index_of(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<std::vector<Element>> FiniteSemigroup::table() const {
    std::vector<std::vector<Element>> out(size());
    for (Element i = 0; i < size(); ++i) {
      out[i].assign(row(i).begin(), row(i).end());
    }
    return out;
  }

  bool is_idempotent(FiniteSemigroup const& S, Element x) {
    return S.product(x, x) == x;
  }

  Witnessed<Element> is_band(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      if (!is_idempotent(S, x)) {
        return {false, x};
      }
    }
    return {true, std::nullopt};
  }

  IndexPeriod index_period(FiniteSemigroup const& S, Element x) {
    // position[y] = k iff y = x^k, for the powers seen so far
    std::vector<std::size_t> position(S.size(), 0);
    Element                  power = x;
    for (std::size_t k = 1;; ++k) {
      if (position[power] != 0) {
        return {x, position[power], k - position[power]};
      }
      position[power] = k;
      power           = S.product(power, x);
    }
  }

  Witnessed<IndexPeriod> is_aperiodic(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      auto ip = index_period(S, x);
      if (ip.period > 1) {
        return {false, ip};
      }
    }
    return {true, std::nullopt};
  }

  std::optional<Element> is_monoid(FiniteSemigroup const& S) {
    for (Element e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (Element s = 0; s < S.size() && ok; ++s) {
        ok = S.product(e, s) == s && S.product(s, e) == s;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool has_relative_identities(FiniteSemigroup const& S) {
    for (Element s = 0; s < S.size(); ++s) {
      bool right = false, left = false;
      for (Element e = 0; e < S.size(); ++e) {
        right = right || S.product(s, e) == s;
        left  = left || S.product(e, s) == s;
      }
      if (!right || !left) {
        return false;
      }
    }
    return true;
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = x + 1; y < S.size(); ++y) {
        if (S.product(x, y) != S.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Element> zero(FiniteSemigroup const& S) {
    for (Element z = 0; z < S.size(); ++z) {
      bool ok = true;
      for (Element s = 0; s < S.size() && ok; ++s) {
        ok = S.product(z, s) == z && S.product(s, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  namespace {
    Subsemigroup induced(FiniteSemigroup const& S, std::vector<bool> const& in) {
      std::vector<Element> embedding;
      std::vector<Element> local(S.size(), 0);
      for (Element x = 0; x < S.size(); ++x) {
        if (in[x]) {
          local[x] = static_cast<Element>(embedding.size());
          embedding.push_back(x);
        }
      }
      std::vector<std::string>          names;
      std::vector<std::vector<Element>> table;
      for (Element x : embedding) {
        names.push_back(S.name(x));
        auto& row = table.emplace_back();
        for (Element y : embedding) {
          row.push_back(local[S.product(x, y)]);
        }
      }
      return {FiniteSemigroup::validate(std::move(names), std::move(table)),
              std::move(embedding)};
    }
  }  // namespace

  Subsemigroup square(FiniteSemigroup const& S) {
    std::vector<bool> in(S.size(), false);
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y : S.row(x)) {
        in[y] = true;
      }
    }
    return induced(S, in);
  }

  Subsemigroup generated_subsemigroup(FiniteSemigroup const&   S,
                                      std::span<Element const> generators) {
    std::vector<bool>    in(S.size(), false);
    std::vector<Element> queue;
    for (Element g : generators) {
      if (g >= S.size()) {
        throw BadIndex("generator " + std::to_string(g) + " out of range");
      }
      if (!in[g]) {
        in[g] = true;
        queue.push_back(g);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Element g : generators) {
        Element p = S.product(queue[i], g);
        if (!in[p]) {
          in[p] = true;
          queue.push_back(p);
        }
      }
    }
    return induced(S, in);
  }

  LeftRegularRepresentation lrr(FiniteSemigroup const& S) {
    std::map<std::vector<Element>, Element> image_of;
    std::vector<Element>                    representation(S.size());
    std::vector<Element>                    first;  // image element -> first a
    for (Element a = 0; a < S.size(); ++a) {
      std::vector<Element> translation(S.row(a).begin(), S.row(a).end());
      auto [it, inserted] = image_of.emplace(
          std::move(translation), static_cast<Element>(first.size()));
      if (inserted) {
        first.push_back(a);
      }
      representation[a] = it->second;
    }
    // lambda_a composed with lambda_b is lambda_ab
    std::vector<std::string>          names;
    std::vector<std::vector<Element>> table;
    for (Element a : first) {
      names.push_back(S.name(a));
      auto& row = table.emplace_back();
      for (Element b : first) {
        row.push_back(representation[S.product(a, b)]);
      }
    }
    std::vector<std::pair<Element, Element>> kernel;
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = a + 1; b < S.size(); ++b) {
        if (representation[a] == representation[b]) {
          kernel.emplace_back(a, b);
        }
      }
    }
    bool faithful = kernel.empty();
    return {FiniteSemigroup::validate(std::move(names), std::move(table)),
            std::move(representation),
            faithful,
            std::move(kernel)};
  }

  FiniteSemigroup opposite(FiniteSemigroup const& S) {
    std::vector<std::vector<Element>> table(S.size());
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        table[x].push_back(S.product(y, x));
      }
    }
    return FiniteSemigroup::validate(S.names(), std::move(table));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    std::size_t const              m = T.size();
    std::vector<std::string>       names;
    std::vector<std::vector<Element>> table;
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < m; ++t) {
        names.push_back("(" + S.name(s) + "," + T.name(t) + ")");
        auto& row = table.emplace_back();
        for (Element u = 0; u < S.size(); ++u) {
          for (Element v = 0; v < m; ++v) {
            row.push_back(
                static_cast<Element>(S.product(s, u) * m + T.product(t, v)));
          }
        }
      }
    }
    return FiniteSemigroup::validate(std::move(names), std::move(table));
  }

  std::optional<std::size_t> nilpotency_class(FiniteSemigroup const& S) {
    auto z = zero(S);
    if (!z) {
      return std::nullopt;
    }
    // power = S^k as a membership vector
    std::vector<bool> power(S.size(), true);
    std::size_t       count = S.size();
    for (std::size_t k = 1;; ++k) {
      if (count == 1) {
        return k;
      }
      std::vector<bool> next(S.size(), false);
      std::size_t       next_count = 0;
      for (Element x = 0; x < S.size(); ++x) {
        if (!power[x]) {
          continue;
        }
        for (Element y : S.row(x)) {
          if (!next[y]) {
            next[y] = true;
            ++next_count;
          }
        }
      }
      if (next == power) {
        return std::nullopt;
      }
      power = std::move(next);
      count = next_count;
    }
  }

}  // namespace selfaut
