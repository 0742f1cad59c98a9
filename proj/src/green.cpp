#include "selfaut/green.hpp"

#include <algorithm>
#include <map>

#include "selfaut/errors.hpp"

namespace selfaut {

  Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
    Partition                             p;
    std::map<std::size_t, std::size_t>    renumber;
    p.class_of.resize(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, inserted] = renumber.emplace(labels[x], p.classes.size());
      if (inserted) {
        p.classes.emplace_back();
      }
      p.class_of[x] = it->second;
      p.classes[it->second].push_back(static_cast<Element>(x));
    }
    return p;
  }

  Relation relation_of(Partition const& p) {
    std::size_t n = p.class_of.size();
    Relation    rel(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rel[a][b] = p.class_of[a] == p.class_of[b];
      }
    }
    return rel;
  }

  Relation compose(Relation const& first, Relation const& second) {
    std::size_t n = first.size();
    Relation    out(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (!first[a][c]) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (second[c][b]) {
            out[a][b] = true;
          }
        }
      }
    }
    return out;
  }

  Partition partition_of(Relation const& equivalence) {
    std::size_t              n = equivalence.size();
    std::vector<std::size_t> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = a;
      for (std::size_t b = 0; b < a; ++b) {
        if (equivalence[a][b]) {
          labels[a] = labels[b];
          break;
        }
      }
    }
    return Partition::from_labels(labels);
  }

  namespace {
    using Bits = std::vector<bool>;

    Partition by_equal_sets(std::vector<Bits> const& sets) {
      std::map<Bits, std::size_t> ids;
      std::vector<std::size_t>    labels;
      for (auto const& s : sets) {
        labels.push_back(ids.emplace(s, ids.size()).first->second);
      }
      return Partition::from_labels(labels);
    }

    bool subset(Bits const& a, Bits const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
          return false;
        }
      }
      return true;
    }

    std::size_t count(Bits const& a) {
      return static_cast<std::size_t>(std::count(a.begin(), a.end(), true));
    }
  }  // namespace

  GreenStructure green(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    std::vector<Bits> right(n, Bits(n, false)), left(n, Bits(n, false)),
        two_sided(n, Bits(n, false));
    for (Element a = 0; a < n; ++a) {
      right[a][a] = left[a][a] = two_sided[a][a] = true;
      for (Element x = 0; x < n; ++x) {
        Element ax = S.product(a, x);
        Element xa = S.product(x, a);
        right[a][ax] = true;
        left[a][xa]  = true;
        two_sided[a][ax] = two_sided[a][xa] = true;
        for (Element y = 0; y < n; ++y) {
          two_sided[a][S.product(xa, y)] = true;
        }
      }
    }

    GreenStructure g;
    g.r_classes = by_equal_sets(right);
    g.l_classes = by_equal_sets(left);
    {
      std::vector<std::size_t> labels(n);
      for (Element a = 0; a < n; ++a) {
        labels[a] = g.r_classes.class_of[a] * n + g.l_classes.class_of[a];
      }
      g.h_classes = Partition::from_labels(labels);
    }
    Relation const R  = relation_of(g.r_classes);
    Relation const L  = relation_of(g.l_classes);
    Relation const RL = compose(R, L);
    if (RL != compose(L, R)) {
      throw InternalDisagreement("R o L differs from L o R");
    }
    g.d_classes = partition_of(RL);

    std::size_t const d = g.d_classes.size();
    g.d_leq.assign(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        g.d_leq[i][j] = subset(two_sided[g.d_classes.classes[i].front()],
                               two_sided[g.d_classes.classes[j].front()]);
      }
    }

    g.regular.assign(n, false);
    for (Element a = 0; a < n; ++a) {
      for (Element x = 0; x < n && !g.regular[a]; ++x) {
        g.regular[a] = S.product(S.product(a, x), a) == a;
      }
    }
    for (Element a = 0; a < n; ++a) {
      g.right_ideal_size.push_back(count(right[a]));
      g.left_ideal_size.push_back(count(left[a]));
      g.ideal_size.push_back(count(two_sided[a]));
    }
    return g;
  }

  std::vector<std::size_t> GreenStructure::d_topological_order() const {
    std::size_t const        d = d_classes.size();
    std::vector<bool>        placed(d, false);
    std::vector<std::size_t> order;
    // Classes are already indexed by least element, so scanning in index
    // order gives the tie-break.
    while (order.size() < d) {
      for (std::size_t i = 0; i < d; ++i) {
        if (placed[i]) {
          continue;
        }
        bool maximal = true;
        for (std::size_t j = 0; j < d && maximal; ++j) {
          maximal = placed[j] || j == i || !d_leq[i][j];
        }
        if (maximal) {
          placed[i] = true;
          order.push_back(i);
          break;
        }
      }
    }
    return order;
  }

}  // namespace selfaut
