#include "selfaut/isomorphism.hpp"

#include <algorithm>
#include <cstddef>

#include "selfaut/green.hpp"

namespace selfaut {

  bool verify(IsoWitness const&      witness,
              FiniteSemigroup const& S,
              FiniteSemigroup const& T) {
    auto const& f = witness.mapping;
    if (S.size() != T.size() || f.size() != S.size()) {
      return false;
    }
    std::vector<bool> hit(T.size(), false);
    for (Element y : f) {
      if (y >= T.size() || hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        Element expected = witness.kind == IsoKind::isomorphism
                               ? T.product(f[x], f[y])
                               : T.product(f[y], f[x]);
        if (f[S.product(x, y)] != expected) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    using Invariant = std::vector<std::size_t>;

    std::vector<Invariant> invariants(FiniteSemigroup const& S) {
      GreenStructure const   g = green(S);
      std::vector<Invariant> out;
      for (Element x = 0; x < S.size(); ++x) {
        auto ip = index_period(S, x);
        out.push_back({is_idempotent(S, x) ? 1u : 0u,
                       ip.index,
                       ip.period,
                       g.right_ideal_size[x],
                       g.left_ideal_size[x],
                       g.ideal_size[x],
                       g.r_classes.classes[g.r_classes.class_of[x]].size(),
                       g.l_classes.classes[g.l_classes.class_of[x]].size(),
                       g.h_classes.classes[g.h_classes.class_of[x]].size(),
                       g.d_classes.classes[g.d_classes.class_of[x]].size(),
                       g.regular[x] ? 1u : 0u});
      }
      return out;
    }

    constexpr Element unassigned = static_cast<Element>(-1);

    class Search {
     public:
      Search(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : _S(S),
            _T(T),
            _inv_s(invariants(S)),
            _inv_t(invariants(T)),
            _map(S.size(), unassigned),
            _used(T.size(), false) {}

      bool multisets_agree() const {
        auto a = _inv_s, b = _inv_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
      }

      bool run() {
        Element x = 0;
        while (x < _S.size() && _map[x] != unassigned) {
          ++x;
        }
        if (x == _S.size()) {
          return true;
        }
        for (Element c = 0; c < _T.size(); ++c) {
          if (_used[c] || _inv_s[x] != _inv_t[c]) {
            continue;
          }
          std::size_t mark = _trail.size();
          if (assign(x, c) && run()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      std::vector<Element> const& mapping() const {
        return _map;
      }

     private:
      bool bind(Element x, Element y, std::vector<Element>& pending) {
        if (_map[x] != unassigned) {
          return _map[x] == y;
        }
        if (_used[y] || _inv_s[x] != _inv_t[y]) {
          return false;
        }
        _map[x]  = y;
        _used[y] = true;
        _trail.push_back(x);
        pending.push_back(x);
        return true;
      }

      // Binds x -> c and closes the partial map under products.
      bool assign(Element x, Element c) {
        std::vector<Element> pending;
        if (!bind(x, c, pending)) {
          return false;
        }
        while (!pending.empty()) {
          Element u = pending.back();
          pending.pop_back();
          // Indexed loop: bind() may append to the trail.
          for (std::size_t i = 0; i < _trail.size(); ++i) {
            Element v = _trail[i];
            if (!bind(_S.product(u, v), _T.product(_map[u], _map[v]), pending)
                || !bind(_S.product(v, u),
                         _T.product(_map[v], _map[u]),
                         pending)) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Element x = _trail.back();
          _trail.pop_back();
          _used[_map[x]] = false;
          _map[x]        = unassigned;
        }
      }

      FiniteSemigroup const& _S;
      FiniteSemigroup const& _T;
      std::vector<Invariant> _inv_s;
      std::vector<Invariant> _inv_t;
      std::vector<Element>   _map;
      std::vector<bool>      _used;
      std::vector<Element>   _trail;
    };
  }  // namespace

  std::optional<IsoWitness> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    Search search(S, T);
    if (!search.multisets_agree() || !search.run()) {
      return std::nullopt;
    }
    return IsoWitness{search.mapping(), IsoKind::isomorphism};
  }

  std::optional<IsoWitness> find_anti_isomorphism(FiniteSemigroup const& S,
                                                  FiniteSemigroup const& T) {
    auto w = find_isomorphism(S, opposite(T));
    if (w) {
      w->kind = IsoKind::anti_isomorphism;
    }
    return w;
  }

  std::optional<IsoWitness> self_duality(FiniteSemigroup const& S) {
    return find_anti_isomorphism(S, S);
  }

}  // namespace selfaut
