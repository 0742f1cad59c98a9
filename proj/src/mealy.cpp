#include "selfaut/mealy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "selfaut/errors.hpp"

namespace selfaut {

  namespace {
    std::size_t hash_words(std::uint32_t const* first, std::size_t count) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (std::size_t i = 0; i < count; ++i) {
        h ^= first[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }

    // Interns fixed-width tuples of 32-bit values, handing out dense ids in
    // order of first appearance.
    class TupleInterner {
     public:
      explicit TupleInterner(std::size_t width)
          : _width(width),
            _ids(16, Hash{this}, Equal{this}) {}

      TupleInterner(TupleInterner const&)            = delete;
      TupleInterner& operator=(TupleInterner const&) = delete;

      std::size_t width() const noexcept {
        return _width;
      }

      std::size_t size() const noexcept {
        return _arena.size() / _width;
      }

      std::uint32_t const* at(std::uint32_t id) const noexcept {
        return _arena.data() + static_cast<std::size_t>(id) * _width;
      }

      // Returns (id, inserted).
      std::pair<std::uint32_t, bool> intern(std::uint32_t const* tuple) {
        auto candidate = static_cast<std::uint32_t>(size());
        _arena.insert(_arena.end(), tuple, tuple + _width);
        auto [it, inserted] = _ids.insert(candidate);
        if (!inserted) {
          _arena.resize(_arena.size() - _width);
        }
        return {*it, inserted};
      }

     private:
      struct Hash {
        TupleInterner const* self;
        std::size_t operator()(std::uint32_t id) const noexcept {
          return hash_words(self->at(id), self->_width);
        }
      };
      struct Equal {
        TupleInterner const* self;
        bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
          return std::equal(
              self->at(a), self->at(a) + self->_width, self->at(b));
        }
      };

      std::size_t                                    _width;
      std::vector<std::uint32_t>                     _arena;
      std::unordered_set<std::uint32_t, Hash, Equal> _ids;
    };

    // Threads b through stages[0..len) in place, returning the output.
    Symbol thread(MealyAutomaton const& A,
                  std::uint32_t*        stages,
                  std::size_t           len,
                  Symbol                b) {
      for (std::size_t i = 0; i < len; ++i) {
        Transition t = A.delta(stages[i], b);
        stages[i]    = t.next;
        b            = t.output;
      }
      return b;
    }

    void check_stages(MealyAutomaton const& A, CompositeState const& w) {
      for (State q : w.stages()) {
        if (q >= A.num_states()) {
          throw BadIndex("state " + std::to_string(q) + " out of range");
        }
      }
    }

    void check_symbol(MealyAutomaton const& A, Symbol b) {
      if (b >= A.alphabet_size()) {
        throw UnknownSymbol("symbol " + std::to_string(b)
                            + " is not in the alphabet");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // MealyAutomaton
  ////////////////////////////////////////////////////////////////////////

  MealyAutomaton MealyAutomaton::create(std::vector<std::string> states,
                                        std::vector<std::string> alphabet,
                                        std::vector<Transition>  delta) {
    if (states.empty() || alphabet.empty()) {
      throw BadIndex("an automaton needs at least one state and one symbol");
    }
    if (delta.size() != states.size() * alphabet.size()) {
      throw BadIndex("transition function has "
                     + std::to_string(delta.size()) + " entries, expected "
                     + std::to_string(states.size() * alphabet.size()));
    }
    for (auto const* names : {&states, &alphabet}) {
      std::unordered_set<std::string> seen;
      for (auto const& name : *names) {
        if (!is_valid_name(name)) {
          throw InvalidName("invalid name '" + name + "'");
        }
        if (!seen.insert(name).second) {
          throw DuplicateName("duplicate name '" + name + "'");
        }
      }
    }
    for (auto const& t : delta) {
      if (t.next >= states.size() || t.output >= alphabet.size()) {
        throw BadIndex("transition target out of range");
      }
    }
    MealyAutomaton A;
    A._states   = std::move(states);
    A._alphabet = std::move(alphabet);
    A._delta    = std::move(delta);
    return A;
  }

  std::optional<State> MealyAutomaton::state_index(std::string_view name) const {
    auto it = std::find(_states.begin(), _states.end(), name);
    if (it == _states.end()) {
      return std::nullopt;
    }
    return static_cast<State>(it - _states.begin());
  }

  std::optional<Symbol>
  MealyAutomaton::symbol_index(std::string_view name) const {
    auto it = std::find(_alphabet.begin(), _alphabet.end(), name);
    if (it == _alphabet.end()) {
      return std::nullopt;
    }
    return static_cast<Symbol>(it - _alphabet.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // CompositeState, step, act
  ////////////////////////////////////////////////////////////////////////

  CompositeState::CompositeState(std::vector<State> stages)
      : _stages(std::move(stages)) {
    if (_stages.empty()) {
      throw BadParam("a composite state needs at least one stage");
    }
  }

  CompositeState CompositeState::from_product_order(std::vector<State> word) {
    std::reverse(word.begin(), word.end());
    return CompositeState(std::move(word));
  }

  std::vector<State> CompositeState::product_order() const {
    return {_stages.rbegin(), _stages.rend()};
  }

  std::pair<Symbol, CompositeState>
  step(MealyAutomaton const& A, CompositeState const& w, Symbol b) {
    check_stages(A, w);
    check_symbol(A, b);
    std::vector<State> next(w.stages().begin(), w.stages().end());
    Symbol             out = thread(A, next.data(), next.size(), b);
    return {out, CompositeState(std::move(next))};
  }

  std::vector<Symbol> act(MealyAutomaton const&   A,
                          CompositeState const&   w,
                          std::span<Symbol const> seq) {
    check_stages(A, w);
    std::vector<State>  current(w.stages().begin(), w.stages().end());
    std::vector<Symbol> out;
    out.reserve(seq.size());
    for (Symbol b : seq) {
      check_symbol(A, b);
      out.push_back(thread(A, current.data(), current.size(), b));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equality by pair exploration
  ////////////////////////////////////////////////////////////////////////

  struct EquivalenceChecker::Space {
    explicit Space(std::size_t width) : tuples(width) {}

    TupleInterner                                tuples;
    std::vector<bool>                            proven;
    std::vector<std::uint32_t>                   seen;
    std::vector<std::pair<std::uint32_t, Symbol>> parent;

    void grow() {
      std::size_t n = tuples.size();
      proven.resize(n, false);
      seen.resize(n, 0);
      parent.resize(n, {0, 0});
    }
  };

  EquivalenceChecker::EquivalenceChecker(MealyAutomaton const& A)
      : _automaton(&A) {}

  EquivalenceChecker::~EquivalenceChecker()                        = default;
  EquivalenceChecker::EquivalenceChecker(EquivalenceChecker&&) noexcept = default;

  Equality EquivalenceChecker::equal(CompositeState const& u,
                                     CompositeState const& v) {
    MealyAutomaton const& A = *_automaton;
    check_stages(A, u);
    check_stages(A, v);
    std::size_t const lu = u.length(), lv = v.length();
    auto&             slot = _spaces[{lu, lv}];
    if (!slot) {
      slot = std::make_unique<Space>(lu + lv);
    }
    Space& space = *slot;

    std::vector<std::uint32_t> buffer(lu + lv);
    std::copy(u.stages().begin(), u.stages().end(), buffer.begin());
    std::copy(v.stages().begin(), v.stages().end(), buffer.begin() + lu);
    std::uint32_t const start = space.tuples.intern(buffer.data()).first;
    space.grow();
    if (space.proven[start]) {
      return {true, {}};
    }

    ++_epoch;
    std::vector<std::uint32_t> queue{start};
    space.seen[start] = _epoch;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t const id = queue[qi];
      if (space.proven[id]) {
        continue;
      }
      for (Symbol b = 0; b < A.alphabet_size(); ++b) {
        std::copy(space.tuples.at(id),
                  space.tuples.at(id) + lu + lv,
                  buffer.begin());
        Symbol const x = thread(A, buffer.data(), lu, b);
        Symbol const y = thread(A, buffer.data() + lu, lv, b);
        if (x != y) {
          std::vector<Symbol> witness{b};
          for (std::uint32_t at = id; at != start;) {
            witness.push_back(space.parent[at].second);
            at = space.parent[at].first;
          }
          std::reverse(witness.begin(), witness.end());
          return {false, std::move(witness)};
        }
        auto [next, inserted] = space.tuples.intern(buffer.data());
        if (inserted) {
          space.grow();
        }
        if (space.seen[next] != _epoch) {
          space.seen[next]   = _epoch;
          space.parent[next] = {id, b};
          queue.push_back(next);
        }
      }
    }
    for (std::uint32_t id : queue) {
      space.proven[id] = true;
    }
    return {true, {}};
  }

  Equality words_equal(MealyAutomaton const& A,
                       CompositeState const& u,
                       CompositeState const& v) {
    return EquivalenceChecker(A).equal(u, v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimization
  ////////////////////////////////////////////////////////////////////////

  std::size_t ActionKeyHash::operator()(ActionKey const& key) const noexcept {
    std::size_t h = hash_words(key.next.data(), key.next.size());
    return h ^ (hash_words(key.output.data(), key.output.size()) * 31u);
  }

  namespace {
    struct VectorHash {
      std::size_t operator()(std::vector<std::uint32_t> const& v) const noexcept {
        return hash_words(v.data(), v.size());
      }
    };

    // Minimal form of an explicit machine with m states, all reachable from
    // state 0.
    ActionKey canonical_key(std::size_t                       m,
                            std::size_t                       B,
                            std::vector<std::uint32_t> const& next,
                            std::vector<Symbol> const&        out) {
      // Initial partition by output row, then Hopcroft refinement by
      // predecessor sets. Gives the same coarsest stable partition as
      // repeated Moore rounds, in O(B m log m).
      std::vector<std::uint32_t> block(m);
      std::size_t                num_blocks;
      {
        std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VectorHash>
            ids;
        for (std::size_t s = 0; s < m; ++s) {
          std::vector<std::uint32_t> row(out.begin() + s * B,
                                         out.begin() + (s + 1) * B);
          block[s] = ids.emplace(std::move(row), ids.size()).first->second;
        }
        num_blocks = ids.size();
      }

      // Blocks are contiguous ranges of `elems`; loc is the inverse.
      std::vector<std::uint32_t> elems(m), loc(m), first, last;
      {
        std::vector<std::uint32_t> count(num_blocks + 1, 0);
        for (std::size_t s = 0; s < m; ++s) {
          ++count[block[s] + 1];
        }
        for (std::size_t c = 0; c < num_blocks; ++c) {
          count[c + 1] += count[c];
        }
        first.assign(count.begin(), count.end() - 1);
        last = first;
        for (std::uint32_t s = 0; s < m; ++s) {
          loc[s]           = last[block[s]]++;
          elems[loc[s]]    = s;
        }
      }

      // Predecessors by symbol, CSR layout indexed by b * m + target.
      std::vector<std::uint32_t> pred_start(B * m + 1, 0), preds(B * m);
      for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t b = 0; b < B; ++b) {
          ++pred_start[b * m + next[s * B + b] + 1];
        }
      }
      for (std::size_t i = 0; i < B * m; ++i) {
        pred_start[i + 1] += pred_start[i];
      }
      {
        std::vector<std::uint32_t> fill(pred_start.begin(), pred_start.end() - 1);
        for (std::uint32_t s = 0; s < m; ++s) {
          for (std::size_t b = 0; b < B; ++b) {
            preds[fill[b * m + next[s * B + b]]++] = s;
          }
        }
      }

      std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
      std::vector<std::vector<bool>> queued(B);
      for (std::size_t b = 0; b < B; ++b) {
        queued[b].assign(num_blocks, true);
        for (std::uint32_t c = 0; c < num_blocks; ++c) {
          work.emplace_back(c, static_cast<std::uint32_t>(b));
        }
      }
      std::vector<std::uint32_t> marked_count;
      std::vector<std::uint32_t> touched, splitter;
      marked_count.assign(num_blocks, 0);
      while (!work.empty()) {
        auto [c, b] = work.back();
        work.pop_back();
        queued[b][c] = false;

        splitter.assign(elems.begin() + first[c], elems.begin() + last[c]);
        for (std::uint32_t t : splitter) {
          for (std::uint32_t i = pred_start[b * m + t]; i < pred_start[b * m + t + 1];
               ++i) {
            std::uint32_t const s  = preds[i];
            std::uint32_t const d  = block[s];
            std::uint32_t const at = first[d] + marked_count[d];
            if (loc[s] < at) {
              continue;  // already marked
            }
            if (marked_count[d] == 0) {
              touched.push_back(d);
            }
            // swap s into the marked prefix of its block
            std::uint32_t const other = elems[at];
            std::swap(elems[at], elems[loc[s]]);
            loc[other] = loc[s];
            loc[s]     = at;
            ++marked_count[d];
          }
        }
        for (std::uint32_t d : touched) {
          std::uint32_t const marked = marked_count[d];
          marked_count[d]            = 0;
          if (marked == last[d] - first[d]) {
            continue;
          }
          // the marked prefix becomes a new block
          auto const e = static_cast<std::uint32_t>(num_blocks++);
          first.push_back(first[d]);
          last.push_back(first[d] + marked);
          first[d] += marked;
          marked_count.push_back(0);
          for (std::uint32_t i = first[e]; i < last[e]; ++i) {
            block[elems[i]] = e;
          }
          std::uint32_t const smaller
              = last[e] - first[e] <= last[d] - first[d] ? e : d;
          for (std::size_t a = 0; a < B; ++a) {
            queued[a].push_back(false);
            if (queued[a][d]) {
              queued[a][e] = true;
              work.emplace_back(e, static_cast<std::uint32_t>(a));
            } else {
              queued[a][smaller] = true;
              work.emplace_back(smaller, static_cast<std::uint32_t>(a));
            }
          }
        }
        touched.clear();
      }

      // Renumber blocks breadth-first from the initial state.
      constexpr std::uint32_t    none = static_cast<std::uint32_t>(-1);
      std::vector<std::uint32_t> canonical(num_blocks, none);
      std::vector<std::uint32_t> representative(num_blocks, none);
      for (std::size_t s = 0; s < m; ++s) {
        if (representative[block[s]] == none) {
          representative[block[s]] = static_cast<std::uint32_t>(s);
        }
      }
      ActionKey key;
      key.alphabet_size = static_cast<std::uint32_t>(B);
      std::vector<std::uint32_t> order{block[0]};
      canonical[block[0]] = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::uint32_t const s = representative[order[i]];
        for (std::size_t b = 0; b < B; ++b) {
          std::uint32_t target = block[next[s * B + b]];
          if (canonical[target] == none) {
            canonical[target] = static_cast<std::uint32_t>(order.size());
            order.push_back(target);
          }
          key.next.push_back(canonical[target]);
          key.output.push_back(out[s * B + b]);
        }
      }
      key.num_states = static_cast<std::uint32_t>(order.size());
      return key;
    }
  }  // namespace

  ActionKey minimize_pointed(MealyAutomaton const& A, CompositeState const& w) {
    check_stages(A, w);
    std::size_t const B = A.alphabet_size();
    std::size_t const L = w.length();

    // Reachable composite machine; state 0 is w.
    TupleInterner              tuples(L);
    std::vector<std::uint32_t> next;
    std::vector<Symbol>        out;
    std::vector<std::uint32_t> buffer(w.stages().begin(), w.stages().end());
    tuples.intern(buffer.data());
    for (std::uint32_t id = 0; id < tuples.size(); ++id) {
      for (Symbol b = 0; b < B; ++b) {
        std::copy(tuples.at(id), tuples.at(id) + L, buffer.begin());
        out.push_back(thread(A, buffer.data(), L, b));
        next.push_back(tuples.intern(buffer.data()).first);
      }
    }
    return canonical_key(tuples.size(), B, next, out);
  }

  namespace {
    // Key of the composite with q acting before the machine `key`.
    ActionKey prepend_state(MealyAutomaton const& A, State q, ActionKey const& key) {
      std::size_t const       B    = A.alphabet_size();
      std::size_t const       K    = key.num_states;
      constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);
      // pair (p, k) has slot p * K + k
      std::vector<std::uint32_t> id(A.num_states() * K, none);
      std::vector<std::uint32_t> slots{static_cast<std::uint32_t>(q * K)};
      std::vector<std::uint32_t> next;
      std::vector<Symbol>        out;
      id[q * K] = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        State const       p = slots[i] / K;
        std::size_t const k = slots[i] % K;
        for (Symbol b = 0; b < B; ++b) {
          auto const t    = A.delta(p, b);
          auto const slot = t.next * K + key.next[k * B + t.output];
          if (id[slot] == none) {
            id[slot] = static_cast<std::uint32_t>(slots.size());
            slots.push_back(static_cast<std::uint32_t>(slot));
          }
          out.push_back(key.output[k * B + t.output]);
          next.push_back(id[slot]);
        }
      }
      return canonical_key(slots.size(), B, next, out);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  Enumeration enumerate_semigroup(MealyAutomaton const& A,
                                  Budgets const&        budgets) {
    if (budgets.max_elements == 0 || budgets.max_length == 0) {
      throw BadParam("budgets must be at least 1");
    }
    std::size_t const Q = A.num_states();

    std::unordered_map<ActionKey, Element, ActionKeyHash> index;
    std::vector<CompositeState>                           reps;
    std::vector<ActionKey>                                keys;
    std::vector<Element>                                  right;  // x * Q + q
    std::vector<Element>                                  generator_image;

    auto exhausted = [&](std::size_t expanded, std::string reason) {
      std::size_t longest = 0;
      for (auto const& r : reps) {
        longest = std::max(longest, r.length());
      }
      return Exhausted{reps.size(), reps.size() - expanded, longest,
                       std::move(reason)};
    };

    // Returns the element with this key, adding w if new; nullopt on budget.
    auto lookup = [&](CompositeState w, ActionKey key) -> std::optional<Element> {
      auto it = index.find(key);
      if (it != index.end()) {
        return it->second;
      }
      if (w.length() > budgets.max_length
          || reps.size() >= budgets.max_elements) {
        return std::nullopt;
      }
      auto id = static_cast<Element>(reps.size());
      index.emplace(key, id);
      keys.push_back(std::move(key));
      reps.push_back(std::move(w));
      return id;
    };

    for (State q = 0; q < Q; ++q) {
      CompositeState w({q});
      auto           key = minimize_pointed(A, w);
      auto           x   = lookup(std::move(w), std::move(key));
      if (!x) {
        return exhausted(0, "more than " + std::to_string(budgets.max_elements)
                                + " elements");
      }
      generator_image.push_back(*x);
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (State q = 0; q < Q; ++q) {
        std::vector<State> stages{q};
        stages.insert(
            stages.end(), reps[i].stages().begin(), reps[i].stages().end());
        // keys[i] is minimal, so composing with q stays small
        auto key = prepend_state(A, q, keys[i]);
        auto x   = lookup(CompositeState(std::move(stages)), std::move(key));
        if (!x) {
          std::string reason
              = reps.size() >= budgets.max_elements
                    ? "more than " + std::to_string(budgets.max_elements)
                          + " elements"
                    : "new element of length "
                          + std::to_string(reps[i].length() + 1)
                          + " exceeds max length "
                          + std::to_string(budgets.max_length);
          return exhausted(i, std::move(reason));
        }
        right.push_back(*x);
      }
    }

    std::size_t const                 n = reps.size();
    std::vector<std::string>          names;
    std::vector<std::vector<Element>> table(n);
    for (auto const& r : reps) {
      std::string name;
      for (State q : r.product_order()) {
        if (!name.empty()) {
          name += word_separator;
        }
        name += A.states()[q];
      }
      names.push_back(std::move(name));
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        // x * (p_1 ... p_k) = (((x p_1) p_2) ... p_k)
        Element z      = x;
        auto    stages = reps[y].stages();
        for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
          z = right[z * Q + *it];
        }
        table[x].push_back(z);
      }
    }
    return EnumeratedSemigroup{
        FiniteSemigroup::validate(std::move(names), std::move(table)),
        std::move(reps),
        std::move(generator_image),
        std::move(keys)};
  }

}  // namespace selfaut
