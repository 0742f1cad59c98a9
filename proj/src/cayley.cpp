#include "selfaut/cayley.hpp"

#include <unordered_map>

#include "selfaut/errors.hpp"

namespace selfaut {

  MealyAutomaton cayley_automaton(FiniteSemigroup const& S) {
    std::vector<Transition> delta;
    delta.reserve(S.size() * S.size());
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t : S.row(s)) {
        delta.push_back({t, t});
      }
    }
    return MealyAutomaton::create(S.names(), S.names(), std::move(delta));
  }

  std::vector<Element> state_action(FiniteSemigroup const&   S,
                                    Element                  s,
                                    std::span<Element const> seq) {
    if (s >= S.size()) {
      throw BadIndex("state " + std::to_string(s) + " out of range");
    }
    std::vector<Element> out;
    out.reserve(seq.size());
    Element prefix = s;
    for (Element a : seq) {
      if (a >= S.size()) {
        throw UnknownSymbol("symbol " + std::to_string(a)
                            + " is not an element");
      }
      prefix = S.product(prefix, a);
      out.push_back(prefix);
    }
    return out;
  }

  std::vector<Element> right_action(FiniteSemigroup const&   S,
                                    std::span<Element const> seq,
                                    std::span<Element const> word) {
    std::vector<Element> current(seq.begin(), seq.end());
    for (Element x : word) {
      current = state_action(S, x, current);
    }
    return current;
  }

  Injectivity canonical_injective(FiniteSemigroup const& S) {
    auto const rep = lrr(S);

    MealyAutomaton const                     A = cayley_automaton(S);
    EquivalenceChecker                       checker(A);
    std::vector<std::pair<Element, Element>> by_action;
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = s + 1; t < S.size(); ++t) {
        if (checker.equal(CompositeState({s}), CompositeState({t}))) {
          by_action.emplace_back(s, t);
        }
      }
    }
    if (by_action != rep.kernel_pairs) {
      throw InternalDisagreement(
          "left-regular representation and state actions disagree on "
          "injectivity of s -> s̄");
    }
    return {rep.faithful, rep.kernel_pairs};
  }

  Homomorphism canonical_homomorphism(FiniteSemigroup const& S) {
    MealyAutomaton const A = cayley_automaton(S);
    EquivalenceChecker   checker(A);
    for (Element s = 0; s < S.size(); ++s) {
      for (Element t = 0; t < S.size(); ++t) {
        // s̄·t̄ applies t̄ first
        auto eq = checker.equal(CompositeState({t, s}),
                                CompositeState({S.product(s, t)}));
        if (!eq) {
          return {false, HomomorphismCounterexample{s, t, eq.witness}};
        }
      }
    }
    return {true, std::nullopt};
  }

  namespace {
    void require(bool condition, char const* what) {
      if (!condition) {
        throw InternalDisagreement(what);
      }
    }
  }  // namespace

  ClassificationReport is_self_automaton(FiniteSemigroup const& S) {
    ClassificationReport r{};
    r.band                = is_band(S).holds;
    auto aperiodic        = is_aperiodic(S);
    r.aperiodic           = aperiodic.holds;
    r.period_witness      = aperiodic.witness;
    r.monoid              = is_monoid(S).has_value();
    r.relative_identities = has_relative_identities(S);
    r.lrr_faithful        = lrr(S).faithful;
    r.s_squared_band      = is_band(square(S).semigroup).holds;

    auto injective          = canonical_injective(S);
    r.canonical_injective   = injective.injective;
    r.kernel_pairs          = std::move(injective.kernel_pairs);
    auto hom                = canonical_homomorphism(S);
    r.canonical_homomorphism = hom.homomorphism;
    r.homomorphism_counterexample = std::move(hom.counterexample);
    r.self_automaton = r.canonical_injective && r.canonical_homomorphism;

    r.anti_isomorphism = self_duality(S);
    r.self_dual        = r.anti_isomorphism.has_value();

    require(r.canonical_injective == r.lrr_faithful,
            "s -> s̄ injectivity differs from faithfulness of the left-regular "
            "representation");
    require(!r.band || r.canonical_homomorphism,
            "band whose canonical map is not a homomorphism");
    require(!r.s_squared_band || r.canonical_homomorphism,
            "S^2 is a band but the canonical map is not a homomorphism");
    require(!(r.monoid && r.self_automaton) || r.band,
            "self-automaton monoid that is not a band");
    require(!(r.relative_identities && r.self_automaton)
                || (r.band && r.lrr_faithful),
            "self-automaton semigroup with relative identities that is not a "
            "band with faithful left-regular representation");
    return r;
  }

  SigmaResult sigma(FiniteSemigroup const& S, Budgets const& budgets, bool force) {
    auto aperiodic = is_aperiodic(S);
    if (!aperiodic && !force) {
      return KnownInfinite{*aperiodic.witness};
    }
    auto enumeration = enumerate_semigroup(cayley_automaton(S), budgets);
    if (auto* ex = std::get_if<Exhausted>(&enumeration)) {
      return *ex;
    }
    auto& result = std::get<EnumeratedSemigroup>(enumeration);
    if (!aperiodic) {
      throw InternalDisagreement(
          "finite Cayley automaton semigroup of a non-aperiodic semigroup");
    }
    if (canonical_homomorphism(S).homomorphism) {
      auto rep = lrr(S);
      require(rep.image.size() == result.semigroup.size()
                  && find_isomorphism(result.semigroup, rep.image).has_value(),
              "Σ(C(S)) is not isomorphic to the image of the left-regular "
              "representation although s -> s̄ is a homomorphism");
    }
    return std::move(result);
  }

  namespace {
    constexpr std::size_t cross_check_max_size  = 5;
    constexpr std::size_t cross_check_word_len  = 3;
    constexpr std::size_t cross_check_seq_len   = 4;

    // All words of length 1..max_len over n letters in shortlex order.
    template <typename F>
    void for_each_word(std::size_t n, std::size_t max_len, F&& f) {
      for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Element> word(len, 0);
        while (true) {
          if (!f(static_cast<std::vector<Element> const&>(word))) {
            return;
          }
          std::size_t i = len;
          while (i > 0 && word[i - 1] + 1 == n) {
            word[--i] = 0;
          }
          if (i == 0) {
            break;
          }
          ++word[i - 1];
        }
      }
    }

    // Words with the same element of Π must act identically from the right.
    void cross_check_pi(FiniteSemigroup const&     S,
                        EnumeratedSemigroup const& p) {
      std::vector<std::vector<Element>> sequences;
      for_each_word(S.size(), cross_check_seq_len, [&](auto const& seq) {
        sequences.push_back(seq);
        return true;
      });
      std::unordered_map<Element, std::vector<std::vector<Element>>> seen;
      for_each_word(S.size(), cross_check_word_len, [&](auto const& word) {
        Element e = p.generator_image[word[0]];
        for (std::size_t i = 1; i < word.size(); ++i) {
          e = p.semigroup.product(e, p.generator_image[word[i]]);
        }
        std::vector<std::vector<Element>> outputs;
        for (auto const& seq : sequences) {
          outputs.push_back(right_action(S, seq, word));
        }
        auto [it, inserted] = seen.emplace(e, outputs);
        require(inserted || it->second == outputs,
                "Π(C(S)) table disagrees with the right action on sequences");
        return true;
      });
    }
  }  // namespace

  SigmaResult pi(FiniteSemigroup const& S, Budgets const& budgets, bool force) {
    auto result = sigma(S, budgets, force);
    auto* e     = std::get_if<EnumeratedSemigroup>(&result);
    if (e == nullptr) {
      return result;
    }
    // The Σ element with product word p_1 ... p_k is, acting from the right,
    // the word p_k ... p_1; name it by its stages in application order.
    std::vector<std::string> names;
    for (auto const& rep : e->representatives) {
      std::string name;
      for (State q : rep.stages()) {
        if (!name.empty()) {
          name += word_separator;
        }
        name += S.name(q);
      }
      names.push_back(std::move(name));
    }
    e->semigroup = FiniteSemigroup::validate(std::move(names),
                                             opposite(e->semigroup).table());
    if (S.size() <= cross_check_max_size) {
      cross_check_pi(S, *e);
    }
    return result;
  }

  namespace {
    Tribool c_self_from_sigma(FiniteSemigroup const&    S,
                              SigmaResult const&        s,
                              ClassificationReport const* report) {
      if (std::holds_alternative<KnownInfinite>(s)) {
        return Tribool::no;
      }
      if (std::holds_alternative<Exhausted>(s)) {
        return Tribool::unknown;
      }
      auto const& sig = std::get<EnumeratedSemigroup>(s).semigroup;
      bool const  iso = find_isomorphism(S, opposite(sig)).has_value();
      if (report != nullptr && report->self_automaton && report->self_dual) {
        require(iso,
                "self-dual self-automaton semigroup not isomorphic to Π(C(S))");
      }
      return iso ? Tribool::yes : Tribool::no;
    }
  }  // namespace

  Tribool is_c_self_automaton(FiniteSemigroup const& S, Budgets const& budgets) {
    if (!is_aperiodic(S)) {
      return Tribool::no;
    }
    auto const s = sigma(S, budgets);
    if (std::holds_alternative<EnumeratedSemigroup>(s)
        && std::get<EnumeratedSemigroup>(s).semigroup.size() == S.size()) {
      auto const report = is_self_automaton(S);
      return c_self_from_sigma(S, s, &report);
    }
    return c_self_from_sigma(S, s, nullptr);
  }

  ClassificationReport classify(FiniteSemigroup const& S, Budgets const& budgets) {
    ClassificationReport report = is_self_automaton(S);
    auto const           s      = sigma(S, budgets);
    if (auto const* e = std::get_if<EnumeratedSemigroup>(&s)) {
      report.sigma_size = e->semigroup.size();
    }
    report.sigma_infinite = std::holds_alternative<KnownInfinite>(s);
    switch (c_self_from_sigma(S, s, &report)) {
      case Tribool::yes:
        report.c_self_automaton = true;
        break;
      case Tribool::no:
        report.c_self_automaton = false;
        break;
      case Tribool::unknown:
        break;
    }
    return report;
  }

  Freeness freeness_check(FiniteSemigroup const& S, std::size_t max_len) {
    if (max_len < 2) {
      throw BadParam("freeness check needs max_len >= 2");
    }
    MealyAutomaton const                                 A = cayley_automaton(S);
    std::unordered_map<ActionKey, std::vector<Element>, ActionKeyHash> seen;
    Freeness result{true, 0, {}, {}};
    for_each_word(S.size(), max_len, [&](auto const& word) {
      auto key = minimize_pointed(A, CompositeState::from_product_order(word));
      ++result.words_checked;
      auto [it, inserted] = seen.emplace(std::move(key), word);
      if (!inserted) {
        result.ok      = false;
        result.earlier = it->second;
        result.later   = word;
        return false;
      }
      return true;
    });
    return result;
  }

}  // namespace selfaut
