#include "selfaut/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "selfaut/cayley.hpp"
#include "selfaut/constructions.hpp"
#include "selfaut/errors.hpp"
#include "selfaut/green.hpp"
#include "selfaut/render.hpp"
#include "selfaut/report.hpp"
#include "selfaut/table_io.hpp"

namespace selfaut::cli {

  namespace {

    constexpr char const* word_help
        = "comma separated states in algebraic product order: \"s,t\" is "
          "s·t, so t acts first";

    std::string join(std::vector<std::string> const& xs, std::string_view sep) {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : std::string(sep)) + xs[i];
      }
      return out;
    }

    // Tables are read as their Cayley automaton.
    MealyAutomaton load_automaton(std::string const& path) {
      auto any = parse_any(read_file(path));
      if (auto* S = std::get_if<FiniteSemigroup>(&any)) {
        return cayley_automaton(*S);
      }
      return std::get<MealyAutomaton>(std::move(any));
    }

    FiniteSemigroup load_table(std::string const& path) {
      return parse_table(read_file(path));
    }

    // Product-order word -> composite state.
    CompositeState parse_word(MealyAutomaton const& A, std::string const& text) {
      std::vector<State> word;
      for (auto const& name : split_names(text)) {
        auto q = A.state_index(name);
        if (!q) {
          throw BadParam("unknown state \"" + name + "\"");
        }
        word.push_back(*q);
      }
      if (word.empty()) {
        throw BadParam("empty word");
      }
      return CompositeState::from_product_order(std::move(word));
    }

    std::vector<Symbol> parse_sequence(MealyAutomaton const& A,
                                       std::string const&    text) {
      std::vector<Symbol> seq;
      for (auto const& name : split_names(text)) {
        auto b = A.symbol_index(name);
        if (!b) {
          throw UnknownSymbol("unknown symbol \"" + name + "\"");
        }
        seq.push_back(*b);
      }
      return seq;
    }

    std::string symbols(MealyAutomaton const& A, std::span<Symbol const> seq) {
      std::vector<std::string> names;
      for (Symbol b : seq) {
        names.push_back(A.alphabet()[b]);
      }
      return join(names, ",");
    }

    std::string elements(FiniteSemigroup const& S, std::span<Element const> w) {
      std::vector<std::string> names;
      for (Element x : w) {
        names.push_back(S.name(x));
      }
      return join(names, ",");
    }

    // Writes to `path`, or to `out` when no path was given.
    void emit(std::string const& text, std::string const& path, std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << text)) {
        throw Error("cannot write " + path);
      }
    }

    void add_budgets(CLI::App* cmd, Budgets& budgets) {
      cmd->add_option("--max-elements", budgets.max_elements,
                      "stop after this many elements")
          ->capture_default_str();
      cmd->add_option("--max-length", budgets.max_length,
                      "stop at words longer than this")
          ->capture_default_str();
    }

    int report_exhausted(Exhausted const& e, std::ostream& err) {
      err << "budget exhausted: " << e.reason << " (" << e.elements_found
          << " elements found, " << e.frontier_size
          << " unexpanded, longest word " << e.length_reached << ")\n";
      return exhausted;
    }

    int report_sigma(SigmaResult const&     result,
                     FiniteSemigroup const& S,
                     bool                   opposite_side,
                     std::string const&     out_path,
                     std::ostream&          out,
                     std::ostream&          err) {
      if (auto* e = std::get_if<Exhausted>(&result)) {
        return report_exhausted(*e, err);
      }
      if (auto* k = std::get_if<KnownInfinite>(&result)) {
        auto const& w = k->period_witness;
        out << "infinite: " << S.name(w.element) << " has index " << w.index
            << " and period " << w.period << '\n';
        return negative;
      }
      auto const& E = std::get<EnumeratedSemigroup>(result);
      emit(write_table(E.semigroup), out_path, out);
      if (!out_path.empty()) {
        out << (opposite_side ? "pi" : "sigma") << " size: " << E.semigroup.size()
            << '\n';
      }
      return ok;
    }

    int analyze(FiniteSemigroup const& S, bool as_json, std::ostream& out) {
      auto const g         = green(S);
      auto const nilpotent = nilpotency_class(S);
      std::size_t idempotents = 0, regular_d = 0;
      for (Element x = 0; x < S.size(); ++x) {
        idempotents += is_idempotent(S, x);
      }
      for (auto const& d : g.d_classes.classes) {
        regular_d += g.regular[d.front()];
      }
      auto identity = is_monoid(S);
      auto z        = zero(S);

      nlohmann::ordered_json j;
      j["size"]                = S.size();
      j["band"]                = is_band(S).holds;
      j["aperiodic"]           = is_aperiodic(S).holds;
      j["commutative"]         = is_commutative(S);
      j["monoid"]              = identity.has_value();
      j["identity"]            = identity ? nlohmann::ordered_json(S.name(*identity)) : nullptr;
      j["zero"]                = z ? nlohmann::ordered_json(S.name(*z)) : nullptr;
      j["nilpotency_class"]    = nilpotent ? nlohmann::ordered_json(*nilpotent) : nullptr;
      j["relative_identities"] = has_relative_identities(S);
      j["lrr_faithful"]        = lrr(S).faithful;
      j["self_dual"]           = is_self_dual(S);
      j["idempotents"]         = idempotents;
      j["r_classes"]           = g.r_classes.classes.size();
      j["l_classes"]           = g.l_classes.classes.size();
      j["h_classes"]           = g.h_classes.classes.size();
      j["d_classes"]           = g.d_classes.classes.size();
      j["regular_d_classes"]   = regular_d;
      if (as_json) {
        out << j.dump(2) << '\n';
        return ok;
      }
      for (auto const& [key, value] : j.items()) {
        out << key << ": "
            << (value.is_null() ? "none"
                : value.is_string() ? value.get<std::string>()
                                    : value.dump())
            << '\n';
      }
      return ok;
    }

    int generate(std::string const&              kind,
                 std::vector<std::string> const& params,
                 std::string const&              out_path,
                 std::ostream&                   out) {
      auto no_params = [&] {
        if (!params.empty()) {
          throw BadParam(kind + " takes no parameters");
        }
      };
      if (kind == "example_ab") {
        no_params();
        emit(write_automaton(example_ab_automaton()), out_path, out);
        return ok;
      }
      if (kind == "example_left_zero_square") {
        no_params();
        emit(write_table(example_s2_left_zero()), out_path, out);
        return ok;
      }
      if (kind == "example_right_zero_square") {
        no_params();
        emit(write_table(example_s2_right_zero()), out_path, out);
        return ok;
      }
      if (kind == "steinberg") {
        if (params.size() > 1) {
          throw BadParam("steinberg takes at most one part name");
        }
        auto const  bundle = steinberg();
        std::string part   = params.empty() ? "S" : params[0];
        FiniteSemigroup const* T = part == "S"        ? &bundle.S
                                   : part == "T"      ? &bundle.T
                                   : part == "Tprime" ? &bundle.Tprime
                                   : part == "That"   ? &bundle.That
                                   : part == "R"      ? &bundle.R
                                                      : nullptr;
        if (T == nullptr) {
          throw BadParam("unknown steinberg part \"" + part
                         + "\" (expected S, T, Tprime, That or R)");
        }
        emit(write_table(*T), out_path, out);
        return ok;
      }
      std::vector<std::size_t> sizes;
      for (auto const& p : params) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
          value = std::stoull(p, &used);
        } catch (std::exception const&) {
          used = 0;
        }
        if (used != p.size() || p.empty() || p[0] == '-') {
          throw BadParam("parameter \"" + p + "\" is not a size");
        }
        sizes.push_back(value);
      }
      emit(write_table(basic_family(kind, sizes)), out_path, out);
      return ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{
        "Finite semigroups and their Cayley automata.\n"
        "Words are written in algebraic product order and act on the left of "
        "sequences: in \"s,t\" the state t reads the input first.",
        "selfaut"};
    app.footer("Exit status: 0 success or yes, 1 no (including a known "
               "infinite semigroup), 2 usage or input error, 3 budget "
               "exhausted, 4 internal cross-check failed.");
    app.require_subcommand(1);
    app.fallthrough(false);

    std::function<int()> action;
    std::string          file, out_path, word1, word2, seq, kind;
    std::vector<std::string> params;
    bool                 as_json = false, force = false;
    Budgets              budgets;
    std::size_t          max_len = 0;

    auto file_arg = [&](CLI::App* cmd, char const* what) {
      cmd->add_option("FILE", file, what)->required();
    };

    auto* validate = app.add_subcommand("validate", "check a table or automaton file");
    file_arg(validate, "table or automaton file");
    validate->callback([&] {
      action = [&] {
        auto any = parse_any(read_file(file));
        if (auto* S = std::get_if<FiniteSemigroup>(&any)) {
          out << "ok: semigroup of order " << S->size() << '\n';
        } else {
          auto const& A = std::get<MealyAutomaton>(any);
          out << "ok: automaton with " << A.num_states() << " states over "
              << A.alphabet_size() << " symbols\n";
        }
        return ok;
      };
    });

    auto* analyze_cmd
        = app.add_subcommand("analyze", "structural flags and Green class counts");
    file_arg(analyze_cmd, "table file");
    analyze_cmd->add_flag("--json", as_json, "JSON output");
    analyze_cmd->callback(
        [&] { action = [&] { return analyze(load_table(file), as_json, out); }; });

    auto* eggbox = app.add_subcommand("eggbox", "egg-box diagram of the D-classes");
    file_arg(eggbox, "table file");
    eggbox->callback([&] {
      action = [&] {
        out << render_eggbox(load_table(file));
        return ok;
      };
    });

    auto* automaton = app.add_subcommand(
        "automaton", "Graphviz rendering of an automaton, or of the Cayley "
                     "automaton of a table");
    file_arg(automaton, "table or automaton file");
    automaton->add_option("--dot", out_path, "write the DOT text here");
    automaton->callback([&] {
      action = [&] {
        emit(export_dot(load_automaton(file)), out_path, out);
        return ok;
      };
    });

    auto* act_cmd = app.add_subcommand("act", "apply a word of states to a sequence");
    file_arg(act_cmd, "table or automaton file");
    act_cmd->add_option("--word", word1, word_help)->required();
    act_cmd->add_option("--seq", seq, "comma separated symbols")->required();
    act_cmd->callback([&] {
      action = [&] {
        auto const A = load_automaton(file);
        auto const w = parse_word(A, word1);
        auto const s = parse_sequence(A, seq);
        out << symbols(A, act(A, w, s)) << '\n';
        return ok;
      };
    });

    auto* equal = app.add_subcommand("equal", "decide whether two words act alike");
    file_arg(equal, "table or automaton file");
    equal->add_option("--word1", word1, word_help)->required();
    equal->add_option("--word2", word2, word_help)->required();
    equal->callback([&] {
      action = [&] {
        auto const A = load_automaton(file);
        auto const r = words_equal(A, parse_word(A, word1), parse_word(A, word2));
        if (r.equal) {
          out << "EQUAL\n";
          return ok;
        }
        out << "DIFFERENT\nwitness: " << symbols(A, r.witness) << '\n';
        return negative;
      };
    });

    auto sigma_like = [&](char const* name, char const* help, bool right) {
      auto* cmd = app.add_subcommand(name, help);
      file_arg(cmd, "table file, or automaton file for its own semigroup");
      add_budgets(cmd, budgets);
      cmd->add_flag("--force", force,
                    "enumerate within budgets even when the result is known "
                    "to be infinite");
      cmd->add_option("--out", out_path, "write the table here");
      cmd->callback([&, right] {
        action = [&, right] {
          auto any = parse_any(read_file(file));
          if (auto* S = std::get_if<FiniteSemigroup>(&any)) {
            auto result = right ? pi(*S, budgets, force) : sigma(*S, budgets, force);
            return report_sigma(result, *S, right, out_path, out, err);
          }
          auto e = enumerate_semigroup(std::get<MealyAutomaton>(any), budgets);
          if (auto* x = std::get_if<Exhausted>(&e)) {
            return report_exhausted(*x, err);
          }
          auto const& E = std::get<EnumeratedSemigroup>(e);
          auto const  T = right ? opposite(E.semigroup) : E.semigroup;
          emit(write_table(T), out_path, out);
          if (!out_path.empty()) {
            out << name << " size: " << T.size() << '\n';
          }
          return ok;
        };
      });
    };
    sigma_like("sigma", "the semigroup of the Cayley automaton", false);
    sigma_like("pi", "the semigroup of right actions of the Cayley automaton", true);

    auto* classify_cmd
        = app.add_subcommand("classify", "self-automaton classification; exit "
                                         "status 0 iff self-automaton");
    file_arg(classify_cmd, "table file");
    classify_cmd->add_flag("--json", as_json, "JSON output");
    add_budgets(classify_cmd, budgets);
    classify_cmd->callback([&] {
      action = [&] {
        auto const S = load_table(file);
        auto const r = classify(S, budgets);
        if (as_json) {
          out << report_to_json(S, r).dump(2) << '\n';
        } else {
          out << report_to_text(S, r);
        }
        return r.self_automaton ? ok : negative;
      };
    });

    auto* free_cmd = app.add_subcommand(
        "free", "check that short words over the Cayley automaton act distinctly");
    file_arg(free_cmd, "table file");
    free_cmd->add_option("--max-len", max_len, "longest word to check")->required();
    free_cmd->callback([&] {
      action = [&] {
        auto const S = load_table(file);
        auto const r = freeness_check(S, max_len);
        if (r.ok) {
          out << "ok: " << r.words_checked << " words act distinctly\n";
          return ok;
        }
        out << "collision: " << elements(S, r.later) << " = "
            << elements(S, r.earlier) << '\n';
        return negative;
      };
    });

    auto* gen = app.add_subcommand(
        "gen", "write a built-in table: left_zero N, right_zero N, "
               "rectangular_band P Q, chain_semilattice N, cyclic_group N, "
               "nilpotent_monogenic K, example_left_zero_square, "
               "example_right_zero_square, steinberg [S|T|Tprime|That|R]; or "
               "the automaton example_ab");
    gen->add_option("KIND", kind, "construction name")->required();
    gen->add_option("PARAMS", params, "sizes or part name");
    gen->add_option("--out", out_path, "write the file here");
    gen->callback([&] { action = [&] { return generate(kind, params, out_path, out); }; });

    auto* census_cmd
        = app.add_subcommand("census", "classify every table file in a directory");
    census_cmd->add_option("DIR", file, "directory of table files")
        ->required()
        ->check(CLI::ExistingDirectory);
    census_cmd->add_option("--out", out_path, "write the CSV here");
    add_budgets(census_cmd, budgets);
    census_cmd->callback([&] {
      action = [&] {
        auto const r = census(file, budgets, err);
        emit(r.csv, out_path, out);
        return r.failures == 0 ? ok : usage;
      };
    });

    std::vector<char const*> argv{"selfaut"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    try {
      return action();
    } catch (InternalDisagreement const& e) {
      err << "internal error: " << e.what() << '\n';
      return internal;
    } catch (ParseError const& e) {
      err << file << ": " << e.what() << '\n';
      return usage;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace selfaut::cli
