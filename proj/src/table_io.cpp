#include "selfaut/table_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "selfaut/errors.hpp"

namespace selfaut {

  namespace {
    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-blank, non-comment lines split on whitespace.
    std::vector<Line> significant_lines(std::string_view text) {
      std::vector<Line>  lines;
      std::istringstream in{std::string(text)};
      std::string        raw;
      for (std::size_t number = 1; std::getline(in, raw); ++number) {
        std::istringstream       words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
          tokens.push_back(std::move(w));
        }
        if (tokens.empty() || tokens.front().front() == '#') {
          continue;
        }
        lines.push_back({number, std::move(tokens)});
      }
      return lines;
    }

    // Strips "key:" from the front of the line; the key may be glued to the
    // first value ("elements:a") or stand alone.
    std::vector<std::string> header_values(Line const& line,
                                           std::string_view key) {
      std::vector<std::string> values = line.tokens;
      std::string const        prefix = std::string(key) + ":";
      if (values.front() == prefix) {
        values.erase(values.begin());
      } else if (values.front().starts_with(prefix)) {
        values.front().erase(0, prefix.size());
      } else {
        throw ParseError(line.number, "expected '" + prefix + "' header");
      }
      if (values.empty()) {
        throw ParseError(line.number, "header '" + prefix + "' lists no names");
      }
      return values;
    }

    std::map<std::string, Element> index_names(std::vector<std::string> const& names,
                                               std::size_t line) {
      std::map<std::string, Element> index;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], static_cast<Element>(i)).second) {
          throw ParseError(line, "duplicate name '" + names[i] + "'");
        }
      }
      return index;
    }

    Element lookup(std::map<std::string, Element> const& index,
                   std::string const&                    token,
                   std::size_t                           line,
                   char const*                           what) {
      auto it = index.find(token);
      if (it == index.end()) {
        throw ParseError(line,
                         std::string(what) + " '" + token
                             + "' does not appear in the header");
      }
      return it->second;
    }

    template <typename Names>
    void join(std::ostringstream& out, Names const& names) {
      for (std::size_t i = 0; i < names.size(); ++i) {
        out << (i == 0 ? "" : " ") << names[i];
      }
      out << '\n';
    }
  }  // namespace

  FiniteSemigroup parse_table(std::string_view text) {
    auto const lines = significant_lines(text);
    if (lines.empty()) {
      throw ParseError(1, "empty table file");
    }
    auto names = header_values(lines.front(), "elements");
    auto index = index_names(names, lines.front().number);
    std::size_t const n = names.size();
    if (lines.size() != n + 1) {
      std::size_t at = lines.size() > n + 1 ? lines[n + 1].number
                                            : lines.back().number;
      throw ParseError(at,
                       "expected " + std::to_string(n) + " table rows, found "
                           + std::to_string(lines.size() - 1));
    }
    std::vector<std::vector<Element>> table;
    for (std::size_t i = 1; i <= n; ++i) {
      auto const& line = lines[i];
      if (line.tokens.size() != n) {
        throw ParseError(line.number,
                         "expected " + std::to_string(n) + " entries, found "
                             + std::to_string(line.tokens.size()));
      }
      auto& row = table.emplace_back();
      for (auto const& token : line.tokens) {
        row.push_back(lookup(index, token, line.number, "element"));
      }
    }
    return FiniteSemigroup::validate(std::move(names), std::move(table));
  }

  std::string write_table(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << "elements:";
    for (auto const& name : S.names()) {
      out << ' ' << name;
    }
    out << '\n';
    for (Element x = 0; x < S.size(); ++x) {
      std::vector<std::string> row;
      for (Element y : S.row(x)) {
        row.push_back(S.name(y));
      }
      join(out, row);
    }
    return out.str();
  }

  MealyAutomaton parse_automaton(std::string_view text) {
    auto const lines = significant_lines(text);
    if (lines.size() < 2) {
      throw ParseError(lines.empty() ? 1 : lines.back().number,
                       "automaton file needs 'states:' and 'alphabet:' headers");
    }
    auto states    = header_values(lines[0], "states");
    auto alphabet  = header_values(lines[1], "alphabet");
    auto state_ix  = index_names(states, lines[0].number);
    auto symbol_ix = index_names(alphabet, lines[1].number);
    std::size_t const B = alphabet.size();

    std::vector<Transition> delta(states.size() * B);
    std::vector<bool>       defined(delta.size(), false);
    for (std::size_t i = 2; i < lines.size(); ++i) {
      auto const& line = lines[i];
      if (line.tokens.size() != 4) {
        throw ParseError(line.number,
                         "expected 'state symbol next output', found "
                             + std::to_string(line.tokens.size()) + " fields");
      }
      Element q   = lookup(state_ix, line.tokens[0], line.number, "state");
      Element b   = lookup(symbol_ix, line.tokens[1], line.number, "symbol");
      Element r   = lookup(state_ix, line.tokens[2], line.number, "state");
      Element out = lookup(symbol_ix, line.tokens[3], line.number, "symbol");
      if (defined[q * B + b]) {
        throw ParseError(line.number, "transition defined twice");
      }
      defined[q * B + b] = true;
      delta[q * B + b]   = {r, out};
    }
    for (std::size_t k = 0; k < defined.size(); ++k) {
      if (!defined[k]) {
        throw ParseError(lines.back().number,
                         "missing transition for state '" + states[k / B]
                             + "' and symbol '" + alphabet[k % B] + "'");
      }
    }
    return MealyAutomaton::create(
        std::move(states), std::move(alphabet), std::move(delta));
  }

  std::string write_automaton(MealyAutomaton const& A) {
    std::ostringstream out;
    out << "states: ";
    join(out, A.states());
    out << "alphabet: ";
    join(out, A.alphabet());
    for (State q = 0; q < A.num_states(); ++q) {
      for (Symbol b = 0; b < A.alphabet_size(); ++b) {
        auto t = A.delta(q, b);
        out << A.states()[q] << ' ' << A.alphabet()[b] << ' '
            << A.states()[t.next] << ' ' << A.alphabet()[t.output] << '\n';
      }
    }
    return out.str();
  }

  std::variant<FiniteSemigroup, MealyAutomaton> parse_any(std::string_view text) {
    auto const lines = significant_lines(text);
    if (!lines.empty() && lines.front().tokens.front().starts_with("states:")) {
      return parse_automaton(text);
    }
    return parse_table(text);
  }

  std::vector<std::string> split_names(std::string_view text) {
    std::vector<std::string> out;
    std::string              current;
    int                      depth = 0;
    auto flush = [&] {
      auto first = current.find_first_not_of(" \t");
      auto last  = current.find_last_not_of(" \t");
      out.push_back(first == std::string::npos
                        ? std::string()
                        : current.substr(first, last - first + 1));
      current.clear();
    };
    for (char c : text) {
      if (c == ',' && depth == 0) {
        flush();
        continue;
      }
      depth += c == '(' ? 1 : c == ')' ? -1 : 0;
      current += c;
    }
    flush();
    if (out.size() == 1 && out.front().empty()) {
      out.clear();
    }
    return out;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read '" + path + "'");
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  }

}  // namespace selfaut
