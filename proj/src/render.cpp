#include "selfaut/render.hpp"

#include <algorithm>
#include <sstream>

#include "selfaut/green.hpp"

namespace selfaut {

  namespace {
    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace

  std::string export_dot(MealyAutomaton const& A) {
    std::ostringstream out;
    out << "digraph automaton {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=circle];\n";
    for (State q = 0; q < A.num_states(); ++q) {
      out << "  q" << q << " [label=" << quote(A.states()[q]) << "];\n";
    }
    for (State q = 0; q < A.num_states(); ++q) {
      // targets in order of the first symbol reaching them
      std::vector<State>       targets;
      std::vector<std::string> labels;
      for (Symbol b = 0; b < A.alphabet_size(); ++b) {
        auto        t     = A.delta(q, b);
        std::string label = A.alphabet()[b] + "|" + A.alphabet()[t.output];
        auto it = std::find(targets.begin(), targets.end(), t.next);
        if (it == targets.end()) {
          targets.push_back(t.next);
          labels.push_back(label);
        } else {
          labels[it - targets.begin()] += "," + label;
        }
      }
      for (std::size_t i = 0; i < targets.size(); ++i) {
        out << "  q" << q << " -> q" << targets[i]
            << " [label=" << quote(labels[i]) << "];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string render_eggbox(FiniteSemigroup const& S) {
    GreenStructure const g = green(S);
    std::ostringstream   out;
    std::size_t          number = 0;
    for (std::size_t d : g.d_topological_order()) {
      auto const& members = g.d_classes.classes[d];
      // R- and L-classes meeting this D-class, by least element
      std::vector<std::size_t> rows, cols;
      for (Element x : members) {
        auto r = g.r_classes.class_of[x];
        auto l = g.l_classes.class_of[x];
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
          rows.push_back(r);
        }
        if (std::find(cols.begin(), cols.end(), l) == cols.end()) {
          cols.push_back(l);
        }
      }
      std::vector<std::vector<std::string>> cells(
          rows.size(), std::vector<std::string>(cols.size()));
      for (Element x : members) {
        auto  i    = std::find(rows.begin(), rows.end(), g.r_classes.class_of[x])
                 - rows.begin();
        auto  j    = std::find(cols.begin(), cols.end(), g.l_classes.class_of[x])
                 - cols.begin();
        auto& cell = cells[i][j];
        cell += (cell.empty() ? "" : " ") + S.name(x);
      }
      std::vector<std::size_t> width(cols.size(), 1);
      for (auto const& row : cells) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          width[j] = std::max(width[j], row[j].size());
        }
      }
      std::string rule = "+";
      for (auto w : width) {
        rule += std::string(w + 2, '-') + "+";
      }

      if (number++ > 0) {
        out << '\n';
      }
      out << "D" << number << ": "
          << rows.size() << " x " << cols.size()
          << (g.regular[members.front()] ? " regular" : " non-regular") << '\n'
          << rule << '\n';
      for (auto const& row : cells) {
        out << '|';
        for (std::size_t j = 0; j < cols.size(); ++j) {
          out << ' ' << row[j] << std::string(width[j] - row[j].size(), ' ')
              << " |";
        }
        out << '\n' << rule << '\n';
      }
    }
    return out.str();
  }

}  // namespace selfaut
