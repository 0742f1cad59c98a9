#include "selfaut/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "selfaut/table_io.hpp"

namespace selfaut {

  namespace {
    std::string names_of(FiniteSemigroup const&   S,
                         std::span<Element const> xs) {
      std::string out;
      for (Element x : xs) {
        out += (out.empty() ? "" : ",") + S.name(x);
      }
      return out;
    }

    char const* flag(bool b) {
      return b ? "true" : "false";
    }
  }  // namespace

  nlohmann::json report_to_json(FiniteSemigroup const&      S,
                                ClassificationReport const& r) {
    using nlohmann::json;
    json j;
    j["size"]                   = S.size();
    j["band"]                   = r.band;
    j["aperiodic"]              = r.aperiodic;
    j["monoid"]                 = r.monoid;
    j["relative_identities"]    = r.relative_identities;
    j["lrr_faithful"]           = r.lrr_faithful;
    j["s_squared_band"]         = r.s_squared_band;
    j["canonical_injective"]    = r.canonical_injective;
    j["canonical_homomorphism"] = r.canonical_homomorphism;
    j["self_automaton"]         = r.self_automaton;
    j["self_dual"]              = r.self_dual;
    j["c_self_automaton"] = r.c_self_automaton ? json(*r.c_self_automaton) : json();
    if (r.sigma_size) {
      j["sigma_size"] = *r.sigma_size;
    } else {
      j["sigma_size"] = r.sigma_infinite ? json("infinite") : json();
    }

    json pairs = json::array();
    for (auto [a, b] : r.kernel_pairs) {
      pairs.push_back({S.name(a), S.name(b)});
    }
    j["kernel_pairs"] = pairs;
    if (auto const& c = r.homomorphism_counterexample) {
      std::vector<std::string> seq;
      for (Element x : c->sequence) {
        seq.push_back(S.name(x));
      }
      j["homomorphism_counterexample"]
          = {{"s", S.name(c->s)}, {"t", S.name(c->t)}, {"sequence", seq}};
    } else {
      j["homomorphism_counterexample"] = nullptr;
    }
    if (auto const& p = r.period_witness) {
      j["period_witness"] = {{"element", S.name(p->element)},
                             {"index", p->index},
                             {"period", p->period}};
    } else {
      j["period_witness"] = nullptr;
    }
    if (auto const& w = r.anti_isomorphism) {
      json mapping = json::object();
      for (Element x = 0; x < S.size(); ++x) {
        mapping[S.name(x)] = S.name(w->mapping[x]);
      }
      j["anti_isomorphism"] = mapping;
    } else {
      j["anti_isomorphism"] = nullptr;
    }
    return j;
  }

  std::string report_to_text(FiniteSemigroup const&      S,
                             ClassificationReport const& r) {
    std::ostringstream out;
    out << "size: " << S.size() << '\n'
        << "band: " << flag(r.band) << '\n'
        << "aperiodic: " << flag(r.aperiodic) << '\n'
        << "monoid: " << flag(r.monoid) << '\n'
        << "relative_identities: " << flag(r.relative_identities) << '\n'
        << "lrr_faithful: " << flag(r.lrr_faithful) << '\n'
        << "s_squared_band: " << flag(r.s_squared_band) << '\n'
        << "canonical_injective: " << flag(r.canonical_injective) << '\n'
        << "canonical_homomorphism: " << flag(r.canonical_homomorphism) << '\n'
        << "self_automaton: " << flag(r.self_automaton) << '\n'
        << "self_dual: " << flag(r.self_dual) << '\n'
        << "c_self_automaton: "
        << (r.c_self_automaton ? flag(*r.c_self_automaton) : "?") << '\n'
        << "sigma_size: "
        << (r.sigma_size       ? std::to_string(*r.sigma_size)
            : r.sigma_infinite ? std::string("infinite")
                               : std::string("?"))
        << '\n';
    for (auto [a, b] : r.kernel_pairs) {
      out << "kernel_pair: " << S.name(a) << " " << S.name(b) << '\n';
    }
    if (auto const& c = r.homomorphism_counterexample) {
      out << "homomorphism_counterexample: s=" << S.name(c->s)
          << " t=" << S.name(c->t) << " sequence=" << names_of(S, c->sequence)
          << '\n';
    }
    if (auto const& p = r.period_witness) {
      out << "period_witness: " << S.name(p->element) << " index=" << p->index
          << " period=" << p->period << '\n';
    }
    return out.str();
  }

  std::string census_header() {
    return "file,n,band,aperiodic,monoid,lrr_faithful,s2_band,self_dual,"
           "self_automaton,c_self_automaton,sigma_size\n";
  }

  std::string census_row(std::string const&          file,
                         FiniteSemigroup const&      S,
                         ClassificationReport const& r) {
    std::ostringstream out;
    out << file << ',' << S.size() << ',' << flag(r.band) << ','
        << flag(r.aperiodic) << ',' << flag(r.monoid) << ','
        << flag(r.lrr_faithful) << ',' << flag(r.s_squared_band) << ','
        << flag(r.self_dual) << ',' << flag(r.self_automaton) << ','
        << (r.c_self_automaton ? flag(*r.c_self_automaton) : "?") << ',';
    if (r.sigma_size) {
      out << *r.sigma_size;
    } else {
      out << (r.sigma_infinite ? "inf" : "?");
    }
    out << '\n';
    return out.str();
  }

  CensusResult census(std::filesystem::path const& dir,
                      Budgets const&               budgets,
                      std::ostream&                err) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (auto const& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end(), [](auto const& a, auto const& b) {
      return a.filename().string() < b.filename().string();
    });

    CensusResult result;
    result.csv = census_header();
    for (auto const& path : files) {
      auto const name = path.filename().string();
      try {
        auto const S = parse_table(read_file(path.string()));
        result.csv += census_row(name, S, classify(S, budgets));
        ++result.rows;
      } catch (std::exception const& e) {
        err << name << ": " << e.what() << '\n';
        ++result.failures;
      }
    }
    return result;
  }

}  // namespace selfaut
