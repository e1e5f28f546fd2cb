#include "genlab/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "genlab/errors.hpp"
#include "genlab/experiments.hpp"
#include "genlab/pieces.hpp"
#include "genlab/pres_format.hpp"
#include "genlab/strata.hpp"
#include "genlab/wordproblem.hpp"

namespace genlab {

namespace {

struct StratumFlags {
  std::size_t alphabet = 2;
  std::size_t k = 1;
  std::string kind = "monoid";
  std::string strat = "sum";

  void attach(CLI::App* app) {
    app->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::Range(1, 256));
    app->add_option("--k", k, "Number of relations")->check(CLI::PositiveNumber);
    app->add_option("--kind", kind, "monoid or semigroup")
        ->check(CLI::IsMember({"monoid", "semigroup"}));
    app->add_option("--strat", strat, "sum or max")->check(CLI::IsMember({"sum", "max"}));
  }

  StratumDescriptor descriptor() const {
    return StratumDescriptor::standard(alphabet, k, *parse_kind(kind),
                                       *parse_stratification(strat));
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const InvalidPresentation& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string presentation_line(const Presentation& p) {
  std::string line;
  for (std::size_t i = 0; i < p.relation_count(); ++i) {
    if (i > 0) line += "; ";
    line += to_string(p.relations()[i].lhs, p.alphabet()) + " = " +
            to_string(p.relations()[i].rhs, p.alphabet());
  }
  return line;
}

nlohmann::json presentation_json(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& r : p.relations()) {
    rels.push_back({to_string(r.lhs, p.alphabet()), to_string(r.rhs, p.alphabet())});
  }
  return rels;
}

std::string limit_name(LimitHit limit) {
  switch (limit) {
    case LimitHit::states: return "max-states";
    case LimitHit::depth: return "max-depth";
    case LimitHit::word_length: return "max-length";
    case LimitHit::none: break;
  }
  return "none";
}

void write_bound_rows(std::ostream& out, const std::string& format, const StratumDescriptor& desc,
                      std::size_t m, const std::vector<std::size_t>& ns, bool exact,
                      std::uint64_t cap) {
  nlohmann::json arr = nlohmann::json::array();
  if (format == "csv") out << csv_header() << '\n';
  for (std::size_t n : ns) {
    const BoundReport b = bounds(desc, n, m);
    std::optional<ExactCount> ex;
    if (exact) ex = exact_failure_count(desc, n, m, cap);
    const double value = ex ? ex->proportion().get_d() : 0.0;
    if (format == "csv") {
      out << n << ',' << to_string(desc.strat) << ',' << to_string(desc.kind) << ','
          << desc.alphabet.size() << ',' << desc.k << ',' << m << ','
          << (ex ? ex->total.get_str() : "0") << ',' << (ex ? ex->hits.get_str() : "0") << ',';
      if (ex) {
        out << format_float(value) << ',' << format_float(value) << ',' << format_float(value);
      } else {
        out << ",,";
      }
      out << ',' << format_float(b.composite) << '\n';
    } else {
      const auto num = [](double x) { return std::stod(format_float(x)); };
      nlohmann::json row = {{"n", n},
                            {"strat", to_string(desc.strat)},
                            {"kind", to_string(desc.kind)},
                            {"alphabet", desc.alphabet.size()},
                            {"k", desc.k},
                            {"m", m},
                            {"trials", ex ? ex->total.get_ui() : 0},
                            {"failures", ex ? ex->hits.get_ui() : 0},
                            {"estimate", nullptr},
                            {"ci_low", nullptr},
                            {"ci_high", nullptr},
                            {"bound", num(b.composite)}};
      if (ex) row["estimate"] = row["ci_low"] = row["ci_high"] = num(value);
      arr.push_back(std::move(row));
    }
  }
  if (format == "json") out << arr.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Small-overlap combinatorics for finitely presented monoids and semigroups",
               "genlab"};
  app.require_subcommand(1);

  std::string file;
  std::size_t m = 2;
  std::string format;

  // check / pieces / degree
  auto* check = app.add_subcommand("check", "Exit 0 if the presentation satisfies C(m), else 1");
  check->add_option("--file", file, "Presentation (.pres)")->required();
  check->add_option("--m", m, "Small overlap parameter")->required()->check(CLI::PositiveNumber);

  auto* pieces = app.add_subcommand("pieces", "List pieces with occurrence counts");
  pieces->add_option("--file", file, "Presentation (.pres)")->required();
  std::string pieces_format = "text";
  pieces->add_option("--format", pieces_format)->check(CLI::IsMember({"text", "csv", "json"}));

  auto* degree = app.add_subcommand("degree", "Largest m with C(m), or 'unbounded'");
  degree->add_option("--file", file, "Presentation (.pres)")->required();

  // strata
  StratumFlags sflags;
  std::size_t n = 0;
  std::vector<std::size_t> n_list;
  std::uint64_t seed = 0;
  std::size_t sample_count = 1;
  bool ball = false;

  auto* count = app.add_subcommand("count", "Size of stratum n (or of the ball with --ball)");
  sflags.attach(count);
  count->add_option("--n", n, "Stratum index")->required();
  count->add_flag("--ball", ball, "Count S_1 u ... u S_n");

  auto* enumerate = app.add_subcommand("enumerate", "List every presentation of stratum n");
  sflags.attach(enumerate);
  enumerate->add_option("--n", n, "Stratum index")->required();
  std::string enum_format = "text";
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

  auto* sample = app.add_subcommand("sample", "Uniformly sample presentations of stratum n");
  sflags.attach(sample);
  sample->add_option("--n", n, "Stratum index")->required();
  sample->add_option("--seed", seed, "Random seed")->required();
  sample->add_option("--count", sample_count, "Number of samples");
  sample->add_flag("--ball", ball, "Sample the ball S_1 u ... u S_n instead");
  std::string sample_format = "text";
  sample->add_option("--format", sample_format)->check(CLI::IsMember({"text", "json"}));

  // experiments
  std::uint64_t trials = 1000;
  unsigned jobs = 1;
  auto* estimate = app.add_subcommand("estimate", "Monte Carlo C(m)-failure proportions");
  sflags.attach(estimate);
  estimate->add_option("--m", m, "Small overlap parameter")->check(CLI::PositiveNumber);
  estimate->add_option("--n", n_list, "Stratum indices (comma separated)")
      ->required()
      ->delimiter(',');
  estimate->add_option("--trials", trials, "Samples per stratum")->check(CLI::PositiveNumber);
  estimate->add_option("--seed", seed, "Random seed")->required();
  estimate->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  std::string est_format = "csv";
  estimate->add_option("--format", est_format)->check(CLI::IsMember({"csv", "json"}));

  bool exact = false;
  auto* bnd = app.add_subcommand("bounds", "Analytic C(m)-failure bounds per stratum");
  sflags.attach(bnd);
  bnd->add_option("--m", m, "Small overlap parameter")->check(CLI::PositiveNumber);
  bnd->add_option("--n", n_list, "Stratum indices (comma separated)")->required()->delimiter(',');
  bnd->add_flag("--exact", exact, "Also enumerate the stratum for the exact proportion");
  std::string bnd_format = "csv";
  bnd->add_option("--format", bnd_format)->check(CLI::IsMember({"csv", "json"}));

  // word problem
  std::string u_text, v_text;
  RewriteLimits limits;
  auto* wp = app.add_subcommand("wp", "Bounded search for u == v (exit 0/1/3)");
  wp->add_option("--file", file, "Presentation (.pres)")->required();
  wp->add_option("--u", u_text, "First word ('1' for empty)")->required();
  wp->add_option("--v", v_text, "Second word ('1' for empty)")->required();
  wp->add_option("--max-states", limits.max_states)->check(CLI::PositiveNumber);
  wp->add_option("--max-depth", limits.max_depth)->check(CLI::PositiveNumber);
  wp->add_option("--max-length", limits.max_word_length)->check(CLI::PositiveNumber);

  // maps
  std::string map_name = "forget_order";
  auto* fibres = app.add_subcommand("fibres", "Verify a stratification map on stratum n");
  sflags.attach(fibres);
  fibres->add_option("--map", map_name)
      ->check(CLI::IsMember({"forget_order", "semigroup_as_monoid"}));
  fibres->add_option("--n", n, "Stratum index")->required();
  std::string fib_format = "text";
  fibres->add_option("--format", fib_format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("genlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::uint64_t cap = default_enumeration_cap();
  try {
    if (*check) {
      const Presentation p = load_presentation(file);
      const bool ok = satisfies_C(p, m);
      out << (ok ? "holds" : "fails") << '\n';
      return ok ? kExitOk : kExitNegative;
    }
    if (*pieces) {
      const Presentation p = load_presentation(file);
      const auto list = PieceIndex(p).pieces();
      if (pieces_format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [w, c] : list) {
          arr.push_back({{"piece", to_string(w, p.alphabet())}, {"occurrences", c}});
        }
        out << arr.dump(2) << '\n';
      } else {
        if (pieces_format == "csv") out << "piece,occurrences\n";
        const char sep = pieces_format == "csv" ? ',' : ' ';
        for (const auto& [w, c] : list) out << to_string(w, p.alphabet()) << sep << c << '\n';
      }
      return kExitOk;
    }
    if (*degree) {
      const auto d = overlap_degree(load_presentation(file));
      out << (d ? std::to_string(*d) : "unbounded") << '\n';
      return kExitOk;
    }
    if (*count) {
      const auto desc = sflags.descriptor();
      out << (ball ? ball_size(desc, n) : stratum_size(desc, n)).get_str() << '\n';
      return kExitOk;
    }
    if (*enumerate) {
      const auto desc = sflags.descriptor();
      nlohmann::json arr = nlohmann::json::array();
      for_each_in_stratum(
          desc, n,
          [&](const Presentation& p) {
            if (enum_format == "json") {
              arr.push_back(presentation_json(p));
            } else {
              out << presentation_line(p) << '\n';
            }
            return true;
          },
          cap);
      if (enum_format == "json") out << arr.dump() << '\n';
      return kExitOk;
    }
    if (*sample) {
      const auto desc = sflags.descriptor();
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < sample_count; ++i) {
        RandomStream rng(seed, i);
        const Presentation p = ball ? sample_ball(desc, n, rng) : sample_stratum(desc, n, rng);
        if (sample_format == "json") {
          arr.push_back(presentation_json(p));
        } else {
          out << presentation_line(p) << '\n';
        }
      }
      if (sample_format == "json") out << arr.dump() << '\n';
      return kExitOk;
    }
    if (*estimate) {
      const auto desc = sflags.descriptor();
      const auto rows = convergence_report(desc, m, n_list, trials, seed, jobs);
      if (est_format == "json") {
        write_json(out, desc, m, rows);
      } else {
        out << csv_header() << '\n';
        write_csv(out, desc, m, rows);
      }
      return kExitOk;
    }
    if (*bnd) {
      std::sort(n_list.begin(), n_list.end());
      n_list.erase(std::unique(n_list.begin(), n_list.end()), n_list.end());
      write_bound_rows(out, bnd_format, sflags.descriptor(), m, n_list, exact, cap);
      return kExitOk;
    }
    if (*wp) {
      const Presentation p = load_presentation(file);
      Word u, v;
      try {
        u = parse_word(u_text, p.alphabet());
        v = parse_word(v_text, p.alphabet());
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad word: ") + e.what());
      }
      const EquivalenceResult r = equivalent(p, u, v, limits);
      switch (r.verdict) {
        case Verdict::equivalent:
          out << "equivalent " << r.distance << '\n';
          return kExitOk;
        case Verdict::not_equivalent:
          out << "not-equivalent\n";
          return kExitNegative;
        case Verdict::inconclusive:
          out << "inconclusive " << limit_name(r.limit) << '\n';
          err << "search stopped after " << r.states << " states (frontier " << r.frontier
              << ")\n";
          return kExitInconclusive;
      }
    }
    if (*fibres) {
      const auto desc = sflags.descriptor();
      const MapReport r = verify_map(*parse_map_id(map_name), desc, n, cap);
      if (fib_format == "json") {
        nlohmann::json j = {{"map", to_string(r.map)},
                            {"n", r.n},
                            {"domain", r.domain_size.get_str()},
                            {"restricted_domain", r.restricted_size.get_str()},
                            {"codomain", r.codomain_size.get_str()},
                            {"image", r.image_size},
                            {"stratification_preserving", r.stratification_preserving},
                            {"surjective", r.surjective},
                            {"min_fibre", r.min_fibre},
                            {"max_fibre", r.max_fibre},
                            {"d_ratio", r.d_ratio.get_str()},
                            {"fibre_formula_holds", r.fibre_formula_holds},
                            {"outside_proportion", r.outside_proportion.get_str()}};
        out << j.dump(2) << '\n';
      } else {
        out << "map " << to_string(r.map) << '\n'
            << "n " << r.n << '\n'
            << "domain " << r.domain_size.get_str() << '\n'
            << "restricted_domain " << r.restricted_size.get_str() << '\n'
            << "codomain " << r.codomain_size.get_str() << '\n'
            << "image " << r.image_size << '\n'
            << "stratification_preserving " << std::boolalpha << r.stratification_preserving
            << '\n'
            << "surjective " << r.surjective << '\n'
            << "min_fibre " << r.min_fibre << '\n'
            << "max_fibre " << r.max_fibre << '\n'
            << "d_ratio " << r.d_ratio.get_str() << '\n'
            << "fibre_formula_holds " << r.fibre_formula_holds << '\n'
            << "outside_proportion " << r.outside_proportion.get_str() << '\n';
      }
      return kExitOk;
    }
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << " (set GENLAB_ENUM_CAP to raise it)\n";
    return kExitCapExceeded;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace genlab
