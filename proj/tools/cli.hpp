#pragma once

// Command line front end: computes a Groebner basis of an ideal file with
// either algorithm, or prints a generated benchmark ideal.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sigbasis/sigbasis.hpp"

namespace sigbasis::cli {

struct RunOptions {
  std::string input;
  std::string algorithm = "sb";
  std::string reducer = "geobucket";
  bool hashed = true;
  bool hashed_given = false;
  bool dedup = false;
  bool compressed = false;
  std::string lookup = "divkdtree";
  std::string spair_queue = "triangle-tt";
  std::string module_order = "schreyer";
  std::string tiebreak = "low-gt";
  unsigned base_divisors = 2;
  std::string high_divisor = "max-ratio";
  bool early_singular = false;
  bool interreduce = false;
  bool stats = false;
  std::string out;
};

struct GenOptions {
  std::string family;
  std::size_t n = 0;
  std::string naming = "variables";
  std::uint64_t p = 101;
  bool interreduce = false;
};

namespace detail {

template <class T>
T pick(const std::map<std::string, T>& m, const std::string& key) {
  return m.at(key);
}

inline QueueConfig queue_config(const RunOptions& o) {
  const std::map<std::string, QueueBackend> backends{
      {"heap", QueueBackend::Heap}, {"geobucket", QueueBackend::Geobucket}, {"tourtree", QueueBackend::TourTree}};
  return QueueConfig{pick(backends, o.reducer), o.hashed, o.dedup, o.compressed};
}

inline LookupKind lookup_kind(const std::string& s) {
  return pick<LookupKind>({{"list", LookupKind::List},
                           {"divlist", LookupKind::DivList},
                           {"kdtree", LookupKind::KdTree},
                           {"divkdtree", LookupKind::DivKdTree}},
                          s);
}

inline PairQueueKind pair_queue_kind(const std::string& s) {
  return pick<PairQueueKind>({{"triangle-tt", PairQueueKind::TriangleTourTree},
                              {"triangle-heap", PairQueueKind::TriangleHeap},
                              {"heap", PairQueueKind::Heap},
                              {"tourtree", PairQueueKind::TourTree}},
                             s);
}

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

inline std::string compute(const RunOptions& o, std::istream& in) {
  Ideal ideal = parse_ideal(read_input(o.input, in));
  if (o.interreduce) ideal.gens = interreduce_sorted(ideal.ring, ideal.gens);
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream text, stats;
  if (o.algorithm == "classic") {
    BuchbergerConfig cfg;
    cfg.reducer = queue_config(o);
    cfg.lookup = lookup_kind(o.lookup);
    cfg.spair_queue = pair_queue_kind(o.spair_queue);
    const auto res = buchberger_run(ideal.ring, ideal.gens, cfg);
    for (const auto& g : res.gb) text << format_polynomial(ideal.ring, g) << '\n';
    write_classic_stats(stats, res.stats, res.gb.size(), total_terms(res.gb));
  } else {
    SigBasisConfig cfg;
    cfg.reducer = queue_config(o);
    cfg.lookup = lookup_kind(o.lookup);
    cfg.spair_queue = pair_queue_kind(o.spair_queue);
    cfg.module_order = o.module_order == "potop" ? ModuleOrderKind::PositionOverTerm : ModuleOrderKind::Schreyer;
    cfg.tiebreak = o.tiebreak == "high-gt" ? SchreyerTiebreak::HighGreater : SchreyerTiebreak::LowGreater;
    cfg.base_divisors = o.base_divisors;
    cfg.high_divisor = o.high_divisor == "min-ratio" ? HighDivisorChoice::MinRatio : HighDivisorChoice::MaxRatio;
    cfg.early_singular = o.early_singular;
    const auto res = sb_run(ideal.ring, ideal.gens, cfg);
    for (const auto& g : res.gb) text << format_polynomial(ideal.ring, g) << '\n';
    for (const auto& s : res.syzygies) text << format_signature(s) << '\n';
    write_sb_stats(stats, res.stats, res.gb.size());
  }
  if (o.stats) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    text << stats.str() << "wall time (s): " << std::fixed << std::setprecision(3) << secs << '\n';
  }
  return text.str();
}

inline std::string generate(const GenOptions& g) {
  if (g.p >= (std::uint64_t{1} << 31) || !is_prime(g.p)) throw std::invalid_argument("characteristic not prime");
  const auto p = static_cast<Coeff>(g.p);
  Ideal ideal = g.family == "katsura"
                    ? gen_katsura(g.n, g.naming == "classic" ? KatsuraNaming::Classic : KatsuraNaming::Variables, p)
                    : gen_cyclic(g.n, g.family == "hcyclic", p);
  if (g.interreduce) ideal.gens = interreduce_sorted(ideal.ring, ideal.gens);
  return format_ideal(ideal);
}

}  // namespace detail

/// Returns the process exit status: 0 on success, 1 on input or computation
/// errors, 2 on usage errors.
inline int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases over prime fields with the signature or the classic Buchberger algorithm"};
  app.set_help_all_flag("--help-all");
  RunOptions o;
  GenOptions g;

  app.add_option("input", o.input, "Ideal file, or - for standard input");
  app.add_option("--algorithm", o.algorithm, "Algorithm")->check(CLI::IsMember({"sb", "classic"}));
  app.add_option("--reducer", o.reducer, "Term queue backend used in reduction")
      ->check(CLI::IsMember({"heap", "geobucket", "tourtree"}));
  auto* hashed = app.add_flag("--hashed,!--no-hashed", o.hashed,
                              "Combine like terms through a hash table (default unless --dedup)");
  app.add_flag("--dedup", o.dedup, "Combine like terms inside the queue");
  app.add_flag("--compressed", o.compressed, "Queue one stream per multiplied polynomial");
  app.add_option("--lookup", o.lookup, "Monomial divisor lookup structure")
      ->check(CLI::IsMember({"list", "divlist", "kdtree", "divkdtree"}));
  app.add_option("--spair-queue", o.spair_queue, "S-pair queue")
      ->check(CLI::IsMember({"triangle-tt", "triangle-heap", "heap", "tourtree"}));
  app.add_option("--module-order", o.module_order, "Module order (sb)")->check(CLI::IsMember({"schreyer", "potop"}));
  app.add_option("--schreyer-tiebreak", o.tiebreak, "Component preference on equal Schreyer weights (sb)")
      ->check(CLI::IsMember({"low-gt", "high-gt"}));
  app.add_option("--base-divisors", o.base_divisors,
                 "0 disables base divisors; N >= 1 uses one high-ratio and N-1 low-ratio divisors (sb)");
  app.add_option("--high-divisor", o.high_divisor, "High-ratio base divisor choice (sb)")
      ->check(CLI::IsMember({"max-ratio", "min-ratio"}));
  app.add_flag("--early-singular", o.early_singular, "Apply the singular criterion when pairs are created (sb)");
  app.add_flag("--interreduce", o.interreduce, "Interreduce the input and order it by decreasing lead term");
  app.add_flag("--stats", o.stats, "Append the statistics report");
  app.add_option("--out", o.out, "Write the output to this file");

  auto* gen = app.add_subcommand("gen", "Print a generated benchmark ideal");
  gen->add_option("family", g.family, "katsura, cyclic or hcyclic (homogenized cyclic)")
      ->required()
      ->check(CLI::IsMember({"katsura", "cyclic", "hcyclic"}));
  gen->add_option("n", g.n, "Size parameter")->required()->check(CLI::Range(1, 64));
  gen->add_option("--naming", g.naming, "katsura-n has n (variables) or n+1 (classic) unknowns")
      ->check(CLI::IsMember({"variables", "classic"}));
  gen->add_option("-p,--prime", g.p, "Characteristic");
  gen->add_flag("--interreduce", g.interreduce, "Interreduce and order by decreasing lead term");

  try {
    app.parse(argc, argv);
    o.hashed_given = hashed->count() > 0;
    if (o.dedup && !o.hashed_given) o.hashed = false;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    std::string text;
    if (*gen) {
      text = detail::generate(g);
    } else {
      if (o.input.empty()) {
        err << "usage error: an input file is required\n";
        return 2;
      }
      if (o.hashed && o.dedup) {
        err << "usage error: --hashed and --dedup cannot be combined\n";
        return 2;
      }
      text = detail::compute(o, in);
    }
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!(f << text)) throw std::runtime_error("cannot write " + o.out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

/// Convenience overload taking the arguments without the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sigbasis"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace sigbasis::cli
