#include "kautz/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kautz/bounds.hpp"
#include "kautz/congestion.hpp"
#include "kautz/error.hpp"
#include "kautz/golden.hpp"
#include "kautz/oracle.hpp"
#include "kautz/report.hpp"
#include "kautz/word_gen.hpp"

namespace kautz::cli {

namespace {

using nlohmann::json;

struct Common {
  std::optional<unsigned> threads;
  bool no_cache = false;
  std::string cache_dir = "kautz-cache";
  std::string method = "enumerate";
  bool long_run = false;
  std::string format;
  std::string out_path;
};

struct EdgeArgs {
  int d = 0;
  std::size_t diameter = 0;
  std::string word;
};

unsigned parse_threads_env() {
  const char* env = std::getenv("KAUTZ_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "KAUTZ_THREADS must be a positive integer, got '" + std::string(env) + "'");
  }
  return static_cast<unsigned>(value);
}

EngineOptions engine_options(const Common& c) {
  EngineOptions o;
  if (c.threads) {
    if (*c.threads < 1) throw Error(ErrorCode::InvalidArgument, "--threads must be >= 1");
    o.threads = *c.threads;
  } else {
    o.threads = parse_threads_env();
  }
  o.tier = c.long_run ? BudgetTier::long_run : BudgetTier::desk;
  o.method = c.method == "cylinder" ? CountMethod::cylinder : CountMethod::enumerate;
  return o;
}

void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.out_path);
  file << text;
}

std::string format_or(const Common& c, const char* fallback) {
  return c.format.empty() ? fallback : c.format;
}

std::string layer_lines(const LayerTable& table) {
  std::ostringstream s;
  for (std::size_t k = 1; k <= table.diameter(); ++k) {
    s << "U_" << k << '=' << to_string(table.u(k)) << "  N=";
    for (std::size_t t = 1; t <= k; ++t) s << (t > 1 ? "," : "") << to_string(table.n(k, t));
    s << '\n';
  }
  return s.str();
}

std::string analyze_report(const KautzEdge& edge, const LayerTable& table,
                           const std::string& format) {
  const Count tau = makespan_tau(edge.d(), edge.diameter());
  const Count cong = table.cong();
  if (format == "json") {
    json j = to_json(table);
    j["word"] = edge.word().str();
    j["tau"] = to_string(tau);
    j["ratio"] = ratio_string(cong, tau, 4);
    j["beats_tau"] = cong > tau;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    ClassReport single;
    single.d = edge.d();
    single.diameter = edge.diameter();
    single.tau = tau;
    single.records.push_back({edge.word(), cong, is_circular_square_free(edge.word()),
                              is_unbordered(edge.word()), std::nullopt});
    return to_csv(single);
  }
  std::ostringstream s;
  s << "edge " << edge.word().str() << " in K(" << edge.d() << ',' << edge.diameter() << ")\n"
    << layer_lines(table) << "cong=" << to_string(cong) << "\ntau=" << to_string(tau)
    << "\nratio=" << ratio_string(cong, tau, 4)
    << "\nbeats_tau=" << (cong > tau ? "true" : "false") << '\n';
  return s.str();
}

bool atom_holds(const std::string& atom, const KautzEdge& edge, const EngineOptions& o) {
  if (atom == "unbordered") return is_unbordered(edge.word());
  if (atom == "square-free") return is_square_free(edge.word());
  if (atom == "circular-square-free") return is_circular_square_free(edge.word());
  if (atom == "74-free") return is_74_plus_free(edge.word());
  if (atom.rfind("full-row:", 0) == 0) {
    return is_full_row(edge, static_cast<std::size_t>(parse_count(atom.substr(9))), o);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown predicate atom '" + atom + "'");
}

EdgeClass parse_class(const std::string& text, const EngineOptions& o) {
  if (text == "all") return EdgeClass::all_edges();
  if (text == "circular-square-free") return EdgeClass::circular_square_free();
  if (text == "unbordered") return EdgeClass::unbordered();
  if (text.rfind("full-row:", 0) == 0) {
    return EdgeClass::full_row(static_cast<std::size_t>(parse_count(text.substr(9))));
  }
  if (text.rfind("predicate:", 0) == 0) {
    std::vector<std::string> atoms;
    std::string body = text.substr(10);
    std::size_t full_row_k = 0;
    std::stringstream ss(body);
    for (std::string atom; std::getline(ss, atom, '+');) {
      if (atom.empty()) throw Error(ErrorCode::InvalidArgument, "empty predicate atom");
      if (atom.rfind("full-row:", 0) == 0) {
        full_row_k = static_cast<std::size_t>(parse_count(atom.substr(9)));
      }
      atoms.push_back(atom);
    }
    if (atoms.empty()) throw Error(ErrorCode::InvalidArgument, "predicate needs atoms");
    // Validate names before the scan starts.
    for (const auto& a : atoms) {
      if (a != "unbordered" && a != "square-free" && a != "circular-square-free" &&
          a != "74-free" && a.rfind("full-row:", 0) != 0) {
        throw Error(ErrorCode::InvalidArgument, "unknown predicate atom '" + a + "'");
      }
    }
    return EdgeClass::custom(
        text,
        [atoms, o](const KautzEdge& e) {
          for (const auto& a : atoms) {
            if (!atom_holds(a, e, o)) return false;
          }
          return true;
        },
        full_row_k);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown class '" + text + "'");
}

std::string scan_report(const ClassReport& r, const std::string& format) {
  if (format == "csv") return to_csv(r);
  if (format == "json") return to_json(r).dump(2) + "\n";
  std::ostringstream s;
  const bool empty = r.records.empty();
  s << "class " << r.label << " in K(" << r.d << ',' << r.diameter << ")\n"
    << "count=" << r.count() << '\n'
    << "min_cong=" << (empty ? "-" : to_string(r.min_cong())) << '\n'
    << "max_cong=" << (empty ? "-" : to_string(r.max_cong())) << '\n'
    << "tau=" << to_string(r.tau) << '\n'
    << "beats_tau=" << (!empty && r.max_cong() > r.tau ? "true" : "false") << '\n'
    << "mean_ratio=" << (empty ? "-" : format_decimal(r.mean_ratio(), 4)) << '\n';
  for (const auto& rec : r.records) {
    s << rec.word.str() << ' ' << to_string(rec.cong) << ' '
      << ratio_string(rec.cong, r.tau, 4) << '\n';
  }
  return s.str();
}

std::string bounds_report(const KautzEdge& edge, Side side, const std::string& format) {
  const auto sparsity = weighted_sparsity(edge, side);
  const auto ud = ud_lower_bound(edge, side);
  const BigInt clamped = ud.bound < 0 ? BigInt(0) : ud.bound;
  const auto cert =
      cong_lower_bound(parse_count(clamped.str()), edge.d(), edge.diameter());
  if (format == "json") {
    return json{{"sparsity", to_json(sparsity)},
                {"ud", to_json(ud)},
                {"certificate", to_json(cert)}}
               .dump(2) +
           "\n";
  }
  std::ostringstream s;
  s << "edge " << edge.word().str() << " in K(" << edge.d() << ',' << edge.diameter()
    << ")\nside=" << to_string(side) << " (realized " << to_string(sparsity.realized) << ")\n";
  for (const auto& [t, set] : sparsity.per_position) {
    s << "R_" << t << "={";
    for (std::size_t i = 0; i < set.values.size(); ++i) s << (i ? "," : "") << set.values[i];
    s << "}\n";
  }
  s << "omega=" << format_rational(sparsity.omega)
    << "\nomega_forward=" << format_rational(sparsity.omega_forward)
    << "\nomega_reversed=" << format_rational(sparsity.omega_reversed)
    << "\ndelta_bound=" << format_rational(sparsity.delta_bound) << '\n';
  if (sparsity.sufficiency) s << "sufficient=" << (*sparsity.sufficiency ? "true" : "false") << '\n';
  s << "U_D_lower=" << ud.bound.str() << '\n';
  if (ud.universal) s << "U_D_universal_74=" << format_rational(*ud.universal) << '\n';
  s << "cong_lower=" << format_rational(cert.cong_lower) << "\ntau=" << to_string(cert.tau)
    << "\nbeats_tau=" << (cert.beats_tau ? "true" : "false")
    << "\nC_d=" << format_rational(cert.c_d) << "\nD0=" << cert.d0 << '\n';
  return s.str();
}

void add_edge_options(CLI::App* cmd, EdgeArgs& e, bool with_word) {
  cmd->add_option("--d", e.d, "outdegree")->required()->check(CLI::Range(2, 64));
  cmd->add_option("--D", e.diameter, "diameter")->required()->check(CLI::PositiveNumber);
  if (with_word) cmd->add_option("--edge", e.word, "edge-word digits")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact shortest-path congestion in Kautz digraphs", "kautz"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--threads", c.threads, "worker threads (default: KAUTZ_THREADS or all cores)");
  app.add_flag("--no-cache", c.no_cache, "do not read or write the results cache");
  app.add_option("--cache-dir", c.cache_dir, "results cache directory")->capture_default_str();
  app.add_option("--method", c.method, "layer counting method")
      ->check(CLI::IsMember({"enumerate", "cylinder"}))
      ->capture_default_str();
  app.add_flag("--long-run", c.long_run, "lift the desk work cap");
  app.add_option("--format", c.format, "report format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", c.out_path, "write the report here instead of stdout");

  EdgeArgs edge_args;
  auto* analyze = app.add_subcommand("analyze", "layer table and congestion of one edge");
  add_edge_options(analyze, edge_args, true);

  std::string class_spec;
  auto* scan = app.add_subcommand("scan", "congestion over a class of edges");
  add_edge_options(scan, edge_args, false);
  scan->add_option("--class", class_spec,
                   "all | circular-square-free | unbordered | full-row:K | "
                   "predicate:ATOM[+ATOM...]")
      ->required();

  std::string alpha_text;
  bool strict = false, circular = false, exhaustive = false;
  std::size_t length = 0;
  std::optional<std::size_t> count;
  std::optional<std::uint64_t> seed;
  auto* gen = app.add_subcommand("generate", "circular power-free ternary edge-words");
  gen->add_option("--alpha", alpha_text, "power threshold, p/q or p")->required();
  gen->add_flag("--strict", strict, "forbid only exponents strictly above alpha");
  gen->add_flag("--circular", circular, "circular freeness (required)");
  gen->add_option("--length", length, "word length D+1")->required()->check(CLI::PositiveNumber);
  auto* count_opt = gen->add_option("--count", count, "stop after N words");
  auto* exh_flag = gen->add_flag("--exhaustive", exhaustive, "emit every word");
  count_opt->excludes(exh_flag);
  gen->add_option("--seed", seed, "seeded branch order");

  std::string side_text = "two-sided";
  auto* bounds = app.add_subcommand("bounds", "sparsity weights and congestion certificates");
  add_edge_options(bounds, edge_args, true);
  bounds->add_option("--side", side_text)
      ->check(CLI::IsMember({"forward", "reversed", "two-sided"}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "explicit-graph BFS cross-check");
  add_edge_options(oracle, edge_args, false);
  oracle->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "compare engine and BFS on every edge");
  std::string oracle_word;
  auto* oracle_edge = oracle->add_subcommand("edge", "BFS layer table of one edge");
  oracle_edge->add_option("WORD", oracle_word)->required();
  verify->fallthrough();
  oracle_edge->fallthrough();

  std::string table_name;
  std::optional<std::size_t> d_max;
  auto* repro = app.add_subcommand("reproduce", "recompute and diff the golden tables");
  repro->add_option("--table", table_name)
      ->required()
      ->check(CLI::IsMember({"appendix-a", "table-1", "section-7-1"}));
  repro->add_option("--D-max", d_max, "largest diameter to recompute");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return Exit::validation;
  }

  try {
    const EngineOptions options = engine_options(c);
    std::optional<LayerCache> cache;
    if (!c.no_cache) cache.emplace(c.cache_dir);
    const LayerCache* cache_ptr = cache ? &*cache : nullptr;
    const LayerSource source = [&](const KautzEdge& e) {
      return cached_congestion(e, options, cache_ptr);
    };

    if (analyze->parsed()) {
      const auto edge = KautzEdge::parse(edge_args.d, edge_args.diameter, edge_args.word);
      emit(c, out, analyze_report(edge, source(edge), format_or(c, "text")));
    } else if (scan->parsed()) {
      const auto cls = parse_class(class_spec, options);
      auto report = scan_class(edge_args.d, edge_args.diameter, cls, options, source);
      report.label = class_spec;
      emit(c, out, scan_report(report, format_or(c, "text")));
    } else if (gen->parsed()) {
      if (!circular) {
        throw Error(ErrorCode::InvalidArgument, "only circular generation is supported; pass --circular");
      }
      GeneratorConfig config;
      config.length = length;
      config.alpha = parse_rational(alpha_text);
      PowerThreshold(config.alpha, strict);  // rejects alpha <= 1
      config.strict = strict;
      if (seed) {
        config.order = BranchOrder::seeded_random;
        config.seed = *seed;
      }
      if (!exhaustive) config.limit = count.value_or(1);
      const auto words = generate_all(config);
      const auto format = format_or(c, "text");
      if (format == "json") {
        emit(c, out, generator_envelope(config, words, exhaustive).dump(2) + "\n");
      } else {
        std::ostringstream s;
        for (const auto& w : words) s << w.str() << '\n';
        if (exhaustive) {
          s << "# " << words.size() << " words of length " << length
            << (words.empty() ? ", none exist" : "") << " (exhaustive)\n";
        }
        emit(c, out, s.str());
      }
    } else if (bounds->parsed()) {
      const auto edge = KautzEdge::parse(edge_args.d, edge_args.diameter, edge_args.word);
      emit(c, out, bounds_report(edge, parse_side(side_text), format_or(c, "text")));
    } else if (oracle->parsed()) {
      const auto graph = build_explicit(edge_args.d, edge_args.diameter);
      if (oracle_edge->parsed()) {
        const auto edge = KautzEdge::parse(edge_args.d, edge_args.diameter, oracle_word);
        emit(c, out, analyze_report(edge, oracle_congestion(graph, edge), format_or(c, "text")));
      } else {
        std::ostringstream s;
        std::size_t checked = 0, mismatches = 0;
        for (const auto& w : all_edge_words(edge_args.d, edge_args.diameter)) {
          const KautzEdge edge(edge_args.d, edge_args.diameter, w);
          ++checked;
          if (!(congestion(edge, options) == oracle_congestion(graph, edge))) {
            ++mismatches;
            s << "mismatch " << w.str() << '\n';
          }
        }
        s << "K(" << edge_args.d << ',' << edge_args.diameter << "): " << checked
          << " edges checked, " << mismatches << " mismatches\n";
        emit(c, out, s.str());
        if (mismatches) return Exit::diff;
      }
    } else if (repro->parsed()) {
      const auto table = parse_golden_table(table_name);
      const auto result =
          reproduce(table, d_max.value_or(default_max_diameter(table)), options, source);
      const auto format = format_or(c, "text");
      emit(c, out, format == "json" ? to_json(result).dump(2) + "\n" : to_text(result));
      if (!result.clean()) return Exit::diff;
    }
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return Exit::budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::validation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return Exit::validation;
  }
  return Exit::ok;
}

}  // namespace kautz::cli
