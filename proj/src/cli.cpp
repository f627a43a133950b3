#include "cannon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <iostream>
#include <optional>
#include <sstream>

#include "cannon/automata.hpp"
#include "cannon/cayley.hpp"
#include "cannon/checks.hpp"
#include "cannon/fellow.hpp"
#include "cannon/geodesics.hpp"
#include "cannon/report.hpp"

namespace cannon {

namespace {

enum class Format { json, csv, dot, text };

// Raised for flag values past a ceiling; reported as "error: bound: ...".
struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t radius = -1;
  std::int64_t max_len = -1;
  std::int64_t n = 0;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 1;
  std::int64_t workers = 1;
  // automaton / geodesics extras
  std::string action = "dump";
  std::string in_path;
  std::string other_path;
  std::string target;
  bool counts = false;
};

Format parse_format(const std::string& name, std::initializer_list<Format> allowed, Format fallback) {
  if (name.empty()) return fallback;
  static const std::map<std::string, Format> names{
      {"json", Format::json}, {"csv", Format::csv}, {"dot", Format::dot}, {"text", Format::text}};
  auto it = names.find(name);
  if (it == names.end() || std::find(allowed.begin(), allowed.end(), it->second) == allowed.end()) {
    throw std::invalid_argument("format '" + name + "' is not available for this command");
  }
  return it->second;
}

void require_range(const char* flag, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    throw BoundViolation(std::string(flag) + " " + std::to_string(value) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to --out when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot write " + cfg.out_path);
  file << text;
  if (!file) throw std::ios_base::failure("write failed for " + cfg.out_path);
}

int report_checks(const std::vector<CheckReport>& reports, std::ostream& out) {
  bool ok = true;
  for (const CheckReport& r : reports) {
    out << (r.passed() ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.cases << " cases, "
        << r.mismatches.size() << " mismatches\n";
    for (const std::string& m : r.mismatches) out << "  mismatch: " << m << '\n';
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

int cmd_ball(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t radius = cfg.radius < 0 ? 4 : cfg.radius;
  require_range("--radius", radius, 0, kCliMaxRadius);
  const Format f = parse_format(cfg.format, {Format::csv, Format::dot}, Format::csv);
  const DistanceMap map = ball(radius);
  emit(cfg, out, f == Format::dot ? export_dot(map) : ball_csv(map));
  return 0;
}

int cmd_check_theorem5(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t max_len = cfg.max_len < 0 ? 11 : cfg.max_len;
  require_range("--max-len", max_len, 0, static_cast<std::int64_t>(kCliMaxCheckLength));
  const Dfa acceptor = cfg.in_path.empty() ? build_geodesic_acceptor() : parse_dfa(read_file(cfg.in_path));
  std::ostringstream text;
  const int status = report_checks({check_geodesic_acceptor(acceptor, static_cast<std::size_t>(max_len))}, text);
  emit(cfg, out, text.str());
  return status;
}

int cmd_check_lemmas(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t max_len = cfg.max_len < 0 ? 11 : cfg.max_len;
  require_range("--max-len", max_len, 0, static_cast<std::int64_t>(kCliMaxCheckLength));
  const std::int64_t radius = cfg.radius < 0 ? 12 : cfg.radius;
  require_range("--radius", radius, 0, kCliMaxRadius);
  std::ostringstream text;
  const int status = report_checks(
      {check_closed_form_lengths(radius), check_layer_parity(static_cast<std::size_t>(max_len)),
       check_three_t_words(5), check_top_uniqueness(4), check_bottom_family(4)},
      text);
  emit(cfg, out, text.str());
  return status;
}

int cmd_fftp_scan(const RunConfig& cfg, std::ostream& out) {
  const std::int64_t max_len = cfg.max_len < 0 ? 7 : cfg.max_len;
  require_range("--max-len", max_len, 0, static_cast<std::int64_t>(kCliMaxScanLength));
  require_range("--workers", cfg.workers, 1, 256);
  const Format f = parse_format(cfg.format, {Format::csv, Format::json}, Format::csv);
  const ScanResult scan = fftp_scan(static_cast<std::size_t>(max_len), static_cast<std::size_t>(cfg.workers));
  if (f == Format::json) {
    emit(cfg, out, scan_json(scan).dump(2) + "\n");
    if (!cfg.out_path.empty()) out << scan_summary_csv(scan);
    return 0;
  }
  if (cfg.out_path.empty()) {
    out << scan_rows_csv(scan) << '\n' << scan_summary_csv(scan);
  } else {
    emit(cfg, out, scan_rows_csv(scan));
    out << scan_summary_csv(scan);
  }
  return 0;
}

int cmd_witness(const RunConfig& cfg, std::ostream& out) {
  require_range("--n", cfg.n, kCliMinWitnessN, kCliMaxWitnessN);
  const Format f = parse_format(cfg.format, {Format::text, Format::json}, Format::text);
  const Word w = Word{Letter::t}.concat(a_power(cfg.n)).append(Letter::t).concat(a_power(cfg.n)).append(Letter::t);
  const FellowReport r = min_fftp_constant(w);
  if (f == Format::json) {
    auto doc = report_json(r);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    const auto pw = path_points(r.word);
    const auto pv = path_points(r.witness);
    for (std::size_t t = 0; t < pw.size(); ++t) {
      const GroupElement& v = pv[std::min(t, pv.size() - 1)];
      steps.push_back({{"t", t}, {"w", pw[t].to_string()}, {"v", v.to_string()}, {"d", distance(pw[t], v)}});
    }
    doc["steps"] = steps;
    emit(cfg, out, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream text;
  text << "word,endpoint,word_len,geo_len,min_k,witness\n"
       << csv_field(r.word.to_string()) << ',' << csv_field(r.endpoint.to_string()) << ',' << r.word_len
       << ',' << r.geo_len << ',' << r.min_k << ',' << csv_field(r.witness.to_string()) << "\n\n"
       << distance_table(r);
  emit(cfg, out, text.str());
  return 0;
}

int cmd_automaton(const RunConfig& cfg, std::ostream& out) {
  if (cfg.action == "random") {
    std::mt19937_64 rng(cfg.seed);
    emit(cfg, out, to_text(random_dfa(full_alphabet(), 6, rng)));
    return 0;
  }
  const Dfa base = cfg.in_path.empty() ? build_geodesic_acceptor() : parse_dfa(read_file(cfg.in_path));
  if (cfg.action == "dump") {
    emit(cfg, out, to_text(base));
    return 0;
  }
  if (cfg.action == "minimize") {
    emit(cfg, out, to_text(minimize(base)));
    return 0;
  }
  if (cfg.action == "compare") {
    const Dfa other = cfg.other_path.empty() ? build_geodesic_acceptor() : parse_dfa(read_file(cfg.other_path));
    const bool same = equivalent(base, other);
    emit(cfg, out, same ? "equivalent\n" : "different\n");
    return same ? 0 : 1;
  }
  throw std::invalid_argument("unknown automaton action '" + cfg.action + "'");
}

int cmd_geodesics(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.target.empty()) {
    emit(cfg, out, word_lines(geodesics_to(parse_element(cfg.target)).words));
    return 0;
  }
  if (cfg.counts) {
    const std::int64_t radius = cfg.radius < 0 ? 3 : cfg.radius;
    require_range("--radius", radius, 0, kCliMaxFamilyRadius);
    std::vector<GeodesicFamily> families;
    for (Layer layer : {Layer::bottom, Layer::top}) {
      for (std::int64_t x = -radius; x <= radius; ++x) {
        for (std::int64_t y = -radius; y <= radius; ++y) families.push_back(geodesics_to({x, y, layer}));
      }
    }
    emit(cfg, out, family_counts_csv(families));
    return 0;
  }
  const std::int64_t max_len = cfg.max_len < 0 ? 4 : cfg.max_len;
  require_range("--max-len", max_len, 0, static_cast<std::int64_t>(kMaxGeodesicEnumerationLength));
  emit(cfg, out, word_lines(geodesic_words_up_to(static_cast<std::size_t>(max_len))));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graph, geodesic language and fellow traveler computations for the group "
               "<a, t | t^2 = 1, atat = tata>"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the main output to PATH instead of stdout");
  };

  auto* ball_cmd = app.add_subcommand("ball", "Breadth-first ball of the Cayley graph");
  ball_cmd->add_option("--radius", cfg.radius, "Ball radius (default 4, max 14)");
  ball_cmd->add_option("--format", cfg.format, "csv (default) or dot");
  add_out(ball_cmd);

  auto* thm_cmd = app.add_subcommand("check-theorem5", "Exhaustive acceptor vs BFS comparison");
  thm_cmd->add_option("--max-len", cfg.max_len, "Word length bound (default 11, max 11)");
  thm_cmd->add_option("--acceptor", cfg.in_path, "Check this Dfa file instead of the built-in acceptor");
  add_out(thm_cmd);

  auto* lem_cmd = app.add_subcommand("check-lemmas", "Layer parity, three-t words, top uniqueness, family counts");
  lem_cmd->add_option("--max-len", cfg.max_len, "Parity sweep word length (default 11, max 11)");
  lem_cmd->add_option("--radius", cfg.radius, "Closed-form vs BFS radius (default 12, max 14)");
  add_out(lem_cmd);

  auto* scan_cmd = app.add_subcommand("fftp-scan", "Minimal fellow traveler constants of all non-geodesic words");
  scan_cmd->add_option("--max-len", cfg.max_len, "Word length bound (default 7, max 12)");
  scan_cmd->add_option("--workers", cfg.workers, "Worker threads (default 1)");
  scan_cmd->add_option("--format", cfg.format, "csv (default) or json");
  add_out(scan_cmd);

  auto* wit_cmd = app.add_subcommand("witness", "Report for t a^n t a^n t and its best shorter word");
  wit_cmd->add_option("--n", cfg.n, "Exponent n (1 to 6)")->required();
  wit_cmd->add_option("--format", cfg.format, "text (default) or json");
  add_out(wit_cmd);

  auto* dfa_cmd = app.add_subcommand("automaton", "Dump, minimize or compare automata");
  dfa_cmd->add_option("action", cfg.action, "dump (default), minimize, compare or random")
      ->check(CLI::IsMember({"dump", "minimize", "compare", "random"}));
  dfa_cmd->add_option("--in", cfg.in_path, "Dfa file (default: the geodesic acceptor)");
  dfa_cmd->add_option("--other", cfg.other_path, "Second Dfa for compare (default: the geodesic acceptor)");
  add_out(dfa_cmd);

  auto* geo_cmd = app.add_subcommand("geodesics", "Geodesic words, families and family sizes");
  geo_cmd->add_option("--max-len", cfg.max_len, "List all geodesics up to this length (default 4, max 12)");
  geo_cmd->add_option("--target", cfg.target, "List every geodesic to the element (x,y,layer)");
  geo_cmd->add_flag("--counts", cfg.counts, "CSV of family sizes over the box |x|, |y| <= radius");
  geo_cmd->add_option("--radius", cfg.radius, "Box radius for --counts (default 3, max 9)");
  add_out(geo_cmd);

  dfa_cmd->add_option("--seed", cfg.seed, "Seed for the random action (default 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*ball_cmd) return cmd_ball(cfg, out);
    if (*thm_cmd) return cmd_check_theorem5(cfg, out);
    if (*lem_cmd) return cmd_check_lemmas(cfg, out);
    if (*scan_cmd) return cmd_fftp_scan(cfg, out);
    if (*wit_cmd) return cmd_witness(cfg, out);
    if (*dfa_cmd) return cmd_automaton(cfg, out);
    if (*geo_cmd) return cmd_geodesics(cfg, out);
  } catch (const BoundViolation& e) {
    err << "error: bound: " << e.what() << '\n';
    return 2;
  } catch (const BoundExceeded& e) {
    err << "error: bound: " << e.what() << '\n';
    return 2;
  } catch (const std::ios_base::failure& e) {
    err << "error: io: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: input: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cannon
