#include "monocert/cli.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monocert/certify.hpp"
#include "monocert/paperfuncs.hpp"
#include "monocert/serialize.hpp"

namespace monocert::cli {

namespace {

using serialize::format_double;
using serialize::Json;

/// Bad input detected after parsing, or an I/O failure.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  int n_max = 200;
  double grid_from = 0.0;
  double grid_to = 50.0;
  double grid_step = 0.01;
  std::string out_path;

  std::string target;
  std::string argument;
  std::string theorem;
  int n_from = 0;
  int n_to = 0;
  std::string exponent;
  double explore_from = 1.5;
  double explore_to = 20.0;
  double explore_step = 0.5;
  int n_last = 100;
};

double parse_real(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError("not a finite real number: " + s);
  }
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw UsageError("not an integer: " + s);
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << text;
  f.close();
  if (!f) throw UsageError("cannot write " + path.string());
}

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_file(cfg.out_path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

certify::VerifyOptions options_from(const Config& cfg) {
  if (!(cfg.grid_from >= 0.0) || !(cfg.grid_from < cfg.grid_to) || !(cfg.grid_step > 0.0)) {
    throw UsageError("grid needs 0 <= grid-from < grid-to and grid-step > 0");
  }
  certify::VerifyOptions o;
  o.n_max = cfg.n_max;
  o.grid_from = cfg.grid_from;
  o.grid_to = cfg.grid_to;
  o.grid_step = cfg.grid_step;
  return o;
}

certify::VerificationReport run_verification(certify::Theorem t, const certify::VerifyOptions& o) {
  switch (t) {
    case certify::Theorem::kLemma2: return certify::verify_lemma2(o);
    case certify::Theorem::kTheorem1: return certify::verify_theorem1(o);
    case certify::Theorem::kTheorem2: return certify::verify_theorem2(o);
    case certify::Theorem::kRemark1: return certify::verify_remark1(o);
    case certify::Theorem::kRemark2Conjecture: break;
  }
  throw UsageError("not a verifiable theorem");
}

std::string render(const Config& cfg, const certify::VerificationReport& r) {
  return cfg.format == "json" ? dump(serialize::to_json(r)) : serialize::to_text(r);
}

int cmd_eval(const Config& cfg, std::ostream& out) {
  using paperfuncs::HFunction;
  const std::string& t = cfg.target;
  Enclosure v;
  std::string note;
  if (t == "omega") {
    v = paperfuncs::unit_ball_volume(parse_int(cfg.argument));
  } else if (t == "omega_term") {
    v = paperfuncs::omega_sequence_term(parse_int(cfg.argument));
  } else {
    const double x = parse_real(cfg.argument);
    if (t == "F") {
      const auto f = paperfuncs::F(x);
      v = f.value;
      if (f.at_singularity) note = "limit value";
    } else if (t == "G") {
      v = paperfuncs::G(x).value;
    } else if (t == "q") {
      v = paperfuncs::q_func(x);
    } else if (t == "h") {
      v = paperfuncs::h_family(HFunction::kH, x);
    } else if (t == "h1") {
      v = paperfuncs::h_family(HFunction::kH1, x);
    } else {
      v = paperfuncs::h_family(HFunction::kH2, x);
    }
  }

  if (cfg.format == "json") {
    Json j;
    j["target"] = t;
    j["argument"] = cfg.argument;
    j["lo"] = v.lo();
    j["hi"] = v.hi();
    j["mid"] = v.mid();
    if (!note.empty()) j["note"] = note;
    emit(cfg, out, dump(j));
  } else {
    std::string line = t + "(" + cfg.argument + ") in [" + format_double(v.lo()) + ", " + format_double(v.hi()) +
                       "] mid " + format_double(v.mid());
    if (!note.empty()) line += " (" + note + ")";
    emit(cfg, out, line + "\n");
  }
  return kExitPass;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto report = run_verification(certify::theorem_from_string(cfg.theorem), options_from(cfg));
  emit(cfg, out, render(cfg, report));
  return certify::exit_code(report.overall());
}

int cmd_sequence(const Config& cfg, std::ostream& out) {
  const std::string& e = cfg.exponent;
  const int min_n = e == "paper" ? 3 : e == "inv_nlnn" ? 2 : 1;
  if (cfg.n_from < min_n || !(cfg.n_from < cfg.n_to)) {
    throw UsageError("sequence needs " + std::to_string(min_n) + " <= n_from < n_to for exponent " + e);
  }
  if (cfg.n_to - cfg.n_from > 1000000) throw UsageError("sequence range limited to 10^6 rows");

  auto log_term = [&](int n) {
    if (e == "unit") return paperfuncs::log_unit_ball_volume(n);
    if (e == "inv_n") return paperfuncs::log_omega_root_n(n);
    if (e == "inv_nlnn") return paperfuncs::log_omega_root_nlogn(n);
    return paperfuncs::log_omega_sequence_term(n);
  };

  Json rows = Json::array();
  std::ostringstream text;
  text << "n lo hi diff\n";
  std::optional<Enclosure> prev;
  for (int n = cfg.n_from; n <= cfg.n_to; ++n) {
    const Enclosure lg = log_term(n);
    const Enclosure v = exp(lg);
    std::string diff;
    if (prev) diff = certainly_less(lg, *prev) ? "-" : certainly_less(*prev, lg) ? "+" : "?";
    prev = lg;
    text << n << " " << format_double(v.lo()) << " " << format_double(v.hi()) << " " << (diff.empty() ? "." : diff)
         << "\n";
    Json row;
    row["n"] = n;
    row["lo"] = v.lo();
    row["hi"] = v.hi();
    row["log_lo"] = lg.lo();
    row["log_hi"] = lg.hi();
    row["diff"] = diff.empty() ? Json(nullptr) : Json(diff);
    rows.push_back(std::move(row));
  }
  if (cfg.format == "json") {
    Json j;
    j["exponent"] = e;
    j["rows"] = std::move(rows);
    emit(cfg, out, dump(j));
  } else {
    emit(cfg, out, text.str());
  }
  return kExitPass;
}

int cmd_report_all(const Config& cfg, std::ostream& out) {
  const std::filesystem::path dir = cfg.out_path.empty() ? std::filesystem::path("report") : std::filesystem::path(cfg.out_path);
  const auto opts = options_from(cfg);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw UsageError("cannot create " + dir.string() + ": " + ec.message());

  certify::Status worst = certify::Status::kPass;
  Json entries = Json::array();
  std::ostringstream text;
  for (auto t : {certify::Theorem::kLemma2, certify::Theorem::kTheorem1, certify::Theorem::kTheorem2,
                 certify::Theorem::kRemark1}) {
    const auto report = run_verification(t, opts);
    const std::string file = std::string(certify::to_string(t)) + ".json";
    write_file(dir / file, dump(serialize::to_json(report)));
    worst = certify::meet(worst, report.overall());
    entries.push_back({{"theorem", certify::to_string(t)}, {"overall", certify::to_string(report.overall())},
                       {"file", file}});
    text << certify::to_string(t) << " " << certify::to_string(report.overall()) << "\n";
  }
  Json summary;
  summary["overall"] = certify::to_string(worst);
  summary["exit_code"] = certify::exit_code(worst);
  summary["reports"] = std::move(entries);
  write_file(dir / "summary.json", dump(summary));

  text << "overall " << certify::to_string(worst) << "\n";
  out << (cfg.format == "json" ? dump(summary) : text.str());
  return certify::exit_code(worst);
}

int cmd_explore(const Config& cfg, std::ostream& out) {
  const std::vector<double> grid = certify::make_grid(cfg.explore_from, cfg.explore_to, cfg.explore_step);
  emit(cfg, out, render(cfg, certify::explore_remark2(grid, cfg.n_last)));
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Certified evaluation and monotonicity checks for lnGamma ratios and unit-ball volumes", "monocert"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--n-max", cfg.n_max, "Largest n for sequence steps")->capture_default_str();
  app.add_option("--grid-from", cfg.grid_from, "Grid start")->capture_default_str();
  app.add_option("--grid-to", cfg.grid_to, "Grid end")->capture_default_str();
  app.add_option("--grid-step", cfg.grid_step, "Grid spacing")->capture_default_str();
  app.add_option("--out", cfg.out_path, "Output file (report-all: output directory, default ./report)");

  auto* eval = app.add_subcommand("eval", "Print a rigorous enclosure of one function value");
  eval->add_option("target", cfg.target, "Function")
      ->required()
      ->check(CLI::IsMember({"F", "G", "omega", "omega_term", "q", "h", "h1", "h2"}));
  eval->add_option("argument", cfg.argument, "x, or n for omega and omega_term")->required();

  auto* verify = app.add_subcommand("verify", "Replay one proof and print its report");
  verify->add_option("theorem", cfg.theorem, "Which result")
      ->required()
      ->check(CLI::IsMember({"lemma2", "theorem1", "theorem2", "remark1"}));

  auto* sequence = app.add_subcommand("sequence", "Tabulate a unit-ball volume sequence");
  sequence->add_option("n_from", cfg.n_from, "First n")->required();
  sequence->add_option("n_to", cfg.n_to, "Last n")->required();
  sequence->add_option("exponent", cfg.exponent, "unit, inv_n, inv_nlnn or paper")
      ->required()
      ->check(CLI::IsMember({"unit", "inv_n", "inv_nlnn", "paper"}));

  auto* report_all = app.add_subcommand("report-all", "Run every verification and write JSON reports");

  auto* explore = app.add_subcommand("explore", "Second differences of ln G and of its sequence (non-certifying)");
  explore->add_option("--from", cfg.explore_from, "Grid start, > 1")->capture_default_str();
  explore->add_option("--to", cfg.explore_to, "Grid end")->capture_default_str();
  explore->add_option("--step", cfg.explore_step, "Grid spacing")->capture_default_str();
  explore->add_option("--n-last", cfg.n_last, "Last n of the sequence")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (sequence->parsed()) return cmd_sequence(cfg, out);
    if (report_all->parsed()) return cmd_report_all(cfg, out);
    if (explore->parsed()) return cmd_explore(cfg, out);
  } catch (const InconclusivePrecision& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace monocert::cli
