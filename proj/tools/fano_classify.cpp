// fano-classify: run, export and verify the classification of Fano polytopes
// in Z^3.
//
// exit codes: 0 ok, 1 mismatch or I/O failure, 2 usage, 3 invariant violation

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fano/growth.hpp"
#include "fano/report.hpp"
#include "fano/verify.hpp"
#include "fano/weights.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kInvariant = 3 };

struct Common {
  std::string format{"text"};
  std::string output;
  unsigned jobs{1};
  bool deterministic{false};

  unsigned effective_jobs() const { return deterministic ? 1u : jobs; }
};

fano::OutputFormat parse_format(const std::string& s) {
  if (s == "json") return fano::OutputFormat::json;
  if (s == "tsv") return fano::OutputFormat::tsv;
  return fano::OutputFormat::text;
}

// Writes to the -o path, or stdout when none was given.
int emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return std::cout ? kOk : kMismatch;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return kMismatch;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing " << path << '\n';
    return kMismatch;
  }
  return kOk;
}

std::string render_checks(const std::vector<fano::CheckResult>& checks, fano::OutputFormat f) {
  std::ostringstream os;
  if (f == fano::OutputFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
      arr.push_back({{"check", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
    return arr.dump(2) + "\n";
  }
  if (f == fano::OutputFormat::tsv) {
    os << "status\tcheck\texpected\tactual\n";
    for (const auto& c : checks)
      os << (c.passed ? "PASS" : "FAIL") << '\t' << c.name << '\t' << c.expected << '\t' << c.actual << '\n';
    return os.str();
  }
  std::size_t passed = 0;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.passed) os << ": expected " << c.expected << ", got " << c.actual;
    os << '\n';
    passed += c.passed;
  }
  os << passed << '/' << checks.size() << " checks passed\n";
  return os.str();
}

bool all_passed(const std::vector<fano::CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  if (with_format)
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();
  cmd->add_option("-o,--output", c.output, "Output file (default stdout)");
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  cmd->add_flag("--deterministic", c.deterministic, "Force single-threaded mode");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of Fano polytopes in Z^3"};
  app.require_subcommand(1);

  Common classify_opts;
  auto* classify = app.add_subcommand("classify", "Run the classification and write every class");
  add_common(classify, classify_opts);

  Common verify_opts;
  std::string only = "all";
  bool oracle = false, perturb = false;
  fano::Int box = 7;
  std::string input;
  auto* verify = app.add_subcommand("verify", "Compare the pipeline against the published counts");
  add_common(verify, verify_opts);
  verify->add_option("--only", only, "Restrict to one stage")
      ->check(CLI::IsMember({"all", "weights", "tetrahedra", "minimal", "classification"}))
      ->capture_default_str();
  verify->add_flag("--oracle", oracle, "Also run the brute-force cross-checks");
  verify->add_option("--box", box, "Oracle box size")->check(CLI::Range(7, 50))->capture_default_str();
  verify->add_option("--input", input, "Check a JSON file written by classify instead of recomputing");
  verify->add_flag("--perturb-expected", perturb, "Negative control: compare against a perturbed table");

  Common stats_opts;
  auto* stats = app.add_subcommand("stats", "Print the histogram by vertex count");
  add_common(stats, stats_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      fano::GrowthOptions g;
      g.jobs = classify_opts.effective_jobs();
      const auto records = fano::classify_all(g);
      return emit(fano::serialize(records, parse_format(classify_opts.format)), classify_opts.output);
    }

    if (*stats) {
      fano::GrowthOptions g;
      g.jobs = stats_opts.effective_jobs();
      const auto report =
          fano::summarize(fano::classify_all(g), fano::enumerate_weight_systems(), fano::search_h_bound());
      return emit(fano::format_stats(report), stats_opts.output);
    }

    if (*verify) {
      fano::VerifyOptions v;
      v.jobs = verify_opts.effective_jobs();
      v.oracle = oracle;
      v.box = box;
      if (perturb) v.expected = fano::perturbed(v.expected);
      if (only == "weights") v.scope = fano::VerifyScope::weights;
      else if (only == "tetrahedra") v.scope = fano::VerifyScope::tetrahedra;
      else if (only == "minimal") v.scope = fano::VerifyScope::minimal;
      else if (only == "classification") v.scope = fano::VerifyScope::classification;

      std::vector<fano::CheckResult> checks;
      if (!input.empty()) {
        std::ifstream in(input, std::ios::binary);
        if (!in) {
          std::cerr << "error: cannot read " << input << '\n';
          return kUsage;
        }
        nlohmann::ordered_json j;
        try {
          j = nlohmann::ordered_json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          std::cerr << "error: " << input << ": " << e.what() << '\n';
          return kUsage;
        }
        checks = fano::verify_classification(fano::from_json(j), v.expected);
      } else {
        checks = fano::run_verification(v);
      }
      const int rc = emit(render_checks(checks, parse_format(verify_opts.format)), verify_opts.output);
      if (rc != kOk) return rc;
      return all_passed(checks) ? kOk : kMismatch;
    }
  } catch (const fano::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const fano::OverflowError& e) {
    std::cerr << "internal invariant violated (overflow): " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
