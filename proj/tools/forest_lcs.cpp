// Command-line front end for the forest common-subgraph solvers.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "forestlcs/approx4.hpp"
#include "forestlcs/certificate.hpp"
#include "forestlcs/cleaner.hpp"
#include "forestlcs/error.hpp"
#include "forestlcs/exact.hpp"
#include "forestlcs/generate.hpp"
#include "forestlcs/io.hpp"
#include "forestlcs/ptas.hpp"
#include "forestlcs/rational.hpp"
#include "forestlcs/stars.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace forestlcs;

namespace {

struct SolveOutcome {
  LcsResult result;
  std::string gap_bound = "-";
  bool heuristic = false;
};

struct SolveFlags {
  std::string algo = "approx4";
  std::string eps = "1/2";
  std::size_t delta = 0;
  std::size_t budget = 0;
};

SolveOutcome run_algo(const Forest& f1, const Forest& f2, const SolveFlags& flags) {
  SolveOutcome out;
  if (flags.algo == "oracle") {
    out.result = lcs_oracle(f1, f2, flags.budget ? flags.budget : kDefaultOracleBudget);
    out.gap_bound = "0";
  } else if (flags.algo == "bounded") {
    const std::size_t k = flags.delta ? flags.delta : std::max(max_component_order(f1), max_component_order(f2));
    out.result = lcs_bounded(f1, f2, std::max<std::size_t>(k, 1));
    out.gap_bound = "0";
  } else if (flags.algo == "stars") {
    out.result = lcs_star_forests(f1, f2);
    out.gap_bound = "0";
  } else if (flags.algo == "approx4") {
    out.result = lcs_approx4(f1, f2);
  } else if (flags.algo == "additive") {
    AdditiveOptions options;
    if (flags.budget) options.assignment_budget = flags.budget;
    auto r = lcs_additive(f1, f2, parse_rational(flags.eps), options);
    out.result = LcsResult{r.size, std::move(r.certificate)};
    out.gap_bound = to_string(r.gap_bound);
    out.heuristic = r.heuristic;
  } else {
    throw PreconditionError("unknown algorithm '" + flags.algo + "'");
  }
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::uint64_t> parse_numbers(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text)) out.push_back(std::stoull(item));
  return out;
}

int cmd_solve(const std::string& p1, const std::string& p2, const SolveFlags& flags, const std::string& cert_path,
              const std::string& format) {
  const Forest f1 = read_forest(p1);
  const Forest f2 = read_forest(p2);
  const auto start = std::chrono::steady_clock::now();
  const auto out = run_algo(f1, f2, flags);
  const double ms = millis_since(start);
  if (!cert_path.empty()) write_text_file(cert_path, serialize_certificate(out.result.certificate));

  if (format == "json") {
    nlohmann::json j{{"algo", flags.algo},        {"size", out.result.size}, {"gap_bound", out.gap_bound},
                     {"heuristic", out.heuristic}, {"millis", ms}};
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "algo,size,gap_bound,heuristic,millis\n"
              << flags.algo << "," << out.result.size << "," << out.gap_bound << "," << out.heuristic << ","
              << fixed(ms, 3) << "\n";
  } else {
    std::cout << "algo: " << flags.algo << "\nsize: " << out.result.size << "\ngap_bound: " << out.gap_bound
              << "\nheuristic: " << (out.heuristic ? "yes" : "no") << "\nmillis: " << fixed(ms, 3) << "\n";
  }
  return 0;
}

int cmd_clean(const std::string& path, const std::string& eps_text, std::uint64_t delta, const std::string& output,
              const std::string& format) {
  const Forest f = read_forest(path);
  const Rational eps = parse_rational(eps_text);
  const auto report = clean(f, eps, delta);
  if (!output.empty()) write_text_file(output, serialize_forest(report.cleaned));
  if (format == "json") {
    std::cout << clean_report_to_json(report);
  } else {
    std::cout << "edges: " << f.size() << " -> " << report.cleaned.size() << "\n";
    for (std::size_t k = 0; k < 4; ++k) std::cout << "pass " << k << ": " << report.removed[k].size() << "\n";
    std::cout << "components: " << report.roots.size()
              << "\nloss_bound_ok: " << (report.loss_bound_ok ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_gen(GenSpec spec, const std::string& output, bool pair) {
  Generated g = generate(spec);
  if (pair && !g.second) {
    GenSpec other = spec;
    ++other.seed;
    g.second = generate(other).first;
  }
  if (g.second) {
    if (output.empty()) throw PreconditionError("gen: a pair needs --output PREFIX");
    write_text_file(output + ".f1", serialize_forest(g.first));
    write_text_file(output + ".f2", serialize_forest(*g.second));
  } else if (!output.empty()) {
    write_text_file(output, serialize_forest(g.first));
  } else {
    std::cout << serialize_forest(g.first);
  }
  return 0;
}

int cmd_verify(const std::string& p1, const std::string& p2, const std::string& cert_path, const std::string& format) {
  const Forest f1 = read_forest(p1);
  const Forest f2 = read_forest(p2);
  const Certificate c = parse_certificate(read_text_file(cert_path));
  try {
    const auto size = verify_certificate(f1, f2, c);
    if (format == "json")
      std::cout << nlohmann::json{{"valid", true}, {"size", size}}.dump() << "\n";
    else
      std::cout << "valid: yes\nsize: " << size << "\n";
    return 0;
  } catch (const CertificateError& e) {
    if (format == "json")
      std::cout << nlohmann::json{{"valid", false}, {"error", e.what()}}.dump() << "\n";
    else
      std::cout << "valid: no\nerror: " << e.what() << "\n";
    return 1;
  }
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

int cmd_bench(const std::string& dir, const std::string& algos, const SolveFlags& base, std::size_t reps,
              bool timing) {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".f1" && fs::exists(fs::path(entry.path()).replace_extension(".f2")))
      names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  reps = std::max<std::size_t>(reps, 1);

  std::cout << "instance,algo,size,ratio,millis,error\n";
  for (const auto& name : names) {
    const Forest f1 = read_forest(fs::path(dir) / (name + ".f1"));
    const Forest f2 = read_forest(fs::path(dir) / (name + ".f2"));
    std::optional<std::size_t> optimum;
    try {
      optimum = lcs_oracle(f1, f2, base.budget ? base.budget : kDefaultOracleBudget).size;
    } catch (const BudgetExceeded&) {
    }
    for (const auto& algo : split_list(algos)) {
      SolveFlags flags = base;
      flags.algo = algo;
      std::vector<double> times;
      std::size_t size = 0;
      std::string error;
      for (std::size_t r = 0; r < reps && error.empty(); ++r) {
        const auto start = std::chrono::steady_clock::now();
        try {
          size = run_algo(f1, f2, flags).result.size;
        } catch (const std::exception& e) {
          error = csv_safe(e.what());
        }
        times.push_back(millis_since(start));
      }
      std::sort(times.begin(), times.end());
      std::string ratio;
      if (error.empty() && optimum) ratio = *optimum == 0 ? "1.0000" : fixed(double(size) / double(*optimum), 4);
      std::cout << name << "," << algo << "," << (error.empty() ? std::to_string(size) : "") << "," << ratio << ","
                << (timing ? fixed(times[times.size() / 2], 3) : "") << "," << error << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Largest common subgraph of two forests"};
  app.require_subcommand(1);

  SolveFlags flags;
  std::string format = "text";
  const std::vector<std::string> algos{"oracle", "bounded", "stars", "approx4", "additive"};
  const std::vector<std::string> formats{"text", "csv", "json"};

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  std::string in1, in2, cert_path;
  solve->add_option("first", in1, "First forest")->required()->check(CLI::ExistingFile);
  solve->add_option("second", in2, "Second forest")->required()->check(CLI::ExistingFile);
  solve->add_option("--algo", flags.algo, "Algorithm")->check(CLI::IsMember(algos));
  solve->add_option("--eps", flags.eps, "Accuracy for additive, as a rational");
  solve->add_option("--delta", flags.delta, "Component order bound for bounded");
  solve->add_option("--budget", flags.budget, "Edge budget for oracle, assignment budget for additive");
  solve->add_option("--certificate", cert_path, "Write the certificate here");
  solve->add_option("--format", format, "Report format")->check(CLI::IsMember(formats));

  auto* clean_cmd = app.add_subcommand("clean", "Clean a forest");
  std::string clean_in, clean_out, clean_eps = "1/2";
  std::uint64_t clean_delta = 2;
  clean_cmd->add_option("forest", clean_in, "Input forest")->required()->check(CLI::ExistingFile);
  clean_cmd->add_option("--eps", clean_eps, "Grid ratio, as a rational");
  clean_cmd->add_option("--delta", clean_delta, "Child subtree order bound");
  clean_cmd->add_option("--output", clean_out, "Write the cleaned forest here");
  clean_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember(formats));

  auto* gen = app.add_subcommand("gen", "Generate instances");
  GenSpec spec;
  std::string family, degrees, values, gen_eps = "1/2", gen_out;
  bool pair = false;
  gen->add_option("family", family, "random-forest, star-forest, path-3partition or clean-forest")
      ->required()
      ->check(CLI::IsMember({"random-forest", "star-forest", "path-3partition", "clean-forest"}));
  gen->add_option("--order", spec.order, "Number of vertices");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--max-component", spec.max_component_order, "Largest component order");
  gen->add_option("--degrees", degrees, "Explicit star leaf counts, comma separated");
  gen->add_option("--min-degree", spec.min_star_degree, "Smallest random star");
  gen->add_option("--max-degree", spec.max_star_degree, "Largest random star");
  gen->add_option("--values", values, "3-partition values, comma separated");
  gen->add_option("--eps", gen_eps, "Cleaning ratio for clean-forest");
  gen->add_option("--delta", spec.delta, "Cleaning bound for clean-forest");
  gen->add_option("--output", gen_out, "Output file, or prefix for pairs");
  gen->add_flag("--pair", pair, "Also draw a second forest from seed + 1");

  auto* verify = app.add_subcommand("verify", "Check a certificate");
  std::string v1, v2, vcert;
  verify->add_option("first", v1, "First forest")->required()->check(CLI::ExistingFile);
  verify->add_option("second", v2, "Second forest")->required()->check(CLI::ExistingFile);
  verify->add_option("certificate", vcert, "Certificate")->required()->check(CLI::ExistingFile);
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember(formats));

  auto* bench = app.add_subcommand("bench", "Run algorithms over a corpus of NAME.f1/NAME.f2 pairs");
  std::string bench_dir, bench_algos = "approx4,bounded,additive";
  std::size_t reps = 1;
  bool no_timing = false;
  bench->add_option("corpus", bench_dir, "Corpus directory")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--algo", bench_algos, "Algorithms, comma separated");
  bench->add_option("--reps", reps, "Repetitions per measurement");
  bench->add_option("--eps", flags.eps, "Accuracy for additive");
  bench->add_option("--budget", flags.budget, "Oracle edge budget");
  bench->add_flag("--no-timing", no_timing, "Leave the millis column empty");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(in1, in2, flags, cert_path, format);
    if (*clean_cmd) return cmd_clean(clean_in, clean_eps, clean_delta, clean_out, format);
    if (*gen) {
      spec.family = parse_family(family);
      spec.star_degrees = parse_numbers(degrees);
      spec.partition = parse_numbers(values);
      spec.eps = parse_rational(gen_eps);
      return cmd_gen(spec, gen_out, pair);
    }
    if (*verify) return cmd_verify(v1, v2, vcert, format);
    if (*bench) return cmd_bench(bench_dir, bench_algos, flags, reps, !no_timing);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
