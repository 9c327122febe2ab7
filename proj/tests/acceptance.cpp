// Runs every acceptance criterion at its tolerance and prints one line each.
// Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "forestlcs/approx4.hpp"
#include "forestlcs/certificate.hpp"
#include "forestlcs/cleaner.hpp"
#include "forestlcs/error.hpp"
#include "forestlcs/exact.hpp"
#include "forestlcs/generate.hpp"
#include "forestlcs/ptas.hpp"
#include "forestlcs/stars.hpp"
#include "support/corpus.hpp"

using namespace forestlcs;

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

// Every certificate produced anywhere in the run goes through here.
Tally certificates;

void audit(const char* who, const Forest& a, const Forest& b, const LcsResult& r, std::ostream& log) {
  ++certificates.checked;
  std::string problem;
  try {
    if (verify_certificate(a, b, r.certificate) != r.size) problem = "size mismatch";
  } catch (const Error& e) {
    problem = e.what();
  }
  if (!problem.empty()) {
    if (certificates.failed++ == 0) certificates.first_failure = std::string(who) + ": " + problem;
  }
  log << who << ' ' << r.size << '\n';
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome exchange(std::ostream& log) {
  std::size_t violations = 0, cases = 0;
  for (std::size_t a = 0; a <= 20; ++a)
    for (std::size_t a2 = a + 1; a2 <= 20; ++a2)
      for (std::size_t b = 0; b <= 20; ++b)
        for (std::size_t b2 = b + 1; b2 <= 20; ++b2) {
          ++cases;
          const std::size_t crossed = std::min(a, b2) + std::min(a2, b);
          const std::size_t sorted = std::min(a, b) + std::min(a2, b2);
          if (crossed > sorted) ++violations;
          if (lcs_stars(StarSequence({a, a2}), StarSequence({b, b2})).size != sorted) ++violations;
        }
  log << "exchange " << cases << ' ' << violations << '\n';
  return {violations == 0, std::to_string(cases) + " cases, " + std::to_string(violations) + " violations"};
}

Outcome stars_formula(std::ostream& log) {
  std::size_t bad = 0;
  for (const auto& [a, b] : corpus::star_pairs(1001, 500, 10)) {
    const auto formula = lcs_stars(star_sequence_of(a), star_sequence_of(b)).size;
    const auto exact = lcs_oracle(a, b);
    audit("oracle", a, b, exact, log);
    audit("stars", a, b, lcs_star_forests(a, b), log);
    if (formula != exact.size) ++bad;
  }
  return {bad == 0, "500 pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome quarter_ratio(std::ostream& log) {
  std::size_t bad = 0;
  double worst = 1;
  for (const auto& [a, b] : corpus::forest_pairs(1002, 500, 10, 11)) {
    const auto exact = lcs_oracle(a, b);
    const auto approx = lcs_approx4(a, b);
    audit("oracle", a, b, exact, log);
    audit("approx4", a, b, approx, log);
    if (4 * approx.size < exact.size) ++bad;
    if (exact.size > 0) worst = std::min(worst, static_cast<double>(approx.size) / static_cast<double>(exact.size));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", worst);
  return {bad == 0, "500 pairs, worst ratio " + std::string(buf) + ", " + std::to_string(bad) + " below 1/4"};
}

Outcome bounded_exact(std::ostream& log) {
  std::size_t bad = 0;
  for (const auto& [a, b] : corpus::forest_pairs(1003, 500, 10, 4)) {
    const auto exact = lcs_oracle(a, b);
    const auto bounded = lcs_bounded(a, b, 4);
    audit("bounded", a, b, bounded, log);
    if (bounded.size != exact.size) ++bad;
  }
  return {bad == 0, "500 pairs, " + std::to_string(bad) + " mismatches"};
}

struct Setting {
  Rational eps;
  std::uint64_t delta;
};
const std::vector<Setting> kSettings{{Rational(1, 2), 2}, {Rational(1, 4), 4}, {Rational(1, 5), 5}};

Outcome loss_bounds(std::ostream& log) {
  std::size_t bad = 0, runs = 0;
  for (const auto& f : corpus::cleaning_forests(1005, 200, 300))
    for (const auto& [eps, delta] : kSettings) {
      ++runs;
      const auto r = clean(f, eps, delta);
      const auto m = static_cast<std::int64_t>(f.size());
      const auto d = static_cast<std::int64_t>(delta);
      auto count = [&](int pass) { return Rational(static_cast<std::int64_t>(r.removed[pass].size())); };
      bool ok = Rational(static_cast<std::int64_t>(r.cleaned.size())) >= (1 - 4 * (eps + Rational(1, d))) * m;
      // The strict pass-0 bound cannot hold when there is nothing to remove from.
      ok = ok && (m == 0 ? r.removed[0].empty() : count(0) < Rational(2 * m, d));
      ok = ok && count(1) <= Rational(m, d) && count(2) <= 3 * eps * m && count(3) <= eps * m;
      if (!ok) ++bad;
      log << "clean " << r.removed[0].size() << ' ' << r.removed[1].size() << ' ' << r.removed[2].size() << ' '
          << r.removed[3].size() << '\n';
    }
  return {bad == 0, std::to_string(runs) + " runs, " + std::to_string(bad) + " violations"};
}

Outcome cleaned_is_clean(std::ostream& log) {
  std::size_t bad = 0, runs = 0;
  for (const auto& f : corpus::cleaning_forests(1005, 200, 300))
    for (const auto& [eps, delta] : kSettings) {
      ++runs;
      const auto r = clean(f, eps, delta);
      const auto check = is_clean(r.cleaned, r.roots, eps, delta);
      if (!check) ++bad;
      log << "is_clean " << check.condition << '\n';
    }
  return {bad == 0, std::to_string(runs) + " runs, " + std::to_string(bad) + " unclean"};
}

Outcome catalog_bounds(std::ostream& log) {
  std::size_t bad = 0, catalogs = 0;
  std::size_t largest_q = 0;
  Rng rng(1007);
  for (std::size_t n : {1000u, 10000u, 100000u})
    for (const auto& [eps, delta] : kSettings) {
      const Forest a = random_forest(rng, n, 0);
      const Forest b = random_star_forest(rng, n, 1, n / 10);
      const auto ca = clean(a, eps, delta);
      const auto cb = clean(b, eps, delta);
      const auto cat = build_catalog(ca.cleaned, ca.roots, cb.cleaned, cb.roots, eps, delta);
      ++catalogs;
      largest_q = std::max(largest_q, cat.q());
      bool ok = static_cast<long double>(cat.q()) <= cat.constants.c1 * std::log(static_cast<long double>(n));
      ok = ok && static_cast<long double>(cat.constants.observed_c2) <= cat.constants.c2;
      // Check the ratio property directly at the observed window, which is at most c2.
      const std::size_t w = cat.constants.observed_c2;
      for (std::size_t i = 0; ok && i < cat.q(); ++i)
        for (std::size_t j = i + w; j < cat.q(); ++j) {
          const auto di = static_cast<std::int64_t>(cat.entries[i].shape.root_degree);
          const auto dj = static_cast<std::int64_t>(cat.entries[j].shape.root_degree);
          if (Rational(di) > eps * dj) ok = false;
        }
      if (!ok) ++bad;
      log << "catalog " << n << ' ' << cat.q() << ' ' << w << '\n';
    }
  return {bad == 0, std::to_string(catalogs) + " catalogs up to n = 100000, max q " + std::to_string(largest_q) + ", " +
                        std::to_string(bad) + " violations"};
}

Outcome additive_guarantee(std::ostream& log) {
  const Rational eps(9, 10);
  std::size_t bad = 0, untruncated = 0, exact_subset = 0, exact_bad = 0;
  for (const auto& [a, b] : corpus::forest_pairs(1008, 200, 10, 11)) {
    const auto r = lcs_additive(a, b, eps);
    audit("additive", a, b, LcsResult{r.size, r.certificate}, log);
    const auto exact = lcs_oracle(a, b);
    if (!r.heuristic) {
      ++untruncated;
      const auto n = static_cast<std::int64_t>(std::max(a.order(), b.order()));
      if (static_cast<std::int64_t>(r.size) < static_cast<std::int64_t>(exact.size) - ceil_of(eps * n)) ++bad;
    }
    // Step-one exactness of the pipeline on the cleaned inputs.
    const Rational inner = r.diagnostics.inner_eps;
    const std::uint64_t delta = r.diagnostics.delta;
    const auto c1 = clean(a, inner, delta);
    const auto c2 = clean(b, inner, delta);
    const auto s = solve_clean(c1.cleaned, c1.roots, c2.cleaned, c2.roots, inner, delta);
    audit("pipeline", c1.cleaned, c2.cleaned, LcsResult{s.size, s.certificate}, log);
    if (s.diagnostics.max_profile_step == 1 && s.diagnostics.max_assignment_step == 1 && !s.diagnostics.truncated &&
        !s.diagnostics.fallback) {
      ++exact_subset;
      if (s.size != lcs_oracle(c1.cleaned, c2.cleaned).size) ++exact_bad;
    }
  }
  return {bad == 0 && exact_bad == 0 && untruncated > 0,
          std::to_string(untruncated) + " untruncated pairs, " + std::to_string(bad) + " below the bound; " +
              std::to_string(exact_subset) + " step-one pairs, " + std::to_string(exact_bad) + " inexact"};
}

struct Criterion {
  int id;
  const char* name;
  double seconds;
  std::function<Outcome(std::ostream&)> run;
};

const std::vector<Criterion> kCriteria{
    {1, "exchange inequality", 1, exchange},
    {2, "star formula vs oracle", 30, stars_formula},
    {3, "approx4 ratio", 60, quarter_ratio},
    {4, "bounded DP exactness", 60, bounded_exact},
    {5, "cleaning loss bounds", 30, loss_bounds},
    {6, "cleaned forests are clean", 30, cleaned_is_clean},
    {7, "catalog bounds", 60, catalog_bounds},
    {8, "additive guarantee", 600, additive_guarantee},
};

struct Run {
  std::vector<Outcome> outcomes;
  std::vector<double> seconds;
  std::vector<std::string> transcripts;
};

Run run_all() {
  Run run;
  for (const auto& c : kCriteria) {
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(log);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    run.seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    run.outcomes.push_back(o);
    run.transcripts.push_back(log.str());
  }
  return run;
}

void report(int id, const char* name, bool pass, const std::string& detail, double seconds, double limit) {
  std::printf("criterion %2d %-28s %s  %s", id, name, pass ? "PASS" : "FAIL", detail.c_str());
  if (limit > 0) std::printf(" [%.2fs, limit %.0fs]", seconds, limit);
  std::printf("\n");
  std::fflush(stdout);
}

}  // namespace

int main() {
  bool all = true;
  const Run first = run_all();
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    const auto& c = kCriteria[i];
    const bool in_time = first.seconds[i] < c.seconds;
    const bool pass = first.outcomes[i].pass && in_time;
    all = all && pass;
    report(c.id, c.name, pass, first.outcomes[i].detail + (in_time ? "" : " (too slow)"), first.seconds[i], c.seconds);
  }

  const bool sound = certificates.failed == 0 && certificates.checked > 0;
  all = all && sound;
  report(9, "certificate soundness", sound,
         std::to_string(certificates.checked) + " certificates, " + std::to_string(certificates.failed) + " rejected" +
             (certificates.first_failure.empty() ? "" : " (" + certificates.first_failure + ")"),
         0, 0);

  const Run second = run_all();
  std::size_t differing = 0;
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    bytes += first.transcripts[i].size();
    if (first.transcripts[i] != second.transcripts[i] || first.outcomes[i].detail != second.outcomes[i].detail)
      ++differing;
  }
  const bool stable = differing == 0;
  all = all && stable;
  report(10, "determinism", stable,
         "two runs, " + std::to_string(bytes) + " transcript bytes, " + std::to_string(differing) + " criteria differ", 0,
         0);

  return all ? 0 : 1;
}
