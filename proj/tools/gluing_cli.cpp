// Command-line front end: counts, tables, polynomials, series coefficients
// and verification suites.
//
// Exit codes: 0 success / all routes agree / all checks pass,
//             1 verification mismatch, 2 usage error.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gluing/gluing.hpp"

namespace {

using gluing::ExactInt;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  unsigned threads = 0;
  std::size_t oracle_cap = 16;
  bool force = false;
  std::string output = "json";
  std::string cache_dir;

  gluing::OracleOptions oracle(std::atomic<std::uint64_t>* progress) const {
    gluing::OracleOptions o;
    o.threads = threads;
    o.max_two_n = oracle_cap;
    o.force = force;
    o.progress = progress;
    return o;
  }

  bool oracle_allowed(std::size_t two_n) const {
    return two_n <= gluing::kOracleHardLimit && (force || two_n <= oracle_cap);
  }

  std::optional<std::filesystem::path> cache_path() const {
    if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
    if (const char* env = std::getenv("GLUING_CACHE_DIR"); env && *env) {
      return std::filesystem::path(env);
    }
    return std::nullopt;
  }
};

/// Reports oracle progress on stderr once per second; silent for runs that
/// finish within the first second.
class ProgressReporter {
 public:
  ProgressReporter() : thread_([this] { loop(); }) {}
  ~ProgressReporter() {
    {
      std::lock_guard lock(mutex_);
      stop_ = true;
    }
    cv_.notify_all();
    thread_.join();
  }
  std::atomic<std::uint64_t>* counter() { return &processed_; }

 private:
  void loop() {
    std::unique_lock lock(mutex_);
    while (!cv_.wait_for(lock, std::chrono::seconds(1), [this] { return stop_; })) {
      std::cerr << "oracle: " << processed_.load() << " involutions processed\n";
    }
  }

  std::atomic<std::uint64_t> processed_{0};
  std::mutex mutex_;
  std::condition_variable cv_;
  bool stop_ = false;
  std::thread thread_;
};

void emit(const RunConfig& cfg, const json& j, const std::string& csv) {
  if (cfg.output == "csv") {
    std::cout << csv;
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int n = -1;
  int k = -1;
  std::optional<int> g;
  std::string method = "all";
};

int cmd_count(const RunConfig& cfg, const CountArgs& a) {
  if (a.n < 0 || a.k < 1) throw usage_error("count: need --n >= 0 and --k >= 1");
  if (a.g && *a.g < 0) throw usage_error("count: --g must be nonnegative");
  const bool all = a.method == "all";
  const std::size_t two_n = 2 * static_cast<std::size_t>(a.n);

  std::vector<int> genera;
  if (a.g) {
    genera.push_back(*a.g);
  } else {
    for (int g = 0; g == 0 || a.n >= a.k + 2 * g - 1; ++g) genera.push_back(g);
  }

  if (a.method == "recurrence" || a.method == "series") {
    if (a.k > 3) throw usage_error("count: --method " + a.method + " needs k <= 3");
  } else if (a.method == "closed") {
    for (int g : genera) {
      if (!gluing::has_closed_form(g, a.k)) {
        throw usage_error("count: no closed form for k=" + std::to_string(a.k) +
                          ", g=" + std::to_string(g));
      }
    }
  } else if (a.method == "oracle") {
    if (!cfg.oracle_allowed(two_n)) {
      throw usage_error("count: 2n=" + std::to_string(two_n) +
                        " exceeds the oracle cap; pass --force to override");
    }
  } else if (!all) {
    throw usage_error("count: unknown method '" + a.method + "'");
  }

  const bool use_oracle = a.method == "oracle" || (all && cfg.oracle_allowed(two_n));
  const bool use_rec = a.method == "recurrence" || (all && a.k <= 3);
  const bool use_series = a.method == "series" || (all && a.k <= 3);
  if (all && !use_oracle && !use_rec) {
    throw usage_error("count: no applicable route (k >= 4 needs the oracle, "
                      "and 2n exceeds the cap)");
  }

  std::optional<gluing::GenusTable> oracle_table;
  if (use_oracle) {
    ProgressReporter progress;
    oracle_table = gluing::count_total(a.n, a.k, cfg.oracle(progress.counter()));
  }
  gluing::PolynomialStore store(cfg.cache_path());

  json records = json::array();
  std::ostringstream csv;
  csv << "n,k,g,oracle,recurrence,series,closed,agree\n";
  bool all_agree = true;
  for (int g : genera) {
    std::map<std::string, ExactInt> values;
    if (use_oracle) values["oracle"] = (*oracle_table)[g];
    if (use_rec) values["recurrence"] = gluing::eps_recurrence(g, a.n, a.k);
    if (use_series) values["series"] = gluing::eps_from_series(g, a.n, a.k, store);
    if (a.method == "closed" || (all && gluing::has_closed_form(g, a.k))) {
      values["closed"] = gluing::eps_closed(g, a.n, a.k);
    }
    bool agree = true;
    json vj = json::object();
    for (const auto& [route, v] : values) {
      vj[route] = v.str();
      agree = agree && v == values.begin()->second;
    }
    all_agree = all_agree && agree;
    records.push_back({{"g", g}, {"values", vj}, {"agree", agree}});
    csv << a.n << ',' << a.k << ',' << g;
    for (const char* route : {"oracle", "recurrence", "series", "closed"}) {
      csv << ',';
      if (auto it = values.find(route); it != values.end()) csv << it->second;
    }
    csv << ',' << (agree ? "true" : "false") << '\n';
  }
  emit(cfg, {{"n", a.n}, {"k", a.k}, {"records", records}, {"agree", all_agree}},
       csv.str());
  return all_agree ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- table

int cmd_table(const RunConfig& cfg, int k, int max_n, std::optional<int> max_g) {
  if (k < 1 || max_n < 0) throw usage_error("table: need --k >= 1, --max-n >= 0");
  int top_g = 0;
  if (max_g) {
    if (*max_g < 0) throw usage_error("table: --max-g must be nonnegative");
    top_g = *max_g;
  } else {
    while (max_n >= k + 2 * (top_g + 1) - 1) ++top_g;
  }
  const bool series_route = k <= 3;
  if (!series_route && !cfg.oracle_allowed(2 * static_cast<std::size_t>(max_n))) {
    throw usage_error("table: k >= 4 uses the oracle and 2n=" +
                      std::to_string(2 * max_n) + " exceeds the cap");
  }
  gluing::PolynomialStore store(cfg.cache_path());
  ProgressReporter progress;
  json rows = json::array();
  std::ostringstream csv;
  csv << "n";
  for (int g = 0; g <= top_g; ++g) csv << ",g" << g;
  csv << '\n';
  for (int n = 0; n <= max_n; ++n) {
    std::optional<gluing::GenusTable> oracle_table;
    if (!series_route) {
      oracle_table = gluing::count_total(n, k, cfg.oracle(progress.counter()));
    }
    json counts = json::array();
    csv << n;
    for (int g = 0; g <= top_g; ++g) {
      const ExactInt v = series_route ? gluing::eps_from_series(g, n, k, store)
                                      : (*oracle_table)[g];
      counts.push_back(v.str());
      csv << ',' << v;
    }
    csv << '\n';
    rows.push_back({{"n", n}, {"counts", counts}});
  }
  json genera = json::array();
  for (int g = 0; g <= top_g; ++g) genera.push_back(g);
  emit(cfg,
       {{"k", k}, {"route", series_route ? "series" : "oracle"},
        {"genera", genera}, {"rows", rows}},
       csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- poly

int cmd_poly(const RunConfig& cfg, const std::string& family_name, int g) {
  gluing::Family f;
  try {
    f = gluing::parse_family(family_name);
  } catch (const gluing::argument_error& e) {
    throw usage_error(e.what());
  }
  if (g < gluing::min_genus(f)) {
    throw usage_error("poly: " + family_name + " needs g >= " +
                      std::to_string(gluing::min_genus(f)));
  }
  gluing::PolynomialStore store(cfg.cache_path());
  const gluing::IntPolynomial p = store.get(f, g);
  json j = gluing::PolynomialStore::to_json(f, g, p);
  j["degree"] = p.degree();
  j["valuation"] = p.valuation();
  j["degree_bound"] = gluing::degree_bound(f, g);
  j["valuation_bound"] = gluing::valuation_bound(f, g);
  std::ostringstream csv;
  csv << "power,coefficient\n";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    csv << i << ',' << p.coeffs()[i] << '\n';
  }
  emit(cfg, j, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- series

int cmd_series(const RunConfig& cfg, std::optional<int> s, std::optional<int> m,
               int max_n) {
  if (max_n < 0) throw usage_error("series: --max-n must be nonnegative");
  if (s.has_value() == m.has_value()) {
    throw usage_error("series: give exactly one of --s or --int");
  }
  std::vector<ExactInt> coeffs;
  std::string exponent;
  if (s) {
    if (*s < 1 || *s % 2 == 0) {
      throw usage_error("series: --s must be odd and positive (use --int for "
                        "integer exponents)");
    }
    coeffs = gluing::halfint_coeffs(*s, static_cast<std::size_t>(max_n));
    exponent = "-" + std::to_string(*s) + "/2";
  } else {
    if (*m < 1) throw usage_error("series: --int must be positive");
    coeffs = gluing::int_pow_coeffs(*m, static_cast<std::size_t>(max_n));
    exponent = "-" + std::to_string(*m);
  }
  json arr = json::array();
  std::ostringstream csv;
  csv << "n,coefficient\n";
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    arr.push_back(coeffs[n].str());
    csv << n << ',' << coeffs[n] << '\n';
  }
  emit(cfg, {{"base", "1-4z"}, {"exponent", exponent}, {"coeffs", arr}}, csv.str());
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> max_n;
  std::optional<int> max_g;
  int max_edges = 4;
  int max_k = 3;
  int f_order = 30;
};

int cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  static const std::vector<std::string> known = {
      "polys", "closed", "cross", "theorem1", "lemma2", "invariants"};
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = known;
  } else if (std::find(known.begin(), known.end(), a.suite) != known.end()) {
    suites = {a.suite};
  } else {
    throw usage_error("verify: unknown suite '" + a.suite + "'");
  }
  const int cross_n = a.max_n.value_or(7);
  const int rec_n = a.max_n.value_or(5);
  const int closed_n = a.max_n.value_or(50);
  const int rec_g = a.max_g.value_or(2);
  const int inv_g = a.max_g.value_or(8);
  if (a.max_k < 1 || a.max_k > 3) throw usage_error("verify: --max-k must be 1..3");
  auto need = [&](std::size_t two_n, const std::string& suite) {
    if (!cfg.oracle_allowed(two_n)) {
      throw usage_error("verify: suite " + suite + " needs 2n=" +
                        std::to_string(two_n) + " above the oracle cap");
    }
  };
  for (const auto& s : suites) {
    if (s == "cross") need(2 * static_cast<std::size_t>(cross_n), s);
    if (s == "theorem1") need(2 * static_cast<std::size_t>(rec_n + 1), s);
    if (s == "lemma2") need(2 * static_cast<std::size_t>(a.max_edges), s);
  }

  gluing::PolynomialStore store(cfg.cache_path());
  ProgressReporter progress;
  gluing::OracleCache oracle(cfg.oracle(progress.counter()));
  json reports = json::array();
  bool pass = true;
  for (const auto& s : suites) {
    gluing::SuiteReport r;
    try {
      if (s == "polys") r = gluing::verify_polys(store);
      if (s == "closed") r = gluing::verify_closed(closed_n, store);
      if (s == "cross") r = gluing::verify_cross(cross_n, oracle, store);
      if (s == "theorem1") r = gluing::verify_face_recurrence(rec_g, rec_n, a.max_k, oracle);
      if (s == "lemma2") r = gluing::verify_multiplicity_suite(a.max_edges, a.max_k, cfg.threads);
      if (s == "invariants") {
        r = gluing::verify_invariants(inv_g, static_cast<std::size_t>(a.f_order), store);
      }
    } catch (const gluing::internal_error& e) {
      r = gluing::SuiteReport{s};
      r.fail(e.what());
    }
    pass = pass && r.pass;
    reports.push_back(r.to_json());
  }
  std::ostringstream csv;
  csv << "suite,pass,failures\n";
  for (const auto& r : reports) {
    csv << r["suite"].get<std::string>() << ',' << (r["pass"].get<bool>() ? "true" : "false")
        << ',' << r["failures"].get<std::size_t>() << '\n';
  }
  emit(cfg, {{"suites", reports}, {"pass", pass}}, csv.str());
  return pass ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of polygon gluings by genus"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  app.add_option("--oracle-cap", cfg.oracle_cap,
                 "Largest 2n the brute-force oracle accepts without --force");
  app.add_flag("--force", cfg.force, "Allow oracle runs above the cap");
  app.add_option("--output", cfg.output, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cache-dir", cfg.cache_dir,
                 "Polynomial cache directory (default: $GLUING_CACHE_DIR)");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count gluings of k polygons with n edges");
  c->add_option("--n", count.n, "Number of edges (2n polygon sides)")->required();
  c->add_option("--k", count.k, "Number of polygons")->required();
  c->add_option("--g", count.g, "Genus (default: all possibly nonzero)");
  c->add_option("--method", count.method, "oracle|recurrence|series|closed|all")
      ->check(CLI::IsMember({"oracle", "recurrence", "series", "closed", "all"}));

  int table_k = 0, table_max_n = 0;
  std::optional<int> table_max_g;
  auto* t = app.add_subcommand("table", "Grid of counts, rows n, columns g");
  t->add_option("--k", table_k)->required();
  t->add_option("--max-n", table_max_n)->required();
  t->add_option("--max-g", table_max_g);

  std::string poly_family;
  int poly_g = 0;
  auto* p = app.add_subcommand("poly", "Generating-function numerator polynomial");
  p->add_option("--family", poly_family, "P|P2|P3")->required();
  p->add_option("--g", poly_g)->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite,
                "polys|closed|cross|theorem1|lemma2|invariants|all");
  v->add_option("--max-n", verify.max_n);
  v->add_option("--max-g", verify.max_g);
  v->add_option("--max-edges", verify.max_edges);
  v->add_option("--max-k", verify.max_k);
  v->add_option("--f-order", verify.f_order);

  std::optional<int> series_s, series_int;
  int series_max_n = 0;
  auto* s = app.add_subcommand("series", "Coefficients of (1-4z)^(-s/2) or (1-4z)^(-m)");
  s->add_option("--s", series_s, "Odd numerator s of the half-integer exponent");
  s->add_option("--int", series_int, "Integer exponent m");
  s->add_option("--max-n", series_max_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*c) return cmd_count(cfg, count);
    if (*t) return cmd_table(cfg, table_k, table_max_n, table_max_g);
    if (*p) return cmd_poly(cfg, poly_family, poly_g);
    if (*v) return cmd_verify(cfg, verify);
    if (*s) return cmd_series(cfg, series_s, series_int, series_max_n);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gluing::argument_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
