// charsum: experiment driver.
//
//   charsum verify
//   charsum scan --qmin 3 --qmax 500 --threads 8 --out scan.csv
//   charsum odd-order --order 3 --qmin 1000 --qmax 2000
//   charsum product --chars 7:2,7:2,7:2
//   charsum direction --q 101 --theta 0
//   charsum arc-compare --q 10007 --chi 5003 --alpha 0.333333333333
//   charsum nearest --q 10007 --chi 5003
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 verification failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "charsum/charsum.hpp"

namespace {

using namespace charsum;
using namespace charsum::experiments;

constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kVerify = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string config_path;
  u64 q_min = 0, q_max = 0;
  bool primes_only = false, all_moduli = false;
  std::vector<u64> orders;
  std::string y_policy;
  u64 explicit_y = 0;
  u64 conductor_bound = 0;
  unsigned smooth_exp = 0;
  unsigned threads = 0;
  u64 seed = 0;
  std::string out;
  std::string format;
  bool skip_identities = false;
  double tolerance_scale = 1.0;

  CLI::Option* o_qmin = nullptr;
  CLI::Option* o_qmax = nullptr;
  CLI::Option* o_orders = nullptr;
  CLI::Option* o_y = nullptr;
  CLI::Option* o_ypol = nullptr;
  CLI::Option* o_bound = nullptr;
  CLI::Option* o_smooth = nullptr;
  CLI::Option* o_threads = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_out = nullptr;
  CLI::Option* o_format = nullptr;

  void attach(CLI::App* app, bool scan_like) {
    app->add_option("--config", config_path, "JSON config file; flags override it")->check(CLI::ExistingFile);
    if (scan_like) {
      o_qmin = app->add_option("--qmin", q_min, "smallest modulus (>= 3)");
      o_qmax = app->add_option("--qmax", q_max, "largest modulus");
      auto* po = app->add_flag("--primes-only", primes_only, "scan prime moduli only (default)");
      auto* am = app->add_flag("--all-moduli", all_moduli, "scan every modulus in range");
      po->excludes(am);
      o_orders = app->add_option("--order", orders, "restrict to characters of these orders");
      o_threads = app->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
      app->add_flag("--skip-identities", skip_identities, "do not run the identity suite first");
    }
    o_ypol = app->add_option("--y-policy", y_policy, "distance range y: q or logq")->check(CLI::IsMember({"q", "logq"}));
    o_y = app->add_option("--y", explicit_y, "explicit distance range y (overrides --y-policy)");
    o_bound = app->add_option("--conductor-bound", conductor_bound, "largest pretender conductor");
    o_smooth = app->add_option("--smooth-exp", smooth_exp, "smoothness exponent e in S(Q^e)")->check(CLI::IsMember({2, 12}));
    o_seed = app->add_option("--seed", seed, "seed for the randomized checks");
    o_out = app->add_option("--out", out, "output path (stdout when absent)");
    o_format = app->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  [[nodiscard]] ScanConfig resolve() const {
    ScanConfig cfg = config_path.empty() ? ScanConfig{} : load_config(config_path);
    auto given = [](const CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(o_qmin)) cfg.q_min = q_min;
    if (given(o_qmax)) cfg.q_max = q_max;
    if (primes_only) cfg.primes_only = true;
    if (all_moduli) cfg.primes_only = false;
    if (given(o_orders)) cfg.orders = orders;
    if (given(o_ypol)) cfg.y_policy = y_policy == "logq" ? YPolicy::log_q : YPolicy::q;
    if (given(o_y)) {
      cfg.y_policy = YPolicy::explicit_y;
      cfg.explicit_y = explicit_y;
    }
    if (given(o_bound)) cfg.conductor_bound = conductor_bound;
    if (given(o_smooth)) cfg.smoothness_exponent = smooth_exp;
    if (given(o_threads)) cfg.threads = threads;
    if (given(o_seed)) cfg.seed = seed;
    if (given(o_out)) cfg.output_path = out;
    if (given(o_format)) cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    cfg.validate();
    return cfg;
  }
};

void run_identities(const ScanConfig& cfg, double tolerance_scale, bool quiet) {
  IdentitySuiteOptions opt;
  opt.tolerance_scale = tolerance_scale;
  opt.seed = cfg.seed;
  const auto rep = identity_suite(opt);
  if (!quiet || !rep.all_passed()) std::cerr << describe(rep);
  if (const auto* f = rep.first_failure()) {
    throw VerificationFailure("identity suite failed: " + f->name + ": " + f->first_counterexample);
  }
}

/// Primary table to cfg.output_path; extra CSV tables go to sibling files, or
/// into one JSON object when the format is JSON.
void write_outputs(const ScanConfig& cfg, const Table& primary,
                   const std::vector<std::pair<std::string, const Table*>>& extra,
                   const nlohmann::json& meta = nlohmann::json::object()) {
  if (cfg.format == OutputFormat::json) {
    nlohmann::json j = meta;
    j["rows"] = to_json(primary);
    for (const auto& [tag, t] : extra) j[tag] = to_json(*t);
    write_text(j.dump(2) + "\n", cfg.output_path);
    return;
  }
  emit(primary, cfg.output_path, OutputFormat::csv);
  for (const auto& [tag, t] : extra) {
    if (cfg.output_path.empty()) {
      std::cout << "\n# " << tag << "\n";
      emit(*t, "", OutputFormat::csv);
    } else {
      emit(*t, sibling_path(cfg.output_path, tag), OutputFormat::csv);
    }
  }
}

DirichletCharacter parse_character(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("character '" + spec + "' is not of the form q:index");
  const u64 q = std::stoull(spec.substr(0, colon));
  const u64 idx = std::stoull(spec.substr(colon + 1));
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  return DirichletCharacter::from_index(build_modulus(q), idx);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character sum experiments"};
  app.require_subcommand(1);

  CommonOptions verify_opts, scan_opts, odd_opts, product_opts, direction_opts, arc_opts, nearest_opts;

  auto* verify = app.add_subcommand("verify", "run the identity and inequality suite");
  verify_opts.attach(verify, false);
  verify->add_option("--tolerance-scale", verify_opts.tolerance_scale, "multiply every tolerance by this factor")
      ->check(CLI::NonNegativeNumber);

  auto* scan = app.add_subcommand("scan", "M(chi) and nearest pretenders over a range of moduli");
  scan_opts.attach(scan, true);

  auto* odd = app.add_subcommand("odd-order", "odd-order characters against all characters");
  odd_opts.attach(odd, true);

  std::vector<std::string> product_chars;
  auto* product = app.add_subcommand("product", "characters whose product is principal");
  product_opts.attach(product, false);
  product->add_option("--chars", product_chars, "characters as q:index")->delimiter(',')->required();

  u64 dir_q = 0, dir_x = 0;
  double dir_theta = 0.0, dir_window = constants::pi / 4;
  auto* direction = app.add_subcommand("direction", "directions of large sums over odd characters");
  direction_opts.attach(direction, false);
  direction->add_option("--q", dir_q, "prime modulus")->required();
  direction->add_option("--x", dir_x, "cutoff for the partial sums (default (q-1)/2)");
  direction->add_option("--theta", dir_theta, "target angle");
  direction->add_option("--window", dir_window, "half width of the angular window");

  u64 arc_q = 0, arc_chi = 0;
  std::vector<double> arc_alpha;
  std::optional<u64> arc_xi_bound;
  auto* arc = app.add_subcommand("arc-compare", "twisted harmonic sums against the major-arc main term");
  arc_opts.attach(arc, false);
  arc->add_option("--q", arc_q, "modulus")->required();
  arc->add_option("--chi", arc_chi, "character index")->required();
  arc->add_option("--alpha", arc_alpha, "points in [0, 1)")->delimiter(',')->required();
  arc->add_option("--xi-bound", arc_xi_bound, "pretender conductor bound (default s)");

  u64 near_q = 0, near_chi = 0;
  std::size_t near_runners = 4;
  auto* nearest = app.add_subcommand("nearest", "nearest small-conductor character");
  nearest_opts.attach(nearest, false);
  nearest->add_option("--q", near_q, "modulus")->required();
  nearest->add_option("--chi", near_chi, "character index")->required();
  nearest->add_option("--runners-up", near_runners, "runners-up to report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      const auto cfg = verify_opts.resolve();
      run_identities(cfg, verify_opts.tolerance_scale, false);
      std::cerr << "all identity checks passed\n";
    } else if (scan->parsed()) {
      const auto cfg = scan_opts.resolve();
      if (!scan_opts.skip_identities) run_identities(cfg, 1.0, true);
      const auto res = pv_scan(cfg);
      const auto rows = rows_table(res.rows);
      write_outputs(cfg, rows, {{"aggregates", &res.aggregates}, {"regression", &res.regression}});
    } else if (odd->parsed()) {
      auto cfg = odd_opts.resolve();
      if (!odd_opts.skip_identities) run_identities(cfg, 1.0, true);
      const u64 g = cfg.orders.empty() ? 3 : cfg.orders.front();
      const auto rep = odd_order_report(cfg, g);
      Table agg;
      agg.columns = {"g", "moduli", "aggregate_ratio_order", "aggregate_ratio_all", "order_below_all"};
      agg.add({g, u64{rep.moduli.size()}, rep.aggregate_ratio_order, rep.aggregate_ratio_all,
               std::string(rep.aggregate_ratio_order < rep.aggregate_ratio_all ? "true" : "false")});
      write_outputs(cfg, rep.characters, {{"summary", &rep.summary}, {"aggregate", &agg}});
    } else if (product->parsed()) {
      const auto cfg = product_opts.resolve();
      std::vector<DirichletCharacter> chis;
      for (const auto& s : product_chars) chis.push_back(parse_character(s));
      const auto rep = product_structure_report(chis, cfg);
      const auto summary = product_summary_table(rep);
      write_outputs(cfg, rep.characters, {{"summary", &summary}});
    } else if (direction->parsed()) {
      const auto cfg = direction_opts.resolve();
      const u64 x = dir_x == 0 ? (dir_q - 1) / 2 : dir_x;
      const auto rep = direction_experiment(dir_q, x, dir_theta, dir_window);
      const auto summary = direction_summary_table(rep);
      const auto hist = direction_histogram_table(rep);
      write_outputs(cfg, rep.characters, {{"summary", &summary}, {"histogram", &hist}});
    } else if (arc->parsed()) {
      const auto cfg = arc_opts.resolve();
      const auto chi = DirichletCharacter::from_index(build_modulus(arc_q), arc_chi);
      std::vector<MainTermComparison> rows;
      for (double a : arc_alpha) rows.push_back(major_arc_compare(chi, a, cfg, arc_xi_bound));
      write_outputs(cfg, comparison_table(rows), {});
    } else if (nearest->parsed()) {
      const auto cfg = nearest_opts.resolve();
      const auto chi = DirichletCharacter::from_index(build_modulus(near_q), near_chi);
      const auto np = nearest_character(chi, cfg.conductor_bound, std::max<u64>(2, cfg.y_for(near_q)), near_runners);
      write_text(to_json(np, chi).dump(2) + "\n", cfg.output_path);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << e.what() << "\n";
    return kVerify;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
