// Command-line driver: enumerate the admissible/permissible sets attached
// to the minuscule cocharacters of split GO_2n, verify the identities
// between them, and emit reflection-chain certificates and spin-operator
// facts as JSON.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "alcove/json_io.hpp"
#include "alcove/report.hpp"

namespace {

using namespace alcove;

Cocharacter parse_mu(const std::string& label, int n) {
  if (label == "mu1") return Cocharacter::mu1(n);
  if (label == "mu2") return Cocharacter::mu2(n);
  throw CLI::ValidationError("--mu", "unsupported cocharacter '" + label + "'");
}

bool long_mode_env() {
  const char* v = std::getenv("ALCOVE_SPIN_LONG");
  return v != nullptr && std::string(v) == "1";
}

void write_output(const nlohmann::json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file " + out);
    f << text;
  }
}

int default_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void check_budget(int n, bool long_mode, double budget_s,
                  const std::chrono::steady_clock::time_point& t0) {
  if (n < 4) return;
  if (!long_mode)
    throw CLI::ValidationError("--n", "n >= 4 requires --long (or ALCOVE_SPIN_LONG=1)");
  const double s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > budget_s)
    throw std::runtime_error("wall-clock budget exceeded (" + std::to_string(s) + "s)");
}

int run(int argc, char** argv) {
  CLI::App app{"Iwahori-Weyl combinatorics for split even orthogonal similitude groups"};
  app.require_subcommand(1);

  int n = 2;
  std::string mu_label = "mu1";
  std::string set_name;
  std::string out_path;
  std::string csv_path;
  std::string json_path;
  int threads = default_threads();
  bool long_mode = long_mode_env();
  double budget_s = 600.0;

  auto add_common = [&](CLI::App* cmd, bool with_mu) {
    cmd->add_option("--n", n, "half-rank n (2n-dimensional space)")
        ->required()
        ->check(CLI::Range(2, 5));
    if (with_mu)
      cmd->add_option("--mu", mu_label, "cocharacter label")
          ->check(CLI::IsMember({"mu1", "mu2"}));
    cmd->add_option("--threads", threads, "parallel fan-out");
    cmd->add_flag("--long", long_mode, "allow n >= 4 (long runs)");
    cmd->add_option("--budget-seconds", budget_s, "wall-clock budget for long runs");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "emit a named set as JSON");
  add_common(enumerate, true);
  enumerate->add_option("--set", set_name, "adm-circ | adm | perm-sp | perm | z | z-even")
      ->required()
      ->check(CLI::IsMember({"adm-circ", "adm", "perm-sp", "perm", "z", "z-even"}));
  enumerate->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the equality/containment suite");
  add_common(verify, true);
  verify->add_option("--json", json_path, "also write the report as JSON");

  CLI::App* ascent_cmd = app.add_subcommand("ascent", "emit all ascent certificates");
  add_common(ascent_cmd, true);
  ascent_cmd->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* spin_op = app.add_subcommand("spin-op", "emit spin-operator facts");
  add_common(spin_op, false);

  CLI::App* report_cmd = app.add_subcommand("report", "full verification report as JSON");
  add_common(report_cmd, true);
  report_cmd->add_option("--csv", csv_path, "also append a CSV summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const auto t0 = std::chrono::steady_clock::now();

  if (enumerate->parsed()) {
    check_budget(n, long_mode, budget_s, t0);
    const Cocharacter mu = parse_mu(mu_label, n);
    std::vector<IWElement> set;
    if (set_name == "adm-circ")
      set = adm_circ(n, mu, threads);
    else if (set_name == "adm")
      set = adm(n, mu, threads);
    else if (set_name == "perm-sp")
      set = enumerate_perm_sp(n, mu);
    else if (set_name == "perm")
      set = perm_set(n, mu, threads);
    else if (set_name == "z")
      set = z_set(n);
    else {
      for (const IWElement& w : z_set(n))
        if (w.finite_part().is_even()) set.push_back(w);
    }
    check_budget(n, long_mode, budget_s, t0);
    write_output(set_to_json(set), out_path);
    return 0;
  }

  if (ascent_cmd->parsed()) {
    check_budget(n, long_mode, budget_s, t0);
    const Cocharacter mu = parse_mu(mu_label, n);
    nlohmann::json arr = nlohmann::json::array();
    for (const IWElement& w : enumerate_perm_sp(n, mu)) {
      if (w.is_translation()) continue;
      arr.push_back(to_json(ascent_chain(w, mu)));
    }
    check_budget(n, long_mode, budget_s, t0);
    write_output(arr, out_path);
    return 0;
  }

  if (spin_op->parsed()) {
    const auto plus = eigenbasis(n, 1);
    const auto minus = eigenbasis(n, -1);
    bool involution_ok = true;
    const int N = 2 * n;
    for (uint32_t mask = 0; mask < (1u << N); ++mask) {
      if (__builtin_popcount(mask) != n) continue;
      SpinVector e(N);
      e.add(IndexSet(mask, N), 1);
      if (apply_a(apply_a(e)) != e) involution_ok = false;
    }
    const int dp = spin_rank(plus);
    const int dm = spin_rank(minus);
    write_output({{"n", n},
                  {"dimension", binomial(2 * n, n)},
                  {"involution_ok", involution_ok},
                  {"dim_plus", dp},
                  {"dim_minus", dm},
                  {"dims_sum_ok", dp + dm == binomial(2 * n, n)}},
                 "");
    return involution_ok && dp + dm == binomial(2 * n, n) ? 0 : 1;
  }

  // verify / report
  check_budget(n, long_mode, budget_s, t0);
  const Cocharacter mu = parse_mu(mu_label, n);
  const Report r = build_report(n, mu, threads);
  check_budget(n, long_mode, budget_s, t0);

  if (report_cmd->parsed()) {
    write_output(report_to_json(r), "");
    if (!csv_path.empty()) {
      const bool fresh = !std::ifstream(csv_path).good();
      std::ofstream f(csv_path, std::ios::app);
      if (fresh) f << report_csv_header() << "\n";
      f << report_csv_line(r) << "\n";
    }
    return r.all_ok() ? 0 : 1;
  }

  auto line = [](bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
  };
  std::cout << "verify n=" << r.n << " mu=" << r.mu_label << "\n";
  line(r.classifier_ok, "orbit classifier agrees with W-orbit enumeration");
  line(r.adm_circ_eq_perm_sp,
       "Adm_circ == Perm_sp  (sizes " + std::to_string(r.adm_circ_size) + " / " +
           std::to_string(r.perm_sp_size) + ")");
  line(r.perm_sp_eq_perm,
       "Perm_sp == Perm  (sizes " + std::to_string(r.perm_sp_size) + " / " +
           std::to_string(r.perm_size) + ")");
  line(r.adm_eq_spin_union, "Adm == Perm_sp(mu1) u Perm_sp(mu2)");
  line(r.spin_union_in_z_even && r.spin_union_strictly_smaller,
       "spin union strictly inside Z n W_even  (" + std::to_string(r.z_even_size) + ")");
  line(r.z_even_strictly_smaller,
       "Z n W_even strictly inside Z  (" + std::to_string(r.z_size) + ")");
  line(r.translation_lengths_ok, "l(t_mu') = n(n-1)/2 on both orbits");
  line(r.certificates_ok,
       "ascent certificates re-verified  (" + std::to_string(r.certificate_count) + ")");
  line(r.involution_ok && r.eigen_dim_plus + r.eigen_dim_minus == binomial(2 * n, n),
       "spin operator: a^2 = id, dim+ (" + std::to_string(r.eigen_dim_plus) + ") + dim- (" +
           std::to_string(r.eigen_dim_minus) + ") = C(2n,n)");
  std::cout << "walls of the base alcove:";
  for (const AffineRoot& w : r.walls)
    std::cout << "  x" << w.i << "-x" << w.j << "=" << w.d;
  std::cout << "\n" << (r.all_ok() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
  if (!json_path.empty()) write_output(report_to_json(r), json_path);
  return r.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
