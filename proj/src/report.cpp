#include "alcove/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "alcove/json_io.hpp"

namespace alcove {

namespace {

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool same_serialization(const std::vector<IWElement>& a, const std::vector<IWElement>& b) {
  return set_to_json(a).dump() == set_to_json(b).dump();
}

bool subset_of(const std::vector<IWElement>& a, const std::vector<IWElement>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool Report::all_ok() const {
  return adm_circ_eq_perm_sp && perm_sp_eq_perm && adm_eq_spin_union &&
         spin_union_in_z_even && spin_union_strictly_smaller && z_even_strictly_smaller &&
         translation_lengths_ok && classifier_ok && certificates_ok && involution_ok &&
         eigen_dim_plus + eigen_dim_minus == binomial(2 * n, n);
}

Report build_report(int n, const Cocharacter& mu, int threads) {
  Report r;
  r.n = n;
  r.mu_label = mu == Cocharacter::mu1(n) ? "mu1" : "mu2";
  const Cocharacter other =
      act_on_vector(SignedPermutation::transposition_tau(n), mu);

  auto timed = [&](const char* name, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = fn();
    r.timing_ms[name] = ms_since(t0);
    return result;
  };

  r.classifier_ok = true;
  try {
    validate_mu_classifier(n);
  } catch (const std::logic_error&) {
    r.classifier_ok = false;
  }

  const auto adm_set = timed("adm_circ", [&] { return adm_circ(n, mu, threads); });
  const auto sp_set = timed("perm_sp", [&] { return enumerate_perm_sp(n, mu); });
  const auto sp_other = timed("perm_sp_other", [&] { return enumerate_perm_sp(n, other); });
  const auto perm = timed("perm", [&] { return perm_set(n, mu, threads); });
  const auto z = timed("z", [&] { return z_set(n); });

  std::vector<IWElement> z_even;
  for (const IWElement& w : z)
    if (w.finite_part().is_even()) z_even.push_back(w);

  std::vector<IWElement> spin_union;
  std::merge(sp_set.begin(), sp_set.end(), sp_other.begin(), sp_other.end(),
             std::back_inserter(spin_union));

  r.adm_circ_size = adm_set.size();
  r.perm_sp_size = sp_set.size();
  r.perm_size = perm.size();
  r.z_even_size = z_even.size();
  r.z_size = z.size();

  r.adm_circ_eq_perm_sp = same_serialization(adm_set, sp_set);
  r.perm_sp_eq_perm = same_serialization(sp_set, perm);
  const auto adm_union = timed("adm", [&] { return adm(n, mu, threads); });
  r.adm_eq_spin_union = same_serialization(adm_union, spin_union);

  r.spin_union_in_z_even = subset_of(spin_union, z_even);
  r.spin_union_strictly_smaller = r.spin_union_in_z_even && spin_union.size() < z_even.size();
  r.z_even_strictly_smaller = subset_of(z_even, z) && z_even.size() < z.size();

  r.translation_lengths_ok = true;
  for (const Cocharacter& m : orbit(mu, n))
    if (length(IWElement::translation(m)) != binom2(n)) r.translation_lengths_ok = false;
  for (const Cocharacter& m : orbit(other, n))
    if (length(IWElement::translation(m)) != binom2(n)) r.translation_lengths_ok = false;

  timed("certificates", [&] {
    r.certificates_ok = true;
    for (const IWElement& w : sp_set) {
      if (w.is_translation()) continue;
      ++r.certificate_count;
      try {
        if (!certificate_valid(ascent_chain(w, mu), mu)) r.certificates_ok = false;
      } catch (const std::exception&) {
        r.certificates_ok = false;
      }
    }
    return 0;
  });

  r.walls = BaseAlcove::get(n).walls();

  timed("spin_operator", [&] {
    const auto plus = eigenbasis(n, 1);
    const auto minus = eigenbasis(n, -1);
    r.eigen_dim_plus = spin_rank(plus);
    r.eigen_dim_minus = spin_rank(minus);
    r.involution_ok = true;
    const int N = 2 * n;
    for (uint32_t mask = 0; mask < (1u << N); ++mask) {
      if (__builtin_popcount(mask) != n) continue;
      SpinVector e(N);
      e.add(IndexSet(mask, N), 1);
      if (apply_a(apply_a(e)) != e) r.involution_ok = false;
    }
    return 0;
  });

  return r;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json walls = nlohmann::json::array();
  for (const AffineRoot& w : r.walls) walls.push_back(to_json(w));
  return {
      {"n", r.n},
      {"mu", r.mu_label},
      {"sizes",
       {{"adm_circ", r.adm_circ_size},
        {"perm_sp", r.perm_sp_size},
        {"perm", r.perm_size},
        {"z_even", r.z_even_size},
        {"z", r.z_size}}},
      {"equal",
       {{"adm_circ_eq_perm_sp", r.adm_circ_eq_perm_sp},
        {"perm_sp_eq_perm", r.perm_sp_eq_perm},
        {"adm_eq_spin_union", r.adm_eq_spin_union}}},
      {"strict",
       {{"spin_union_in_z_even", r.spin_union_in_z_even},
        {"spin_union_strictly_smaller", r.spin_union_strictly_smaller},
        {"z_even_strictly_smaller", r.z_even_strictly_smaller}}},
      {"translation_lengths_ok", r.translation_lengths_ok},
      {"classifier_ok", r.classifier_ok},
      {"certificates", {{"count", r.certificate_count}, {"all_valid", r.certificates_ok}}},
      {"walls", std::move(walls)},
      {"spin_operator",
       {{"dim_plus", r.eigen_dim_plus},
        {"dim_minus", r.eigen_dim_minus},
        {"involution_ok", r.involution_ok}}},
      {"timing_ms", r.timing_ms},
      {"all_ok", r.all_ok()},
  };
}

std::string report_csv_header() {
  return "n,mu,adm_circ,perm_sp,perm,z_even,z,adm_circ_eq_perm_sp,perm_sp_eq_perm,"
         "adm_eq_spin_union,strict_spin_union,strict_z_even,certificates,"
         "dim_plus,dim_minus,all_ok";
}

std::string report_csv_line(const Report& r) {
  std::ostringstream os;
  os << r.n << ',' << r.mu_label << ',' << r.adm_circ_size << ',' << r.perm_sp_size << ','
     << r.perm_size << ',' << r.z_even_size << ',' << r.z_size << ','
     << r.adm_circ_eq_perm_sp << ',' << r.perm_sp_eq_perm << ',' << r.adm_eq_spin_union
     << ',' << r.spin_union_strictly_smaller << ',' << r.z_even_strictly_smaller << ','
     << r.certificate_count << ',' << r.eigen_dim_plus << ',' << r.eigen_dim_minus << ','
     << r.all_ok();
  return os.str();
}

}  // namespace alcove
