#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "alcove/ascent.hpp"
#include "alcove/spin_exterior.hpp"

namespace alcove {

// The verification summary for one (n, mu).  Equality flags are computed by
// comparing the canonical sorted serializations of the two sides, each side
// produced by its own pipeline.
struct Report {
  int n = 0;
  std::string mu_label;

  size_t adm_circ_size = 0;
  size_t perm_sp_size = 0;
  size_t perm_size = 0;
  size_t z_even_size = 0;
  size_t z_size = 0;

  bool adm_circ_eq_perm_sp = false;
  bool perm_sp_eq_perm = false;
  bool adm_eq_spin_union = false;

  bool spin_union_in_z_even = false;
  bool spin_union_strictly_smaller = false;
  bool z_even_strictly_smaller = false;

  bool translation_lengths_ok = false;
  bool classifier_ok = false;

  size_t certificate_count = 0;
  bool certificates_ok = false;

  std::vector<AffineRoot> walls;
  int eigen_dim_plus = 0;
  int eigen_dim_minus = 0;
  bool involution_ok = false;

  std::map<std::string, double> timing_ms;

  bool all_ok() const;
};

Report build_report(int n, const Cocharacter& mu, int threads = 1);

nlohmann::json report_to_json(const Report& r);
std::string report_csv_header();
std::string report_csv_line(const Report& r);

}  // namespace alcove
