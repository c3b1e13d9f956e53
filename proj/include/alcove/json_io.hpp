#pragma once

#include <json.hpp>

#include "alcove/ascent.hpp"

namespace alcove {

// Wire format: elements are {"t": [...], "perm": [...]} with 1-indexed
// one-line notation; sets are sorted arrays; object keys serialize sorted.

inline nlohmann::json to_json(const IWElement& w) {
  return {{"t", w.translation_part().r()}, {"perm", w.finite_part().images()}};
}

inline nlohmann::json to_json(const AffineRoot& a) {
  return {{"i", a.i}, {"j", a.j}, {"d", a.d}};
}

inline nlohmann::json set_to_json(const std::vector<IWElement>& set) {
  nlohmann::json arr = nlohmann::json::array();
  for (const IWElement& w : set) arr.push_back(to_json(w));
  return arr;
}

inline nlohmann::json to_json(const AscentCertificate& cert) {
  nlohmann::json chain = nlohmann::json::array();
  for (const AscentStep& s : cert.chain)
    chain.push_back({{"alpha", to_json(s.alpha)}, {"element", to_json(s.after)}});
  return {{"start", to_json(cert.start)},
          {"target", cert.target.r()},
          {"chain", std::move(chain)}};
}

}  // namespace alcove
