#pragma once

#include <vector>

#include "alcove/iw_element.hpp"

namespace alcove {

// omega_i = ((-1)^(i), 0^(2n-i)), the rows of the standard extended alcove.
Vec omega_row(int i, int two_n);

// A sequence v_0,...,v_{2n-1} of integer 2n-vectors with, writing
// v_2n := v_0 - (1,...,1):
//   (A1) v_0 >= v_1 >= ... >= v_2n  coordinatewise;
//   (A2) sum v_i = sum v_{i-1} - 1  for 1 <= i <= 2n;
//   (A3) v_i(j) + v_{2n-i}(j*) = d  for all 1 <= i,j <= 2n, for some d.
// These are alternate coordinates for Iwahori-Weyl elements: the group acts
// simply transitively on them, with the standard extended alcove (d = -1)
// as base point.
class ExtendedAlcove {
 public:
  explicit ExtendedAlcove(std::vector<Vec> rows);

  static ExtendedAlcove standard(int n);

  int n() const { return static_cast<int>(rows_.size()) / 2; }
  // row(i) for 0 <= i <= 2n; row(2n) is v_0 - (1,...,1).
  Vec row(int i) const;
  const std::vector<Vec>& rows() const { return rows_; }
  int duality_constant() const { return d_; }

  bool operator==(const ExtendedAlcove&) const = default;

 private:
  std::vector<Vec> rows_;  // v_0 .. v_{2n-1}
  int d_;
};

// v_i = w . omega_i.
ExtendedAlcove to_extended_alcove(const IWElement& w);
IWElement from_extended_alcove(const ExtendedAlcove& a);

}  // namespace alcove
