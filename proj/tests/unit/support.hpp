#pragma once

#include <vector>

#include "steinberg_rsk/correspondence.hpp"

namespace test {

inline srsk::RowStandardTableau rst(std::vector<srsk::Partition> chain) {
  return srsk::RowStandardTableau(std::move(chain));
}

inline srsk::OracleConfig config() {
  srsk::OracleConfig c;
  return c;
}

// Calibrated once per test binary; calibration itself is covered in test_rsk.
inline const srsk::Correspondence& corr() {
  static const srsk::Correspondence c = [] {
    srsk::Rng rng(11);
    return srsk::Correspondence(srsk::VariantRsk::calibrated(4, config(), rng));
  }();
  return c;
}

inline srsk::PartialPermutation pp(int p, int q, std::vector<srsk::PartialPermutation::Cell> ones = {}) {
  return srsk::PartialPermutation(p, q, std::move(ones));
}

}  // namespace test
