#pragma once

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "swsplit/core.hpp"

namespace swsplit {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `x,b,h,q,eta` (plus `b_eff` when requested), one row per cell, 17
/// significant digits. `b` and `eta` use the pristine bottom; `b_eff` is the
/// bottom the solver used.
void write_snapshot_csv(const Field& field, const std::filesystem::path& path, bool include_b_eff = false);

struct CsvSnapshot {
  std::vector<double> x, b, h, q, eta, b_eff;
};

CsvSnapshot read_snapshot_csv(const std::filesystem::path& path);

}  // namespace swsplit
