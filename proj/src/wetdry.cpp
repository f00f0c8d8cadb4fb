#include "swsplit/wetdry.hpp"

namespace swsplit {

Field redefine_bottom(const Field& field, double dry_eps) {
  Field out = field;
  const auto& h = field.states;
  const auto& b0 = field.bathymetry.b_pristine;
  auto& b = out.bathymetry.b;
  b = b0;
  for (std::size_t j = 1; j < field.size(); ++j) {
    const bool dry = is_dry(h[j], dry_eps);
    const bool dry_prev = is_dry(h[j - 1], dry_eps);
    const double eta = h[j].h + b0[j];
    const double eta_prev = h[j - 1].h + b0[j - 1];
    if (dry && !dry_prev && eta_prev < eta) {
      b[j] = b0[j - 1] + h[j - 1].h;
    } else if (!dry && dry_prev && eta_prev > eta) {
      b[j] = b0[j - 1] - h[j].h;
    }
  }
  return out;
}

Field zero_front_discharge(const Field& field, double dry_eps) {
  Field out = field;
  const auto& s = field.states;
  const std::size_t n = field.size();
  for (std::size_t j = 0; j < n; ++j) {
    double& q = out.states[j].q;
    if (is_dry(s[j], dry_eps)) {
      q = 0.0;
    } else if (q < 0.0 && j > 0 && is_dry(s[j - 1], dry_eps)) {
      q = 0.0;
    } else if (q > 0.0 && j + 1 < n && is_dry(s[j + 1], dry_eps)) {
      q = 0.0;
    }
  }
  return out;
}

}  // namespace swsplit
