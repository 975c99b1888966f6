#pragma once

#include <cstdint>
#include <vector>

#include "exalg/curves.hpp"

namespace exalg {

struct ZetaData {
  int64_t genus = 0;
  std::vector<int64_t> lpoly;  // 1 + c_1 T + ... + c_{2g} T^{2g}
  std::vector<uint64_t> affine_counts;      // m = 1..M
  std::vector<uint64_t> infinity_counts;    // m = 1..M
  std::vector<uint64_t> projective_counts;  // sums of the two
};

// Fit the zeta numerator to exact projective counts over F_{q^m}, m = 1..M.
// The elementary symmetric functions of the inverse roots are recovered from
// the power sums q^m + 1 - N_m; the fit must be integral, satisfy the
// functional equation c_j = q^{j-g} c_{2g-j}, and place every inverse root on
// the circle |w| = sqrt(q) within relative tolerance 1e-6, else this throws.
ZetaData zeta_from_counts(uint64_t q, const std::vector<uint64_t>& affine,
                          const std::vector<uint64_t>& infinity);

// Count table of length 2 * genus_bound(C) + 2 via affine_count, then fit.
ZetaData curve_zeta(const CurveModel& C);

}  // namespace exalg
