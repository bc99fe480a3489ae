#pragma once

#include "recurrences.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace arcdiag {

/// Published terms of one sequence, starting at `first_index` under this
/// library's offsets.
struct ReferenceListing {
  SequenceId id;
  int first_index;
  std::vector<std::int64_t> values;
};

/// Printed sequence listings, including the longer L and A005773 runs.
const std::vector<ReferenceListing>& reference_listings();

/// Printed triangle rows; row i holds the values for k = 0, 1, .. (P, A)
/// or k = 0, 2, .. (Q), followed by nothing else. Row labels start at 1.
const std::vector<std::vector<std::int64_t>>& reference_triangle(TriangleKind kind);
const std::vector<std::int64_t>& reference_triangle_sums(TriangleKind kind);

/// Printed ratio table, rows labelled 5..20, columns R/S, L/M, Q/P, A/B.
struct ReferenceRatioRow {
  int n;
  std::string_view cells[4];
};
const std::vector<ReferenceRatioRow>& reference_ratio_rows();

}  // namespace arcdiag
