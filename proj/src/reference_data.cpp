#include "reference_data.hpp"

namespace arcdiag {

const std::vector<ReferenceListing>& reference_listings() {
  static const std::vector<ReferenceListing> kListings = {
      {SequenceId::R, 1, {1, 1, 2, 2, 4, 5, 9, 12, 21, 29, 50, 71}},
      {SequenceId::S, 1, {1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283}},
      {SequenceId::Q, 1, {1, 1, 2, 3, 5, 11, 16, 43, 59, 179, 238, 801}},
      {SequenceId::P, 1, {1, 1, 2, 5, 13, 37, 112, 363, 1235, 4427, 16526, 64351}},
      {SequenceId::L, 1, {1, 1, 2, 2, 5, 5, 13, 13, 35, 35, 96, 96, 267, 267, 750, 750}},
      {SequenceId::M, 1, {1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798}},
      {SequenceId::A005773, 1, {1, 2, 5, 13, 35, 96, 267, 750}},
      {SequenceId::A, 1, {1, 1, 2, 3, 7, 12, 31, 59, 164, 339, 999, 2210}},
      {SequenceId::Bell, 0, {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570}},
  };
  return kListings;
}

const std::vector<std::vector<std::int64_t>>& reference_triangle(TriangleKind kind) {
  static const std::vector<std::vector<std::int64_t>> kP = {
      {0, 1},
      {0, 0, 1},
      {0, 1, 0, 1},
      {1, 0, 3, 0, 1},
      {0, 6, 0, 6, 0, 1},
      {5, 0, 21, 0, 10, 0, 1},
      {0, 41, 0, 55, 0, 15, 0, 1},
  };
  static const std::vector<std::vector<std::int64_t>> kQ = {
      {0, 1},
      {1, 1, 1},
      {3, 5, 2, 1},
      {12, 15, 12, 3, 1},
      {39, 70, 43, 22, 4, 1},
      {167, 266, 233, 94, 35, 5, 1},
      {660, 1295, 1020, 585, 175, 51, 6, 1},
  };
  static const std::vector<std::vector<std::int64_t>> kA = {
      {1},
      {0, 1},
      {0, 1, 1},
      {0, 1, 1, 1},
      {0, 1, 3, 2, 1},
      {0, 1, 3, 5, 2, 1},
      {0, 1, 7, 10, 9, 3, 1},
      {0, 1, 7, 19, 16, 12, 3, 1},
      {0, 1, 15, 38, 53, 34, 18, 4, 1},
      {0, 1, 15, 65, 90, 95, 46, 22, 4, 1},
  };
  switch (kind) {
    case TriangleKind::P: return kP;
    case TriangleKind::Q: return kQ;
    case TriangleKind::A: return kA;
  }
  return kP;
}

const std::vector<std::int64_t>& reference_triangle_sums(TriangleKind kind) {
  static const std::vector<std::int64_t> kP = {1, 1, 2, 5, 13, 37, 112};
  static const std::vector<std::int64_t> kQ = {1, 3, 11, 43, 179, 801, 3793};
  static const std::vector<std::int64_t> kA = {1, 1, 2, 3, 7, 12, 31, 59, 164, 339};
  switch (kind) {
    case TriangleKind::P: return kP;
    case TriangleKind::Q: return kQ;
    case TriangleKind::A: return kA;
  }
  return kP;
}

const std::vector<ReferenceRatioRow>& reference_ratio_rows() {
  static const std::vector<ReferenceRatioRow> kRows = {
      {5, {"0.2941176471", "0.2380952381", "0.2972972973", "0.2307692308"}},
      {6, {"0.2432432432", "0.2549019608", "0.1428571429", "0.1527093596"}},
      {7, {"0.1463414634", "0.1023622047", "0.1184573003", "0.0672748005"}},
      {8, {"0.1135135135", "0.1083591331", "0.0477732794", "0.0396135266"}},
      {9, {"0.0685579196", "0.0419161677", "0.0404337023", "0.0160306426"}},
      {10, {"0.0511247444", "0.0438756856", "0.0144015491", "0.0086139254"}},
      {11, {"0.0310994306", "0.0165574336", "0.0124473590", "0.0032568490"}},
      {12, {"0.0225200074", "0.0172135904", "0.0040043011", "0.0016235535"}},
      {13, {"0.0137416569", "0.0063822158", "0.0034992873", "0.0005799720"}},
      {14, {"0.0097458185", "0.0066001373", "0.0010349767", "0.0002712948"}},
      {15, {"0.0059589192", "0.0024148990", "0.0009145496", "0.0000922971"}},
      {16, {"0.0041594968", "0.0024875010", "0.0002514919", "0.0000408516"}},
      {17, {"0.0025473928", "0.0009008057", "0.0002238335", "0.0000133153"}},
      {18, {"0.0017558071", "0.0009249765", "0.0000577643", "0.0000056122"}},
      {19, {"0.0010765606", "0.0003322109", "0.0000517725", "0.0000017607"}},
      {20, {"0.0007344722", "0.0003402618", "0.0000126234", "0.0000007103"}},
  };
  return kRows;
}

}  // namespace arcdiag
