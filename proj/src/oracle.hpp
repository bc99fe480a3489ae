#pragma once

#include "bigcount.hpp"
#include "diagram.hpp"

#include <functional>
#include <map>
#include <vector>

namespace arcdiag {

enum class Statistic { None, IsolatedNodes, ComponentsMinusOne };

int statistic_value(const ArcDiagram& diagram, Statistic stat);

/// Largest node count the exhaustive enumerator accepts, per family kind.
struct EnumerationCaps {
  int crossing = 16;     // Matching, Bell
  int noncrossing = 20;  // NcMatching, Motzkin

  int cap_for(Family family) const noexcept;
};

/// Called once per diagram; return false to stop the enumeration early.
using DiagramVisitor = std::function<bool(const ArcDiagram&)>;

/// Generates every diagram of `family` on `n` nodes exactly once.
///
/// Nodes are decided left to right. At node i the choices are tried in this
/// order, which fixes the output order:
///   1. i is isolated / starts a new block;
///   2. (matching families) i opens an arc whose right end comes later;
///   3. i closes an arc or extends a block, candidates taken by increasing
///      left end (Motzkin: by stack position, bottom first).
/// Noncrossing families only ever close the innermost open arc or extend a
/// block still visible on the block stack. With `symmetric_only`, diagrams
/// failing is_symmetric() are skipped.
///
/// Throws Error(ResourceLimit) if n exceeds the family's cap.
void enumerate(Family family, int n, bool symmetric_only, const DiagramVisitor& visit,
               const EnumerationCaps& caps = {});

std::vector<ArcDiagram> enumerate_all(Family family, int n, bool symmetric_only,
                                      const EnumerationCaps& caps = {});

BigCount count(Family family, int n, bool symmetric_only,
               const EnumerationCaps& caps = {});

/// Histogram of `stat` over the enumerated diagrams; missing keys are zero.
std::map<int, BigCount> count_by_statistic(Family family, int n, bool symmetric_only,
                                           Statistic stat,
                                           const EnumerationCaps& caps = {});

}  // namespace arcdiag
