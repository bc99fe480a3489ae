#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcdiag {

/// An arc between two 1-based nodes. Validity (left + 2 <= right, bounds) is
/// a property of the owning diagram and is checked by validate().
struct Arc {
  int left = 0;
  int right = 0;

  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// The four families of arc diagrams:
///   NcMatching  noncrossing matchings (3412-avoiding involutions)
///   Matching    matchings, crossings allowed (involutions)
///   Motzkin     noncrossing partitions drawn as chains
///   Bell        arbitrary partitions drawn as chains
/// In every family no block contains two consecutive integers.
enum class Family { NcMatching, Matching, Motzkin, Bell };

inline constexpr Family kAllFamilies[] = {Family::NcMatching, Family::Matching,
                                          Family::Motzkin, Family::Bell};

std::string_view family_name(Family family);
Family parse_family(std::string_view name);

/// n nodes on a line plus a set of arcs kept in (left, right) order without
/// duplicates. Construction does not validate; see validate().
class ArcDiagram {
 public:
  ArcDiagram() = default;
  explicit ArcDiagram(int node_count, std::vector<Arc> arcs = {});

  int node_count() const noexcept { return node_count_; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  // Replaces the contents with arcs that are already in canonical order.
  // Reuses storage; used by the enumerator's hot loop.
  void assign_sorted(int node_count, std::span<const Arc> arcs);

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
  friend auto operator<=>(const ArcDiagram&, const ArcDiagram&) = default;

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
};

using Block = std::vector<int>;

/// True iff every arc joins non-adjacent nodes inside [1, n] and each node is
/// the left end of at most one arc and the right end of at most one arc.
bool validate(const ArcDiagram& diagram);

bool has_crossing(const ArcDiagram& diagram);
bool is_matching(const ArcDiagram& diagram);
bool in_family(const ArcDiagram& diagram, Family family);

ArcDiagram reverse_complement(const ArcDiagram& diagram);

/// Self-complementarity of the underlying partition (compared block by block).
bool is_symmetric(const ArcDiagram& diagram);

/// Arc-connected components as sorted blocks, ordered by smallest element.
std::vector<Block> components(const ArcDiagram& diagram);
int component_count(const ArcDiagram& diagram);
int isolated_count(const ArcDiagram& diagram);

/// Builds the chain diagram of a set partition of [n] (blocks 1-based).
ArcDiagram diagram_from_blocks(int node_count, const std::vector<Block>& blocks);

/// Text encoding `n;l1-r1,l2-r2,...`, e.g. `5;1-3,3-5` or `5;`.
std::string format_diagram(const ArcDiagram& diagram);
ArcDiagram parse_diagram(std::string_view text);

/// `{1,3,6,8}|{2}|{4,7}|{5}`
std::string format_blocks(const std::vector<Block>& blocks);

}  // namespace arcdiag
