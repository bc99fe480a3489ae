#include "diagram.hpp"

#include "errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace arcdiag {

namespace {

void require_valid(const ArcDiagram& diagram) {
  if (!validate(diagram)) {
    throw Error(ErrorCode::InvalidDiagram,
                "invalid arc diagram: " + format_diagram(diagram));
  }
}

// For each node, the first and last element of its chain. Assumes validity.
struct ChainEnds {
  std::vector<int> first;
  std::vector<int> last;
};

ChainEnds chain_ends(const ArcDiagram& diagram) {
  const int n = diagram.node_count();
  std::vector<int> next(n + 1, 0);
  std::vector<int> prev(n + 1, 0);
  for (const Arc& arc : diagram.arcs()) {
    next[arc.left] = arc.right;
    prev[arc.right] = arc.left;
  }
  ChainEnds ends{std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
  for (int start = 1; start <= n; ++start) {
    if (prev[start] != 0) continue;
    int end = start;
    while (next[end] != 0) end = next[end];
    for (int node = start; node != 0; node = next[node]) {
      ends.first[node] = start;
      ends.last[node] = end;
    }
  }
  return ends;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::Parse, "malformed diagram '" + std::string(whole) +
                                      "': bad integer '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::NcMatching: return "nc-matching";
    case Family::Matching: return "matching";
    case Family::Motzkin: return "motzkin";
    case Family::Bell: return "bell";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family family : kAllFamilies) {
    if (family_name(family) == name) return family;
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown family '" + std::string(name) +
                  "' (expected nc-matching, matching, motzkin or bell)");
}

ArcDiagram::ArcDiagram(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  if (node_count < 0) {
    throw Error(ErrorCode::InvalidArgument, "node count must be nonnegative");
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

void ArcDiagram::assign_sorted(int node_count, std::span<const Arc> arcs) {
  node_count_ = node_count;
  arcs_.assign(arcs.begin(), arcs.end());
}

bool validate(const ArcDiagram& diagram) {
  const int n = diagram.node_count();
  if (n < 0) return false;
  std::vector<char> is_left(n + 1, 0);
  std::vector<char> is_right(n + 1, 0);
  for (const Arc& arc : diagram.arcs()) {
    if (arc.left < 1 || arc.right > n || arc.left + 2 > arc.right) return false;
    if (is_left[arc.left] || is_right[arc.right]) return false;
    is_left[arc.left] = 1;
    is_right[arc.right] = 1;
  }
  return true;
}

bool has_crossing(const ArcDiagram& diagram) {
  require_valid(diagram);
  const auto arcs = diagram.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      // arcs are sorted, so arcs[i].left <= arcs[j].left
      if (arcs[i].left < arcs[j].left && arcs[j].left < arcs[i].right &&
          arcs[i].right < arcs[j].right) {
        return true;
      }
    }
  }
  return false;
}

bool is_matching(const ArcDiagram& diagram) {
  require_valid(diagram);
  std::vector<char> used(diagram.node_count() + 1, 0);
  for (const Arc& arc : diagram.arcs()) {
    if (used[arc.left] || used[arc.right]) return false;
    used[arc.left] = used[arc.right] = 1;
  }
  return true;
}

bool in_family(const ArcDiagram& diagram, Family family) {
  require_valid(diagram);
  switch (family) {
    case Family::NcMatching: return is_matching(diagram) && !has_crossing(diagram);
    case Family::Matching: return is_matching(diagram);
    case Family::Motzkin: return !has_crossing(diagram);
    case Family::Bell: return true;
  }
  return false;
}

ArcDiagram reverse_complement(const ArcDiagram& diagram) {
  require_valid(diagram);
  const int n = diagram.node_count();
  std::vector<Arc> mirrored;
  mirrored.reserve(diagram.arc_count());
  for (const Arc& arc : diagram.arcs()) {
    mirrored.push_back({n + 1 - arc.right, n + 1 - arc.left});
  }
  return ArcDiagram(n, std::move(mirrored));
}

bool is_symmetric(const ArcDiagram& diagram) {
  require_valid(diagram);
  const int n = diagram.node_count();
  const ChainEnds ends = chain_ends(diagram);
  // Label every node by the smallest element of its block, in the partition
  // and in its complement; the partitions agree iff the labels do.
  for (int node = 1; node <= n; ++node) {
    const int complement_min = n + 1 - ends.last[n + 1 - node];
    if (ends.first[node] != complement_min) return false;
  }
  return true;
}

std::vector<Block> components(const ArcDiagram& diagram) {
  require_valid(diagram);
  const int n = diagram.node_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Arc& arc : diagram.arcs()) {
    const int a = find_root(parent, arc.left);
    const int b = find_root(parent, arc.right);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Block> blocks;
  std::vector<int> block_of_root(n + 1, -1);
  for (int node = 1; node <= n; ++node) {
    const int root = find_root(parent, node);
    if (block_of_root[root] < 0) {
      block_of_root[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(node);
  }
  return blocks;
}

int component_count(const ArcDiagram& diagram) {
  return static_cast<int>(components(diagram).size());
}

int isolated_count(const ArcDiagram& diagram) {
  require_valid(diagram);
  std::vector<char> touched(diagram.node_count() + 1, 0);
  for (const Arc& arc : diagram.arcs()) touched[arc.left] = touched[arc.right] = 1;
  return static_cast<int>(std::count(touched.begin() + 1, touched.end(), 0));
}

ArcDiagram diagram_from_blocks(int node_count, const std::vector<Block>& blocks) {
  if (node_count < 0) throw Error(ErrorCode::InvalidArgument, "node count must be nonnegative");
  std::vector<char> used(static_cast<std::size_t>(node_count) + 1, 0);
  std::vector<Arc> arcs;
  for (Block block : blocks) {
    std::sort(block.begin(), block.end());
    for (int node : block) {
      if (node < 1 || node > node_count || used[node]) {
        throw Error(ErrorCode::InvalidDiagram, "blocks do not form a partition of [1, " +
                                                   std::to_string(node_count) + "]");
      }
      used[node] = 1;
    }
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (block[i] == block[i - 1] + 1) {
        throw Error(ErrorCode::InvalidDiagram, "block contains consecutive nodes " +
                                                   std::to_string(block[i - 1]) + " and " +
                                                   std::to_string(block[i]));
      }
      arcs.push_back({block[i - 1], block[i]});
    }
  }
  if (std::count(used.begin() + 1, used.end(), 1) != node_count) {
    throw Error(ErrorCode::InvalidDiagram, "blocks do not cover [1, " +
                                               std::to_string(node_count) + "]");
  }
  return ArcDiagram(node_count, std::move(arcs));
}

std::string format_diagram(const ArcDiagram& diagram) {
  std::string out = std::to_string(diagram.node_count()) + ";";
  bool first = true;
  for (const Arc& arc : diagram.arcs()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(arc.left) + "-" + std::to_string(arc.right);
  }
  return out;
}

ArcDiagram parse_diagram(std::string_view text) {
  const std::string_view whole = trim(text);
  const auto semi = whole.find(';');
  if (semi == std::string_view::npos) {
    throw Error(ErrorCode::Parse,
                "malformed diagram '" + std::string(whole) + "': expected 'n;arcs'");
  }
  const int n = parse_int(whole.substr(0, semi), whole);
  if (n < 0) {
    throw Error(ErrorCode::Parse, "malformed diagram '" + std::string(whole) +
                                      "': negative node count");
  }
  std::vector<Arc> arcs;
  std::string_view rest = trim(whole.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::Parse, "malformed diagram '" + std::string(whole) +
                                        "': arc '" + std::string(item) +
                                        "' is not of the form l-r");
    }
    arcs.push_back({parse_int(item.substr(0, dash), whole),
                    parse_int(item.substr(dash + 1), whole)});
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (trim(rest).empty()) {
      throw Error(ErrorCode::Parse,
                  "malformed diagram '" + std::string(whole) + "': trailing comma");
    }
  }
  return ArcDiagram(n, std::move(arcs));
}

std::string format_blocks(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += '|';
    out += '{';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(blocks[b][i]);
    }
    out += '}';
  }
  return out;
}

}  // namespace arcdiag
