#pragma once

// Independent reference counts for small n: every subset of the possible
// arcs is tried and classified from first principles. Shares no code with
// the library beyond the Arc/ArcDiagram value types.

#include "diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace brute {

struct Tally {
  // [family][symmetric] -> count
  std::uint64_t count[4][2] = {};
  // every diagram found, as sorted arc lists, per family
  std::set<std::vector<std::pair<int, int>>> diagrams[4][2];
  // isolated-node histogram of matchings and symmetric matchings
  std::map<int, std::uint64_t> matching_isolated[2];
  // (blocks - 1) histogram of symmetric Bell-type diagrams
  std::map<int, std::uint64_t> bell_symmetric_blocks;
};

inline std::vector<std::vector<int>> blocks_of(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<int> block, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(block);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool partition_symmetric(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> mirrored;
  for (const auto& b : blocks) {
    std::vector<int> m;
    for (int v : b) m.push_back(n + 1 - v);
    std::sort(m.begin(), m.end());
    mirrored.push_back(m);
  }
  std::sort(mirrored.begin(), mirrored.end());
  return mirrored == blocks;
}

// Family indices follow arcdiag::Family: nc-matching, matching, motzkin, bell.
inline Tally classify_all(int n) {
  Tally t;
  std::vector<std::pair<int, int>> candidates;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 2; b <= n; ++b) candidates.emplace_back(a, b);
  }
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  std::vector<int> as_left(n + 2), as_right(n + 2), degree(n + 2);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::fill(as_left.begin(), as_left.end(), 0);
    std::fill(as_right.begin(), as_right.end(), 0);
    std::fill(degree.begin(), degree.end(), 0);
    std::vector<std::pair<int, int>> arcs;
    bool chain_ok = true;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const auto [a, b] = candidates[i];
      arcs.push_back(candidates[i]);
      if (++as_left[a] > 1 || ++as_right[b] > 1) chain_ok = false;
      ++degree[a];
      ++degree[b];
    }
    if (!chain_ok) continue;
    const bool matching = std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 1; });
    bool crossing = false;
    for (auto [a, b] : arcs) {
      for (auto [c, d] : arcs) {
        if (a < c && c < b && b < d) crossing = true;
      }
    }
    const auto blocks = blocks_of(n, arcs);
    const bool sym = partition_symmetric(n, blocks);
    if (matching) {
      std::set<std::pair<int, int>> mirrored;
      for (auto [a, b] : arcs) mirrored.emplace(n + 1 - b, n + 1 - a);
      const bool arc_sym = mirrored == std::set<std::pair<int, int>>(arcs.begin(), arcs.end());
      if (arc_sym != sym) throw std::logic_error("symmetry definitions disagree");
    }
    const bool member[4] = {matching && !crossing, matching, !crossing, true};
    for (int f = 0; f < 4; ++f) {
      if (!member[f]) continue;
      for (int s = 0; s < 2; ++s) {
        if (s == 1 && !sym) continue;
        ++t.count[f][s];
        t.diagrams[f][s].insert(arcs);
      }
    }
    if (matching) {
      const int isolated =
          static_cast<int>(std::count(degree.begin() + 1, degree.begin() + n + 1, 0));
      ++t.matching_isolated[0][isolated];
      if (sym) ++t.matching_isolated[1][isolated];
    }
    if (sym) ++t.bell_symmetric_blocks[static_cast<int>(blocks.size()) - 1];
  }
  return t;
}

}  // namespace brute
