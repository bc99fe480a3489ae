#include "oracle.hpp"

#include "errors.hpp"

#include <cstdint>

namespace arcdiag {

namespace {

class Enumerator {
 public:
  Enumerator(Family family, int n, bool symmetric_only, const DiagramVisitor& visit)
      : family_(family),
        n_(n),
        symmetric_only_(symmetric_only),
        visit_(visit),
        right_of_(n + 2, 0),
        is_open_(n + 2, 0) {}

  void run() {
    switch (family_) {
      case Family::NcMatching:
      case Family::Matching: matching(1, 0); break;
      case Family::Motzkin: motzkin(1); break;
      case Family::Bell: bell(1); break;
    }
  }

 private:
  bool emit() {
    arcs_.clear();
    for (int node = 1; node <= n_; ++node) {
      if (right_of_[node] != 0) arcs_.push_back({node, right_of_[node]});
    }
    current_.assign_sorted(n_, arcs_);
    if (symmetric_only_ && !is_symmetric(current_)) return true;
    return visit_(current_);
  }

  // `open` nodes are left ends waiting for their partner.
  bool matching(int node, int open) {
    if (node > n_) return open == 0 ? emit() : true;
    const int remaining_after = n_ - node;
    if (open <= remaining_after) {
      if (!matching(node + 1, open)) return false;
    }
    if (open + 1 <= remaining_after) {
      is_open_[node] = 1;
      open_stack_.push_back(node);
      const bool go_on = matching(node + 1, open + 1);
      open_stack_.pop_back();
      is_open_[node] = 0;
      if (!go_on) return false;
    }
    if (family_ == Family::NcMatching) {
      if (!open_stack_.empty() && open_stack_.back() <= node - 2) {
        const int partner = open_stack_.back();
        open_stack_.pop_back();
        is_open_[partner] = 0;
        right_of_[partner] = node;
        const bool go_on = matching(node + 1, open - 1);
        right_of_[partner] = 0;
        is_open_[partner] = 1;
        open_stack_.push_back(partner);
        if (!go_on) return false;
      }
      return true;
    }
    for (int partner = 1; partner <= node - 2; ++partner) {
      if (!is_open_[partner]) continue;
      is_open_[partner] = 0;
      right_of_[partner] = node;
      const bool go_on = matching(node + 1, open - 1);
      right_of_[partner] = 0;
      is_open_[partner] = 1;
      if (!go_on) return false;
    }
    return true;
  }

  // block_max_ holds the current largest element of every block.
  bool bell(int node) {
    if (node > n_) return emit();
    block_max_.push_back(node);
    const bool go_on = bell(node + 1);
    block_max_.pop_back();
    if (!go_on) return false;
    for (std::size_t b = 0; b < block_max_.size(); ++b) {
      const int last = block_max_[b];
      if (last > node - 2) continue;
      right_of_[last] = node;
      block_max_[b] = node;
      const bool cont = bell(node + 1);
      block_max_[b] = last;
      right_of_[last] = 0;
      if (!cont) return false;
    }
    return true;
  }

  // block_max_ is a stack; extending a block hides every block above it,
  // since a later arc from those would cross the new one.
  bool motzkin(int node) {
    if (node > n_) return emit();
    block_max_.push_back(node);
    const bool go_on = motzkin(node + 1);
    block_max_.pop_back();
    if (!go_on) return false;
    if (block_max_.size() < 2) return true;
    for (std::size_t b = 0; b + 1 < block_max_.size(); ++b) {
      const int last = block_max_[b];
      std::vector<int> hidden(block_max_.begin() + static_cast<std::ptrdiff_t>(b) + 1,
                              block_max_.end());
      block_max_.resize(b + 1);
      right_of_[last] = node;
      block_max_[b] = node;
      const bool cont = motzkin(node + 1);
      block_max_[b] = last;
      right_of_[last] = 0;
      block_max_.insert(block_max_.end(), hidden.begin(), hidden.end());
      if (!cont) return false;
    }
    return true;
  }

  Family family_;
  int n_;
  bool symmetric_only_;
  const DiagramVisitor& visit_;
  std::vector<int> right_of_;
  std::vector<char> is_open_;
  std::vector<int> open_stack_;
  std::vector<int> block_max_;
  std::vector<Arc> arcs_;
  ArcDiagram current_;
};

}  // namespace

int statistic_value(const ArcDiagram& diagram, Statistic stat) {
  switch (stat) {
    case Statistic::None: return 0;
    case Statistic::IsolatedNodes: return isolated_count(diagram);
    case Statistic::ComponentsMinusOne: return component_count(diagram) - 1;
  }
  return 0;
}

int EnumerationCaps::cap_for(Family family) const noexcept {
  return (family == Family::NcMatching || family == Family::Motzkin) ? noncrossing
                                                                     : crossing;
}

void enumerate(Family family, int n, bool symmetric_only, const DiagramVisitor& visit,
               const EnumerationCaps& caps) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "node count must be nonnegative");
  if (n > caps.cap_for(family)) {
    throw Error(ErrorCode::ResourceLimit,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                    std::to_string(caps.cap_for(family)) + " for family " +
                    std::string(family_name(family)));
  }
  Enumerator(family, n, symmetric_only, visit).run();
}

std::vector<ArcDiagram> enumerate_all(Family family, int n, bool symmetric_only,
                                      const EnumerationCaps& caps) {
  std::vector<ArcDiagram> out;
  enumerate(
      family, n, symmetric_only,
      [&out](const ArcDiagram& d) {
        out.push_back(d);
        return true;
      },
      caps);
  return out;
}

BigCount count(Family family, int n, bool symmetric_only, const EnumerationCaps& caps) {
  std::uint64_t total = 0;
  enumerate(
      family, n, symmetric_only,
      [&total](const ArcDiagram&) {
        ++total;
        return true;
      },
      caps);
  return BigCount(total);
}

std::map<int, BigCount> count_by_statistic(Family family, int n, bool symmetric_only,
                                           Statistic stat, const EnumerationCaps& caps) {
  std::map<int, std::uint64_t> tally;
  enumerate(
      family, n, symmetric_only,
      [&tally, stat](const ArcDiagram& d) {
        ++tally[statistic_value(d, stat)];
        return true;
      },
      caps);
  std::map<int, BigCount> out;
  for (const auto& [k, v] : tally) out.emplace(k, BigCount(v));
  return out;
}

}  // namespace arcdiag
