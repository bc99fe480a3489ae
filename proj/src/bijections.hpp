#pragma once

#include "diagram.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arcdiag {

enum class Step : std::uint8_t { Up, Horizontal, Down };

/// Steps over {U, H, D} whose running height never goes below zero.
/// The final height may be positive.
class MotzkinPrefix {
 public:
  MotzkinPrefix() = default;
  /// Throws Error(InvalidArgument) if the height drops below zero.
  explicit MotzkinPrefix(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  int final_height() const noexcept { return final_height_; }

  friend bool operator==(const MotzkinPrefix&, const MotzkinPrefix&) = default;

 private:
  std::vector<Step> steps_;
  int final_height_ = 0;
};

/// A Motzkin prefix that returns to height zero.
class MotzkinPath {
 public:
  MotzkinPath() = default;
  /// Throws Error(InvalidArgument) unless the steps form a Motzkin path.
  explicit MotzkinPath(std::vector<Step> steps);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  std::vector<Step> steps_;
};

/// Digits over {0, 1, 2}.
class TernaryWord {
 public:
  TernaryWord() = default;
  explicit TernaryWord(std::vector<std::uint8_t> digits);

  std::span<const std::uint8_t> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  int digit_sum() const noexcept;
  std::string str() const;

  /// Appends another word; used to assemble psi images block by block.
  TernaryWord& operator+=(const TernaryWord& other);

  friend bool operator==(const TernaryWord&, const TernaryWord&) = default;
  friend auto operator<=>(const TernaryWord&, const TernaryWord&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

/// Member of T_n: n digits, digit sum n, leading digit nonzero.
bool in_ternary_set(const TernaryWord& word, int n);

std::vector<Step> parse_steps(std::string_view text);  // "UUDH" or "U,U,D,H"
std::string format_steps(std::span<const Step> steps);
TernaryWord parse_ternary(std::string_view text);

/// Vertices of a path with s steps become nodes 1..s+1; every matched
/// (Up, Down) pair becomes an arc from the Up's start to the Down's end.
ArcDiagram phi(const MotzkinPath& path);
/// Throws Error(WrongFamily) unless the diagram is a valid Motzkin diagram.
MotzkinPath phi_inverse(const ArcDiagram& diagram);

/// Checks that the diagram is a symmetric Motzkin diagram on an odd number
/// of nodes; throws WrongParity / WrongFamily / NotSymmetric otherwise.
void require_symmetric_odd_motzkin(const ArcDiagram& diagram);

/// First (nodes - 1) / 2 steps of phi_inverse(diagram), for symmetric
/// Motzkin diagrams on an odd number of nodes.
MotzkinPrefix phi_left(const ArcDiagram& diagram);

/// Up -> 2, Horizontal -> 1, Down -> 0.
TernaryWord tau(std::span<const Step> steps);

enum class PsiCase { EndsAtZero, EndsAtOne, FullAscent, General };

std::string_view psi_case_name(PsiCase c) noexcept;

/// Case of a prefix of length n - 1 ending at height m: m = 0, m = 1,
/// m = n - 1 (with n > 2), otherwise General.
PsiCase classify_psi_case(const MotzkinPrefix& prefix);

/// Image of the diagram made of length - 1 nested arcs around one middle node:
/// 2 0^k 2^(k-1) for length = 2k, and 1 0^k 2^k for length = 2k + 1.
/// Requires length >= 3.
TernaryWord full_ascent_word(int length);

/// Decomposition used in the General case. `ascents` are the lengths
/// k_1..k_i of the maximal runs of unmatched Ups after the first one;
/// `motzkin` holds the i + 2 (possibly empty) Motzkin factors between them.
struct PrefixFactorization {
  std::vector<std::vector<Step>> motzkin;
  std::vector<int> ascents;
};

PrefixFactorization factorize_prefix(const MotzkinPrefix& prefix);

/// Cuts full_ascent_word(m + 1) into gamma_0, gamma_{k_1}, .., gamma_{k_i}.
/// gamma_0 is "2" (m odd) or "10" (m even); gamma_{k_1} takes the length
/// that makes the blocks add up to m + 1; the others have length k_j.
std::vector<TernaryWord> gamma_blocks(int m, std::span<const int> ascents);

/// The bijection from symmetric Motzkin diagrams on 2n - 1 nodes onto T_n.
TernaryWord psi(const ArcDiagram& diagram);

/// All words of T_n in lexicographic order.
std::vector<TernaryWord> enumerate_ternary(int n);

/// Symmetric Motzkin diagram on 2n nodes -> on 2n - 1 nodes, by merging the
/// two central nodes.
ArcDiagram merge_even(const ArcDiagram& diagram);
/// Inverse of merge_even: the middle node is split in two, arcs ending at it
/// stay on the left copy and arcs starting at it move to the right copy.
ArcDiagram split_odd(const ArcDiagram& diagram);

/// Every Motzkin path with `steps` steps, in lexicographic order U < H < D.
void for_each_motzkin_path(int steps, const std::function<void(const MotzkinPath&)>& visit);

}  // namespace arcdiag
