#pragma once

#include "bigcount.hpp"
#include "diagram.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arcdiag {

/// Sequence identifiers and their first index.
///
///   id        counts                                      first index
///   S         noncrossing matchings on n nodes            0  (S_0 = 1)
///   R         symmetric noncrossing matchings             0  (R_0 = 1)
///   P         matchings                                   1
///   Q         symmetric matchings                         1
///   M         Motzkin diagrams (Motzkin number m_{n-1})   0  (M_0 = 1)
///   L         symmetric Motzkin diagrams                  0  (L_0 = 1)
///   A005773   a_0 = 1, a_n = L_{2n-1}                     0
///   A         symmetric Bell-type diagrams                1
///   BELL      Bell numbers B_n (B_{n-1} diagrams on n)    0
///   FIB       Fibonacci, F_0 = 0, F_1 = 1                 0
///
/// The printed listings for S, R, P, Q, M, L, A start at index 1.
enum class SequenceId { S, R, P, Q, M, L, A005773, A, Bell, Fib };

inline constexpr SequenceId kAllSequences[] = {
    SequenceId::S, SequenceId::R, SequenceId::P,       SequenceId::Q,    SequenceId::M,
    SequenceId::L, SequenceId::A005773, SequenceId::A, SequenceId::Bell, SequenceId::Fib};

int sequence_offset(SequenceId id) noexcept;
std::string_view sequence_name(SequenceId id) noexcept;
/// OEIS A-number, or a local label for sequences without one.
std::string_view sequence_label(SequenceId id) noexcept;
SequenceId parse_sequence_id(std::string_view name);

/// Terms first_index()..last_index() of one sequence.
class Sequence {
 public:
  Sequence(int first_index, std::vector<BigCount> values)
      : first_(first_index), values_(std::move(values)) {}

  int first_index() const noexcept { return first_; }
  int last_index() const noexcept { return first_ + static_cast<int>(values_.size()) - 1; }
  std::span<const BigCount> values() const noexcept { return values_; }

  /// Throws Error(OutOfRange) outside [first_index, last_index].
  const BigCount& at(int n) const;
  const BigCount& operator[](int n) const { return values_[n - first_]; }

 private:
  int first_;
  std::vector<BigCount> values_;
};

Sequence seq_S(int max_n);
Sequence seq_R(int max_n);
Sequence seq_P(int max_n);
Sequence seq_Q(int max_n);
Sequence seq_M(int max_n);
Sequence seq_L(int max_n);
/// a_n via the convolution with Motzkin numbers; the three-term form
/// a_{n+1} = 3 a_n - M_n is checked on the fly (Error on mismatch).
Sequence seq_a(int max_n);
Sequence seq_A(int max_n);
Sequence seq_bell(int max_n);
Sequence seq_fib(int max_n);

Sequence sequence(SequenceId id, int max_n);
BigCount seq_value(SequenceId id, int n);

/// Number of diagrams of a family (optionally only symmetric ones) on n
/// nodes, from the recurrences. n = 0 counts the empty diagram.
BigCount count_by_recurrence(Family family, int n, bool symmetric_only);

// --- triangles -------------------------------------------------------------

enum class TriangleKind { P, Q, A };

std::string_view triangle_name(TriangleKind kind) noexcept;
TriangleKind parse_triangle_kind(std::string_view name);

/// One row. For P and A the row label is the node count; for Q row r holds
/// Q(2r, k). `entries` lists (k, value) over the row's support, zeros included:
/// P: k = 0..n; Q: k = 0, 2, .., 2r; A: k = 0..n-1.
struct TriangleRow {
  int n = 0;
  std::vector<std::pair<int, BigCount>> entries;

  BigCount value(int k) const;  // zero off the support
  BigCount sum() const;
};

struct TriangleTable {
  TriangleKind which = TriangleKind::P;
  std::vector<TriangleRow> rows;

  const TriangleRow& row(int n) const;
  BigCount value(int n, int k) const;
};

TriangleTable triangle_P(int max_n);
TriangleTable triangle_Q(int max_rows);
TriangleTable triangle_A(int max_n);

/// Row sums q_r = Q_{2r} for r = 1..max_rows, keeping two rows in memory.
std::vector<BigCount> triangle_Q_row_sums(int max_rows);

enum class TableFormat { Csv, Tsv, Json };

TableFormat parse_table_format(std::string_view name);

/// CSV: `n,k,value` lines under a header. TSV: one line per row, value
/// columns by k, then the row sum. JSON: {"triangle", "rows": [{"n",
/// "entries": [{"k", "value"}], "sum"}]} with values as decimal strings.
std::string render_triangle(const TriangleTable& table, TableFormat format);

// --- identities --------------------------------------------------------------

struct IdentityReport {
  std::string name;
  std::string convention;  // e.g. the frozen Fibonacci offset
  int from = 0;
  int to = 0;
  std::vector<int> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// R_{2k+1} = R_{2k} + R_{2k-1} and R_{2k} = R_{2k-1} + R_{2k-2} - S_{k-1},
/// for every instance whose largest R index is <= max_n.
IdentityReport verify_R_parity_identities(int max_n);

/// Shift s such that F_{n+s} (F_0 = 0, F_1 = 1) satisfies the Fibonacci
/// relation for R at n = 4 and 5. Determined from the computed sequences.
int deutsch_fibonacci_shift();
IdentityReport verify_deutsch(int max_n);

/// Q(2(n+1), 2(n-1)) = a_n with a_1 = 1, a_n = a_{n-1} + 3n - 2.
IdentityReport verify_pentagonal(int max_n);
/// Q(2n, 2n-2) = n - 1.
IdentityReport verify_Q_subdiagonal(int max_n);

/// Compares q_n = Q_{2n} from the triangle with the five-term recurrence
/// run from q_1..q_5; `to` is the last n of the agreeing range starting at 6.
IdentityReport verify_q_conjecture(int max_n);
BigCount q_conjecture_term(std::span<const BigCount> q, int n);

/// Convolution form and three-term form of a_n agree, and a_n = L_{2n-1}.
IdentityReport verify_a_formulas(int max_n);
/// L_{2n} = L_{2n-1}.
IdentityReport verify_L_interleaving(int max_n);

// --- b-files -------------------------------------------------------------------

/// Lines `n value` for n = offset..max_n, newline-terminated.
std::string render_bfile(SequenceId id, int max_n);
void write_bfile(SequenceId id, int max_n, const std::filesystem::path& path);

}  // namespace arcdiag
