#include "recurrences.hpp"

#include "errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace arcdiag {

namespace {

void require_at_least(int value, int minimum, const char* what) {
  if (value < minimum) {
    throw Error(ErrorCode::OutOfRange, std::string(what) + " must be >= " +
                                           std::to_string(minimum) + ", got " +
                                           std::to_string(value));
  }
}

// Dense rows of the Q triangle: row[k / 2] = Q(2r, k).
using DenseRow = std::vector<BigCount>;

BigCount dense_at(const DenseRow& row, int index) {
  if (index < 0 || index >= static_cast<int>(row.size())) return 0;
  return row[index];
}

DenseRow next_Q_row(int r, const DenseRow& prev, const DenseRow& prev2) {
  DenseRow row(r + 1);
  for (int i = 0; i <= r; ++i) {
    const int k = 2 * i;
    row[i] = (k + 2) * dense_at(prev, i + 1) + dense_at(prev, i) + dense_at(prev, i - 1) -
             dense_at(prev2, i);
  }
  return row;
}

template <typename RowVisitor>
void walk_Q_rows(int max_rows, RowVisitor&& visit) {
  DenseRow prev2{0, 1};      // r = 1: Q(2,0) = 0, Q(2,2) = 1
  DenseRow prev{1, 1, 1};    // r = 2
  if (max_rows >= 1) visit(1, prev2);
  if (max_rows >= 2) visit(2, prev);
  for (int r = 3; r <= max_rows; ++r) {
    DenseRow row = next_Q_row(r, prev, prev2);
    visit(r, row);
    prev2 = std::move(prev);
    prev = std::move(row);
  }
}

BigCount sum_of(const DenseRow& row) {
  BigCount total = 0;
  for (const auto& v : row) total += v;
  return total;
}

}  // namespace

// --- sequence ids ------------------------------------------------------------

int sequence_offset(SequenceId id) noexcept {
  switch (id) {
    case SequenceId::P:
    case SequenceId::Q:
    case SequenceId::A: return 1;
    default: return 0;
  }
}

std::string_view sequence_name(SequenceId id) noexcept {
  switch (id) {
    case SequenceId::S: return "S";
    case SequenceId::R: return "R";
    case SequenceId::P: return "P";
    case SequenceId::Q: return "Q";
    case SequenceId::M: return "M";
    case SequenceId::L: return "L";
    case SequenceId::A005773: return "A005773";
    case SequenceId::A: return "A";
    case SequenceId::Bell: return "BELL";
    case SequenceId::Fib: return "FIB";
  }
  return "?";
}

std::string_view sequence_label(SequenceId id) noexcept {
  switch (id) {
    case SequenceId::S: return "A004148";
    case SequenceId::R: return "A088518";
    case SequenceId::P: return "A170941";
    case SequenceId::Q: return "local:Q";
    case SequenceId::M: return "A001006";
    case SequenceId::L: return "local:L";
    case SequenceId::A005773: return "A005773";
    case SequenceId::A: return "A080107";
    case SequenceId::Bell: return "A000110";
    case SequenceId::Fib: return "A000045";
  }
  return "?";
}

SequenceId parse_sequence_id(std::string_view name) {
  for (SequenceId id : kAllSequences) {
    if (sequence_name(id) == name) return id;
  }
  if (name == "a") return SequenceId::A005773;
  if (name == "B" || name == "bell") return SequenceId::Bell;
  if (name == "F" || name == "fib") return SequenceId::Fib;
  throw Error(ErrorCode::InvalidArgument,
              "unknown sequence '" + std::string(name) +
                  "' (expected S, R, P, Q, M, L, A005773, A, BELL or FIB)");
}

const BigCount& Sequence::at(int n) const {
  if (n < first_ || n > last_index()) {
    throw Error(ErrorCode::OutOfRange, "index " + std::to_string(n) + " outside [" +
                                           std::to_string(first_) + ", " +
                                           std::to_string(last_index()) + "]");
  }
  return values_[n - first_];
}

// --- sequences -------------------------------------------------------------

Sequence seq_S(int max_n) {
  require_at_least(max_n, 0, "max_n");
  std::vector<BigCount> s(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n <= 2) {
      s[n] = 1;
      continue;
    }
    BigCount value = s[n - 1];
    for (int j = 3; j <= n; ++j) value += s[j - 2] * s[n - j];
    s[n] = std::move(value);
  }
  return Sequence(0, std::move(s));
}

Sequence seq_R(int max_n) {
  require_at_least(max_n, 0, "max_n");
  static const int kBase[] = {1, 1, 1, 2, 2, 4};
  const Sequence s = seq_S(std::max(0, max_n / 2));
  std::vector<BigCount> r(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n <= 5) {
      r[n] = kBase[n];
      continue;
    }
    BigCount value = 2 * r[n - 2];
    for (int j = 3; j <= n / 2; ++j) value += s[j - 2] * r[n - 2 * j];
    r[n] = std::move(value);
  }
  return Sequence(0, std::move(r));
}

Sequence seq_P(int max_n) {
  require_at_least(max_n, 1, "max_n");
  static const int kBase[] = {0, 1, 1, 2, 5};
  std::vector<BigCount> p(max_n + 1);  // p[0] unused
  for (int n = 1; n <= max_n; ++n) {
    if (n <= 4) {
      p[n] = kBase[n];
      continue;
    }
    p[n] = p[n - 1] + (n - 1) * p[n - 2] - p[n - 3] + p[n - 4];
  }
  p.erase(p.begin());
  return Sequence(1, std::move(p));
}

Sequence seq_Q(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const std::vector<BigCount> even = triangle_Q_row_sums(max_n / 2);
  std::vector<BigCount> q(max_n + 1);  // q[0] unused
  for (int n = 1; n <= max_n; ++n) {
    if (n == 1) {
      q[n] = 1;
    } else if (n % 2 == 0) {
      q[n] = even[n / 2 - 1];
    } else {
      q[n] = q[n - 1] + q[n - 2];
    }
  }
  q.erase(q.begin());
  return Sequence(1, std::move(q));
}

Sequence seq_M(int max_n) {
  require_at_least(max_n, 0, "max_n");
  std::vector<BigCount> m(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n <= 2) {
      m[n] = 1;
      continue;
    }
    BigCount value = m[n - 1];
    for (int j = 3; j <= n; ++j) value += m[j - 2] * m[n - j + 1];
    m[n] = std::move(value);
  }
  return Sequence(0, std::move(m));
}

Sequence seq_L(int max_n) {
  require_at_least(max_n, 0, "max_n");
  static const int kBase[] = {1, 1, 1, 2, 2};
  const Sequence m = seq_M(std::max(1, (max_n + 1) / 2));
  std::vector<BigCount> l(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    if (n <= 4) {
      l[n] = kBase[n];
      continue;
    }
    BigCount value = 2 * l[n - 2];
    for (int j = 3; j <= (n + 1) / 2; ++j) value += m[j - 2] * l[n + 2 - 2 * j];
    l[n] = std::move(value);
  }
  return Sequence(0, std::move(l));
}

Sequence seq_a(int max_n) {
  require_at_least(max_n, 0, "max_n");
  const Sequence m = seq_M(max_n + 1);
  std::vector<BigCount> a(max_n + 1);
  a[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigCount value = 0;
    for (int j = 0; j <= n - 1; ++j) value += m[j + 1] * a[n - 1 - j];
    a[n] = std::move(value);
    if (n >= 2 && a[n] != 3 * a[n - 1] - m[n - 1]) {
      throw std::logic_error("a_n: convolution and three-term forms disagree at n = " +
                             std::to_string(n));
    }
  }
  return Sequence(0, std::move(a));
}

Sequence seq_A(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const TriangleTable table = triangle_A(max_n);
  std::vector<BigCount> a;
  a.reserve(max_n);
  for (const auto& row : table.rows) a.push_back(row.sum());
  return Sequence(1, std::move(a));
}

Sequence seq_bell(int max_n) {
  require_at_least(max_n, 0, "max_n");
  // Bell triangle: each row starts with the last entry of the previous row,
  // and each entry adds its left neighbour to the entry above that neighbour.
  std::vector<BigCount> bell(max_n + 1);
  std::vector<BigCount> row{1};
  bell[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigCount> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& above : row) next.push_back(next.back() + above);
    row = std::move(next);
    bell[n] = row.front();
  }
  return Sequence(0, std::move(bell));
}

Sequence seq_fib(int max_n) {
  require_at_least(max_n, 0, "max_n");
  std::vector<BigCount> f(max_n + 1);
  for (int n = 0; n <= max_n; ++n) f[n] = n < 2 ? BigCount(n) : f[n - 1] + f[n - 2];
  return Sequence(0, std::move(f));
}

Sequence sequence(SequenceId id, int max_n) {
  require_at_least(max_n, sequence_offset(id), "max_n");
  switch (id) {
    case SequenceId::S: return seq_S(max_n);
    case SequenceId::R: return seq_R(max_n);
    case SequenceId::P: return seq_P(max_n);
    case SequenceId::Q: return seq_Q(max_n);
    case SequenceId::M: return seq_M(max_n);
    case SequenceId::L: return seq_L(max_n);
    case SequenceId::A005773: return seq_a(max_n);
    case SequenceId::A: return seq_A(max_n);
    case SequenceId::Bell: return seq_bell(max_n);
    case SequenceId::Fib: return seq_fib(max_n);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sequence id");
}

BigCount seq_value(SequenceId id, int n) {
  if (n < sequence_offset(id)) {
    throw Error(ErrorCode::OutOfRange,
                "index " + std::to_string(n) + " is below the first index " +
                    std::to_string(sequence_offset(id)) + " of sequence " +
                    std::string(sequence_name(id)));
  }
  return sequence(id, n).at(n);
}

BigCount count_by_recurrence(Family family, int n, bool symmetric_only) {
  require_at_least(n, 0, "n");
  if (n == 0) return 1;
  switch (family) {
    case Family::NcMatching: return seq_value(symmetric_only ? SequenceId::R : SequenceId::S, n);
    case Family::Matching: return seq_value(symmetric_only ? SequenceId::Q : SequenceId::P, n);
    case Family::Motzkin: return seq_value(symmetric_only ? SequenceId::L : SequenceId::M, n);
    case Family::Bell:
      return symmetric_only ? seq_value(SequenceId::A, n) : seq_value(SequenceId::Bell, n - 1);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family");
}

// --- triangles -------------------------------------------------------------

std::string_view triangle_name(TriangleKind kind) noexcept {
  switch (kind) {
    case TriangleKind::P: return "P";
    case TriangleKind::Q: return "Q";
    case TriangleKind::A: return "A";
  }
  return "?";
}

TriangleKind parse_triangle_kind(std::string_view name) {
  if (name == "P" || name == "p") return TriangleKind::P;
  if (name == "Q" || name == "q") return TriangleKind::Q;
  if (name == "A" || name == "a") return TriangleKind::A;
  throw Error(ErrorCode::InvalidArgument,
              "unknown triangle '" + std::string(name) + "' (expected P, Q or A)");
}

BigCount TriangleRow::value(int k) const {
  for (const auto& [key, v] : entries) {
    if (key == k) return v;
  }
  return 0;
}

BigCount TriangleRow::sum() const {
  BigCount total = 0;
  for (const auto& entry : entries) total += entry.second;
  return total;
}

const TriangleRow& TriangleTable::row(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return r;
  }
  throw Error(ErrorCode::OutOfRange, "triangle " + std::string(triangle_name(which)) +
                                         " has no row " + std::to_string(n));
}

BigCount TriangleTable::value(int n, int k) const { return row(n).value(k); }

TriangleTable triangle_P(int max_n) {
  require_at_least(max_n, 1, "max_n");
  // dense[n][k] = P(n, k), zero outside 0 <= k <= n
  std::vector<std::vector<BigCount>> dense(max_n + 1);
  auto at = [&dense](int n, int k) -> BigCount {
    if (n < 1 || k < 0 || k > n) return 0;
    return dense[n][k];
  };
  TriangleTable table{TriangleKind::P, {}};
  for (int n = 1; n <= max_n; ++n) {
    dense[n].assign(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      if (n <= 2) {
        dense[n][k] = (k == n) ? 1 : 0;
      } else {
        dense[n][k] = (k + 1) * at(n - 1, k + 1) + at(n - 1, k - 1) - at(n - 2, k);
      }
    }
    TriangleRow row{n, {}};
    for (int k = 0; k <= n; ++k) row.entries.emplace_back(k, dense[n][k]);
    table.rows.push_back(std::move(row));
    if (n >= 3) dense[n - 2].clear();
  }
  return table;
}

TriangleTable triangle_Q(int max_rows) {
  require_at_least(max_rows, 1, "max_rows");
  TriangleTable table{TriangleKind::Q, {}};
  walk_Q_rows(max_rows, [&table](int r, const DenseRow& dense) {
    TriangleRow row{r, {}};
    for (int i = 0; i <= r; ++i) row.entries.emplace_back(2 * i, dense[i]);
    table.rows.push_back(std::move(row));
  });
  return table;
}

std::vector<BigCount> triangle_Q_row_sums(int max_rows) {
  std::vector<BigCount> sums;
  if (max_rows < 1) return sums;
  sums.reserve(max_rows);
  walk_Q_rows(max_rows, [&sums](int, const DenseRow& dense) { sums.push_back(sum_of(dense)); });
  return sums;
}

TriangleTable triangle_A(int max_n) {
  require_at_least(max_n, 1, "max_n");
  std::vector<std::vector<BigCount>> dense(max_n + 1);
  auto at = [&dense](int n, int k) -> BigCount {
    if (n < 1 || k < 0 || k > n - 1) return 0;
    return dense[n][k];
  };
  TriangleTable table{TriangleKind::A, {}};
  for (int n = 1; n <= max_n; ++n) {
    dense[n].assign(n, 0);
    if (n == 1) {
      dense[1][0] = 1;
    } else {
      for (int k = 2; k <= n - 3; ++k) {
        dense[n][k] = k * at(n - 2, k) + at(n - 2, k - 1) + at(n - 2, k - 2);
      }
      dense[n][n - 2] = (n - 1) / 2;
      dense[n][1] = 1;
      dense[n][n - 1] = 1;
      dense[n][0] = 0;
    }
    TriangleRow row{n, {}};
    for (int k = 0; k < n; ++k) row.entries.emplace_back(k, dense[n][k]);
    table.rows.push_back(std::move(row));
  }
  return table;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "tsv") return TableFormat::Tsv;
  if (name == "json") return TableFormat::Json;
  throw Error(ErrorCode::InvalidArgument,
              "unknown format '" + std::string(name) + "' (expected csv, tsv or json)");
}

std::string render_triangle(const TriangleTable& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv:
      out << "n,k,value\n";
      for (const auto& row : table.rows) {
        for (const auto& [k, v] : row.entries) out << row.n << ',' << k << ',' << v << '\n';
      }
      break;
    case TableFormat::Tsv: {
      std::vector<int> columns;
      for (const auto& row : table.rows) {
        for (const auto& entry : row.entries) columns.push_back(entry.first);
      }
      std::sort(columns.begin(), columns.end());
      columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
      out << "n";
      for (int k : columns) out << '\t' << k;
      out << "\tsum\n";
      for (const auto& row : table.rows) {
        out << row.n;
        for (int k : columns) {
          const auto it = std::find_if(row.entries.begin(), row.entries.end(),
                                       [k](const auto& e) { return e.first == k; });
          out << '\t';
          if (it != row.entries.end()) out << it->second;
        }
        out << '\t' << row.sum() << '\n';
      }
      break;
    }
    case TableFormat::Json: {
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& [k, v] : row.entries) {
          entries.push_back({{"k", k}, {"value", to_decimal(v)}});
        }
        rows.push_back({{"n", row.n}, {"entries", entries}, {"sum", to_decimal(row.sum())}});
      }
      out << nlohmann::ordered_json{{"triangle", triangle_name(table.which)}, {"rows", rows}}.dump(2)
          << '\n';
      break;
    }
  }
  return out.str();
}

// --- identities --------------------------------------------------------------

IdentityReport verify_R_parity_identities(int max_n) {
  require_at_least(max_n, 2, "max_n");
  const Sequence r = seq_R(max_n);
  const Sequence s = seq_S(max_n);
  IdentityReport report{"R parity relations", "", 1, max_n, {}};
  for (int k = 1; 2 * k <= max_n; ++k) {
    if (r[2 * k] != r[2 * k - 1] + r[2 * k - 2] - s[k - 1]) report.failures.push_back(2 * k);
    if (2 * k + 1 <= max_n && r[2 * k + 1] != r[2 * k] + r[2 * k - 1]) {
      report.failures.push_back(2 * k + 1);
    }
  }
  return report;
}

namespace {

bool deutsch_holds(const Sequence& r, const Sequence& s, const Sequence& f, int n, int shift) {
  auto fib = [&](int index) -> BigCount {
    const int i = index + shift;
    return i < 0 ? BigCount(0) : f[i];
  };
  BigCount rhs = fib(n);
  for (int j = 1; j <= n / 2 - 1; ++j) rhs -= s[j] * fib(n - 1 - 2 * j);
  return rhs == r[n];
}

}  // namespace

int deutsch_fibonacci_shift() {
  const Sequence r = seq_R(5);
  const Sequence s = seq_S(5);
  const Sequence f = seq_fib(10);
  for (int shift : {0, 1, -1, 2}) {
    if (deutsch_holds(r, s, f, 4, shift) && deutsch_holds(r, s, f, 5, shift)) return shift;
  }
  throw std::logic_error("no Fibonacci offset reproduces R_4 and R_5");
}

IdentityReport verify_deutsch(int max_n) {
  require_at_least(max_n, 4, "max_n");
  const int shift = deutsch_fibonacci_shift();
  const Sequence r = seq_R(max_n);
  const Sequence s = seq_S(max_n);
  const Sequence f = seq_fib(max_n + shift + 1);
  IdentityReport report{"Fibonacci relation for R", "", 4, max_n, {}};
  report.convention = "F_n with F_0 = 0, F_1 = 1, index shift " + std::to_string(shift);
  for (int n = 4; n <= max_n; ++n) {
    if (!deutsch_holds(r, s, f, n, shift)) report.failures.push_back(n);
  }
  return report;
}

IdentityReport verify_pentagonal(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const TriangleTable q = triangle_Q(max_n + 1);
  IdentityReport report{"pentagonal column Q(2(n+1), 2(n-1))", "", 1, max_n, {}};
  BigCount expected = 1;
  for (int n = 1; n <= max_n; ++n) {
    if (n >= 2) expected += 3 * n - 2;
    if (q.value(n + 1, 2 * (n - 1)) != expected) report.failures.push_back(n);
  }
  return report;
}

IdentityReport verify_Q_subdiagonal(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const TriangleTable q = triangle_Q(max_n);
  IdentityReport report{"Q(2n, 2n-2) = n - 1", "", 1, max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    if (q.value(n, 2 * n - 2) != n - 1) report.failures.push_back(n);
  }
  return report;
}

BigCount q_conjecture_term(std::span<const BigCount> q, int n) {
  // q is 1-indexed through q[n - 1]; q[0] is ignored.
  return 3 * q[n - 1] + 2 * (n - 2) * q[n - 2] - 2 * (n - 2) * q[n - 3] + 3 * q[n - 4] -
         q[n - 5];
}

IdentityReport verify_q_conjecture(int max_n) {
  require_at_least(max_n, 6, "max_n");
  const std::vector<BigCount> sums = triangle_Q_row_sums(max_n);
  std::vector<BigCount> conj(max_n + 1);
  static const int kBase[] = {0, 1, 3, 11, 43, 179};
  IdentityReport report{"q_n five-term recurrence", "", 6, 5, {}};
  for (int n = 1; n <= 5; ++n) {
    conj[n] = kBase[n];
    if (sums[n - 1] != conj[n]) report.failures.push_back(n);
  }
  bool contiguous = report.failures.empty();
  for (int n = 6; n <= max_n; ++n) {
    conj[n] = q_conjecture_term(conj, n);
    if (conj[n] != sums[n - 1]) {
      report.failures.push_back(n);
      contiguous = false;
    } else if (contiguous) {
      report.to = n;
    }
  }
  return report;
}

IdentityReport verify_a_formulas(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const Sequence m = seq_M(max_n + 1);
  const Sequence l = seq_L(2 * max_n - 1);
  IdentityReport report{"a_n: convolution, three-term form and L_{2n-1}", "", 1, max_n, {}};
  std::vector<BigCount> conv(max_n + 1);
  conv[0] = 1;
  BigCount three_term = 1;  // a_1
  for (int n = 1; n <= max_n; ++n) {
    for (int j = 0; j <= n - 1; ++j) conv[n] += m[j + 1] * conv[n - 1 - j];
    if (n >= 2) three_term = 3 * three_term - m[n - 1];
    if (conv[n] != three_term || conv[n] != l[2 * n - 1]) report.failures.push_back(n);
  }
  return report;
}

IdentityReport verify_L_interleaving(int max_n) {
  require_at_least(max_n, 1, "max_n");
  const Sequence l = seq_L(2 * max_n);
  IdentityReport report{"L_{2n} = L_{2n-1}", "", 1, max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    if (l[2 * n] != l[2 * n - 1]) report.failures.push_back(n);
  }
  return report;
}

// --- b-files -------------------------------------------------------------------

std::string render_bfile(SequenceId id, int max_n) {
  const Sequence seq = sequence(id, max_n);
  std::string out;
  for (int n = seq.first_index(); n <= seq.last_index(); ++n) {
    out += std::to_string(n);
    out += ' ';
    out += to_decimal(seq[n]);
    out += '\n';
  }
  return out;
}

void write_bfile(SequenceId id, int max_n, const std::filesystem::path& path) {
  const std::string text = render_bfile(id, max_n);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::Io, "cannot open '" + path.string() +
                                   "' for writing: " + std::strerror(errno));
  }
  file << text;
  file.flush();
  if (!file) {
    throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
  }
}

}  // namespace arcdiag
