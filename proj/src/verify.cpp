#include "verify.hpp"

#include "analysis.hpp"
#include "bijections.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "recurrences.hpp"
#include "reference_data.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace arcdiag {

namespace {

constexpr int kRoundtripLimit = 17;

std::string join_ints(const std::vector<int>& values, std::size_t limit = 10) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size() && i < limit; ++i) out << (i ? ", " : "") << values[i];
  if (values.size() > limit) out << ", ... (" << values.size() << " total)";
  return out.str();
}

CheckResult from_identity(const std::string& scope, const IdentityReport& report) {
  CheckResult check{scope, report.name, report.passed(), ""};
  std::ostringstream detail;
  detail << "n = " << report.from << ".." << report.to;
  if (!report.convention.empty()) detail << " (" << report.convention << ")";
  if (!report.passed()) detail << "; fails at n = " << join_ints(report.failures);
  check.detail = detail.str();
  return check;
}

class Checks {
 public:
  explicit Checks(std::string scope) : scope_(std::move(scope)) {}

  void add(std::string name, bool passed, std::string detail) {
    out_.push_back({scope_, std::move(name), passed, std::move(detail)});
  }
  void add(const IdentityReport& report) { out_.push_back(from_identity(scope_, report)); }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string scope_;
  std::vector<CheckResult> out_;
};

// --- tables --------------------------------------------------------------------

void check_reference_triangle(Checks& checks, TriangleKind kind, int max_rows) {
  const auto& rows = reference_triangle(kind);
  const auto& sums = reference_triangle_sums(kind);
  const int count = std::min<int>(max_rows, static_cast<int>(rows.size()));
  if (count < 1) return;
  const TriangleTable table = kind == TriangleKind::P   ? triangle_P(count)
                              : kind == TriangleKind::Q ? triangle_Q(count)
                                                        : triangle_A(count);
  const int step = kind == TriangleKind::Q ? 2 : 1;
  std::vector<std::string> mismatches;
  for (int n = 1; n <= count; ++n) {
    const auto& expected = rows[n - 1];
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const int k = static_cast<int>(i) * step;
      if (table.value(n, k) != expected[i]) {
        mismatches.push_back("(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
    if (table.row(n).sum() != sums[n - 1]) mismatches.push_back("sum " + std::to_string(n));
  }
  std::string detail = "rows 1.." + std::to_string(count);
  if (!mismatches.empty()) {
    detail += "; mismatches:";
    for (const auto& m : mismatches) detail += " " + m;
  }
  checks.add(std::string(triangle_name(kind)) + " triangle rows and sums", mismatches.empty(),
             detail);
}

void check_listings(Checks& checks) {
  for (const auto& listing : reference_listings()) {
    const int last = listing.first_index + static_cast<int>(listing.values.size()) - 1;
    const Sequence seq = sequence(listing.id, last);
    std::vector<int> bad;
    for (std::size_t i = 0; i < listing.values.size(); ++i) {
      const int n = listing.first_index + static_cast<int>(i);
      if (seq[n] != listing.values[i]) bad.push_back(n);
    }
    std::string detail = "n = " + std::to_string(listing.first_index) + ".." + std::to_string(last);
    if (!bad.empty()) detail += "; differs at n = " + join_ints(bad);
    checks.add(std::string(sequence_name(listing.id)) + " listing", bad.empty(), detail);
  }
}

void check_ratio_rows(Checks& checks, int max_n) {
  const auto& reference = reference_ratio_rows();
  const int last = std::min(max_n, reference.back().n);
  if (last < reference.front().n) return;
  const auto rows = ratio_table(last, 10, reference.front().n);
  std::vector<std::string> bad;
  int cells = 0;
  for (const auto& row : rows) {
    const auto& want = reference[static_cast<std::size_t>(row.n - reference.front().n)];
    const std::string* got[] = {&row.r_over_s, &row.l_over_m, &row.q_over_p, &row.a_over_b};
    for (int c = 0; c < 4; ++c) {
      ++cells;
      if (*got[c] != want.cells[c]) {
        bad.push_back("row " + std::to_string(row.n) + " col " + std::to_string(c + 1) + ": " +
                      *got[c]);
      }
    }
  }
  std::string detail = std::to_string(cells) + " values, rows " +
                       std::to_string(reference.front().n) + ".." + std::to_string(last) +
                       " (row n uses n + " + std::to_string(kRatioRowNodeOffset) + " nodes)";
  for (const auto& b : bad) detail += "; " + b;
  checks.add("ratio table at 10 digits", bad.empty(), detail);
}

std::vector<CheckResult> run_tables(int max_n) {
  Checks checks("tables");
  check_reference_triangle(checks, TriangleKind::P, max_n);
  check_reference_triangle(checks, TriangleKind::Q, max_n);
  check_reference_triangle(checks, TriangleKind::A, max_n);
  check_listings(checks);
  check_ratio_rows(checks, max_n);
  checks.add(verify_pentagonal(max_n));
  checks.add(verify_Q_subdiagonal(max_n));
  return checks.take();
}

// --- oracle --------------------------------------------------------------------

int oracle_limit(Family family) {
  switch (family) {
    case Family::NcMatching: return 18;
    case Family::Matching: return 14;
    case Family::Motzkin: return 16;
    case Family::Bell: return 13;
  }
  return 0;
}

void check_histogram(Checks& checks, const std::string& name, Family family, bool symmetric,
                     Statistic stat, const TriangleTable& table, int max_n, int step) {
  std::vector<int> bad;
  int first = step;
  for (int n = first; n <= max_n; n += step) {
    const auto histogram = count_by_statistic(family, n, symmetric, stat);
    const TriangleRow& row = table.row(n / step);
    bool ok = true;
    for (const auto& [k, value] : row.entries) {
      const auto it = histogram.find(k);
      if ((it == histogram.end() ? BigCount(0) : it->second) != value) ok = false;
    }
    for (const auto& [k, value] : histogram) {
      if (row.value(k) != value) ok = false;
    }
    if (!ok) bad.push_back(n);
  }
  std::string detail = "nodes " + std::to_string(first) + ".." + std::to_string(max_n);
  if (step == 2) detail += " (even)";
  if (!bad.empty()) detail += "; differs at n = " + join_ints(bad);
  checks.add(name, bad.empty(), detail);
}

std::vector<CheckResult> run_oracle(int max_n) {
  Checks checks("oracle");
  for (Family family : kAllFamilies) {
    const int top = std::min(max_n, oracle_limit(family));
    for (bool symmetric : {false, true}) {
      std::vector<std::string> bad;
      for (int n = 0; n <= top; ++n) {
        const BigCount enumerated = count(family, n, symmetric);
        const BigCount expected = count_by_recurrence(family, n, symmetric);
        if (enumerated != expected) {
          bad.push_back("n = " + std::to_string(n) + ": enumerated " + to_decimal(enumerated) +
                        ", recurrence " + to_decimal(expected));
        }
      }
      std::string detail = "n = 0.." + std::to_string(top);
      for (const auto& b : bad) detail += "; " + b;
      checks.add(std::string(family_name(family)) + (symmetric ? " symmetric" : "") + " counts",
                 bad.empty(), detail);
    }
  }
  const int p_top = std::min(max_n, oracle_limit(Family::Matching));
  if (p_top >= 1) {
    check_histogram(checks, "P triangle from isolated-node histogram", Family::Matching, false,
                    Statistic::IsolatedNodes, triangle_P(p_top), p_top, 1);
  }
  if (p_top >= 2) {
    check_histogram(checks, "Q triangle from isolated-node histogram", Family::Matching, true,
                    Statistic::IsolatedNodes, triangle_Q(p_top / 2), p_top, 2);
  }
  const int a_top = std::min(max_n, oracle_limit(Family::Bell));
  if (a_top >= 1) {
    check_histogram(checks, "A triangle from component histogram", Family::Bell, true,
                    Statistic::ComponentsMinusOne, triangle_A(a_top), a_top, 1);
  }
  return checks.take();
}

// --- roundtrip -------------------------------------------------------------------

std::vector<CheckResult> run_roundtrip(int max_n) {
  Checks checks("roundtrip");

  std::uint64_t paths = 0;
  std::vector<int> bad_paths;
  for (int steps = 0; steps + 1 <= max_n; ++steps) {
    bool ok = true;
    for_each_motzkin_path(steps, [&](const MotzkinPath& path) {
      ++paths;
      if (phi_inverse(phi(path)) != path) ok = false;
    });
    if (!ok) bad_paths.push_back(steps);
  }
  checks.add("phi_inverse(phi(p)) = p", bad_paths.empty(),
             std::to_string(paths) + " paths with 0.." + std::to_string(max_n - 1) + " steps" +
                 (bad_paths.empty() ? "" : "; fails at steps = " + join_ints(bad_paths)));

  std::uint64_t diagrams = 0;
  std::vector<int> bad_diagrams;
  for (int n = 1; n <= max_n; ++n) {
    bool ok = true;
    enumerate(Family::Motzkin, n, false, [&](const ArcDiagram& d) {
      ++diagrams;
      if (phi(phi_inverse(d)) != d) ok = false;
      return true;
    });
    if (!ok) bad_diagrams.push_back(n);
  }
  checks.add("phi(phi_inverse(d)) = d", bad_diagrams.empty(),
             std::to_string(diagrams) + " Motzkin diagrams on 1.." + std::to_string(max_n) +
                 " nodes" +
                 (bad_diagrams.empty() ? "" : "; fails at n = " + join_ints(bad_diagrams)));

  std::uint64_t symmetric = 0;
  std::vector<int> bad_merge;
  for (int n = 1; n <= max_n; ++n) {
    bool ok = true;
    enumerate(Family::Motzkin, n, true, [&](const ArcDiagram& d) {
      ++symmetric;
      const ArcDiagram there = n % 2 == 0 ? merge_even(d) : split_odd(d);
      const ArcDiagram back = n % 2 == 0 ? split_odd(there) : merge_even(there);
      if (back != d || !in_family(there, Family::Motzkin) || !is_symmetric(there)) ok = false;
      return true;
    });
    if (!ok) bad_merge.push_back(n);
  }
  checks.add("split_odd and merge_even are mutually inverse", bad_merge.empty(),
             std::to_string(symmetric) + " symmetric Motzkin diagrams on 1.." +
                 std::to_string(max_n) + " nodes" +
                 (bad_merge.empty() ? "" : "; fails at n = " + join_ints(bad_merge)));

  const int psi_top = (max_n + 1) / 2;
  const Sequence a = seq_a(std::max(psi_top, 1));
  std::vector<std::string> bad_psi;
  for (int n = 1; n <= psi_top; ++n) {
    std::set<TernaryWord> image;
    std::uint64_t seen = 0;
    bool in_set = true;
    enumerate(Family::Motzkin, 2 * n - 1, true, [&](const ArcDiagram& d) {
      ++seen;
      const TernaryWord w = psi(d);
      if (!in_ternary_set(w, n)) in_set = false;
      image.insert(w);
      return true;
    });
    const std::size_t target = enumerate_ternary(n).size();
    if (!in_set || image.size() != seen || BigCount(image.size()) != a[n] ||
        image.size() != target) {
      bad_psi.push_back("n = " + std::to_string(n) + ": " + std::to_string(seen) +
                        " diagrams, " + std::to_string(image.size()) + " images, a_n = " +
                        to_decimal(a[n]));
    }
  }
  std::string psi_detail = "n = 1.." + std::to_string(psi_top) + ", image size a_n";
  for (const auto& b : bad_psi) psi_detail += "; " + b;
  checks.add("psi is injective onto T_n", bad_psi.empty(), psi_detail);

  struct Example {
    const char* diagram;
    const char* word;
  };
  static const Example kExamples[] = {
      {"19;1-4,4-16,6-14,7-9,11-13,16-19", "2101012201"},
      {"9;1-9,2-8,3-7,4-6", "10022"},
      {"5;", "111"},
      {"5;1-5", "210"},
      {"5;2-4", "120"},
      {"5;1-5,2-4", "102"},
      {"5;1-3,3-5", "201"},
  };
  std::string example_detail;
  bool examples_ok = true;
  for (const auto& ex : kExamples) {
    const std::string got = psi(parse_diagram(ex.diagram)).str();
    if (got != ex.word) {
      examples_ok = false;
      example_detail += std::string(ex.diagram) + " -> " + got + " (want " + ex.word + "); ";
    }
  }
  if (examples_ok) example_detail = std::to_string(std::size(kExamples)) + " fixed inputs";
  checks.add("psi fixed examples", examples_ok, example_detail);
  return checks.take();
}

std::vector<CheckResult> run_scope(VerifyScope scope, int max_n) {
  switch (scope) {
    case VerifyScope::Tables: return run_tables(max_n);
    case VerifyScope::Oracle: return run_oracle(max_n);
    case VerifyScope::Roundtrip: return run_roundtrip(max_n);
    case VerifyScope::QConjecture: {
      Checks checks("qconjecture");
      checks.add(verify_q_conjecture(max_n));
      return checks.take();
    }
    case VerifyScope::Deutsch: {
      Checks checks("deutsch");
      checks.add(verify_R_parity_identities(max_n));
      checks.add(verify_deutsch(max_n));
      return checks.take();
    }
    case VerifyScope::AFormula: {
      Checks checks("aformula");
      checks.add(verify_a_formulas(max_n));
      checks.add(verify_L_interleaving(max_n));
      return checks.take();
    }
    case VerifyScope::All: break;
  }
  throw Error(ErrorCode::InvalidArgument, "scope 'all' cannot be run as a single scope");
}

int minimum_max(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::QConjecture: return 6;
    case VerifyScope::Deutsch: return 4;
    default: return 1;
  }
}

void require_max(VerifyScope scope, int max_n) {
  if (max_n < minimum_max(scope)) {
    throw Error(ErrorCode::OutOfRange, "--max for " + std::string(verify_scope_name(scope)) +
                                           " must be >= " + std::to_string(minimum_max(scope)));
  }
  if (scope == VerifyScope::Roundtrip && max_n > kRoundtripLimit) {
    throw Error(ErrorCode::ResourceLimit, "--max for roundtrip is limited to " +
                                              std::to_string(kRoundtripLimit) + " nodes");
  }
}

constexpr VerifyScope kSingleScopes[] = {VerifyScope::Tables,      VerifyScope::Oracle,
                                         VerifyScope::Roundtrip,   VerifyScope::QConjecture,
                                         VerifyScope::Deutsch,     VerifyScope::AFormula};

}  // namespace

std::string_view verify_scope_name(VerifyScope scope) noexcept {
  switch (scope) {
    case VerifyScope::Tables: return "tables";
    case VerifyScope::Oracle: return "oracle";
    case VerifyScope::Roundtrip: return "roundtrip";
    case VerifyScope::QConjecture: return "qconjecture";
    case VerifyScope::Deutsch: return "deutsch";
    case VerifyScope::AFormula: return "aformula";
    case VerifyScope::All: return "all";
  }
  return "?";
}

VerifyScope parse_verify_scope(std::string_view name) {
  for (VerifyScope s : kSingleScopes) {
    if (verify_scope_name(s) == name) return s;
  }
  if (name == "all") return VerifyScope::All;
  throw Error(ErrorCode::InvalidArgument, "unknown verify scope '" + std::string(name) +
                                              "' (tables, oracle, roundtrip, qconjecture, "
                                              "deutsch, aformula, all)");
}

int default_verify_max(VerifyScope scope) {
  switch (scope) {
    case VerifyScope::Tables: return 20;
    case VerifyScope::Oracle: return 18;
    case VerifyScope::Roundtrip: return 15;
    case VerifyScope::QConjecture: return 500;
    case VerifyScope::Deutsch: return 50;
    case VerifyScope::AFormula: return 200;
    case VerifyScope::All: return 0;
  }
  return 0;
}

bool VerifyReport::passed() const noexcept { return failed_count() == 0; }

std::size_t VerifyReport::failed_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

VerifyReport run_verify(VerifyScope scope, std::optional<int> max_n) {
  VerifyReport report{std::string(verify_scope_name(scope)), max_n, {}};
  if (scope != VerifyScope::All) {
    const int bound = max_n.value_or(default_verify_max(scope));
    require_max(scope, bound);
    report.max_n = bound;
    report.checks = run_scope(scope, bound);
    return report;
  }
  std::vector<std::pair<VerifyScope, int>> plan;
  for (VerifyScope s : kSingleScopes) {
    int bound = max_n.value_or(default_verify_max(s));
    if (s == VerifyScope::Roundtrip) bound = std::min(bound, kRoundtripLimit);
    require_max(s, bound);
    plan.emplace_back(s, bound);
  }
  std::vector<std::future<std::vector<CheckResult>>> running;
  for (const auto& [s, bound] : plan) {
    running.push_back(std::async(std::launch::async, run_scope, s, bound));
  }
  for (auto& f : running) {
    auto part = f.get();
    report.checks.insert(report.checks.end(), std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }
  return report;
}

std::string render_verify_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.scope << ": " << c.name << " [" << c.detail
        << "]\n";
  }
  out << report.checks.size() << " checks, " << report.failed_count() << " failed\n";
  return out.str();
}

std::string render_verify_json(const VerifyReport& report) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"scope", c.scope}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  nlohmann::ordered_json doc = {{"scope", report.scope},
                        {"max_n", report.max_n ? nlohmann::ordered_json(*report.max_n) : nlohmann::ordered_json(nullptr)},
                        {"passed", report.passed()},
                        {"failed", report.failed_count()},
                        {"checks", checks}};
  return doc.dump(2) + "\n";
}

}  // namespace arcdiag
