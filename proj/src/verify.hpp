#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arcdiag {

enum class VerifyScope { Tables, Oracle, Roundtrip, QConjecture, Deutsch, AFormula, All };

std::string_view verify_scope_name(VerifyScope scope) noexcept;
VerifyScope parse_verify_scope(std::string_view name);

/// Bound used when --max is not given:
///   tables 20, oracle 18, roundtrip 15, qconjecture 500, deutsch 50, aformula 200.
int default_verify_max(VerifyScope scope);

struct CheckResult {
  std::string scope;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string scope;
  std::optional<int> max_n;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
  std::size_t failed_count() const noexcept;
};

/// Runs one scope (or all of them) up to max_n, or each scope's default.
///
///   tables       printed triangle rows and sums, sequence listings, ratio
///                table rows up to max_n, pentagonal column and Q(2n, 2n-2)
///   oracle       enumeration vs recurrence for every family and symmetric
///                subset, and the statistic histograms vs the triangles; n is
///                clamped per family (S,R 18; P,Q 14; M,L 16; A,Bell 13)
///   roundtrip    phi, merge/split and psi on every diagram with <= max_n nodes
///                (max_n <= 17), plus the fixed psi examples
///   qconjecture  the five-term q_n recurrence for 6 <= n <= max_n
///   deutsch      R parity relations and the Fibonacci relation
///   aformula     both a_n formulas and L_{2n} = L_{2n-1}
///
/// `all` runs the scopes concurrently and reports them in the order above.
VerifyReport run_verify(VerifyScope scope, std::optional<int> max_n = std::nullopt);

std::string render_verify_text(const VerifyReport& report);
/// Layout described by docs/verify_report.schema.json.
std::string render_verify_json(const VerifyReport& report);

}  // namespace arcdiag
