#pragma once

#include "bigcount.hpp"

#include <string>
#include <vector>

namespace arcdiag {

/// Ratio table rows are labelled one below the node count they are computed
/// at: row n holds R_{n+1}/S_{n+1}, L_{n+1}/M_{n+1}, Q_{n+1}/P_{n+1} and
/// A_{n+1}/B_n (B_n counts the Bell-type diagrams on n + 1 nodes).
inline constexpr int kRatioRowNodeOffset = 1;

struct RatioRow {
  int n = 0;
  std::string r_over_s;
  std::string l_over_m;
  std::string q_over_p;
  std::string a_over_b;
};

/// num / den as a decimal with exactly `digits` places, rounded half to even.
/// Requires num >= 0, den > 0, digits >= 1.
std::string round_ratio(const BigCount& num, const BigCount& den, int digits);

/// Rows min_n..max_n. Throws Error(InvalidArgument) if digits < 1,
/// min_n < 0 or max_n < min_n.
std::vector<RatioRow> ratio_table(int max_n, int digits, int min_n = 5);

std::string render_ratio_csv(const std::vector<RatioRow>& rows);
std::string render_ratio_text(const std::vector<RatioRow>& rows);
std::string render_ratio_json(const std::vector<RatioRow>& rows);

struct AsymptoticEstimate {
  int n = 0;
  double c1_hat = 0;  // S_n n^{3/2} / (1 + phi)^n
  double c2_hat = 0;  // R_n n^{1/2} / phi^n
  double m_hat = 0;   // M_n n^{3/2} sqrt(4 pi / 3) / 3^n
};

/// Estimates at n = 10, 20, 40, ... (doubling) and at max_n, evaluated in
/// MPFR with `precision_digits` decimal digits (at least 20).
/// Throws Error(Precision) if an estimate is not a finite positive double.
std::vector<AsymptoticEstimate> asymptotic_report(int max_n, int precision_digits = 30);
AsymptoticEstimate asymptotic_estimate(int n, int precision_digits = 30);

std::string render_asymptotics_text(const std::vector<AsymptoticEstimate>& rows);
std::string render_asymptotics_json(const std::vector<AsymptoticEstimate>& rows);

struct DecayReport {
  int from = 0;
  int to = 0;
  /// n where 3 L_n^2 3^n < 8 n^2 M_n^2 fails (exact integer comparison).
  std::vector<int> bound_failures;
  /// Largest (3 L_n^2 3^n) / (8 n^2 M_n^2) over the range, and where it occurs.
  double worst_bound_ratio = 0;
  int worst_bound_n = 0;
  /// (n, (R_n / S_n) phi^n / n), to compare with c2 / c1.
  std::vector<std::pair<int, double>> rs_trend;
  /// Per ratio column: strictly decreasing along even row labels >= 6.
  /// Informational only.
  bool monotone_even[4] = {false, false, false, false};

  bool passed() const noexcept { return bound_failures.empty(); }
};

/// Requires max_n >= from >= 1.
DecayReport decay_check(int max_n, int from = 20);

std::string render_decay_text(const DecayReport& report);
std::string render_decay_json(const DecayReport& report);

}  // namespace arcdiag
