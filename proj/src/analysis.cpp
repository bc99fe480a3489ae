#include "analysis.hpp"

#include "errors.hpp"
#include "recurrences.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace arcdiag {

namespace {

using Float = boost::multiprecision::mpfr_float;

// Restores the thread's default MPFR precision on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Float::default_precision()) {
    Float::default_precision(digits10);
  }
  ~PrecisionScope() { Float::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

double finite_positive(const Float& value, const char* what, int n) {
  const double out = value.convert_to<double>();
  if (!boost::multiprecision::isfinite(value) || !std::isfinite(out) || !(out > 0)) {
    throw Error(ErrorCode::Precision, std::string(what) + " at n = " + std::to_string(n) +
                                          " is not representable; raise the precision");
  }
  return out;
}

struct AsymptoticInputs {
  Sequence s, r, m;
};

AsymptoticEstimate estimate_from(const AsymptoticInputs& in, int n) {
  const Float phi = (1 + boost::multiprecision::sqrt(Float(5))) / 2;
  const Float nn(n);
  const Float n_sqrt = boost::multiprecision::sqrt(nn);
  const Float n_three_halves = nn * n_sqrt;
  const Float pi = boost::math::constants::pi<Float>();

  const Float c1 = Float(in.s[n]) * n_three_halves / boost::multiprecision::pow(1 + phi, n);
  const Float c2 = Float(in.r[n]) * n_sqrt / boost::multiprecision::pow(phi, n);
  const Float mh = Float(in.m[n]) * n_three_halves * boost::multiprecision::sqrt(4 * pi / 3) /
                   boost::multiprecision::pow(Float(3), n);

  AsymptoticEstimate e;
  e.n = n;
  e.c1_hat = finite_positive(c1, "c1_hat", n);
  e.c2_hat = finite_positive(c2, "c2_hat", n);
  e.m_hat = finite_positive(mh, "m_hat", n);
  return e;
}

void require_precision(int precision_digits) {
  if (precision_digits < 20) {
    throw Error(ErrorCode::InvalidArgument,
                "precision must be at least 20 decimal digits (64-bit mantissa)");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

}  // namespace

std::string round_ratio(const BigCount& num, const BigCount& den, int digits) {
  if (digits < 1) throw Error(ErrorCode::InvalidArgument, "digits must be >= 1");
  if (num < 0 || den <= 0) {
    throw Error(ErrorCode::InvalidArgument, "ratio needs num >= 0 and den > 0");
  }
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigCount scaled = num * scale;
  BigCount quotient = scaled / den;
  const BigCount remainder = scaled - quotient * den;
  const BigCount twice = 2 * remainder;
  if (twice > den || (twice == den && quotient % 2 == 1)) quotient += 1;

  const BigCount whole = quotient / scale;
  std::string frac = BigCount(quotient % scale).str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return whole.str() + "." + frac;
}

std::vector<RatioRow> ratio_table(int max_n, int digits, int min_n) {
  if (digits < 1) throw Error(ErrorCode::InvalidArgument, "digits must be >= 1");
  if (min_n < 0 || max_n < min_n) {
    throw Error(ErrorCode::InvalidArgument, "ratio table needs 0 <= min_n <= max_n");
  }
  const int top = max_n + kRatioRowNodeOffset;
  const Sequence s = seq_S(top), r = seq_R(top), p = seq_P(top), q = seq_Q(top);
  const Sequence m = seq_M(top), l = seq_L(top), a = seq_A(top), bell = seq_bell(max_n);

  std::vector<RatioRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    const int nodes = n + kRatioRowNodeOffset;
    rows.push_back({n, round_ratio(r[nodes], s[nodes], digits),
                    round_ratio(l[nodes], m[nodes], digits),
                    round_ratio(q[nodes], p[nodes], digits),
                    round_ratio(a[nodes], bell[nodes - 1], digits)});
  }
  return rows;
}

std::string render_ratio_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << "n,R/S,L/M,Q/P,A/B\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.r_over_s << ',' << row.l_over_m << ',' << row.q_over_p << ','
        << row.a_over_b << '\n';
  }
  return out.str();
}

std::string render_ratio_text(const std::vector<RatioRow>& rows) {
  std::size_t width = 4;
  for (const auto& row : rows) {
    for (const auto* cell : {&row.r_over_s, &row.l_over_m, &row.q_over_p, &row.a_over_b}) {
      width = std::max(width, cell->size());
    }
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << pad("n", 4);
  for (const char* head : {"R/S", "L/M", "Q/P", "A/B"}) out << "  " << pad(head, width);
  out << '\n';
  for (const auto& row : rows) {
    out << pad(std::to_string(row.n), 4);
    for (const auto* cell : {&row.r_over_s, &row.l_over_m, &row.q_over_p, &row.a_over_b}) {
      out << "  " << pad(*cell, width);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_ratio_json(const std::vector<RatioRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    doc.push_back({{"n", row.n},
                   {"nodes", row.n + kRatioRowNodeOffset},
                   {"r_over_s", row.r_over_s},
                   {"l_over_m", row.l_over_m},
                   {"q_over_p", row.q_over_p},
                   {"a_over_b", row.a_over_b}});
  }
  return doc.dump(2) + "\n";
}

AsymptoticEstimate asymptotic_estimate(int n, int precision_digits) {
  require_precision(precision_digits);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const PrecisionScope scope(static_cast<unsigned>(precision_digits));
  return estimate_from({seq_S(n), seq_R(n), seq_M(n)}, n);
}

std::vector<AsymptoticEstimate> asymptotic_report(int max_n, int precision_digits) {
  require_precision(precision_digits);
  if (max_n < 10) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 10");
  const PrecisionScope scope(static_cast<unsigned>(precision_digits));
  const AsymptoticInputs in{seq_S(max_n), seq_R(max_n), seq_M(max_n)};
  std::vector<AsymptoticEstimate> out;
  for (int n = 10; n < max_n; n *= 2) out.push_back(estimate_from(in, n));
  out.push_back(estimate_from(in, max_n));
  return out;
}

std::string render_asymptotics_text(const std::vector<AsymptoticEstimate>& rows) {
  std::ostringstream out;
  out << "       n        c1_hat        c2_hat         m_hat\n";
  for (const auto& e : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%8d  %12.10f  %12.10f  %12.10f\n", e.n, e.c1_hat,
                  e.c2_hat, e.m_hat);
    out << line;
  }
  return out.str();
}

std::string render_asymptotics_json(const std::vector<AsymptoticEstimate>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : rows) {
    doc.push_back({{"n", e.n},
                   {"c1_hat", format_double(e.c1_hat)},
                   {"c2_hat", format_double(e.c2_hat)},
                   {"m_hat", format_double(e.m_hat)}});
  }
  return doc.dump(2) + "\n";
}

DecayReport decay_check(int max_n, int from) {
  if (from < 1 || max_n < from) {
    throw Error(ErrorCode::InvalidArgument, "decay check needs 1 <= from <= max_n");
  }
  DecayReport report;
  report.from = from;
  report.to = max_n;

  const Sequence l = seq_L(max_n), m = seq_M(max_n);
  BigCount three_pow = 1;
  for (int n = 1; n <= max_n; ++n) {
    three_pow *= 3;
    if (n < from) continue;
    const BigCount lhs = 3 * l[n] * l[n] * three_pow;
    const BigCount rhs = 8 * BigCount(n) * n * m[n] * m[n];
    if (!(lhs < rhs)) report.bound_failures.push_back(n);
    const double ratio = boost::multiprecision::mpq_rational(lhs, rhs).convert_to<double>();
    if (ratio > report.worst_bound_ratio) {
      report.worst_bound_ratio = ratio;
      report.worst_bound_n = n;
    }
  }

  {
    const PrecisionScope scope(30);
    const Sequence s = seq_S(max_n), r = seq_R(max_n);
    const Float phi = (1 + boost::multiprecision::sqrt(Float(5))) / 2;
    for (int n = from; n <= max_n; n += std::max(1, (max_n - from) / 10)) {
      const Float v = Float(r[n]) / Float(s[n]) * boost::multiprecision::pow(phi, n) / n;
      report.rs_trend.emplace_back(n, v.convert_to<double>());
    }
    if (report.rs_trend.back().first != max_n) {
      const Float v = Float(r[max_n]) / Float(s[max_n]) *
                      boost::multiprecision::pow(phi, max_n) / max_n;
      report.rs_trend.emplace_back(max_n, v.convert_to<double>());
    }
  }

  // Compare exact fractions x/y > u/v as x*v > u*y, row by row.
  const int top = max_n + kRatioRowNodeOffset;
  const Sequence s = seq_S(top), r = seq_R(top), p = seq_P(top), q = seq_Q(top);
  const Sequence mm = seq_M(top), ll = seq_L(top), a = seq_A(top), bell = seq_bell(max_n);
  auto num_den = [&](int column, int row) -> std::pair<BigCount, BigCount> {
    const int nodes = row + kRatioRowNodeOffset;
    switch (column) {
      case 0: return {r[nodes], s[nodes]};
      case 1: return {ll[nodes], mm[nodes]};
      case 2: return {q[nodes], p[nodes]};
      default: return {a[nodes], bell[nodes - 1]};
    }
  };
  for (int column = 0; column < 4; ++column) {
    bool decreasing = true;
    for (int row = 8; row <= max_n; row += 2) {
      const auto [x, y] = num_den(column, row - 2);
      const auto [u, v] = num_den(column, row);
      if (!(x * v > u * y)) decreasing = false;
    }
    report.monotone_even[column] = decreasing;
  }
  return report;
}

std::string render_decay_text(const DecayReport& report) {
  std::ostringstream out;
  out << "L/M bound (3 L^2 3^n < 8 n^2 M^2) for " << report.from << " <= n <= " << report.to
      << ": " << (report.passed() ? "holds" : "FAILS");
  if (!report.passed()) {
    out << " at n =";
    for (int n : report.bound_failures) out << ' ' << n;
  }
  out << "\nlargest lhs/rhs: " << format_double(report.worst_bound_ratio) << " at n = "
      << report.worst_bound_n;
  out << "\n(R_n/S_n) phi^n / n, compare c2/c1 ~ 0.78:\n";
  for (const auto& [n, v] : report.rs_trend) out << "  n = " << n << ": " << format_double(v) << '\n';
  static const char* kNames[] = {"R/S", "L/M", "Q/P", "A/B"};
  out << "decreasing along even n >= 6:";
  for (int c = 0; c < 4; ++c) {
    out << ' ' << kNames[c] << '=' << (report.monotone_even[c] ? "yes" : "no");
  }
  out << '\n';
  return out.str();
}

std::string render_decay_json(const DecayReport& report) {
  nlohmann::ordered_json trend = nlohmann::ordered_json::array();
  for (const auto& [n, v] : report.rs_trend) trend.push_back({{"n", n}, {"value", format_double(v)}});
  nlohmann::ordered_json doc = {
      {"from", report.from},
      {"to", report.to},
      {"bound_holds", report.passed()},
      {"bound_failures", report.bound_failures},
      {"worst_bound_ratio", format_double(report.worst_bound_ratio)},
      {"worst_bound_n", report.worst_bound_n},
      {"rs_trend", trend},
      {"monotone_even",
       {{"r_over_s", report.monotone_even[0]},
        {"l_over_m", report.monotone_even[1]},
        {"q_over_p", report.monotone_even[2]},
        {"a_over_b", report.monotone_even[3]}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace arcdiag
