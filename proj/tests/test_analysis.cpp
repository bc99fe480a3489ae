#include "analysis.hpp"
#include "errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <sstream>

namespace arcdiag {
namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in) << path;
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

TEST(RoundRatio, HalfEven) {
  EXPECT_EQ(round_ratio(1, 8, 2), "0.12");
  EXPECT_EQ(round_ratio(3, 8, 2), "0.38");
  EXPECT_EQ(round_ratio(5, 8, 2), "0.62");
  EXPECT_EQ(round_ratio(1, 3, 4), "0.3333");
  EXPECT_EQ(round_ratio(2, 3, 4), "0.6667");
  EXPECT_EQ(round_ratio(5, 17, 10), "0.2941176471");
  EXPECT_EQ(round_ratio(1, 1, 3), "1.000");
  EXPECT_EQ(round_ratio(0, 7, 3), "0.000");
  EXPECT_EQ(round_ratio(199, 100, 1), "2.0");
  EXPECT_THROW(round_ratio(1, 0, 3), Error);
  EXPECT_THROW(round_ratio(1, 2, 0), Error);
}

TEST(RatioTable, MatchesPublishedTable) {
  const auto expected = read_csv(std::string(ARCDIAG_TEST_DATA_DIR) + "/ratio_table.csv");
  ASSERT_EQ(expected.size(), 17u);
  const auto rows = ratio_table(20, 10);
  ASSERT_EQ(rows.size(), 16u);
  int matched = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& want = expected[i + 1];
    ASSERT_EQ(want.size(), 5u);
    EXPECT_EQ(std::to_string(rows[i].n), want[0]);
    const std::string got[4] = {rows[i].r_over_s, rows[i].l_over_m, rows[i].q_over_p,
                                rows[i].a_over_b};
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(got[c], want[c + 1]) << "row " << want[0] << " column " << c;
      matched += got[c] == want[c + 1];
    }
  }
  EXPECT_EQ(matched, 64);
}

TEST(RatioTable, CsvRendering) {
  const std::string csv = render_ratio_csv(ratio_table(6, 10));
  EXPECT_EQ(csv,
            "n,R/S,L/M,Q/P,A/B\n"
            "5,0.2941176471,0.2380952381,0.2972972973,0.2307692308\n"
            "6,0.2432432432,0.2549019608,0.1428571429,0.1527093596\n");
  EXPECT_NE(render_ratio_json(ratio_table(5, 4)).find("\"0.2941\""), std::string::npos);
  EXPECT_NE(render_ratio_text(ratio_table(5, 4)).find("0.2941"), std::string::npos);
}

TEST(RatioTable, Arguments) {
  EXPECT_THROW(ratio_table(20, 0), Error);
  EXPECT_THROW(ratio_table(4, 10), Error);
  EXPECT_THROW(ratio_table(5, 10, -1), Error);
  EXPECT_EQ(ratio_table(3, 4, 0).size(), 4u);
  EXPECT_EQ(ratio_table(3, 4, 0)[0].r_over_s, "1.0000");
}

TEST(Asymptotics, EstimatesApproachConstants) {
  const AsymptoticEstimate e = asymptotic_estimate(2000);
  EXPECT_EQ(e.n, 2000);
  EXPECT_NEAR(e.c1_hat, 1.104, 0.05 * 1.104);
  EXPECT_NEAR(e.c2_hat, 0.863, 0.05 * 0.863);
  EXPECT_NEAR(e.m_hat, 1.0, 0.01);
}

TEST(Asymptotics, MotzkinNormalisationConverges) {
  const auto rows = asymptotic_report(640);
  ASSERT_EQ(rows.back().n, 640);
  ASSERT_EQ(rows.front().n, 10);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(std::abs(rows[i].m_hat - 1), std::abs(rows[i - 1].m_hat - 1));
  }
}

TEST(Asymptotics, PrecisionArgument) {
  try {
    asymptotic_estimate(100, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
  EXPECT_NEAR(asymptotic_estimate(100, 20).c1_hat, asymptotic_estimate(100, 60).c1_hat, 1e-12);
}

// Independent oracle for the L/M bound: Motzkin numbers from the holonomic
// recurrence, L from a_{k+1} = 3 a_k - M_k and L_{2k-1} = L_{2k} = a_k.
std::vector<int> bound_failures_oracle(int from, int to) {
  std::vector<BigCount> m(to + 1);
  m[0] = m[1] = 1;
  for (int k = 2; k <= to; ++k) m[k] = ((2 * k + 1) * m[k - 1] + 3 * (k - 1) * m[k - 2]) / (k + 2);
  auto big_m = [&](int n) { return n == 0 ? BigCount(1) : m[n - 1]; };
  std::vector<BigCount> a(to / 2 + 2);
  a[1] = 1;
  for (int k = 1; k + 1 < static_cast<int>(a.size()); ++k) a[k + 1] = 3 * a[k] - big_m(k);
  std::vector<int> failures;
  BigCount pow3 = 1;
  for (int n = 1; n <= to; ++n) {
    pow3 *= 3;
    if (n < from) continue;
    const BigCount l = a[(n + 1) / 2];
    const BigCount lhs = 3 * l * l * pow3;
    const BigCount rhs = 8 * BigCount(n) * n * big_m(n) * big_m(n);
    if (!(lhs < rhs)) failures.push_back(n);
  }
  return failures;
}

TEST(Decay, BoundFailuresAgreeWithIndependentOracle) {
  const DecayReport r = decay_check(200, 20);
  EXPECT_EQ(r.from, 20);
  EXPECT_EQ(r.to, 200);
  EXPECT_EQ(r.bound_failures, bound_failures_oracle(20, 200));
  // Recorded finding: the bound is tight at odd n and fails there.
  std::vector<int> odd;
  for (int n = 21; n <= 199; n += 2) odd.push_back(n);
  EXPECT_EQ(r.bound_failures, odd);
  EXPECT_EQ(r.worst_bound_n, 21);
  EXPECT_NEAR(r.worst_bound_ratio, 1.0298, 1e-3);
  EXPECT_FALSE(r.passed());
}

TEST(Decay, TrendAndMonotonicity) {
  const DecayReport r = decay_check(200, 20);
  ASSERT_FALSE(r.rs_trend.empty());
  EXPECT_NEAR(r.rs_trend.back().second, 0.863 / 1.104, 0.03);
  for (bool m : r.monotone_even) EXPECT_TRUE(m);
  EXPECT_NE(render_decay_json(r).find("\"bound_failures\""), std::string::npos);
  EXPECT_THROW(decay_check(10, 20), Error);
  EXPECT_THROW(decay_check(10, 0), Error);
}

}  // namespace
}  // namespace arcdiag
