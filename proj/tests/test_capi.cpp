#include <arcdiag/arcdiag.h>

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

// Takes ownership of a string returned by the library.
std::string take(char* text) {
  std::string out = text ? text : "";
  arcdiag_string_free(text);
  return out;
}

struct DiagramPtr {
  arcdiag_diagram* p = nullptr;
  ~DiagramPtr() { arcdiag_diagram_free(p); }
};

std::string formatted(const arcdiag_diagram* d) {
  char* out = nullptr;
  EXPECT_EQ(arcdiag_diagram_format(d, &out), ARCDIAG_OK);
  return take(out);
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(arcdiag_version(), "");
  EXPECT_STREQ(arcdiag_status_name(ARCDIAG_OK), "ok");
  EXPECT_STRNE(arcdiag_status_name(ARCDIAG_RESOURCE_LIMIT), arcdiag_status_name(ARCDIAG_IO_ERROR));
}

TEST(CApi, DiagramHandles) {
  DiagramPtr d;
  ASSERT_EQ(arcdiag_diagram_parse("8;1-3,3-6,6-8,4-7", &d.p), ARCDIAG_OK);
  EXPECT_EQ(arcdiag_diagram_node_count(d.p), 8);
  EXPECT_EQ(arcdiag_diagram_arc_count(d.p), 4u);
  int l = 0, r = 0;
  ASSERT_EQ(arcdiag_diagram_arc(d.p, 1, &l, &r), ARCDIAG_OK);
  EXPECT_EQ(l, 3);
  EXPECT_EQ(r, 6);
  EXPECT_EQ(arcdiag_diagram_arc(d.p, 4, &l, &r), ARCDIAG_OUT_OF_RANGE);
  char* blocks = nullptr;
  ASSERT_EQ(arcdiag_diagram_blocks(d.p, &blocks), ARCDIAG_OK);
  EXPECT_EQ(take(blocks), "{1,3,6,8}|{2}|{4,7}|{5}");
  int v = -1;
  EXPECT_EQ(arcdiag_diagram_component_count(d.p, &v), ARCDIAG_OK);
  EXPECT_EQ(v, 4);
  EXPECT_EQ(arcdiag_diagram_isolated_count(d.p, &v), ARCDIAG_OK);
  EXPECT_EQ(v, 2);
  EXPECT_EQ(arcdiag_diagram_in_family(d.p, ARCDIAG_BELL, &v), ARCDIAG_OK);
  EXPECT_EQ(v, 1);
  EXPECT_EQ(arcdiag_diagram_in_family(d.p, ARCDIAG_MOTZKIN, &v), ARCDIAG_OK);
  EXPECT_EQ(v, 0);

  arcdiag_diagram* copy = arcdiag_diagram_clone(d.p);
  ASSERT_NE(copy, nullptr);
  EXPECT_EQ(formatted(copy), "8;1-3,3-6,4-7,6-8");
  arcdiag_diagram_free(copy);
  arcdiag_diagram_free(nullptr);

  DiagramPtr rc;
  ASSERT_EQ(arcdiag_diagram_reverse_complement(d.p, &rc.p), ARCDIAG_OK);
  EXPECT_EQ(formatted(rc.p), "8;1-3,2-5,3-6,6-8");
}

TEST(CApi, CreateAndValidity) {
  const int lefts[] = {1, 2};
  const int rights[] = {3, 3};
  DiagramPtr d;
  ASSERT_EQ(arcdiag_diagram_create(4, lefts, rights, 2, &d.p), ARCDIAG_OK);
  int valid = -1;
  EXPECT_EQ(arcdiag_diagram_is_valid(d.p, &valid), ARCDIAG_OK);
  EXPECT_EQ(valid, 0);
  int sym = 0;
  EXPECT_EQ(arcdiag_diagram_is_symmetric(d.p, &sym), ARCDIAG_INVALID_DIAGRAM);
  EXPECT_NE(std::string(arcdiag_last_error()), "");
  DiagramPtr empty;
  EXPECT_EQ(arcdiag_diagram_create(3, nullptr, nullptr, 0, &empty.p), ARCDIAG_OK);
  EXPECT_EQ(formatted(empty.p), "3;");
}

TEST(CApi, ErrorsAndNullPointers) {
  arcdiag_diagram* d = nullptr;
  EXPECT_EQ(arcdiag_diagram_parse("5;1-", &d), ARCDIAG_PARSE_ERROR);
  EXPECT_EQ(d, nullptr);
  EXPECT_NE(std::string(arcdiag_last_error()).find("5;1-"), std::string::npos);
  EXPECT_EQ(arcdiag_diagram_parse(nullptr, &d), ARCDIAG_INVALID_ARGUMENT);
  EXPECT_EQ(arcdiag_diagram_parse("5;", nullptr), ARCDIAG_INVALID_ARGUMENT);
  EXPECT_EQ(arcdiag_count(ARCDIAG_MOTZKIN, 5, 0, ARCDIAG_METHOD_RECURRENCE, 0, nullptr),
            ARCDIAG_INVALID_ARGUMENT);
  arcdiag_family f;
  EXPECT_EQ(arcdiag_parse_family("chains", &f), ARCDIAG_INVALID_ARGUMENT);
  EXPECT_EQ(arcdiag_parse_family("motzkin", &f), ARCDIAG_OK);
  EXPECT_EQ(f, ARCDIAG_MOTZKIN);
  char* out = nullptr;
  EXPECT_EQ(arcdiag_sequence_value("Z", 3, &out), ARCDIAG_INVALID_ARGUMENT);
  EXPECT_EQ(arcdiag_sequence_value("P", 0, &out), ARCDIAG_OUT_OF_RANGE);
}

TEST(CApi, Counting) {
  char* out = nullptr;
  ASSERT_EQ(arcdiag_count(ARCDIAG_NC_MATCHING, 12, 1, ARCDIAG_METHOD_RECURRENCE, 0, &out),
            ARCDIAG_OK);
  EXPECT_EQ(take(out), "71");
  ASSERT_EQ(arcdiag_count(ARCDIAG_NC_MATCHING, 12, 1, ARCDIAG_METHOD_ORACLE, 0, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "71");
  ASSERT_EQ(arcdiag_count(ARCDIAG_NC_MATCHING, 400, 0, ARCDIAG_METHOD_RECURRENCE, 0, &out),
            ARCDIAG_OK);
  EXPECT_GT(take(out).size(), 100u);
  EXPECT_EQ(arcdiag_count(ARCDIAG_MATCHING, 30, 0, ARCDIAG_METHOD_ORACLE, 0, &out),
            ARCDIAG_RESOURCE_LIMIT);
  EXPECT_EQ(arcdiag_count(ARCDIAG_MATCHING, 10, 0, ARCDIAG_METHOD_ORACLE, 8, &out),
            ARCDIAG_RESOURCE_LIMIT);
  EXPECT_EQ(arcdiag_count(static_cast<arcdiag_family>(9), 3, 0, ARCDIAG_METHOD_ORACLE, 0, &out),
            ARCDIAG_INVALID_ARGUMENT);
  ASSERT_EQ(arcdiag_count_by_statistic(ARCDIAG_MATCHING, 4, 0, ARCDIAG_STAT_ISOLATED_NODES, 0,
                                       &out),
            ARCDIAG_OK);
  EXPECT_EQ(take(out), R"({"0":"1","2":"3","4":"1"})");
}

struct Collected {
  std::vector<std::string> seen;
  std::size_t stop_after = 0;
};

int collect(const arcdiag_diagram* d, void* user) {
  auto* c = static_cast<Collected*>(user);
  c->seen.push_back(formatted(d));
  return c->seen.size() < c->stop_after;
}

TEST(CApi, EnumerateWithEarlyStop) {
  Collected all{{}, 1000};
  ASSERT_EQ(arcdiag_enumerate(ARCDIAG_MOTZKIN, 5, 1, 0, collect, &all), ARCDIAG_OK);
  EXPECT_EQ(all.seen.size(), 5u);
  Collected two{{}, 2};
  ASSERT_EQ(arcdiag_enumerate(ARCDIAG_MOTZKIN, 5, 1, 0, collect, &two), ARCDIAG_OK);
  ASSERT_EQ(two.seen.size(), 2u);
  EXPECT_EQ(two.seen[0], all.seen[0]);
  EXPECT_EQ(two.seen[1], all.seen[1]);
  EXPECT_EQ(arcdiag_enumerate(ARCDIAG_MOTZKIN, 5, 1, 0, nullptr, nullptr), ARCDIAG_INVALID_ARGUMENT);
}

TEST(CApi, EnvironmentCap) {
  int cap = 0;
  unsetenv("ARCDIAG_ENUM_CAP");
  ASSERT_EQ(arcdiag_default_cap(ARCDIAG_MOTZKIN, &cap), ARCDIAG_OK);
  EXPECT_EQ(cap, 20);
  ASSERT_EQ(arcdiag_default_cap(ARCDIAG_BELL, &cap), ARCDIAG_OK);
  EXPECT_EQ(cap, 16);
  setenv("ARCDIAG_ENUM_CAP", "5", 1);
  ASSERT_EQ(arcdiag_default_cap(ARCDIAG_MOTZKIN, &cap), ARCDIAG_OK);
  EXPECT_EQ(cap, 5);
  char* out = nullptr;
  EXPECT_EQ(arcdiag_count(ARCDIAG_MOTZKIN, 6, 0, ARCDIAG_METHOD_ORACLE, 0, &out),
            ARCDIAG_RESOURCE_LIMIT);
  ASSERT_EQ(arcdiag_count(ARCDIAG_MOTZKIN, 6, 0, ARCDIAG_METHOD_ORACLE, 6, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "21");
  setenv("ARCDIAG_ENUM_CAP", "five", 1);
  EXPECT_EQ(arcdiag_default_cap(ARCDIAG_MOTZKIN, &cap), ARCDIAG_INVALID_ARGUMENT);
  unsetenv("ARCDIAG_ENUM_CAP");
}

TEST(CApi, SequencesAndFiles) {
  int offset = -1;
  ASSERT_EQ(arcdiag_sequence_offset("P", &offset), ARCDIAG_OK);
  EXPECT_EQ(offset, 1);
  char* out = nullptr;
  ASSERT_EQ(arcdiag_sequence_label("R", &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "A088518");
  ASSERT_EQ(arcdiag_sequence_value("BELL", 5, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "52");
  ASSERT_EQ(arcdiag_bfile_text("R", 12, &out), ARCDIAG_OK);
  const std::string text = take(out);
  EXPECT_EQ(text.substr(text.size() - 6), "12 71\n");

  const auto path = std::filesystem::temp_directory_path() / "arcdiag_capi_bfile.txt";
  ASSERT_EQ(arcdiag_bfile_write("R", 12, path.c_str()), ARCDIAG_OK);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), text);
  std::filesystem::remove(path);
  EXPECT_EQ(arcdiag_bfile_write("R", 12, "/nonexistent-dir/b.txt"), ARCDIAG_IO_ERROR);

  ASSERT_EQ(arcdiag_triangle_render("A", 10, "csv", &out), ARCDIAG_OK);
  EXPECT_NE(take(out).find("\n10,5,95\n"), std::string::npos);
  EXPECT_EQ(arcdiag_triangle_render("A", 10, "xml", &out), ARCDIAG_INVALID_ARGUMENT);
}

TEST(CApi, Bijections) {
  DiagramPtr d;
  ASSERT_EQ(arcdiag_diagram_parse("9;1-9,2-8,3-7,4-6", &d.p), ARCDIAG_OK);
  char* out = nullptr;
  ASSERT_EQ(arcdiag_psi(d.p, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "10022");
  ASSERT_EQ(arcdiag_psi_case(d.p, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "full-ascent");
  ASSERT_EQ(arcdiag_phi_left(d.p, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "UUUU");
  ASSERT_EQ(arcdiag_tau("UHDUHUUDH", &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "210212201");

  DiagramPtr p;
  ASSERT_EQ(arcdiag_phi("UUDHDUHD", &p.p), ARCDIAG_OK);
  EXPECT_EQ(formatted(p.p), "9;1-6,2-4,6-9");
  ASSERT_EQ(arcdiag_phi_inverse(p.p, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "UUDHDUHD");
  DiagramPtr bad_path;
  EXPECT_EQ(arcdiag_phi("UU", &bad_path.p), ARCDIAG_INVALID_ARGUMENT);

  DiagramPtr odd, even, back;
  ASSERT_EQ(arcdiag_diagram_parse("5;1-3,3-5", &odd.p), ARCDIAG_OK);
  ASSERT_EQ(arcdiag_split_odd(odd.p, &even.p), ARCDIAG_OK);
  EXPECT_EQ(formatted(even.p), "6;1-3,4-6");
  ASSERT_EQ(arcdiag_merge_even(even.p, &back.p), ARCDIAG_OK);
  EXPECT_EQ(formatted(back.p), "5;1-3,3-5");
  DiagramPtr none;
  EXPECT_EQ(arcdiag_merge_even(odd.p, &none.p), ARCDIAG_WRONG_PARITY);

  DiagramPtr asym;
  ASSERT_EQ(arcdiag_diagram_parse("5;1-3", &asym.p), ARCDIAG_OK);
  EXPECT_EQ(arcdiag_psi(asym.p, &out), ARCDIAG_NOT_SYMMETRIC);
  DiagramPtr crossing;
  ASSERT_EQ(arcdiag_diagram_parse("5;1-4,2-5", &crossing.p), ARCDIAG_OK);
  EXPECT_EQ(arcdiag_psi(crossing.p, &out), ARCDIAG_WRONG_FAMILY);

  ASSERT_EQ(arcdiag_ternary_words(3, &out), ARCDIAG_OK);
  EXPECT_EQ(take(out), "102\n111\n120\n201\n210\n");
}

TEST(CApi, AnalysisAndVerify) {
  char* out = nullptr;
  ASSERT_EQ(arcdiag_ratio_table(5, 10, 5, "csv", &out), ARCDIAG_OK);
  EXPECT_EQ(take(out),
            "n,R/S,L/M,Q/P,A/B\n5,0.2941176471,0.2380952381,0.2972972973,0.2307692308\n");
  EXPECT_EQ(arcdiag_ratio_table(5, 0, 5, "csv", &out), ARCDIAG_INVALID_ARGUMENT);
  double c1 = 0, c2 = 0, m = 0;
  ASSERT_EQ(arcdiag_asymptotic_estimate(500, 30, &c1, &c2, &m), ARCDIAG_OK);
  EXPECT_NEAR(c1, 1.104, 0.1);
  EXPECT_NEAR(c2, 0.863, 0.1);
  EXPECT_EQ(arcdiag_asymptotic_estimate(500, 5, &c1, &c2, &m), ARCDIAG_INVALID_ARGUMENT);
  int passed = -1;
  ASSERT_EQ(arcdiag_decay_check(40, 20, 0, &out, &passed), ARCDIAG_OK);
  arcdiag_string_free(out);
  EXPECT_EQ(passed, 0);
  ASSERT_EQ(arcdiag_verify("deutsch", 0, 1, &out, &passed), ARCDIAG_OK);
  EXPECT_NE(take(out).find("\"scope\""), std::string::npos);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(arcdiag_verify("everything", 0, 0, &out, &passed), ARCDIAG_INVALID_ARGUMENT);
}

}  // namespace
