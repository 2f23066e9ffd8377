#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "surfcolor/surfcolor.h"

namespace {

std::string fixture(const std::string& name) {
  return std::string(SURFCOLOR_FIXTURE_DIR) + "/" + name;
}

sc_instance* load(const std::string& name) {
  sc_instance* inst = nullptr;
  EXPECT_EQ(sc_instance_read(fixture(name).c_str(), &inst), SC_OK) << sc_last_error();
  return inst;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  sc_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, DecideAndColorTorus) {
  sc_instance* inst = load("torus4x4.txt");
  ASSERT_NE(inst, nullptr);
  EXPECT_EQ(sc_instance_vertex_count(inst), 16);
  EXPECT_EQ(sc_instance_edge_count(inst), 32);
  int yes = -1;
  char* json = nullptr;
  ASSERT_EQ(sc_decide(inst, nullptr, &yes, &json), SC_OK);
  EXPECT_EQ(yes, 1);
  EXPECT_NE(take(json).find("\"answer\":\"YES\""), std::string::npos);
  std::vector<int> colors(sc_instance_vertex_capacity(inst));
  ASSERT_EQ(sc_color(inst, nullptr, colors.data(), nullptr), SC_OK);
  EXPECT_EQ(sc_verify_coloring(inst, colors.data()), 1);
  colors[0] = colors[1];
  EXPECT_EQ(sc_verify_coloring(inst, colors.data()), 0);
  sc_instance_free(inst);
}

TEST(CApi, GrotzschIsNo) {
  sc_instance* inst = load("mycielski5.txt");
  int yes = -1;
  ASSERT_EQ(sc_decide(inst, nullptr, &yes, nullptr), SC_OK);
  EXPECT_EQ(yes, 0);
  std::vector<int> colors(sc_instance_vertex_capacity(inst));
  EXPECT_EQ(sc_color(inst, nullptr, colors.data(), nullptr), SC_ERR_NON_EXTENDABLE);
  EXPECT_STRNE(sc_last_error(), "");
  sc_instance_free(inst);
}

TEST(CApi, DiskNoCarriesACertificate) {
  // A 10-cycle cuff whose center sees 0, 3 and 6, colored 1, 2 and 3.
  sc_instance* inst = load("tripod_disk_no.txt");
  int yes = -1;
  char* json = nullptr;
  ASSERT_EQ(sc_decide(inst, nullptr, &yes, &json), SC_OK);
  EXPECT_EQ(yes, 0);
  const std::string j = take(json);
  EXPECT_NE(j.find("\"certificate\""), std::string::npos) << j;
  EXPECT_NE(j.find("\"w_eta\""), std::string::npos) << j;
  EXPECT_EQ(sc_instance_set_color(inst, 10, 1), SC_ERR_VALIDATION);
  // Freeing 5 and giving 6 the color of 3 lets the center take 3.
  ASSERT_EQ(sc_instance_set_color(inst, 5, 0), SC_OK);
  ASSERT_EQ(sc_instance_set_color(inst, 6, 2), SC_OK);
  ASSERT_EQ(sc_decide(inst, nullptr, &yes, nullptr), SC_OK);
  EXPECT_EQ(yes, 1);
  sc_instance_free(inst);
}

TEST(CApi, Errors) {
  sc_instance* inst = nullptr;
  EXPECT_EQ(sc_instance_parse("surface 0 0 1\nv 0\nv 0\n", &inst), SC_ERR_PARSE);
  EXPECT_NE(std::string(sc_last_error()).find("line 3"), std::string::npos);
  EXPECT_EQ(sc_instance_generate("moon", 10, 1, &inst), SC_ERR_UNSUPPORTED_SURFACE);
  EXPECT_EQ(sc_instance_parse(nullptr, &inst), SC_ERR_ARGUMENT);
  EXPECT_STREQ(sc_status_name(SC_ERR_NON_EXTENDABLE), "NonExtendable");

  inst = load("cube.txt");
  const sc_options bad_eta{"1/0", 0};
  int yes = 0;
  EXPECT_EQ(sc_decide(inst, &bad_eta, &yes, nullptr), SC_ERR_VALIDATION);
  const sc_options eta{"1/100", 40};
  EXPECT_EQ(sc_decide(inst, &eta, &yes, nullptr), SC_OK);
  EXPECT_EQ(yes, 1);
  sc_instance_free(inst);
}

TEST(CApi, GenerateEmitParse) {
  sc_instance* inst = nullptr;
  ASSERT_EQ(sc_instance_generate("klein-bottle", 24, 7, &inst), SC_OK);
  char* text = nullptr;
  ASSERT_EQ(sc_instance_emit(inst, &text), SC_OK);
  sc_instance* again = nullptr;
  ASSERT_EQ(sc_instance_parse(text, &again), SC_OK);
  char* text2 = nullptr;
  ASSERT_EQ(sc_instance_emit(again, &text2), SC_OK);
  EXPECT_EQ(take(text), take(text2));
  char* analysis = nullptr;
  ASSERT_EQ(sc_analyze(again, nullptr, &analysis), SC_OK);
  const std::string a = take(analysis);
  EXPECT_NE(a.find("\"klein-bottle\""), std::string::npos);
  EXPECT_NE(a.find("\"shortest_noncontractible_cycle\":{"), std::string::npos);
  sc_instance_free(inst);
  sc_instance_free(again);
}
