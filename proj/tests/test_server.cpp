#include <gtest/gtest.h>

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <thread>

#include "server.hpp"

using nlohmann::json;
using namespace pegsol;

namespace {

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    port_ = service_.bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { service_.listen_after_bind(); });
    service_.wait_until_ready();
  }
  void TearDown() override {
    service_.stop();
    if (thread_.joinable()) thread_.join();
  }

  httplib::Client client() { return httplib::Client("127.0.0.1", port_); }

  std::pair<int, json> post(const std::string& path, const json& body) {
    auto c = client();
    auto r = c.Post(path, body.dump(), "application/json");
    if (!r) return {0, {}};
    return {r->status, json::parse(r->body)};
  }
  std::pair<int, json> get(const std::string& path) {
    auto c = client();
    auto r = c.Get(path);
    if (!r) return {0, {}};
    return {r->status, json::parse(r->body)};
  }

  server::Service service_;
  int port_ = 0;
  std::thread thread_;
};

std::string hex_vacancy(const char* board, const char* hole) {
  return Position::vacancy(parse_board_shorthand(board), *parse_hole(hole)).to_hex();
}

}  // namespace

TEST_F(ServerTest, Board) {
  auto [code, j] = get("/board?board=rhombus6");
  ASSERT_EQ(code, 200);
  EXPECT_EQ(j["holes"].size(), 36u);
  EXPECT_EQ(j["symmetries"], 4);
  EXPECT_EQ(j["holes"][0]["name"], "a1");
  auto bad = get("/board?board=blob");
  EXPECT_EQ(bad.first, 422);
  EXPECT_TRUE(bad.second.contains("error"));
}

TEST_F(ServerTest, MovesAndApply) {
  auto [code, j] = post("/position/moves", {{"board", "rhombus6"}, {"position", hex_vacancy("rhombus6", "d4")}});
  ASSERT_EQ(code, 200);
  EXPECT_EQ(j["jumps"].size(), 6u);
  EXPECT_EQ(j["pegs"], 35);

  auto [c2, a] = post("/position/apply",
                      {{"board", "rhombus6"}, {"position", hex_vacancy("rhombus6", "d4")}, {"move", "b4-d4"}});
  ASSERT_EQ(c2, 200);
  EXPECT_EQ(a["pegs"], 34);
  Position p = Position::from_hex(make_rhombus(6), a["position"].get<std::string>());
  EXPECT_TRUE(p.has_peg(*parse_hole("d4")));
  EXPECT_FALSE(p.has_peg(*parse_hole("b4")));

  auto [c3, e] = post("/position/apply",
                      {{"board", "rhombus6"}, {"position", hex_vacancy("rhombus6", "d4")}, {"move", "a1-c1"}});
  EXPECT_EQ(c3, 422);
  EXPECT_TRUE(e.contains("error"));
}

TEST_F(ServerTest, BadRequests) {
  auto c = client();
  auto r = c.Post("/position/moves", "{not json", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 400);
  EXPECT_EQ(post("/position/moves", {{"board", "rhombus6"}}).first, 400);
  EXPECT_EQ(get("/job/999").first, 404);
}

TEST_F(ServerTest, HintSolvable) {
  auto [code, j] = post("/hint", {{"board", "rhombus6"}, {"position", hex_vacancy("rhombus6", "d3")}, {"finish", "d3"}});
  ASSERT_EQ(code, 200);
  EXPECT_EQ(j["status"], "solvable");
  ASSERT_TRUE(j.contains("move"));
  // the hinted move is legal from the position
  Position p = Position::vacancy(make_rhombus(6), *parse_hole("d3"));
  EXPECT_NO_THROW(apply_move(p, Move::parse(j["move"].get<std::string>())));
}

TEST_F(ServerTest, HintUnsolvableForImpossibleSweep) {
  auto b = make_rhombus(6);
  auto w = max_sweep_length(b, *parse_hole("b1"), *parse_hole("f5"));
  ASSERT_TRUE(w.witness);
  Position p = complement(w.witness->pre_sweep_position());
  auto [code, j] = post("/hint", {{"board", "rhombus6"}, {"position", p.to_hex()}, {"finish", "any"}});
  ASSERT_EQ(code, 200);
  EXPECT_EQ(j["status"], "unsolvable");
  EXPECT_FALSE(j.contains("move"));
}

TEST_F(ServerTest, SolveJobLifecycle) {
  auto [code, j] = post("/solve", {{"board", "rhombus6"}, {"position", hex_vacancy("rhombus6", "e5")}, {"finish", "e5"}});
  ASSERT_EQ(code, 202);
  std::string id = j["job"];
  json state;
  for (int t = 0; t < 600; ++t) {
    state = get("/job/" + id).second;
    if (state["state"] == "done") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  ASSERT_EQ(state["state"], "done");
  EXPECT_EQ(state["result"]["status"], "solved");
  Solution s{Position::vacancy(make_rhombus(6), *parse_hole("e5")), {}};
  for (const auto& m : state["result"]["moves"]) s.moves.push_back(Move::parse(m.get<std::string>()));
  EXPECT_TRUE(verify_solution(s, *parse_hole("e5")).ok);
}

TEST_F(ServerTest, SolveJobCancel) {
  // class-incompatible with pruning off: a long exhaustive search
  auto [code, j] = post("/solve", {{"board", "rhombus6"},
                                   {"position", hex_vacancy("rhombus6", "a1")},
                                   {"finish", "b1"},
                                   {"budget", 4000000000LL},
                                   {"class_pruning", false}});
  ASSERT_EQ(code, 202);
  std::string id = j["job"];
  auto c = client();
  auto del = c.Delete("/job/" + id);
  ASSERT_TRUE(del);
  EXPECT_EQ(del->status, 200);
  json state;
  for (int t = 0; t < 300; ++t) {
    state = get("/job/" + id).second;
    if (state["state"] == "done") break;
    std::this_thread::sleep_for(std::chrono::milliseconds(100));
  }
  ASSERT_EQ(state["state"], "done");
  EXPECT_EQ(state["result"]["status"], "cancelled");
}

TEST_F(ServerTest, CorsHeader) {
  auto c = client();
  auto r = c.Get("/board?board=triangle5");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "*");
}
