#pragma once

// JSON over HTTP for the board UI. Positions travel as {board, position}
// where board is a shorthand (rhombus6) or the two-line descriptor and
// position is the hex bitset; moves use dash notation.

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "pegsol/pegsol.hpp"

namespace pegsol::server {

using nlohmann::json;

inline BoardPtr board_from_wire(const std::string& s) {
  if (s.rfind("lattice", 0) == 0) return parse_board_descriptor(s);
  return parse_board_shorthand(s);
}

struct BadRequest : Error {
  int code;
  BadRequest(int c, const std::string& what) : Error(what), code(c) {}
};

inline std::string field(const json& body, const char* key) {
  if (!body.contains(key) || !body[key].is_string()) throw BadRequest(400, std::string("missing string field '") + key + "'");
  return body[key].get<std::string>();
}

inline Position position_from_wire(const json& body) {
  BoardPtr b = board_from_wire(field(body, "board"));
  return Position::from_hex(b, field(body, "position"));
}

/// "any" or absent means any hole.
inline std::optional<Hole> finish_from_wire(const json& body, const Board& b) {
  if (!body.contains("finish") || body["finish"].is_null()) return std::nullopt;
  std::string f = body["finish"].get<std::string>();
  if (f == "any") return std::nullopt;
  auto h = parse_hole(f);
  if (!h || !b.contains(*h)) throw BadRequest(422, "finish '" + f + "' is not a hole on the board");
  return h;
}

inline SearchConfig config_from_wire(const json& body, long long default_budget) {
  SearchConfig cfg;
  cfg.node_budget = body.value("budget", default_budget);
  if (cfg.node_budget <= 0) throw BadRequest(422, "budget must be positive");
  cfg.transposition_capacity = std::size_t{1} << 20;
  cfg.use_class_pruning = body.value("class_pruning", true);
  return cfg;
}

inline json outcome_json(const SearchOutcome& r) {
  json j{{"status", to_string(r.status)},
         {"stats", {{"nodes", r.stats.nodes}, {"table_hits", r.stats.table_hits}, {"table_entries", r.stats.table_entries}}}};
  if (r.solution) {
    json moves = json::array();
    for (const Move& m : r.solution->moves) moves.push_back(m.to_string());
    j["moves"] = moves;
  }
  return j;
}

class Job {
 public:
  std::atomic<bool> cancel{false};
  std::atomic<bool> done{false};
  json result() const {
    std::lock_guard lock(mu_);
    return result_;
  }
  void finish(json r) {
    std::lock_guard lock(mu_);
    result_ = std::move(r);
    done = true;
  }

 private:
  mutable std::mutex mu_;
  json result_;
};

class Service {
 public:
  explicit Service(long long hint_budget = 2'000'000) : hint_budget_(hint_budget) { routes(); }
  ~Service() { stop(); }
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds to `port` (0 picks a free one) and returns the port, or -1.
  int bind(const std::string& host, int port) {
    if (port == 0) return http_.bind_to_any_port(host);
    return http_.bind_to_port(host, port) ? port : -1;
  }
  bool listen_after_bind() { return http_.listen_after_bind(); }
  void wait_until_ready() const { http_.wait_until_ready(); }

  void stop() {
    http_.stop();
    std::vector<std::thread> threads;
    {
      std::lock_guard lock(mu_);
      for (auto& [id, job] : jobs_) job->cancel = true;
      threads.swap(threads_);
    }
    for (auto& t : threads)
      if (t.joinable()) t.join();
  }

 private:
  using Handler = std::function<json(const httplib::Request&, httplib::Response&)>;

  void handle(const char* method, const std::string& pattern, Handler h) {
    auto wrapped = [h](const httplib::Request& req, httplib::Response& res) {
      json out;
      try {
        out = h(req, res);
      } catch (const BadRequest& e) {
        res.status = e.code;
        out = {{"error", e.what()}};
      } catch (const json::exception& e) {
        res.status = 400;
        out = {{"error", std::string("bad json: ") + e.what()}};
      } catch (const std::exception& e) {
        res.status = 422;
        out = {{"error", e.what()}};
      }
      res.set_content(out.dump(), "application/json");
      res.set_header("Access-Control-Allow-Origin", "*");
    };
    if (std::string(method) == "GET") http_.Get(pattern, wrapped);
    else if (std::string(method) == "POST") http_.Post(pattern, wrapped);
    else http_.Delete(pattern, wrapped);
  }

  static json body_of(const httplib::Request& req) {
    auto j = json::parse(req.body);
    if (!j.is_object()) throw BadRequest(400, "request body must be a JSON object");
    return j;
  }

  void routes() {
    handle("GET", "/board", [](const httplib::Request& req, httplib::Response&) {
      BoardPtr b = board_from_wire(req.has_param("board") ? req.get_param_value("board") : "rhombus6");
      json holes = json::array();
      for (Hole h : b->holes()) holes.push_back({{"name", hole_name(h)}, {"col", h.col}, {"row", h.row}});
      json cs = json::array();
      for (const auto& c : corners(*b)) cs.push_back({{"hole", hole_name(c.hole)}, {"angle", c.interior_angle}});
      return json{{"board", b->shorthand()},
                  {"descriptor", b->descriptor()},
                  {"holes", holes},
                  {"corners", cs},
                  {"convex", is_convex(*b)},
                  {"symmetries", symmetries(*b).size()},
                  {"full", Position::full(b).to_hex()}};
    });

    handle("POST", "/position/moves", [](const httplib::Request& req, httplib::Response&) {
      Position p = position_from_wire(body_of(req));
      json jumps = json::array();
      for (const Jump& j : legal_jumps(p)) jumps.push_back(hole_name(j.from) + "-" + hole_name(j.to));
      return json{{"board", p.board().shorthand()}, {"position", p.to_hex()}, {"pegs", p.peg_count()}, {"jumps", jumps}};
    });

    handle("POST", "/position/apply", [](const httplib::Request& req, httplib::Response&) {
      json body = body_of(req);
      Position p = position_from_wire(body);
      Move m = Move::parse(field(body, "move"));
      Position q = apply_move(p, m);
      json out{{"board", q.board().shorthand()}, {"position", q.to_hex()}, {"pegs", q.peg_count()},
               {"move", m.to_string()}};
      if (auto s = q.sole_peg()) out["sole_peg"] = hole_name(*s);
      return out;
    });

    handle("POST", "/hint", [this](const httplib::Request& req, httplib::Response&) {
      json body = body_of(req);
      Position p = position_from_wire(body);
      auto finish = finish_from_wire(body, p.board());
      auto r = solve(p, GoalSpec{finish, std::nullopt}, config_from_wire(body, hint_budget_));
      json out{{"status", r.status == Outcome::solved       ? "solvable"
                          : r.status == Outcome::unsolvable ? "unsolvable"
                                                            : "unknown"},
               {"nodes", r.stats.nodes}};
      if (r.solution && !r.solution->moves.empty()) out["move"] = r.solution->moves.front().to_string();
      return out;
    });

    handle("POST", "/solve", [this](const httplib::Request& req, httplib::Response& res) {
      json body = body_of(req);
      Position p = position_from_wire(body);
      auto finish = finish_from_wire(body, p.board());
      SearchConfig cfg = config_from_wire(body, 50'000'000);
      if (p.board().size() > 64) throw BadRequest(422, "search supports boards of at most 64 holes");
      auto job = std::make_shared<Job>();
      std::string id;
      {
        std::lock_guard lock(mu_);
        id = std::to_string(++next_id_);
        jobs_[id] = job;
        cfg.cancel = &job->cancel;
        threads_.emplace_back([job, p, finish, cfg] {
          json out;
          try {
            out = outcome_json(solve(p, GoalSpec{finish, std::nullopt}, cfg));
          } catch (const std::exception& e) {
            out = {{"status", "error"}, {"error", e.what()}};
          }
          if (job->cancel) out["status"] = "cancelled";
          job->finish(std::move(out));
        });
      }
      res.status = 202;
      return json{{"job", id}};
    });

    handle("GET", R"(/job/(\w+))", [this](const httplib::Request& req, httplib::Response&) {
      auto job = find(req.matches[1]);
      json out{{"job", std::string(req.matches[1])}, {"state", job->done ? "done" : "running"}};
      if (job->done) out["result"] = job->result();
      return out;
    });

    handle("DELETE", R"(/job/(\w+))", [this](const httplib::Request& req, httplib::Response&) {
      auto job = find(req.matches[1]);
      job->cancel = true;
      return json{{"job", std::string(req.matches[1])}, {"state", "cancelling"}};
    });
  }

  std::shared_ptr<Job> find(const std::string& id) {
    std::lock_guard lock(mu_);
    auto it = jobs_.find(id);
    if (it == jobs_.end()) throw BadRequest(404, "no job " + id);
    return it->second;
  }

  httplib::Server http_;
  long long hint_budget_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Job>> jobs_;
  std::vector<std::thread> threads_;
  long long next_id_ = 0;
};

}  // namespace pegsol::server
