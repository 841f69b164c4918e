#include <doctest.h>

#include <chrono>
#include <random>
#include <thread>

#include <httplib.h>

#include "goishi/service.hpp"

using namespace goishi;
using namespace goishi::service;
using nlohmann::json;

namespace {

Params query(std::size_t x, std::size_t y, std::size_t z, const std::string& convention) {
  return {{"x", std::to_string(x)},
          {"y", std::to_string(y)},
          {"z", std::to_string(z)},
          {"convention", convention}};
}

Service& ready_service() {
  static Service svc(64);
  svc.build();
  return svc;
}

}  // namespace

TEST_CASE("health reports the lifecycle") {
  Service svc(32);
  auto before = svc.health();
  CHECK(before.body["status"] == "warming");
  CHECK(before.body["maxN"] == 32);
  CHECK(before.body["builtTables"].empty());
  CHECK(svc.analyze(query(1, 1, 1, "normal")).status == 503);

  svc.start_build();
  for (int i = 0; i < 500 && !svc.ready(); ++i) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  REQUIRE(svc.ready());
  auto after = svc.health();
  CHECK(after.body["status"] == "ready");
  CHECK(after.body["builtTables"] == json{"GM1", "GM1STAR"});
  CHECK(Service(512).health().body["maxN"] == 512);
}

TEST_CASE("analyze examples") {
  auto& svc = ready_service();

  auto p = svc.analyze(query(5, 3, 4, "normal"));
  CHECK(p.status == 200);
  CHECK(p.body["outcome"] == "P");
  CHECK(p.body["winningMove"].is_null());
  CHECK(p.body["auxValue"] == 2);
  CHECK(p.body["position"] == json{{"x", 5}, {"y", 3}, {"z", 4}});
  CHECK(p.body["convention"] == "normal");

  auto n = svc.analyze(query(1, 1, 1, "normal"));
  CHECK(n.body["outcome"] == "N");
  CHECK(n.body["winningMove"] == json{{"x", 0}, {"y", 1}, {"z", 1}});

  auto terminal = svc.analyze(query(0, 0, 0, "normal"));
  CHECK(terminal.body["outcome"] == "P");
  CHECK(terminal.body["moves"] == json::array());

  // Under misere the empty board is a win for the player to move, who cannot move.
  auto empty_misere = svc.analyze(query(0, 0, 0, "misere"));
  CHECK(empty_misere.body["outcome"] == "N");
  CHECK(empty_misere.body["moves"] == json::array());
  CHECK(empty_misere.body["winningMove"].is_null());

  auto misere = svc.analyze(query(0, 0, 5, "misere"));
  CHECK(misere.body["convention"] == "misere");
  bool found = false;
  for (const auto& m : misere.body["moves"]) {
    if (m["to"] == json{{"x", 1}, {"y", 0}, {"z", 0}}) {
      CHECK(m["outcome"] == "P");
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("analyze is consistent with the move generator and outcome classes") {
  auto& svc = ready_service();
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::size_t> coord(0, 20);
  for (int i = 0; i < 300; ++i) {
    const Position pos{coord(rng), coord(rng), coord(rng)};
    const std::string c = i % 2 ? "misere" : "normal";
    const auto r = svc.analyze(query(pos.x, pos.y, pos.z, c));
    REQUIRE(r.status == 200);
    const auto expected = moves(pos);
    REQUIRE(r.body["moves"].size() == expected.size());
    int p_options = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      CHECK(r.body["moves"][k]["to"] == to_json(expected[k].to));
      p_options += r.body["moves"][k]["outcome"] == "P";
    }
    if (pos.terminal()) {
      CHECK(r.body["winningMove"].is_null());
    } else if (r.body["outcome"] == "N") {
      CHECK(p_options >= 1);
      CHECK_FALSE(r.body["winningMove"].is_null());
    } else {
      CHECK(p_options == 0);
      CHECK(r.body["winningMove"].is_null());
    }
    CHECK(svc.analyze(query(pos.x, pos.y, pos.z, c)).body == r.body);
  }
}

TEST_CASE("engine move") {
  auto& svc = ready_service();
  auto win = svc.engine_move(query(0, 0, 5, "misere"));
  CHECK(win.status == 200);
  CHECK(win.body["move"] == json{{"x", 1}, {"y", 0}, {"z", 0}});

  auto lost = svc.engine_move(query(2, 1, 2, "normal"));
  CHECK(lost.body["move"] == json{{"x", 2}, {"y", 0}, {"z", 2}});

  CHECK(svc.engine_move(query(0, 0, 0, "normal")).status == 409);
  CHECK(svc.engine_move(query(0, 0, 0, "misere")).status == 409);

  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> coord(0, 30);
  for (int i = 0; i < 200; ++i) {
    const Position pos{coord(rng), coord(rng) + 1, coord(rng)};
    const auto r = svc.engine_move(query(pos.x, pos.y, pos.z, "normal"));
    bool legal = false;
    for (const auto& m : moves(pos)) legal = legal || to_json(m.to) == r.body["move"];
    CHECK(legal);
  }
}

TEST_CASE("input validation") {
  auto& svc = ready_service();
  CHECK(svc.analyze({{"x", "1"}, {"y", "1"}}).status == 400);
  CHECK(svc.analyze(query(1, 1, 1, "sideways")).status == 400);
  CHECK(svc.analyze({{"x", "-1"}, {"y", "1"}, {"z", "1"}}).status == 400);
  CHECK(svc.analyze({{"x", "abc"}, {"y", "1"}, {"z", "1"}}).status == 400);
  CHECK(svc.analyze({{"x", "1.5"}, {"y", "1"}, {"z", "1"}}).status == 400);
  CHECK(svc.analyze({{"x", "1"}, {"y", "1"}, {"z", "1"}}).status == 200);

  auto too_big = svc.analyze(query(64, 1, 1, "normal"));
  CHECK(too_big.status == 422);
  CHECK(too_big.body["limit"] == 64);
  CHECK(too_big.body["error"].get<std::string>().find("64") != std::string::npos);
  CHECK(svc.engine_move(query(1, 1, 100, "normal")).status == 422);
}

TEST_CASE("over HTTP") {
  Service svc(32);
  svc.build();
  HttpFrontend http(svc);
  const int port = http.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread server([&] { http.listen(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result health;
  for (int i = 0; i < 100 && !health; ++i) {
    health = client.Get("/api/health");
    if (!health) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(health);
  CHECK(health->status == 200);
  CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(json::parse(health->body)["status"] == "ready");

  auto analyze = client.Get("/api/analyze?x=1&y=1&z=1&convention=normal");
  REQUIRE(analyze);
  CHECK(json::parse(analyze->body)["winningMove"] == json{{"x", 0}, {"y", 1}, {"z", 1}});

  auto terminal = client.Get("/api/engine-move?x=0&y=0&z=0&convention=misere");
  REQUIRE(terminal);
  CHECK(terminal->status == 409);

  auto bad = client.Get("/api/analyze?x=-2&y=1&z=1");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  http.stop();
  server.join();
}
