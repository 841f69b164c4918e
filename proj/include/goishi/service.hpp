#pragma once

// Stateless JSON analysis API. The handlers are plain functions of the query
// parameters so they can be exercised without a socket; HttpFrontend wires
// them to cpp-httplib.
//
//   GET /api/analyze?x=&y=&z=&convention=      position, outcome, options
//   GET /api/engine-move?x=&y=&z=&convention=  the engine's reply
//   GET /api/health                            build status and capacity

#include <atomic>
#include <cstddef>
#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <variant>

#include <nlohmann/json.hpp>

#include "goishi/game.hpp"

namespace goishi::service {

using Params = std::map<std::string, std::string>;

struct Response {
  int status = 200;
  nlohmann::json body;
};

nlohmann::json to_json(const Position& p);

class Service {
 public:
  /// Tables cover coordinates below max_n. Call build() or start_build()
  /// before expecting anything other than 503.
  explicit Service(std::size_t max_n = kDefaultMaxTableSize);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  void build();
  void start_build();
  bool ready() const noexcept { return ready_.load(std::memory_order_acquire); }
  std::size_t max_n() const noexcept { return max_n_; }

  Response analyze(const Params& params) const;
  Response engine_move(const Params& params) const;
  Response health() const;

 private:
  struct Query {
    Position position;
    Convention convention;
  };
  /// Either a parsed query or the error response to send back.
  std::variant<Query, Response> parse(const Params& params) const;

  std::size_t max_n_;
  std::optional<Engine> engine_;
  std::once_flag build_once_;
  std::atomic<bool> ready_{false};
  std::thread builder_;
};

/// cpp-httplib server bound to one Service.
class HttpFrontend {
 public:
  explicit HttpFrontend(Service& service);
  ~HttpFrontend();

  /// Returns the bound port, or -1 on failure. Port 0 picks a free one.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace goishi::service
