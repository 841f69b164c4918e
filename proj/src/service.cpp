#include "goishi/service.hpp"

#include <charconv>
#include <variant>

#include <httplib.h>

namespace goishi::service {

namespace {

using nlohmann::json;

Response error(int status, const std::string& message) {
  return {status, json{{"error", message}}};
}

std::optional<std::size_t> parse_count(const std::string& text) {
  std::size_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

json to_json(const Position& p) { return json{{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

Service::Service(std::size_t max_n) : max_n_(max_n) {
  if (max_n == 0) throw std::invalid_argument("max-n must be at least 1");
}

Service::~Service() {
  if (builder_.joinable()) builder_.join();
}

void Service::build() {
  std::call_once(build_once_, [this] {
    engine_.emplace(max_n_, max_n_);
    ready_.store(true, std::memory_order_release);
  });
}

void Service::start_build() {
  if (ready() || builder_.joinable()) return;
  builder_ = std::thread([this] { build(); });
}

std::variant<Service::Query, Response> Service::parse(const Params& params) const {
  if (!ready()) return error(503, "tables are still being built");

  Query q{};
  const std::pair<const char*, std::size_t*> fields[] = {
      {"x", &q.position.x}, {"y", &q.position.y}, {"z", &q.position.z}};
  for (const auto& [name, slot] : fields) {
    auto it = params.find(name);
    if (it == params.end()) return error(400, std::string("missing parameter ") + name);
    auto value = parse_count(it->second);
    if (!value) {
      return error(400, std::string("parameter ") + name +
                            " must be a nonnegative integer, got '" + it->second + "'");
    }
    if (*value >= max_n_) {
      Response r = error(422, std::string("parameter ") + name + " must be below the limit " +
                                  std::to_string(max_n_));
      r.body["limit"] = max_n_;
      return r;
    }
    *slot = *value;
  }

  q.convention = Convention::Normal;
  if (auto it = params.find("convention"); it != params.end()) {
    auto c = parse_convention(it->second);
    if (!c) return error(400, "convention must be 'normal' or 'misere'");
    q.convention = *c;
  }
  return q;
}

Response Service::analyze(const Params& params) const {
  auto parsed = parse(params);
  if (auto* r = std::get_if<Response>(&parsed)) return *r;
  const auto& [position, convention] = std::get<Query>(parsed);

  json options = json::array();
  for (const auto& m : moves(position)) {
    options.push_back(
        {{"to", to_json(m.to)}, {"outcome", to_string(engine_->outcome(m.to, convention))}});
  }
  const auto winning = engine_->winning_move(position, convention);

  json body;
  body["position"] = to_json(position);
  body["convention"] = to_string(convention);
  body["outcome"] = to_string(engine_->outcome(position, convention));
  body["auxValue"] = engine_->aux_value(position, convention);
  body["moves"] = std::move(options);
  body["winningMove"] = winning ? to_json(winning->to) : json(nullptr);
  return {200, std::move(body)};
}

Response Service::engine_move(const Params& params) const {
  auto parsed = parse(params);
  if (auto* r = std::get_if<Response>(&parsed)) return *r;
  const auto& [position, convention] = std::get<Query>(parsed);

  if (position.terminal()) return error(409, "the game is over; there is no move to make");
  const auto move = engine_->engine_move(position, convention);
  return {200, json{{"move", move ? to_json(move->to) : json(nullptr)}}};
}

Response Service::health() const {
  const bool done = ready();
  json built = json::array();
  if (done) built = {"GM1", "GM1STAR"};
  return {200, json{{"status", done ? "ready" : "warming"},
                    {"builtTables", std::move(built)},
                    {"maxN", max_n_}}};
}

struct HttpFrontend::Impl {
  httplib::Server server;
};

HttpFrontend::HttpFrontend(Service& service) : impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});

  auto route = [&server](const std::string& path, auto handler) {
    server.Get(path, [handler](const httplib::Request& req, httplib::Response& res) {
      Params params;
      for (const auto& [key, value] : req.params) params.emplace(key, value);
      const Response r = handler(params);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    });
  };
  route("/api/analyze", [&service](const Params& p) { return service.analyze(p); });
  route("/api/engine-move", [&service](const Params& p) { return service.engine_move(p); });
  route("/api/health", [&service](const Params&) { return service.health(); });

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

HttpFrontend::~HttpFrontend() = default;

int HttpFrontend::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpFrontend::listen() { return impl_->server.listen_after_bind(); }

void HttpFrontend::stop() { impl_->server.stop(); }

}  // namespace goishi::service
