#include "goishi/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "goishi/game.hpp"
#include "goishi/service.hpp"
#include "goishi/verify.hpp"

namespace goishi::cli {

namespace {

constexpr std::size_t kMaxListedMismatches = 20;

std::string aux_label(Convention c, const Position& p) {
  return std::string(c == Convention::Normal ? "GM1" : "GM1STAR") + "(" +
         std::to_string(p.x) + "," + std::to_string(p.z) + ")";
}

Engine engine_for(const Position& p, std::size_t max_n) {
  const std::size_t need = std::max(p.x, p.z) + 1;
  if (need > max_n) {
    throw CapacityError("x and z must be below the limit " + std::to_string(max_n) +
                            " (use --max-n to raise it)",
                        max_n);
  }
  return Engine(need, max_n);
}

int cmd_table(const std::string& function, std::size_t size, const std::string& format,
              bool header, std::size_t max_n, std::ostream& out, std::ostream& err) {
  const auto kind = parse_seed_kind(function);
  if (!kind) {
    err << "unknown function '" << function << "' (expected G0, G1, GM1 or GM1STAR)\n";
    return kUsage;
  }
  const auto table = ValueTable::build(*kind, size, max_n);
  out << render_table(table, format == "markdown" ? TableFormat::Markdown : TableFormat::Csv,
                      header);
  return kOk;
}

int cmd_outcome(const Position& p, Convention c, std::size_t max_n, std::ostream& out) {
  const Engine engine = engine_for(p, max_n);
  out << to_string(engine.outcome(p, c)) << '\n';
  out << aux_label(c, p) << " = " << engine.aux_value(p, c) << '\n';
  return kOk;
}

int cmd_best_move(const Position& p, Convention c, std::size_t max_n, std::ostream& out) {
  const Engine engine = engine_for(p, max_n);
  if (auto move = engine.winning_move(p, c)) {
    out << to_string(move->to) << "  " << move->pickup.describe() << '\n';
  } else {
    out << "no winning move (P-position)\n";
  }
  return kOk;
}

int cmd_verify(std::size_t max, const std::vector<std::string>& names, std::size_t max_n,
               std::ostream& out, std::ostream& err) {
  std::vector<verify::Check> checks;
  if (names.empty()) {
    auto all = verify::all_checks();
    checks.assign(all.begin(), all.end());
  }
  for (const auto& name : names) {
    auto check = verify::parse_check(name);
    if (!check) {
      err << "unknown check '" << name
          << "' (expected tables, theorems, closedform, symmetry, oracle-grundy)\n";
      return kUsage;
    }
    checks.push_back(*check);
  }

  const auto reports = verify::run_all(checks, max, max_n);
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.check << "  [" << r.range << "]  cases "
        << r.cases << ", mismatches " << r.mismatches.size() << '\n';
    const std::size_t shown = std::min(r.mismatches.size(), kMaxListedMismatches);
    for (std::size_t i = 0; i < shown; ++i) {
      const auto& m = r.mismatches[i];
      out << "    " << m.inputs << ": expected " << m.expected << ", got " << m.actual << '\n';
    }
    if (shown < r.mismatches.size()) {
      out << "    ... " << r.mismatches.size() - shown << " more\n";
    }
    // Timings go to stderr so stdout stays reproducible.
    err << r.check << ": " << std::fixed << std::setprecision(3) << r.elapsed.count()
        << " s\n";
    if (!r.passed()) ++failed;
  }
  if (failed == 0) {
    out << "all " << reports.size() << " checks passed\n";
    return kOk;
  }
  out << failed << " of " << reports.size() << " checks failed\n";
  return kVerifyFailed;
}

int cmd_serve(const std::string& host, int port, std::size_t max_n, std::ostream& out,
              std::ostream& err) {
  service::Service svc(max_n);
  svc.start_build();
  service::HttpFrontend http(svc);
  const int bound = http.bind(host, port);
  if (bound < 0) {
    err << "could not bind " << host << ":" << port << '\n';
    return kUsage;
  }
  out << "listening on http://" << host << ":" << bound << " (max-n " << max_n << ")"
      << std::endl;
  return http.listen() ? kOk : kUsage;
}

}  // namespace

std::string render_table(const ValueTable& table, TableFormat format, bool header) {
  std::ostringstream os;
  const std::size_t n = table.size();
  if (format == TableFormat::Csv) {
    if (header) {
      os << "x\\y";
      for (std::size_t y = 0; y < n; ++y) os << ',' << y;
      os << '\n';
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (header) os << x << ',';
      for (std::size_t y = 0; y < n; ++y) os << (y ? "," : "") << table(x, y);
      os << '\n';
    }
    return os.str();
  }

  os << "| x\\y |";
  for (std::size_t y = 0; y < n; ++y) os << ' ' << y << " |";
  os << "\n|---|";
  for (std::size_t y = 0; y < n; ++y) os << "---|";
  os << '\n';
  for (std::size_t x = 0; x < n; ++x) {
    os << "| " << x << " |";
    for (std::size_t y = 0; y < n; ++y) os << ' ' << table(x, y) << " |";
    os << '\n';
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear two-player goishi hiroi: value tables, outcomes and perfect play",
               "goishi"};
  app.require_subcommand(1);

  std::size_t max_n = kDefaultMaxTableSize;
  std::string convention_name = "normal";
  Position position;

  auto add_position = [&](CLI::App* sub) {
    sub->add_option("x", position.x, "Stones in the left block")->required();
    sub->add_option("y", position.y, "Stones in the middle block")->required();
    sub->add_option("z", position.z, "Stones in the right block")->required();
    sub->add_option("--convention", convention_name, "normal or misere")
        ->check(CLI::IsMember({"normal", "misere"}));
    sub->add_option("--max-n", max_n, "Largest table size that may be built");
  };

  std::string function = "G0";
  std::size_t size = 12;
  std::string format = "csv";
  bool header = false;
  auto* table = app.add_subcommand("table", "Print a value table");
  table->add_option("--function", function, "G0, G1, GM1 or GM1STAR");
  table->add_option("--size", size, "Table side length")->check(CLI::PositiveNumber);
  table->add_option("--format", format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  table->add_flag("--header", header, "Add index row and column to CSV output");
  table->add_option("--max-n", max_n, "Largest table size that may be built");

  auto* outcome = app.add_subcommand("outcome", "Classify a position as P or N");
  add_position(outcome);
  auto* best = app.add_subcommand("best-move", "Print a winning move, if any");
  add_position(best);

  std::size_t verify_max = 25;
  std::vector<std::string> checks;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-checks against brute force");
  verify_cmd->add_option("--max", verify_max, "Largest coordinate to sweep");
  verify_cmd
      ->add_option("--checks", checks,
                   "Comma-separated subset of tables,theorems,closedform,symmetry,oracle-grundy")
      ->delimiter(',');
  verify_cmd->add_option("--max-n", max_n, "Largest table size that may be built");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the JSON analysis service");
  serve->add_option("--port", port, "TCP port (0 picks a free one)");
  serve->add_option("--host", host, "Interface to bind");
  serve->add_option("--max-n", max_n, "Table size built at startup");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Convention convention = *parse_convention(convention_name);
    if (*table) return cmd_table(function, size, format, header, max_n, out, err);
    if (*outcome) return cmd_outcome(position, convention, max_n, out);
    if (*best) return cmd_best_move(position, convention, max_n, out);
    if (*verify_cmd) return cmd_verify(verify_max, checks, max_n, out, err);
    if (*serve) return cmd_serve(host, port, max_n, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << " (limit " << e.limit() << ")\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace goishi::cli
