#include "goishi/verify.hpp"

#include <algorithm>
#include <array>
#include <future>

#include "goishi/closedform.hpp"
#include "goishi/core.hpp"
#include "goishi/fixtures.hpp"
#include "goishi/game.hpp"
#include "goishi/oracle.hpp"

namespace goishi::verify {

namespace {

constexpr std::array kAllChecks{Check::Tables, Check::Theorems, Check::ClosedForm,
                                Check::Symmetry, Check::OracleGrundy};

std::string cell(std::string_view fn, std::size_t x, std::size_t y) {
  return std::string(fn) + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string range_up_to(std::size_t max) { return "0.." + std::to_string(max); }

template <typename Body>
VerifyReport timed(std::string name, Body body) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.check = std::move(name);
  body(report);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

void compare_grundy(VerifyReport& report, oracle::Solver& solver, const ValueTable& table,
                    std::size_t cap, std::string_view label) {
  for (std::size_t x = 0; x <= cap; ++x) {
    for (std::size_t y = 0; y <= cap; ++y) {
      if (table.spec().seeded(x, y) && table.spec().kind() != SeedKind::G0) continue;
      ++report.cases;
      const int expected = table(x, y);
      const int actual = solver.grundy({x, y, 0});
      if (expected != actual) {
        report.mismatches.push_back(
            {cell(label, x, y), std::to_string(expected), std::to_string(actual)});
      }
    }
  }
}

void require_capacity(std::size_t max, std::size_t capacity) {
  if (max + 1 > capacity) {
    throw CapacityError("max " + std::to_string(max) + " needs tables of size " +
                            std::to_string(max + 1) + ", above the limit " +
                            std::to_string(capacity),
                        capacity);
  }
}

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Tables:
      return "tables";
    case Check::Theorems:
      return "theorems";
    case Check::ClosedForm:
      return "closedform";
    case Check::Symmetry:
      return "symmetry";
    case Check::OracleGrundy:
      return "oracle-grundy";
  }
  return "?";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::span<const Check> all_checks() { return kAllChecks; }

VerifyReport tables(std::size_t max) {
  return timed("tables", [max](VerifyReport& report) {
    report.range = "published 12x12; xor law " + range_up_to(max);
    for (auto kind : {SeedKind::G0, SeedKind::G1, SeedKind::GM1, SeedKind::GM1Star}) {
      const auto table = ValueTable::build(kind, fixtures::kSize);
      const auto& grid = fixtures::published(kind);
      for (std::size_t x = 0; x < fixtures::kSize; ++x) {
        for (std::size_t y = 0; y < fixtures::kSize; ++y) {
          ++report.cases;
          if (table(x, y) != grid[x][y]) {
            report.mismatches.push_back({cell(to_string(kind), x, y),
                                         std::to_string(grid[x][y]),
                                         std::to_string(table(x, y))});
          }
        }
      }
    }

    const std::size_t n = std::max<std::size_t>(max + 1, 2);
    const auto g0 = ValueTable::build(SeedKind::G0, n, n);
    const auto g1 = ValueTable::build(SeedKind::G1, n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        report.cases += 2;
        const int xor_value = static_cast<int>(x ^ y);
        if (g0(x, y) != xor_value) {
          report.mismatches.push_back(
              {cell("G0", x, y), std::to_string(xor_value), std::to_string(g0(x, y))});
        }
        // G1 is G0 with 0 and 1 swapped on the four corner cells.
        const int expected_g1 = (x < 2 && y < 2) ? 1 - xor_value : xor_value;
        if (g1(x, y) != expected_g1) {
          report.mismatches.push_back(
              {cell("G1", x, y), std::to_string(expected_g1), std::to_string(g1(x, y))});
        }
      }
    }
  });
}

VerifyReport theorems(std::size_t max) {
  return timed("theorems", [max](VerifyReport& report) {
    const std::size_t cap = std::min(max, kGameOracleCap);
    report.range = "x,y,z " + range_up_to(cap) + " x {normal, misere}";
    const Engine engine(cap + 1, cap + 1);
    oracle::Solver solver(oracle::goishi_graph(cap));

    auto oracle_outcome = [&](const Position& p, Convention c) {
      return solver.solve({p.x, p.y, p.z}, c);
    };

    for (auto c : {Convention::Normal, Convention::Misere}) {
      for (std::size_t x = 0; x <= cap; ++x) {
        for (std::size_t y = 0; y <= cap; ++y) {
          for (std::size_t z = 0; z <= cap; ++z) {
            const Position p{x, y, z};
            const std::string label = to_string(p) + " " + std::string(to_string(c));
            ++report.cases;
            const Outcome expected = oracle_outcome(p, c);
            const Outcome actual = engine.outcome(p, c);
            if (expected != actual) {
              report.mismatches.push_back(
                  {label, std::string(to_string(expected)), std::string(to_string(actual))});
              continue;
            }
            if (actual == Outcome::N && !p.terminal()) {
              const auto move = engine.winning_move(p, c);
              if (!move || oracle_outcome(move->to, c) != Outcome::P) {
                report.mismatches.push_back(
                    {label + " winning move", "option in P",
                     move ? to_string(move->to) + " not in P" : "none"});
              }
            } else if (engine.winning_move(p, c)) {
              report.mismatches.push_back({label + " winning move", "none", "a move"});
            }
          }
        }
      }
    }
  });
}

VerifyReport closed_forms(std::size_t max) {
  return timed("closedform", [max](VerifyReport& report) {
    report.range = "x,y " + range_up_to(max) + ", k 0..3";
    const std::size_t n = max + 1;
    const auto gm1 = ValueTable::build(SeedKind::GM1, n, n);
    const auto gm1star = ValueTable::build(SeedKind::GM1Star, n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (int k = 0; k <= 3; ++k) {
          report.cases += 2;
          const bool a_table = gm1(x, y) == k;
          const bool b_table = gm1star(x, y) == k;
          if (closedform::in_A(k, x, y) != a_table) {
            report.mismatches.push_back({"A" + std::to_string(k) + cell("", x, y),
                                         a_table ? "member" : "non-member",
                                         a_table ? "non-member" : "member"});
          }
          if (closedform::in_B(k, x, y) != b_table) {
            report.mismatches.push_back({"B" + std::to_string(k) + cell("", x, y),
                                         b_table ? "member" : "non-member",
                                         b_table ? "non-member" : "member"});
          }
        }
      }
    }
  });
}

VerifyReport symmetry(std::size_t max) {
  return timed("symmetry", [max](VerifyReport& report) {
    report.range = "n,m " + range_up_to(max);
    const std::size_t n = 2 * max + 2;
    const auto table = ValueTable::build(SeedKind::GM1Star, n, n);
    for (std::size_t i = 0; i <= max; ++i) {
      for (std::size_t j = 0; j <= max; ++j) {
        const std::size_t x = 2 * i;
        const std::size_t y = 2 * j;
        report.cases += 2;
        if (table(x, y) != table(x + 1, y + 1)) {
          report.mismatches.push_back({cell("GM1STAR", x, y) + " vs " + cell("", x + 1, y + 1),
                                       std::to_string(table(x, y)),
                                       std::to_string(table(x + 1, y + 1))});
        }
        if (table(x + 1, y) != table(x, y + 1)) {
          report.mismatches.push_back({cell("GM1STAR", x + 1, y) + " vs " + cell("", x, y + 1),
                                       std::to_string(table(x + 1, y)),
                                       std::to_string(table(x, y + 1))});
        }
      }
    }
  });
}

VerifyReport oracle_grundy(std::size_t max) {
  return timed("oracle-grundy", [max](VerifyReport& report) {
    const std::size_t cap = std::min(max, kGrundyOracleCap);
    const std::size_t misere_cap = std::min(max, kGameOracleCap);
    report.range = "grundy x,y " + range_up_to(cap) + "; misere nim " + range_up_to(misere_cap);
    const std::size_t n = cap + 1;

    oracle::Solver plain(oracle::forbidden_nim_graph({}, cap));
    compare_grundy(report, plain, ValueTable::build(SeedKind::G0, n, n), cap, "G0");

    oracle::Solver no_empty(oracle::forbidden_nim_graph({{0, 0}}, cap));
    compare_grundy(report, no_empty, ValueTable::build(SeedKind::GM1, n, n), cap, "GM1");

    oracle::Solver no_single(oracle::forbidden_nim_graph({{0, 1}, {1, 0}}, cap));
    compare_grundy(report, no_single, ValueTable::build(SeedKind::GM1Star, n, n), cap,
                   "GM1STAR");

    const auto gm1 = ValueTable::build(SeedKind::GM1, misere_cap + 1, misere_cap + 1);
    oracle::Solver misere(oracle::nim_graph(2, misere_cap));
    for (std::size_t x = 0; x <= misere_cap; ++x) {
      for (std::size_t y = 0; y <= misere_cap; ++y) {
        ++report.cases;
        const Outcome expected = gm1(x, y) == 0 ? Outcome::P : Outcome::N;
        const Outcome actual = misere.solve({x, y, 0}, Convention::Misere);
        if (expected != actual) {
          report.mismatches.push_back({"misere nim " + cell("", x, y),
                                       std::string(to_string(expected)),
                                       std::string(to_string(actual))});
        }
      }
    }
  });
}

VerifyReport run(Check check, std::size_t max, std::size_t capacity) {
  require_capacity(max, capacity);
  switch (check) {
    case Check::Tables:
      return tables(max);
    case Check::Theorems:
      return theorems(max);
    case Check::ClosedForm:
      return closed_forms(max);
    case Check::Symmetry:
      return symmetry(std::min(max, (std::max<std::size_t>(capacity, 2) - 2) / 2));
    case Check::OracleGrundy:
      return oracle_grundy(max);
  }
  throw std::invalid_argument("unknown check");
}

std::vector<VerifyReport> run_all(std::span<const Check> checks, std::size_t max,
                                  std::size_t capacity) {
  require_capacity(max, capacity);
  std::vector<std::future<VerifyReport>> pending;
  pending.reserve(checks.size());
  for (Check c : checks) {
    pending.push_back(std::async(std::launch::async, [c, max, capacity] { return run(c, max, capacity); }));
  }
  std::vector<VerifyReport> reports;
  reports.reserve(pending.size());
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace goishi::verify
