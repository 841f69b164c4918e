#include "goishi/oracle.hpp"

#include <algorithm>

#include "goishi/core.hpp"

namespace goishi::oracle {

namespace {

std::string describe(const State& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
         std::to_string(s[2]) + ")";
}

// Stone line as run lengths of alternating colour.
using Runs = std::vector<std::size_t>;

// Emptied runs vanish and their two neighbours, which share a colour, fuse.
Runs normalise(const Runs& in) {
  Runs out;
  bool fuse = false;
  for (std::size_t len : in) {
    if (len == 0) {
      fuse = !out.empty();
      continue;
    }
    if (fuse) {
      out.back() += len;
      fuse = false;
    } else {
      out.push_back(len);
    }
  }
  return out;
}

Runs to_runs(const State& s) { return normalise(Runs(s.begin(), s.end())); }

State from_runs(const Runs& runs) {
  State s{0, 0, 0};
  for (std::size_t i = 0; i < runs.size(); ++i) s[i] = runs[i];
  return s;
}

int small_mex(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  int m = 0;
  for (int v : values) {
    if (v == m) ++m;
    else if (v > m) break;
  }
  return m;
}

}  // namespace

GameGraph::GameGraph(std::string name, State caps, OptionFn options,
                     CanonicalFn canonical)
    : name_(std::move(name)),
      caps_(caps),
      options_(std::move(options)),
      canonical_(std::move(canonical)) {}

bool GameGraph::contains(const State& s) const noexcept {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > caps_[i]) return false;
  }
  return true;
}

std::vector<State> GameGraph::options(const State& s) const {
  std::vector<State> out;
  for (const auto& o : options_(s)) out.push_back(canonical_(o));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GameGraph goishi_graph(std::size_t cap) {
  auto canonical = [](const State& s) { return from_runs(to_runs(s)); };
  auto options = [](const State& s) {
    const Runs runs = to_runs(s);
    std::vector<State> out;
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t take = 1; take <= runs[i]; ++take) {
        Runs next = runs;
        next[i] -= take;
        out.push_back(from_runs(normalise(next)));
      }
    }
    return out;
  };
  // Merged blocks are reported as (t, 0, 0), so the left slot may reach 2 * cap.
  return GameGraph("goishi", {2 * cap, cap, cap}, options, canonical);
}

GameGraph nim_graph(std::size_t piles, std::size_t cap) {
  if (piles == 0 || piles > 3) throw std::invalid_argument("nim graph supports 1 to 3 piles");
  State caps{0, 0, 0};
  for (std::size_t i = 0; i < piles; ++i) caps[i] = cap;
  auto options = [piles](const State& s) {
    std::vector<State> out;
    for (std::size_t i = 0; i < piles; ++i) {
      for (std::size_t v = 0; v < s[i]; ++v) {
        State next = s;
        next[i] = v;
        out.push_back(next);
      }
    }
    return out;
  };
  return GameGraph("nim" + std::to_string(piles), caps, options,
                   [](const State& s) { return s; });
}

GameGraph forbidden_nim_graph(std::set<std::pair<std::size_t, std::size_t>> forbidden,
                              std::size_t cap) {
  auto options = [forbidden = std::move(forbidden)](const State& s) {
    std::vector<State> out;
    auto offer = [&](std::size_t x, std::size_t y) {
      if (!forbidden.contains({x, y})) out.push_back({x, y, 0});
    };
    for (std::size_t x = 0; x < s[0]; ++x) offer(x, s[1]);
    for (std::size_t y = 0; y < s[1]; ++y) offer(s[0], y);
    return out;
  };
  return GameGraph("forbidden-nim", {cap, cap, 0}, options,
                   [](const State& s) { return s; });
}

template <typename Combine>
int Solver::evaluate(const State& root, Memo& memo, Combine combine) {
  if (!graph_.contains(root)) {
    throw CapacityError("state " + describe(root) + " lies outside the " +
                            graph_.name() + " graph caps " + describe(graph_.caps()),
                        *std::max_element(graph_.caps().begin(), graph_.caps().end()));
  }
  const State start = graph_.canonical(root);
  if (auto it = memo.find(start); it != memo.end()) return it->second;

  struct Frame {
    State state;
    std::vector<State> options;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({start, graph_.options(start)});

  while (!stack.empty()) {
    Frame& top = stack.back();
    bool descended = false;
    while (top.next < top.options.size()) {
      const State& child = top.options[top.next];
      if (!memo.contains(child)) {
        State pending = child;
        stack.push_back({pending, graph_.options(pending)});
        descended = true;
        break;
      }
      ++top.next;
    }
    if (descended) continue;

    std::vector<int> values;
    values.reserve(top.options.size());
    for (const auto& o : top.options) values.push_back(memo.at(o));
    memo.emplace(top.state, combine(values));
    stack.pop_back();
  }
  return memo.at(start);
}

Outcome Solver::solve(const State& s, Convention c) {
  // 0 encodes P, 1 encodes N. Terminal states differ by convention; otherwise
  // a state is N exactly when some option is P.
  const int terminal = c == Convention::Normal ? 0 : 1;
  auto combine = [terminal](const std::vector<int>& values) {
    if (values.empty()) return terminal;
    return std::find(values.begin(), values.end(), 0) != values.end() ? 1 : 0;
  };
  Memo& memo = c == Convention::Normal ? normal_ : misere_;
  return evaluate(s, memo, combine) == 0 ? Outcome::P : Outcome::N;
}

int Solver::grundy(const State& s) {
  return evaluate(s, grundy_, [](const std::vector<int>& values) { return small_mex(values); });
}

}  // namespace goishi::oracle
