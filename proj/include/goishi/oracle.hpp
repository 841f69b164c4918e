#pragma once

// Brute-force solvers used to check everything the tables claim.
//
// Nothing in here reads a ValueTable or the goishi move generator. Games are
// described by an explicit option function and solved by memoised search on
// an explicit stack.

#include <array>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "goishi/outcome.hpp"

namespace goishi::oracle {

/// Up to three small coordinates; unused slots stay zero.
using State = std::array<std::size_t, 3>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = s[0];
    h = h * 1000003u ^ s[1];
    h = h * 1000003u ^ s[2];
    return h;
  }
};

/// A finite game: which states may be queried, how to normalise a state for
/// memoisation, and the options of each state. Every option must have fewer
/// stones than its parent so the search terminates.
class GameGraph {
 public:
  using OptionFn = std::function<std::vector<State>(const State&)>;
  using CanonicalFn = std::function<State(const State&)>;

  GameGraph(std::string name, State caps, OptionFn options, CanonicalFn canonical);

  const std::string& name() const noexcept { return name_; }
  const State& caps() const noexcept { return caps_; }
  bool contains(const State& s) const noexcept;
  State canonical(const State& s) const { return canonical_(s); }
  /// Options in canonical form, duplicates removed.
  std::vector<State> options(const State& s) const;

 private:
  std::string name_;
  State caps_;
  OptionFn options_;
  CanonicalFn canonical_;
};

/// Linear goishi hiroi on (x, y, z) with every coordinate at most `cap`
/// (the left slot up to 2 * cap, so merged blocks stay addressable).
/// Positions are simulated as runs of alternating colour: a move shortens one
/// run, emptied runs vanish and their neighbours fuse.
GameGraph goishi_graph(std::size_t cap);

/// Nim on `piles` (1 to 3) piles of at most `cap` stones.
GameGraph nim_graph(std::size_t piles, std::size_t cap);

/// Two-pile nim, states (x, y, 0), with every move into `forbidden` removed.
GameGraph forbidden_nim_graph(std::set<std::pair<std::size_t, std::size_t>> forbidden,
                              std::size_t cap);

/// Memoised win/loss and Grundy search over one graph. Not thread-safe; use
/// one instance per worker.
class Solver {
 public:
  explicit Solver(GameGraph graph) : graph_(std::move(graph)) {}

  const GameGraph& graph() const noexcept { return graph_; }

  /// Throws CapacityError when `s` lies outside the graph's caps.
  Outcome solve(const State& s, Convention c);
  int grundy(const State& s);

 private:
  using Memo = std::unordered_map<State, int, StateHash>;

  template <typename Combine>
  int evaluate(const State& root, Memo& memo, Combine combine);

  GameGraph graph_;
  Memo normal_;
  Memo misere_;
  Memo grundy_;
};

inline Outcome solve(const State& s, const GameGraph& graph, Convention c) {
  return Solver(graph).solve(s, c);
}

inline int grundy(const State& s, const GameGraph& graph) {
  return Solver(graph).grundy(s);
}

}  // namespace goishi::oracle
