#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace cfk {

// An eventually periodic sequence: `prefix` followed by `cycle` repeated
// forever. An empty cycle means the sequence is finite.
template <class T>
struct Lasso {
  std::vector<T> prefix;
  std::vector<T> cycle;

  bool finite() const { return cycle.empty(); }
  std::size_t span() const { return prefix.size() + cycle.size(); }

  /// Element at position i, or nullopt past the end of a finite sequence.
  std::optional<T> at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    if (cycle.empty()) return std::nullopt;
    return cycle[(i - prefix.size()) % cycle.size()];
  }

  /// Maps any position to the equivalent position inside [0, span()).
  std::size_t normalize(std::size_t i) const {
    if (i < prefix.size() || cycle.empty()) return i;
    return prefix.size() + (i - prefix.size()) % cycle.size();
  }

  /// Minimal period, then shortest preperiod.
  void minimize() {
    const std::size_t n = cycle.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < n && ok; ++i) ok = cycle[i] == cycle[i - d];
      if (ok) {
        cycle.resize(d);
        break;
      }
    }
    while (!cycle.empty() && !prefix.empty() && prefix.back() == cycle.back()) {
      std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
      prefix.pop_back();
    }
  }

  /// Sequence with the first element removed.
  Lasso drop_front() const {
    Lasso out = *this;
    if (!out.prefix.empty()) {
      out.prefix.erase(out.prefix.begin());
    } else if (!out.cycle.empty()) {
      std::rotate(out.cycle.begin(), out.cycle.begin() + 1, out.cycle.end());
    }
    return out;
  }

  friend bool operator==(const Lasso&, const Lasso&) = default;
  friend auto operator<=>(const Lasso&, const Lasso&) = default;
};

/// Position bound past which two lassos repeat jointly; comparing elements
/// 0..bound-1 (plus one end-of-sequence sentinel) decides equality.
template <class T, class U>
std::size_t joint_bound(const Lasso<T>& a, const Lasso<U>& b) {
  std::size_t pa = std::max<std::size_t>(a.cycle.size(), 1);
  std::size_t pb = std::max<std::size_t>(b.cycle.size(), 1);
  return std::max(a.prefix.size(), b.prefix.size()) + std::lcm(pa, pb) + 1;
}

// Runs a deterministic transducer until a state repeats and returns the
// emitted stream as a lasso. `step` maps a state to (emitted chunk, next
// state); a nullopt next state ends the stream.
template <class T, class State, class Step>
Lasso<T> unroll(State start, Step step) {
  std::map<State, std::size_t> seen;
  std::vector<T> out;
  std::optional<State> state = std::move(start);
  while (state) {
    auto [it, inserted] = seen.emplace(*state, out.size());
    if (!inserted) {
      Lasso<T> lasso;
      lasso.prefix.assign(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(it->second));
      lasso.cycle.assign(out.begin() + static_cast<std::ptrdiff_t>(it->second), out.end());
      return lasso;
    }
    auto [chunk, next] = step(*state);
    out.insert(out.end(), chunk.begin(), chunk.end());
    state = std::move(next);
  }
  return Lasso<T>{std::move(out), {}};
}

}  // namespace cfk
