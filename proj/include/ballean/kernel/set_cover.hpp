#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace ballean {

/// Exact minimum set cover by branch and bound.
///
/// Starts from the greedy cover as the incumbent, always branches on the
/// uncovered element with the fewest covering sets, and prunes with the
/// bound chosen + ceil(uncovered / largest remaining coverage).
/// solve() returns the minimum number of sets, or kUncoverable.
class SetCoverSolver {
public:
  using Set = boost::dynamic_bitset<>;

  SetCoverSolver(std::size_t universe, std::vector<Set> sets) : universe_(universe) {
    // drop empty and duplicate sets
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (auto& s : sets)
      if (s.any()) sets_.push_back(std::move(s));
    covering_.resize(universe_);
    for (std::size_t i = 0; i < sets_.size(); ++i)
      for (auto e = sets_[i].find_first(); e != Set::npos; e = sets_[i].find_next(e)) covering_[e].push_back(i);
  }

  static constexpr std::size_t kUncoverable = static_cast<std::size_t>(-1);

  std::size_t solve() {
    Set all(universe_);
    all.set();
    for (std::size_t e = 0; e < universe_; ++e)
      if (covering_[e].empty()) return kUncoverable;
    best_ = greedy(all);
    branch(all, 0);
    return best_;
  }

  std::size_t nodes_visited() const { return nodes_; }

private:
  std::size_t greedy(Set uncovered) const {
    std::size_t used = 0;
    while (uncovered.any()) {
      std::size_t pick = 0, gain = 0;
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        std::size_t g = (sets_[i] & uncovered).count();
        if (g > gain) { gain = g; pick = i; }
      }
      uncovered -= sets_[pick];
      ++used;
    }
    return used;
  }

  void branch(const Set& uncovered, std::size_t chosen) {
    ++nodes_;
    if (uncovered.none()) {
      best_ = std::min(best_, chosen);
      return;
    }
    if (chosen + 1 >= best_) return;
    std::size_t max_gain = 0;
    std::size_t pivot = Set::npos, pivot_options = static_cast<std::size_t>(-1);
    for (auto e = uncovered.find_first(); e != Set::npos; e = uncovered.find_next(e)) {
      if (covering_[e].size() < pivot_options) {
        pivot_options = covering_[e].size();
        pivot = e;
      }
    }
    for (const auto& s : sets_) max_gain = std::max(max_gain, (s & uncovered).count());
    const std::size_t remaining = uncovered.count();
    if (chosen + (remaining + max_gain - 1) / max_gain >= best_) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (auto i : covering_[pivot]) options.emplace_back((sets_[i] & uncovered).count(), i);
    std::sort(options.rbegin(), options.rend());
    for (const auto& [gain, i] : options) {
      Set next = uncovered - sets_[i];
      branch(next, chosen + 1);
    }
  }

  std::size_t universe_;
  std::vector<Set> sets_;
  std::vector<std::vector<std::size_t>> covering_;
  std::size_t best_ = static_cast<std::size_t>(-1);
  std::size_t nodes_ = 0;
};

} // namespace ballean
