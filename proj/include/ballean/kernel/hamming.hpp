#pragma once

#include <cstddef>
#include <cstdint>
#include <set>

namespace ballean {

/// A finitely supported 0/1 function, identified with its support.
using HammingPoint = std::set<std::uint64_t>;

/// |supp f △ supp g|
inline std::size_t hamming_distance(const HammingPoint& f, const HammingPoint& g) {
  std::size_t common = 0;
  auto i = f.begin();
  auto j = g.begin();
  while (i != f.end() && j != g.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++common; ++i; ++j; }
  }
  return f.size() + g.size() - 2 * common;
}

} // namespace ballean
