#pragma once

// Closed rational intervals used as certified root enclosures.

#include "coordlat/exact.hpp"

namespace coordlat {

struct RationalInterval {
  Rat lo, hi;

  RationalInterval() = default;
  RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

} // namespace coordlat
