#pragma once

// Sturm chains over Z and certified real-root isolation.
//
// Variation counts use the one-sided convention V(x+) = lim_{t -> x+} V(t):
// a zero of the chain head at x takes the sign of the next chain member, and
// interior zeros are skipped (the neighbours of an interior zero have opposite
// signs, so the skip counts their single variation). With this convention
// V(a+) - V(b+) counts roots in the half-open interval (a, b] exactly, with
// no special handling when an endpoint happens to be a root.
//
// Public enclosures are closed intervals whose endpoints are not roots,
// except for the degenerate [r, r] returned when a root is hit exactly.

#include "coordlat/interval.hpp"
#include "coordlat/polynomial.hpp"

#include <algorithm>

namespace coordlat {

struct NonSquarefree : std::domain_error {
  explicit NonSquarefree(const std::string& m) : std::domain_error(m) {}
};

struct SturmChain {
  std::vector<IntPoly> seq; // seq[0] primitive squarefree, seq[1] = seq[0]'
};

inline SturmChain sturm_chain(const IntPoly& p0) {
  IntPoly p = p0;
  int_poly_normalize(p);
  if (p.empty()) throw std::invalid_argument("sturm chain of the zero polynomial");
  p = int_poly_primitive(std::move(p));
  SturmChain c;
  c.seq.push_back(p);
  if (int_poly_degree(p) == 0) return c;
  c.seq.push_back(int_poly_primitive(int_poly_derivative(p)));
  while (true) {
    const IntPoly& a = c.seq[c.seq.size() - 2];
    const IntPoly& b = c.seq.back();
    if (b.empty()) throw NonSquarefree("polynomial has a repeated root");
    if (int_poly_degree(b) == 0) break;
    long steps = int_poly_degree(a) - int_poly_degree(b) + 1;
    IntPoly r = int_poly_prem(a, b);
    // prem scales a by lc(b)^steps; undo a negative scale so that the next
    // member is minus the true remainder up to a positive factor.
    bool flip = !(b.back() < 0 && steps % 2 == 1);
    if (flip)
      for (Int& x : r) x = -x;
    c.seq.push_back(int_poly_primitive(std::move(r)));
  }
  return c;
}

namespace detail {

inline long count_variations(const std::vector<int>& s) {
  long v = 0;
  int prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++v;
    prev = x;
  }
  return v;
}

} // namespace detail

// V(x+): sign variations of the chain just to the right of x.
inline long sturm_variations_above(const SturmChain& c, const Rat& x) {
  std::vector<int> s;
  s.reserve(c.seq.size());
  for (const IntPoly& q : c.seq) s.push_back(int_poly_sign_at(q, x));
  if (s[0] == 0 && c.seq.size() > 1) s[0] = s[1]; // sign of the head just right of its root
  return detail::count_variations(s);
}

inline long sturm_variations_neg_inf(const SturmChain& c) {
  std::vector<int> s;
  s.reserve(c.seq.size());
  for (const IntPoly& q : c.seq)
    s.push_back(int_poly_degree(q) % 2 == 0 ? q.back().sign() : -q.back().sign());
  return detail::count_variations(s);
}

inline long sturm_variations_pos_inf(const SturmChain& c) {
  std::vector<int> s;
  s.reserve(c.seq.size());
  for (const IntPoly& q : c.seq) s.push_back(q.back().sign());
  return detail::count_variations(s);
}

// Number of distinct real roots in (lo, hi].
inline long sturm_count_interval(const SturmChain& c, const Rat& lo, const Rat& hi) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
  return sturm_variations_above(c, lo) - sturm_variations_above(c, hi);
}

inline long sturm_count_real(const SturmChain& c) {
  return sturm_variations_neg_inf(c) - sturm_variations_pos_inf(c);
}

// Strict bound on the absolute value of every root: 1 + max |a_i| / |a_n|.
inline Rat cauchy_root_bound(const IntPoly& p) {
  if (p.empty()) throw std::invalid_argument("root bound of the zero polynomial");
  Int m = 0;
  for (const Int& x : p) m = std::max(m, Int(boost::multiprecision::abs(x)));
  return 1 + Rat(m) / Rat(boost::multiprecision::abs(p.back()));
}

struct IsolatedRoots {
  IntPoly p;       // primitive squarefree polynomial the enclosures refer to
  SturmChain chain;
  std::vector<RationalInterval> enclosures; // ascending; one simple root each
};

// Shrink a closed single-root enclosure below maxWidth by sign bisection.
// Endpoints of iv must not be roots unless the interval is degenerate.
inline RationalInterval refine_enclosure(const IntPoly& p, RationalInterval iv,
                                         const Rat& maxWidth) {
  if (iv.lo == iv.hi) return iv;
  int slo = int_poly_sign_at(p, iv.lo);
  int shi = int_poly_sign_at(p, iv.hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::logic_error("refine_enclosure: not a sign-change enclosure");
  for (int iter = 0; iv.width() > maxWidth; ++iter) {
    if (iter >= 256) throw std::logic_error("refine_enclosure: iteration cap hit");
    Rat mid = iv.mid();
    int sm = int_poly_sign_at(p, mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
  return iv;
}

namespace detail {

// Turn a half-open isolating piece (lo, hi] into a closed enclosure whose
// endpoints are not roots (or a degenerate exact-root interval).
inline RationalInterval sanitize_enclosure(const IntPoly& p, const SturmChain& c,
                                           Rat lo, Rat hi) {
  if (int_poly_sign_at(p, hi) == 0) return {hi, hi};
  for (int iter = 0; int_poly_sign_at(p, lo) == 0; ++iter) {
    if (iter >= 256) throw std::logic_error("sanitize_enclosure: iteration cap hit");
    Rat mid = (lo + hi) / 2;
    if (int_poly_sign_at(p, mid) == 0) return {mid, mid};
    if (sturm_count_interval(c, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

} // namespace detail

// Isolate all real roots of p. Hints are optional cut points that speed up
// the subdivision when they separate the roots; correctness never depends on
// them, since every piece is certified by a Sturm count and pieces holding
// more than one root fall back to bisection.
inline IsolatedRoots isolate_roots(const IntPoly& p,
                                   const std::vector<Rat>& hints = {}) {
  IsolatedRoots out;
  out.chain = sturm_chain(p);
  out.p = out.chain.seq[0];
  long total = sturm_count_real(out.chain);
  if (total == 0) return out;

  Rat bound = cauchy_root_bound(out.p);
  if (sturm_count_interval(out.chain, -bound, bound) != total)
    throw std::logic_error("isolate_roots: root bound failed certification");

  // Cut points: -bound, admissible hints in ascending order, bound.
  std::vector<Rat> cuts;
  cuts.push_back(-bound);
  std::vector<Rat> hs = hints;
  std::sort(hs.begin(), hs.end());
  for (const Rat& h : hs) {
    if (h <= -bound || h >= bound) continue;
    if (h != cuts.back()) cuts.push_back(h);
  }
  cuts.push_back(bound);

  std::vector<long> vars;
  vars.reserve(cuts.size());
  for (const Rat& x : cuts) vars.push_back(sturm_variations_above(out.chain, x));

  // Work queue of half-open pieces (lo, hi] with their root counts.
  struct Piece {
    Rat lo, hi;
    long count;
  };
  std::vector<Piece> todo;
  for (std::size_t i = cuts.size() - 1; i-- > 0;) {
    long cnt = vars[i] - vars[i + 1];
    if (cnt > 0) todo.push_back({cuts[i], cuts[i + 1], cnt});
  }

  long splits = 0;
  while (!todo.empty()) {
    Piece pc = todo.back();
    todo.pop_back();
    if (pc.count == 1) {
      out.enclosures.push_back(
          detail::sanitize_enclosure(out.p, out.chain, pc.lo, pc.hi));
      continue;
    }
    if (++splits > 100000) throw std::logic_error("isolate_roots: split cap hit");
    Rat mid = (pc.lo + pc.hi) / 2;
    long leftCount = sturm_count_interval(out.chain, pc.lo, mid);
    long rightCount = pc.count - leftCount;
    // Push the right piece first so the queue pops pieces left to right.
    if (rightCount > 0) todo.push_back({mid, pc.hi, rightCount});
    if (leftCount > 0) todo.push_back({pc.lo, mid, leftCount});
  }

  if (long(out.enclosures.size()) != total)
    throw std::logic_error("isolate_roots: enclosure count mismatch");
  return out;
}

} // namespace coordlat
