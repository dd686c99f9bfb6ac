#include "mubar/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace mubar {

void LinkDiagram::validate() const {
  std::map<int, int> uses;
  for (const auto& c : crossings) {
    if (c.sign != 1 && c.sign != -1)
      throw std::invalid_argument("LinkDiagram: crossing sign must be +-1");
    for (int arc : {c.a, c.b, c.c, c.d}) {
      if (arc <= 0) throw std::invalid_argument("LinkDiagram: arc labels must be positive");
      uses[arc] += 1;
    }
  }
  for (const auto& [arc, n] : uses)
    if (n != 2)
      throw std::invalid_argument("LinkDiagram: arc " + std::to_string(arc) +
                                  " has " + std::to_string(n) + " ends, expected 2");
  if (free_loops < 0 || components < free_loops)
    throw std::invalid_argument("LinkDiagram: inconsistent component counts");
}

namespace {

int orient(int strand) { return strand % 2 == 1 ? 1 : -1; }  // odd up, even down

struct Sweep {
  std::vector<Crossing> crossings;
  std::vector<int> top;  // arc at the top of each position, 1-based
};

// Walk the braid word bottom to top, minting arc labels.  Bottom arc of
// position p is p; geometry of letter eps*k: the strand at position k goes
// over for eps > 0, and the two strands swap positions.
Sweep sweep_braid(const Braid& b) {
  const int m = b.strands;
  Sweep s;
  std::vector<int> arc(m + 1), strand(m + 1);
  for (int p = 1; p <= m; ++p) arc[p] = strand[p] = p;
  int next = m + 1;

  for (int letter : b.word) {
    const int k = letter > 0 ? letter : -letter;
    if (k < 1 || k + 1 > m) throw std::invalid_argument("sweep_braid: letter out of range");
    const int sw = arc[k], se = arc[k + 1], nw = next++, ne = next++;
    const int ol = orient(strand[k]), orr = orient(strand[k + 1]);
    const bool over_left = letter > 0;

    // counterclockwise cycle of ends: SE -> NE -> NW -> SW; the under strand's
    // incoming end is its bottom end if it runs up, else its top end
    const int ccw[4] = {se, ne, nw, sw};
    int start = over_left ? (orr > 0 ? 0 : 2) : (ol > 0 ? 3 : 1);
    Crossing c;
    c.a = ccw[start];
    c.b = ccw[(start + 1) % 4];
    c.c = ccw[(start + 2) % 4];
    c.d = ccw[(start + 3) % 4];
    c.sign = (letter > 0 ? 1 : -1) * ol * orr;

    // cross-check the sign against the over strand's direction of travel
    int over_in = over_left ? (ol > 0 ? sw : ne) : (orr > 0 ? se : nw);
    if ((c.sign > 0) != (over_in == c.d))
      throw std::logic_error("sweep_braid: sign/geometry mismatch");

    s.crossings.push_back(c);
    arc[k] = nw;
    arc[k + 1] = ne;
    std::swap(strand[k], strand[k + 1]);
  }
  s.top.assign(b.strands + 1, 0);
  for (int p = 1; p <= m; ++p) s.top[p] = arc[p];
  return s;
}

void replace_arc(Sweep& s, int from, int to) {
  if (from == to) return;
  for (auto& c : s.crossings) {
    if (c.a == from) c.a = to;
    if (c.b == from) c.b = to;
    if (c.c == from) c.c = to;
    if (c.d == from) c.d = to;
  }
  for (auto& t : s.top)
    if (t == from) t = to;
}

}  // namespace

LinkDiagram close_link(const Braid& b) {
  if (!b.is_pure()) throw std::invalid_argument("close_link: braid must be pure");
  Sweep s = sweep_braid(b);
  LinkDiagram d;
  for (int i = 1; i <= b.strands; ++i) {
    if (s.top[i] == i)
      d.free_loops += 1;  // strand i saw no crossings
    else
      replace_arc(s, s.top[i], i);
  }
  d.components = b.strands;
  d.crossings = std::move(s.crossings);
  d.validate();
  return d;
}

namespace {

// Height of band k (a gap index into the braid word, 0 = below the first
// letter): the band joining strands k and k+1 sits just above the first
// crossing that involves the upward-oriented strand of the pair.  Bands whose
// strand pair never meets such a crossing sit at the top of the braid.  At
// this height the two strands are always adjacent, so the bands add no
// crossings; shifting a band past other crossings changes the resulting knot,
// so the heights are part of the closure convention.
std::vector<int> band_heights(const Braid& b) {
  const int m = b.strands, len = static_cast<int>(b.word.size());
  std::vector<int> strand(m + 1);
  for (int p = 1; p <= m; ++p) strand[p] = p;
  std::vector<int> gaps(m, len);
  std::vector<bool> placed(m, false);
  for (int idx = 0; idx < len; ++idx) {
    const int k = std::abs(b.word[idx]);
    const int s1 = strand[k], s2 = strand[k + 1];
    for (int t = 1; t < m; ++t) {
      if (placed[t]) continue;
      const int up = t % 2 == 1 ? t : t + 1;  // the upward strand of the pair
      if (s1 == up || s2 == up) {
        gaps[t] = idx + 1;
        placed[t] = true;
      }
    }
    std::swap(strand[k], strand[k + 1]);
  }
  return gaps;
}

int uf_find(std::vector<int>& uf, int x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}

}  // namespace

LinkDiagram close_knot(const Braid& b) {
  if (!b.is_pure()) throw std::invalid_argument("close_knot: braid must be pure");
  const int m = b.strands;
  const int len = static_cast<int>(b.word.size());
  const std::vector<int> gaps = band_heights(b);

  std::vector<int> arc(m + 1), strand(m + 1);
  for (int p = 1; p <= m; ++p) arc[p] = strand[p] = p;
  int next = m + 1;
  std::vector<Crossing> crossings;
  std::vector<std::pair<int, int>> merges;

  // Insert the band joining strands t, t+1: a cap merges the two current
  // arcs, a cup starts a fresh arc on both positions.  The strands run in
  // opposite directions, so the joins respect orientation.
  auto insert_band = [&](int t) {
    int pt = 0, pt1 = 0;
    for (int p = 1; p <= m; ++p) {
      if (strand[p] == t) pt = p;
      if (strand[p] == t + 1) pt1 = p;
    }
    if (pt == 0 || pt1 == 0 || std::abs(pt - pt1) != 1)
      throw std::logic_error("close_knot: band strands are not adjacent");
    const int p = std::min(pt, pt1);
    merges.emplace_back(arc[p], arc[p + 1]);
    arc[p] = arc[p + 1] = next++;
  };

  for (int g = 0; g <= len; ++g) {
    // equal heights: the band with the larger index goes in first (lower)
    for (int t = m - 1; t >= 1; --t)
      if (gaps[t] == g) insert_band(t);
    if (g == len) break;

    const int letter = b.word[g];
    const int k = letter > 0 ? letter : -letter;
    if (k < 1 || k + 1 > m) throw std::invalid_argument("close_knot: letter out of range");
    const int sw = arc[k], se = arc[k + 1], nw = next++, ne = next++;
    const int ol = orient(strand[k]), orr = orient(strand[k + 1]);
    const bool over_left = letter > 0;
    const int ccw[4] = {se, ne, nw, sw};
    const int start = over_left ? (orr > 0 ? 0 : 2) : (ol > 0 ? 3 : 1);
    Crossing c;
    c.a = ccw[start];
    c.b = ccw[(start + 1) % 4];
    c.c = ccw[(start + 2) % 4];
    c.d = ccw[(start + 3) % 4];
    c.sign = (letter > 0 ? 1 : -1) * ol * orr;
    crossings.push_back(c);
    arc[k] = nw;
    arc[k + 1] = ne;
    std::swap(strand[k], strand[k + 1]);
  }

  // trace closure: each top arc joins its own bottom arc
  for (int p = 1; p <= m; ++p) merges.emplace_back(arc[p], p);

  std::vector<int> uf(next);
  std::iota(uf.begin(), uf.end(), 0);
  for (const auto& [x, y] : merges) uf[uf_find(uf, x)] = uf_find(uf, y);

  LinkDiagram d;
  d.components = 1;
  for (Crossing c : crossings) {
    c.a = uf_find(uf, c.a);
    c.b = uf_find(uf, c.b);
    c.c = uf_find(uf, c.c);
    c.d = uf_find(uf, c.d);
    d.crossings.push_back(c);
  }
  if (d.crossings.empty()) d.free_loops = 1;
  d.validate();
  return d;
}

namespace {

struct End {
  int crossing = -1;
  bool over = false;
};

struct EndMaps {
  std::map<int, End> in, out;  // arc -> pass it enters / leaves
};

EndMaps end_maps(const LinkDiagram& d) {
  EndMaps em;
  auto put = [](std::map<int, End>& m, int arc, int ci, bool over) {
    if (!m.emplace(arc, End{ci, over}).second)
      throw std::invalid_argument("LinkDiagram: arc has two ends of the same kind");
  };
  for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci) {
    const Crossing& c = d.crossings[ci];
    put(em.in, c.a, ci, false);
    put(em.out, c.c, ci, false);
    put(em.in, c.sign > 0 ? c.d : c.b, ci, true);
    put(em.out, c.sign > 0 ? c.b : c.d, ci, true);
  }
  if (em.in.size() != em.out.size())
    throw std::invalid_argument("LinkDiagram: unbalanced arc ends");
  return em;
}

int out_arc(const Crossing& c, bool over) {
  if (!over) return c.c;
  return c.sign > 0 ? c.b : c.d;
}

}  // namespace

TraceDiagram TraceDiagram::from_pd(const LinkDiagram& d) {
  d.validate();
  EndMaps em = end_maps(d);
  TraceDiagram t;
  t.free_loops = d.free_loops;
  for (const auto& c : d.crossings) t.signs.push_back(c.sign);

  std::set<int> visited;  // arcs already traversed
  for (const auto& [arc0, start] : em.in) {
    if (visited.count(arc0)) continue;
    std::vector<Pass> comp;
    int arc = arc0;
    End cur = start;
    do {
      visited.insert(arc);
      comp.push_back(Pass{cur.crossing, cur.over});
      arc = out_arc(d.crossings[cur.crossing], cur.over);
      auto it = em.in.find(arc);
      if (it == em.in.end())
        throw std::invalid_argument("LinkDiagram: broken traversal at arc " + std::to_string(arc));
      cur = it->second;
    } while (arc != arc0);
    t.comps.push_back(std::move(comp));
  }
  if (static_cast<int>(t.comps.size()) + t.free_loops != d.components)
    throw std::invalid_argument("LinkDiagram: component count does not match traversal");
  return t;
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
  TraceDiagram t = TraceDiagram::from_pd(d);
  const int nc = static_cast<int>(t.comps.size());
  std::vector<int> comp_of(t.signs.size(), -1);
  for (int ci = 0; ci < nc; ++ci)
    for (const auto& p : t.comps[ci])
      if (!p.over) comp_of[p.crossing] = ci;  // component of the under pass
  const int n = nc + t.free_loops;
  std::vector<std::vector<int>> lk(n, std::vector<int>(n, 0));
  std::vector<std::vector<int>> twice(nc, std::vector<int>(nc, 0));
  for (int ci = 0; ci < nc; ++ci)
    for (const auto& p : t.comps[ci])
      if (p.over && comp_of[p.crossing] != ci)
        twice[ci][comp_of[p.crossing]] += t.signs[p.crossing];
  for (int i = 0; i < nc; ++i)
    for (int j = 0; j < nc; ++j)
      if (i != j) lk[i][j] = (twice[i][j] + twice[j][i]) / 2;
  return lk;
}

namespace {

struct SkeinState {
  std::vector<std::vector<TraceDiagram::Pass>> comps;
  std::vector<int> signs;  // 0 once a crossing is smoothed away
  int free_loops = 0;
};

// positions of the two passes of crossing x: (component, index) pairs
std::vector<std::pair<int, int>> find_passes(const SkeinState& s, int x) {
  std::vector<std::pair<int, int>> r;
  for (int ci = 0; ci < static_cast<int>(s.comps.size()); ++ci)
    for (int pi = 0; pi < static_cast<int>(s.comps[ci].size()); ++pi)
      if (s.comps[ci][pi].crossing == x) r.emplace_back(ci, pi);
  if (r.size() != 2) throw std::logic_error("skein: crossing does not have two passes");
  return r;
}

SkeinState smooth(const SkeinState& s, int x) {
  SkeinState r = s;
  auto pos = find_passes(r, x);
  auto [c1, p1] = pos[0];
  auto [c2, p2] = pos[1];
  if (c1 == c2) {
    // same component: the oriented smoothing splits it in two
    auto& seq = r.comps[c1];
    int lo = std::min(p1, p2), hi = std::max(p1, p2);
    std::vector<TraceDiagram::Pass> first, second;
    first.insert(first.end(), seq.begin(), seq.begin() + lo);
    first.insert(first.end(), seq.begin() + hi + 1, seq.end());
    second.insert(second.end(), seq.begin() + lo + 1, seq.begin() + hi);
    seq = std::move(first);
    r.comps.push_back(std::move(second));
  } else {
    // different components merge into one
    auto &s1 = r.comps[c1], &s2 = r.comps[c2];
    std::vector<TraceDiagram::Pass> merged;
    merged.insert(merged.end(), s1.begin(), s1.begin() + p1);
    merged.insert(merged.end(), s2.begin() + p2 + 1, s2.end());
    merged.insert(merged.end(), s2.begin(), s2.begin() + p2);
    merged.insert(merged.end(), s1.begin() + p1 + 1, s1.end());
    s1 = std::move(merged);
    r.comps.erase(r.comps.begin() + c2);
  }
  r.signs[x] = 0;
  // empty sequences are crossingless unknots now
  for (auto it = r.comps.begin(); it != r.comps.end();) {
    if (it->empty()) {
      r.free_loops += 1;
      it = r.comps.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

SkeinState switched(const SkeinState& s, int x) {
  SkeinState r = s;
  for (auto& comp : r.comps)
    for (auto& p : comp)
      if (p.crossing == x) p.over = !p.over;
  r.signs[x] = -r.signs[x];
  return r;
}

ConwayPoly skein_rec(const SkeinState& s) {
  // first crossing met as an under-pass before being met as an over-pass
  std::set<int> seen;
  int bad = -1;
  for (const auto& comp : s.comps) {
    for (const auto& p : comp) {
      if (seen.count(p.crossing)) continue;
      seen.insert(p.crossing);
      if (!p.over) {
        bad = p.crossing;
        break;
      }
    }
    if (bad >= 0) break;
  }
  if (bad < 0) {
    // descending: a split union of unknots
    const int n = static_cast<int>(s.comps.size()) + s.free_loops;
    return n == 1 ? ConwayPoly::one() : ConwayPoly();
  }
  const int sign = s.signs[bad];
  ConwayPoly a = skein_rec(switched(s, bad));
  ConwayPoly b = skein_rec(smooth(s, bad));
  return a + ConwayPoly::z(sign) * b;
}

}  // namespace

ConwayPoly conway_skein(const TraceDiagram& d, int max_crossings) {
  if (d.crossing_count() > max_crossings)
    throw CrossingLimitError("conway_skein: diagram has " +
                             std::to_string(d.crossing_count()) +
                             " crossings, limit " + std::to_string(max_crossings));
  SkeinState s{d.comps, d.signs, d.free_loops};
  return skein_rec(s);
}

ConwayPoly conway_skein(const LinkDiagram& d, int max_crossings) {
  return conway_skein(TraceDiagram::from_pd(d), max_crossings);
}

VerifyResult verify_factorization(const Braid& b, int q, int max_crossings) {
  if (!b.is_pure()) throw std::invalid_argument("verify_factorization: braid must be pure");
  if (b.strands < 2) throw std::invalid_argument("verify_factorization: need >= 2 strands");

  std::vector<Word> lams;
  auto raw = longitudes_from_braid(b);
  for (int i = 1; i <= b.strands; ++i) lams.push_back(normalize_longitude(raw[i - 1], i));

  VerifyResult r;
  r.m = b.strands;
  r.q = q;
  r.gamma_z = gamma_gauge_fixed(lams, q).gamma_z;
  r.nabla_link = conway_skein(close_link(b), max_crossings);
  r.nabla_knot = conway_skein(close_knot(b), max_crossings);
  const int Q = q - 1;
  r.lhs = r.nabla_link.to_series(Q);
  // the factorization is stated in the variable of the string link, which is
  // -z for an even number of strands
  if (b.strands % 2 == 0)
    for (int d = 1; d <= Q; d += 2) r.lhs.set(d, -r.lhs[d]);
  r.rhs = r.nabla_knot.to_series(Q) * r.gamma_z;
  r.matched = r.lhs == r.rhs;
  return r;
}

}  // namespace mubar
