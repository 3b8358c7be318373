#include "latt/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace latt {

Bits& Bits::operator&=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bits& Bits::subtract(const Bits& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

bool Bits::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

int Bits::count() const {
  int c = 0;
  for (uint64_t w : w_) c += __builtin_popcountll(w);
  return c;
}

bool Bits::intersects(const Bits& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

std::string ValidationReport::summary() const {
  if (ok) return "ok";
  std::ostringstream os;
  for (size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].rule;
    if (!violations[i].elems.empty()) {
      os << " [";
      for (size_t j = 0; j < violations[i].elems.size(); ++j)
        os << (j ? "," : "") << violations[i].elems[j];
      os << "]";
    }
    if (!violations[i].detail.empty()) os << ": " << violations[i].detail;
  }
  return os.str();
}

namespace detail {

OrderCore order_core(const LatticeDiagram& d) {
  OrderCore c;
  const int n = d.n;
  // Kahn topological order over the cover relation.
  std::vector<int> indeg(n, 0);
  for (Elem x = 0; x < n; ++x) indeg[x] = (int)d.down[x].size();
  std::vector<Elem> order;
  order.reserve(n);
  for (Elem x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (size_t i = 0; i < order.size(); ++i) {
    Elem x = order[i];
    for (Elem y : d.up[x])
      if (--indeg[y] == 0) order.push_back(y);
  }
  if ((int)order.size() != n) {
    c.error = "cover relation has a cycle";
    return c;
  }

  c.height.assign(n, 0);
  c.below.assign(n, Bits(n));
  c.above.assign(n, Bits(n));
  for (Elem x : order) {
    c.below[x].set(x);
    for (Elem z : d.down[x]) {
      c.below[x] |= c.below[z];
      c.height[x] = std::max(c.height[x], c.height[z] + 1);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Elem x = *it;
    c.above[x].set(x);
    for (Elem y : d.up[x]) c.above[x] |= c.above[y];
  }

  int nsrc = 0, nsink = 0;
  for (Elem x = 0; x < n; ++x) {
    if (d.down[x].empty()) ++nsrc, c.bottom = (nsrc == 1 ? x : kNone);
    if (d.up[x].empty()) ++nsink, c.top = (nsink == 1 ? x : kNone);
  }
  if (nsrc != 1) c.bottom = kNone;
  if (nsink != 1) c.top = kNone;

  // Join and meet tables; kNone where the bound is missing or not unique.
  std::vector<Elem> byh(order);  // already in non-decreasing height order? not
  std::sort(byh.begin(), byh.end(),
            [&](Elem a, Elem b) { return c.height[a] < c.height[b]; });
  c.join.assign((size_t)n * n, kNone);
  c.meet.assign((size_t)n * n, kNone);
  Bits ub(n), dominated(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      // join
      {
        ub = c.above[x];
        ub &= c.above[y];
        Elem m = kNone;
        int cnt = 0;
        dominated = Bits(n);
        for (Elem z : byh) {
          if (!ub.test(z) || dominated.test(z)) continue;
          ++cnt;
          m = z;
          if (cnt > 1) break;
          dominated |= c.above[z];
        }
        if (cnt == 1) c.join[(size_t)x * n + y] = c.join[(size_t)y * n + x] = m;
      }
      // meet
      {
        ub = c.below[x];
        ub &= c.below[y];
        Elem m = kNone;
        int cnt = 0;
        dominated = Bits(n);
        for (auto it = byh.rbegin(); it != byh.rend(); ++it) {
          Elem z = *it;
          if (!ub.test(z) || dominated.test(z)) continue;
          ++cnt;
          m = z;
          if (cnt > 1) break;
          dominated |= c.below[z];
        }
        if (cnt == 1) c.meet[(size_t)x * n + y] = c.meet[(size_t)y * n + x] = m;
      }
    }
  }
  c.ok = true;
  return c;
}

std::pair<std::vector<Face>, int> trace_faces(const LatticeDiagram& d) {
  const int n = d.n;
  // Rotation at v, counterclockwise: upper covers right-to-left, then lower
  // covers left-to-right. The face to trace next after arriving along (a,v)
  // is reached through the neighbor preceding a in this circular order.
  std::vector<std::vector<Elem>> rot(n);
  std::vector<std::map<Elem, int>> pos(n);
  for (Elem v = 0; v < n; ++v) {
    for (auto it = d.up[v].rbegin(); it != d.up[v].rend(); ++it)
      rot[v].push_back(*it);
    for (Elem z : d.down[v]) rot[v].push_back(z);
    for (int i = 0; i < (int)rot[v].size(); ++i) pos[v][rot[v][i]] = i;
  }

  std::map<std::pair<Elem, Elem>, int> eid;
  std::vector<std::pair<Elem, Elem>> dir;
  for (Elem x = 0; x < n; ++x)
    for (Elem y : d.up[x]) {
      eid[{x, y}] = (int)dir.size();
      dir.push_back({x, y});
      eid[{y, x}] = (int)dir.size();
      dir.push_back({y, x});
    }

  std::vector<Face> faces;
  std::vector<char> used(dir.size(), 0);
  for (size_t e0 = 0; e0 < dir.size(); ++e0) {
    if (used[e0]) continue;
    Face f;
    size_t e = e0;
    do {
      used[e] = 1;
      auto [a, b] = dir[e];
      f.edges.push_back({a, b});
      int k = (int)rot[b].size();
      Elem c = rot[b][(pos[b].at(a) + k - 1) % k];
      e = eid.at({b, c});
    } while (e != e0 && f.edges.size() <= dir.size());
    faces.push_back(std::move(f));
  }

  int outer = -1;
  Elem bot = kNone;
  int nsrc = 0;
  for (Elem x = 0; x < n; ++x)
    if (d.down[x].empty()) {
      ++nsrc;
      bot = x;
    }
  if (nsrc == 1 && !d.up[bot].empty()) {
    std::pair<Elem, Elem> key{d.up[bot][0], bot};
    for (int i = 0; i < (int)faces.size(); ++i)
      for (auto& e : faces[i].edges)
        if (e == key) outer = i;
  }
  return {std::move(faces), outer};
}

bool left_of_core(const LatticeDiagram& d, const std::vector<Bits>& above,
                  Elem meet, Elem x, Elem y) {
  Elem z = meet;
  auto leftmost_path = [&](Elem target) {
    std::vector<Elem> p{z};
    Elem cur = z;
    while (cur != target) {
      for (Elem u : d.up[cur])
        if (above[u].test(target)) {
          cur = u;
          break;
        }
      p.push_back(cur);
    }
    return p;
  };
  std::vector<Elem> px = leftmost_path(x), py = leftmost_path(y);
  size_t i = 0;
  while (i < px.size() && i < py.size() && px[i] == py[i]) ++i;
  Elem w = px[i - 1];
  int ix = -1, iy = -1;
  for (int j = 0; j < (int)d.up[w].size(); ++j) {
    if (d.up[w][j] == px[i]) ix = j;
    if (d.up[w][j] == py[i]) iy = j;
  }
  return ix < iy;
}

// Dual computation from the join downward, used to cross-check the
// embedding's consistency.
static bool left_of_dual(const LatticeDiagram& d, const OrderCore& core, Elem x,
                         Elem y) {
  const int n = d.n;
  Elem z = core.join[(size_t)x * n + y];
  auto leftmost_path = [&](Elem target) {
    std::vector<Elem> p{z};
    Elem cur = z;
    while (cur != target) {
      for (Elem l : d.down[cur])
        if (core.below[l].test(target)) {
          cur = l;
          break;
        }
      p.push_back(cur);
    }
    return p;
  };
  std::vector<Elem> px = leftmost_path(x), py = leftmost_path(y);
  size_t i = 0;
  while (i < px.size() && i < py.size() && px[i] == py[i]) ++i;
  Elem w = px[i - 1];
  int ix = -1, iy = -1;
  for (int j = 0; j < (int)d.down[w].size(); ++j) {
    if (d.down[w][j] == px[i]) ix = j;
    if (d.down[w][j] == py[i]) iy = j;
  }
  return ix < iy;
}

}  // namespace detail

static std::vector<Elem> boundary_walk(const LatticeDiagram& d, Elem bot,
                                       bool leftmost) {
  std::vector<Elem> chain{bot};
  Elem cur = bot;
  while (!d.up[cur].empty()) {
    cur = leftmost ? d.up[cur].front() : d.up[cur].back();
    chain.push_back(cur);
  }
  return chain;
}

ValidationReport validate(const LatticeDiagram& d) {
  ValidationReport r;
  auto fail = [&](std::string rule, std::vector<Elem> elems, std::string detail) {
    r.ok = false;
    r.violations.push_back({std::move(rule), std::move(elems), std::move(detail)});
  };

  if (d.n < 1) {
    fail("index-range", {}, "n must be at least 1");
    return r;
  }
  if ((int)d.up.size() != d.n || (int)d.down.size() != d.n ||
      (!d.labels.empty() && (int)d.labels.size() != d.n)) {
    fail("index-range", {}, "cover list count does not match n");
    return r;
  }
  for (Elem x = 0; x < d.n; ++x) {
    for (auto* lst : {&d.up[x], &d.down[x]}) {
      std::vector<Elem> seen;
      for (Elem y : *lst) {
        if (y < 0 || y >= d.n) {
          fail("index-range", {x, y}, "cover id out of range");
          return r;
        }
        if (y == x) {
          fail("index-range", {x}, "self-cover");
          return r;
        }
        if (std::find(seen.begin(), seen.end(), y) != seen.end()) {
          fail("index-range", {x, y}, "duplicate cover");
          return r;
        }
        seen.push_back(y);
      }
    }
  }

  for (Elem x = 0; x < d.n; ++x)
    for (Elem y : d.up[x])
      if (std::find(d.down[y].begin(), d.down[y].end(), x) == d.down[y].end()) {
        fail("updown", {x, y}, "y in up(x) but x not in down(y)");
        return r;
      }
  for (Elem y = 0; y < d.n; ++y)
    for (Elem x : d.down[y])
      if (std::find(d.up[x].begin(), d.up[x].end(), y) == d.up[x].end()) {
        fail("updown", {x, y}, "x in down(y) but y not in up(x)");
        return r;
      }

  auto core = detail::order_core(d);
  if (!core.ok) {
    fail("acyclic", {}, core.error);
    return r;
  }

  int nsrc = 0, nsink = 0;
  Elem firstSrc = kNone, secondSrc = kNone, firstSink = kNone, secondSink = kNone;
  for (Elem x = 0; x < d.n; ++x) {
    if (d.down[x].empty()) {
      ++nsrc;
      (nsrc == 1 ? firstSrc : secondSrc) = x;
    }
    if (d.up[x].empty()) {
      ++nsink;
      (nsink == 1 ? firstSink : secondSink) = x;
    }
  }
  if (nsrc != 1)
    fail("unique-min", nsrc > 1 ? std::vector<Elem>{firstSrc, secondSrc}
                                : std::vector<Elem>{},
         "no unique minimum");
  if (nsink != 1)
    fail("unique-max", nsink > 1 ? std::vector<Elem>{firstSink, secondSink}
                                 : std::vector<Elem>{},
         "no unique maximum");

  // Connectivity of the cover graph (needed for the Euler certificate).
  bool connected = true;
  if (d.n > 1) {
    std::vector<char> vis(d.n, 0);
    std::vector<Elem> stk{0};
    vis[0] = 1;
    while (!stk.empty()) {
      Elem x = stk.back();
      stk.pop_back();
      for (auto* lst : {&d.up[x], &d.down[x]})
        for (Elem y : *lst)
          if (!vis[y]) {
            vis[y] = 1;
            stk.push_back(y);
          }
    }
    for (Elem x = 0; x < d.n; ++x)
      if (!vis[x]) {
        connected = false;
        fail("connected", {x}, "element unreachable in cover graph");
        break;
      }
  }

  bool coversOk = true;
  for (Elem x = 0; x < d.n && coversOk; ++x)
    for (Elem y : d.up[x]) {
      for (Elem z = 0; z < d.n; ++z)
        if (z != x && z != y && core.above[x].test(z) && core.below[y].test(z)) {
          fail("covers", {x, y, z}, "cover x < y has intermediate element z");
          coversOk = false;
          break;
        }
      if (!coversOk) break;
    }

  bool latticeOk = true;
  for (Elem x = 0; x < d.n && latticeOk; ++x)
    for (Elem y = x + 1; y < d.n; ++y) {
      if (core.join[(size_t)x * d.n + y] == kNone) {
        fail("lattice-join", {x, y}, "join missing or not unique");
        latticeOk = false;
        break;
      }
      if (core.meet[(size_t)x * d.n + y] == kNone) {
        fail("lattice-meet", {x, y}, "meet missing or not unique");
        latticeOk = false;
        break;
      }
    }

  if (connected && nsrc == 1 && nsink == 1) {
    auto [faces, outer] = detail::trace_faces(d);
    int E = 0;
    for (Elem x = 0; x < d.n; ++x) E += (int)d.up[x].size();
    int expected = E - d.n + 2;
    int got = d.n == 1 ? 1 : (int)faces.size();
    if (got != expected)
      fail("planar-faces", {},
           "face count " + std::to_string(got) + " != E-V+2 = " +
               std::to_string(expected));
    else if (d.n > 1) {
      // The outer face must consist exactly of the two boundary chains.
      std::vector<std::pair<Elem, Elem>> boundary, outerEdges;
      for (bool left : {true, false}) {
        auto ch = boundary_walk(d, firstSrc, left);
        for (size_t i = 0; i + 1 < ch.size(); ++i)
          boundary.push_back({std::min(ch[i], ch[i + 1]), std::max(ch[i], ch[i + 1])});
      }
      for (auto& e : faces[outer].edges)
        outerEdges.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
      std::sort(boundary.begin(), boundary.end());
      std::sort(outerEdges.begin(), outerEdges.end());
      if (boundary != outerEdges)
        fail("planar-outer", {}, "outer face is not the two boundary chains");

      for (int i = 0; i < (int)faces.size() && r.ok; ++i) {
        if (i == outer) continue;
        auto& es = faces[i].edges;
        int mins = 0, maxs = 0;
        for (size_t j = 0; j < es.size(); ++j) {
          auto& in = es[(j + es.size() - 1) % es.size()];
          auto& out = es[j];
          bool inAsc = core.above[in.first].test(in.second);
          bool outAsc = core.above[out.first].test(out.second);
          if (!inAsc && outAsc) ++mins;
          if (inAsc && !outAsc) ++maxs;
        }
        if (mins != 1 || maxs != 1)
          fail("face-cell", {es[0].first},
               "interior face without unique bottom/top");
      }
    }
  }

  if (latticeOk && coversOk) {
    // Consistent left-right order on incomparable pairs: the computation
    // from the meet upward and from the join downward must agree, and the
    // relation must be a strict total order on antichains.
    std::vector<std::vector<int8_t>> lo(d.n, std::vector<int8_t>(d.n, -1));
    for (Elem x = 0; x < d.n && r.ok; ++x)
      for (Elem y = 0; y < d.n; ++y) {
        if (x == y || core.above[x].test(y) || core.above[y].test(x)) continue;
        bool a = detail::left_of_core(d, core.above, core.meet[(size_t)x * d.n + y],
                                      x, y);
        bool b = detail::left_of_dual(d, core, x, y);
        if (a != b) {
          fail("lr-order", {x, y}, "meet-side and join-side order disagree");
          break;
        }
        lo[x][y] = a;
      }
    for (Elem x = 0; x < d.n && r.ok; ++x)
      for (Elem y = 0; y < d.n && r.ok; ++y) {
        if (lo[x][y] != 1) continue;
        if (lo[y][x] == 1) {
          fail("lr-order", {x, y}, "left-of not antisymmetric");
          break;
        }
        for (Elem z = 0; z < d.n; ++z)
          if (lo[y][z] == 1 && lo[x][z] == 0) {
            fail("lr-order", {x, y, z}, "left-of not transitive");
            break;
          }
      }
  }

  return r;
}

Lattice::Lattice(LatticeDiagram d) : d_(std::move(d)) {
  auto rep = validate(d_);
  if (!rep.ok) throw LatticeError("invalid lattice diagram: " + rep.summary());
  init();
}

Lattice::Lattice(LatticeDiagram d, trusted_t) : d_(std::move(d)) { init(); }

void Lattice::init() {
  auto core = detail::order_core(d_);
  if (!core.ok) throw LatticeError(core.error);
  bottom_ = core.bottom;
  top_ = core.top;
  height_ = std::move(core.height);
  above_ = std::move(core.above);
  below_ = std::move(core.below);
  join_ = std::move(core.join);
  meet_ = std::move(core.meet);
  auto [faces, outer] = detail::trace_faces(d_);
  faces_ = std::move(faces);
  outer_ = outer;
}

void Lattice::check_elem(Elem x) const {
  if (x < 0 || x >= d_.n)
    throw LatticeError("element id " + std::to_string(x) + " out of range");
}

bool Lattice::covers(Elem x, Elem y) const {
  check_elem(x);
  check_elem(y);
  return std::find(d_.up[x].begin(), d_.up[x].end(), y) != d_.up[x].end();
}

Elem Lattice::join(Elem x, Elem y) const {
  check_elem(x);
  check_elem(y);
  return join_[(size_t)x * d_.n + y];
}

Elem Lattice::meet(Elem x, Elem y) const {
  check_elem(x);
  check_elem(y);
  return meet_[(size_t)x * d_.n + y];
}

bool Lattice::left_of(Elem x, Elem y) const {
  check_elem(x);
  check_elem(y);
  if (leq(x, y) || leq(y, x)) throw LatticeError("comparable");
  return detail::left_of_core(d_, above_, meet(x, y), x, y);
}

std::vector<Elem> Lattice::left_boundary() const {
  return boundary_walk(d_, bottom_, true);
}

std::vector<Elem> Lattice::right_boundary() const {
  return boundary_walk(d_, bottom_, false);
}

Elem Lattice::star_left(Elem x) const {
  check_elem(x);
  if (x == top_) throw LatticeError("is top");
  if (d_.up[x].size() > 2) throw LatticeError("not slim-semimodular context");
  return d_.up[x].front();
}

Elem Lattice::star_right(Elem x) const {
  check_elem(x);
  if (x == top_) throw LatticeError("is top");
  if (d_.up[x].size() > 2) throw LatticeError("not slim-semimodular context");
  return d_.up[x].back();
}

LatticeDiagram mirror(const LatticeDiagram& d) {
  LatticeDiagram m = d;
  for (auto& l : m.up) std::reverse(l.begin(), l.end());
  for (auto& l : m.down) std::reverse(l.begin(), l.end());
  return m;
}

}  // namespace latt
