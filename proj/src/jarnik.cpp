#include "latcurve/jarnik.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "latcurve/detail/raster.hpp"
#include "latcurve/error.hpp"
#include "latcurve/girth_enum.hpp"

namespace latcurve {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Endpoints: return "endpoints";
    case ViolationKind::Convexity: return "convexity";
    case ViolationKind::EdgeDirection: return "edge_direction";
    case ViolationKind::Containment: return "containment";
    case ViolationKind::Lattice: return "lattice";
  }
  return "unknown";
}

std::optional<Violation> verify_abc_broken_line(const BrokenLine& line) {
  const Frame& f = line.frame;
  const auto& v = line.vertices;
  if (v.size() < 2 || !(v.front() == f.a()) || !(v.back() == f.b())) {
    return Violation{ViolationKind::Endpoints, 0, "chain must start at A and end at B"};
  }
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const RatVec e = v[i + 1] - v[i];
    if (e == RatVec() || !f.in_angle(e)) {
      return Violation{ViolationKind::EdgeDirection, i, "edge " + std::to_string(i) + " leaves the cone An"};
    }
  }
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    if (sgn(cross(v[i + 1] - v[i], v[i + 2] - v[i + 1])) <= 0) {
      return Violation{ViolationKind::Convexity, i,
                       "edges " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not turn strictly"};
    }
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (!f.strictly_inside(v[i])) {
      return Violation{ViolationKind::Containment, i, "vertex " + std::to_string(i) + " is not inside ABC"};
    }
    if (line.n && !on_lattice(v[i], *line.n)) {
      return Violation{ViolationKind::Lattice, i,
                       "vertex " + std::to_string(i) + " is not on the lattice of step 1/" + std::to_string(*line.n)};
    }
  }
  return std::nullopt;
}

double max_vertex_bound(const Rational& s, std::int64_t n) {
  const double nn = static_cast<double>(n);
  return std::max(3.0, 5.0 * std::cbrt(to_double(s) * nn * nn));
}

bool within_vertex_bound(std::size_t k, const Rational& s, std::int64_t n) {
  if (k <= 3) return true;
  const Integer kk(static_cast<unsigned long>(k));
  return Rational(kk * kk * kk) <= 125 * s * Integer(n) * Integer(n);
}

Integer jarnik_edge_count(const Frame& f, std::int64_t n, const Rational& c) {
  if (n <= 0 || sgn(c) <= 0) throw Error(ErrorKind::Configuration, "n and c must be positive");
  return floor_cbrt(c * c * c * f.doubled_area() * Integer(n) * Integer(n));
}

BrokenLine build_chain_with_edges(const Frame& f, std::int64_t n, std::size_t edges) {
  if (n <= 0) throw Error(ErrorKind::Configuration, "lattice density must be positive");
  if (edges == 0) throw Error(ErrorKind::Configuration, "chain needs at least one edge");

  std::vector<LatticeVec> zs = enumerate_by_girth(f, edges, VectorSelection::PrimitiveInterior);
  std::sort(zs.begin(), zs.end(), [](LatticeVec u, LatticeVec w) { return cross_i128(u, w) > 0; });
  LatticeVec total;
  for (LatticeVec z : zs) total = total + z;

  const Rational inv_n(1, n);
  // The chain spans total/n = t1*AC + t2*CB. Starting it at C - t1*AC puts
  // its far end at C + t2*CB, so the chain hugs corner C; lattice anchors
  // near that ideal start are tried nearest first.
  const Rational t1 = f.angle_coords(RatVec(total)).first * inv_n;
  const RatPoint ideal = f.c() - t1 * f.ac();
  const Integer bx = floor(ideal.x * n);
  const Integer by = floor(ideal.y * n);

  constexpr int window = 10;
  struct Anchor {
    Rational distance;
    int i, j;
  };
  std::vector<Anchor> anchors;
  for (int i = -window; i <= window; ++i) {
    for (int j = -window; j <= window; ++j) {
      const RatPoint p(Rational(bx + i) * inv_n, Rational(by + j) * inv_n);
      const auto [d1, d2] = f.angle_coords(p - ideal);
      anchors.push_back({abs(d1) + abs(d2), i, j});
    }
  }
  std::sort(anchors.begin(), anchors.end(), [](const Anchor& a, const Anchor& b) {
    return std::tie(a.distance, a.i, a.j) < std::tie(b.distance, b.i, b.j);
  });

  BrokenLine line{{}, f, n};
  for (const Anchor& anchor : anchors) {
    line.vertices.clear();
    line.vertices.push_back(f.a());
    RatPoint p(Rational(bx + anchor.i) * inv_n, Rational(by + anchor.j) * inv_n);
    line.vertices.push_back(p);
    for (LatticeVec z : zs) {
      p = p + inv_n * RatVec(z);
      line.vertices.push_back(p);
    }
    line.vertices.push_back(f.b());
    if (!verify_abc_broken_line(line)) return line;
  }
  throw Error(ErrorKind::ConstructionFailure,
              "no anchor within " + std::to_string(window) + " lattice steps yields a valid broken line");
}

BrokenLine build_chain(const Frame& f, std::int64_t n, const Rational& c) {
  const Integer edges = jarnik_edge_count(f, n, c);
  if (edges < 1) {
    throw Error(ErrorKind::Configuration,
                "floor(c (S n^2)^(1/3)) is zero; increase n or c");
  }
  return build_chain_with_edges(f, n, static_cast<std::size_t>(to_int64(edges)));
}

std::size_t max_abc_vertices(const Frame& f, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::Configuration, "lattice density must be positive");
  const Rational nn(n);
  const RatPoint a = nn * f.a(), b = nn * f.b(), c = nn * f.c();
  // Frame orientation makes A, C, B counterclockwise.
  const detail::HalfPlane planes[] = {detail::left_of(a, c, true), detail::left_of(c, b, true),
                                      detail::left_of(b, a, true)};
  const RatPoint corners[] = {a, b, c};

  std::vector<RatPoint> nodes = {a, b};
  detail::for_each_lattice_point(planes, detail::y_extent(corners), [&](i128 x, i128 y) {
    nodes.emplace_back(Rational(from_i128(x)), Rational(from_i128(y)));
  });

  struct Edge {
    std::size_t from, to;
    RatVec dir;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i == 1) continue;  // nothing leaves B
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      if (i == j) continue;
      RatVec d = nodes[j] - nodes[i];
      if (f.in_angle(d)) edges.push_back({i, j, std::move(d)});
    }
  }
  // Directions within the cone are ordered by the sign of their cross
  // product.
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& u, const Edge& w) { return sgn(cross(u.dir, w.dir)) > 0; });

  std::vector<long> best(nodes.size(), -1);
  best[0] = 0;
  std::vector<std::pair<std::size_t, long>> pending;
  for (std::size_t lo = 0; lo < edges.size();) {
    std::size_t hi = lo + 1;
    while (hi < edges.size() && sgn(cross(edges[lo].dir, edges[hi].dir)) == 0) ++hi;
    // Equal directions cannot follow each other in a strictly convex chain,
    // so a batch only reads values from before the batch.
    pending.clear();
    for (std::size_t e = lo; e < hi; ++e) {
      if (best[edges[e].from] >= 0) pending.emplace_back(edges[e].to, best[edges[e].from] + 1);
    }
    for (auto [node, value] : pending) best[node] = std::max(best[node], value);
    lo = hi;
  }
  return best[1] <= 0 ? 0 : static_cast<std::size_t>(best[1] - 1);
}

namespace {

/// Position of a nonzero direction on the circle, counterclockwise from +x.
bool full_angle_less(LatticeVec u, LatticeVec w) {
  auto half = [](LatticeVec v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
  const int hu = half(u), hw = half(w);
  if (hu != hw) return hu < hw;
  return cross_i128(u, w) > 0;
}

/// Minimal doubled area of a convex k-gon with a vertex at the origin and all
/// other vertices among `pts` (which lie in y > 0, or on y = 0 with x > 0).
std::int64_t min_fan_polygon(const std::vector<LatticeVec>& pts, int k, std::int64_t cap) {
  const std::size_t m = pts.size() + 1;  // node 0 is the origin
  auto node = [&](std::size_t i) { return i == 0 ? LatticeVec{} : pts[i - 1]; };
  struct Edge {
    std::uint32_t from, to;
    LatticeVec dir;
  };
  std::vector<Edge> edges;
  edges.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || (i == 0 && j == 0)) continue;
      edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), node(j) - node(i)});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& u, const Edge& w) { return full_angle_less(u.dir, w.dir); });

  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::size_t width = static_cast<std::size_t>(k) + 1;
  std::vector<std::int64_t> best(m * width, inf);  // best[node * width + vertices used]
  std::int64_t answer = inf;
  struct Update {
    std::size_t slot;
    std::int64_t value;
  };
  std::vector<Update> pending;
  for (std::size_t lo = 0; lo < edges.size();) {
    std::size_t hi = lo + 1;
    while (hi < edges.size() && !full_angle_less(edges[lo].dir, edges[hi].dir)) ++hi;
    pending.clear();
    for (std::size_t e = lo; e < hi; ++e) {
      const Edge& edge = edges[e];
      if (edge.from == 0) {
        pending.push_back({edge.to * width + 2, 0});
        continue;
      }
      if (edge.to == 0) {
        answer = std::min(answer, best[edge.from * width + static_cast<std::size_t>(k)]);
        continue;
      }
      const std::int64_t area = static_cast<std::int64_t>(cross_i128(node(edge.from), node(edge.to)));
      for (int used = 2; used < k; ++used) {
        const std::int64_t base = best[edge.from * width + static_cast<std::size_t>(used)];
        if (base >= inf || base + area > cap) continue;
        pending.push_back({edge.to * width + static_cast<std::size_t>(used) + 1, base + area});
      }
    }
    for (const Update& u : pending) best[u.slot] = std::min(best[u.slot], u.value);
    lo = hi;
  }
  return answer;
}

}  // namespace

Integer min_area_convex_lattice_kgon(int k) {
  if (k < 3 || k > 10) throw Error(ErrorKind::Configuration, "k must lie in 3..10");
  // Normalization: a unimodular map and translation send one edge to
  // (0,0)-(g,0) with the polygon in 0 <= y <= h, and a shear puts the top
  // vertex at (x_top, h) with 0 <= x_top < h. The polygon contains the
  // triangles O,(g,0),top and O,top,v for every vertex v, so doubled area
  // T bounds h <= T and |x_top*y - h*x| <= T. Every polygon of doubled area
  // at most T is therefore found among the regions below.
  for (std::int64_t cap = 1;; cap *= 2) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t h = 1; h <= cap; ++h) {
      for (std::int64_t x_top = 0; x_top < h; ++x_top) {
        std::vector<LatticeVec> pts;
        for (std::int64_t y = 0; y <= h; ++y) {
          const std::int64_t lo = static_cast<std::int64_t>(ceil_div(x_top * y - cap, h));
          const std::int64_t hi = static_cast<std::int64_t>(floor_div(x_top * y + cap, h));
          for (std::int64_t x = lo; x <= hi; ++x) {
            if (y > 0 || x > 0) pts.push_back({x, y});
          }
        }
        best = std::min(best, min_fan_polygon(pts, k, cap));
      }
    }
    if (best <= cap) return Integer(static_cast<long>(best));
  }
}

}  // namespace latcurve
