#pragma once

// Convex broken lines inscribed in a frame triangle: the girth-greedy
// construction with many lattice vertices, verification, and exhaustive
// searches used to check the vertex-count ceiling.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcurve/exact_core.hpp"

namespace latcurve {

/// Chain C_0 = A, C_1, ..., C_{k+1} = B of a frame, with an optional lattice
/// density for the intermediate vertices.
struct BrokenLine {
  std::vector<RatPoint> vertices;
  Frame frame;
  std::optional<std::int64_t> n;

  std::size_t intermediate_count() const { return vertices.size() < 2 ? 0 : vertices.size() - 2; }
};

enum class ViolationKind { Endpoints, Convexity, EdgeDirection, Containment, Lattice };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t index;  // vertex index, or edge index for Convexity/EdgeDirection
  std::string message;
};

/// First violated broken-line condition, or nullopt when the line is valid.
std::optional<Violation> verify_abc_broken_line(const BrokenLine& line);

/// max(3, 5 (S n^2)^(1/3)).
double max_vertex_bound(const Rational& s, std::int64_t n);

/// Exact form of k <= max(3, 5 (S n^2)^(1/3)).
bool within_vertex_bound(std::size_t k, const Rational& s, std::int64_t n);

/// floor(c (S n^2)^(1/3)), computed exactly.
Integer jarnik_edge_count(const Frame& f, std::int64_t n, const Rational& c);

/// Chain whose inner edges are the `edges` least-girth primitive vectors of
/// the open cone at scale 1/n, sorted by angle and anchored near vertex C.
/// Has edges + 1 intermediate vertices. Throws Error(ConstructionFailure)
/// when no anchor in the search window verifies.
BrokenLine build_chain_with_edges(const Frame& f, std::int64_t n, std::size_t edges);

/// build_chain_with_edges with edges = floor(c (S n^2)^(1/3)). Throws
/// Error(Configuration) when that count is zero.
BrokenLine build_chain(const Frame& f, std::int64_t n, const Rational& c = Rational(1, 100));

/// Largest number of intermediate vertices over all (AB,C;n)-broken lines,
/// by dynamic programming over angle-sorted lattice edges. Intended for
/// small n.
std::size_t max_abc_vertices(const Frame& f, std::int64_t n);

/// Minimal doubled area of a convex lattice k-gon, 3 <= k <= 10.
Integer min_area_convex_lattice_kgon(int k);

}  // namespace latcurve
