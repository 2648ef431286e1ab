#pragma once

#include <cstdint>
#include <vector>

#include "sgao/bigint.hpp"
#include "sgao/graph.hpp"

namespace sgao {

// A generalized Sierpinski gasket SG_{d,b}(n): d-dimensional simplices,
// side subdivided into b parts, recursion stage n.  Supported parameter
// range is d = 2 with b >= 2, or b = 2 with d >= 2 (the two families meet
// at d = b = 2).  Stage 0 is the complete graph on d+1 corners.
struct GasketSpec {
    int d = 2;
    int b = 2;
    int n = 0;
};

// Throws std::invalid_argument when (d, b, n) is outside the supported
// range (d < 2, b < 2, n < 0, or d >= 3 combined with b >= 3).
void validate_spec(const GasketSpec& spec);

// Closed-form vertex/edge counts; exact for all supported (d, b, n).
BigCount count_vertices(const GasketSpec& spec);
BigCount count_edges(const GasketSpec& spec);

// Builds the gasket graph by juxtaposing copies of stage n-1, merging
// coincident vertices.  Vertices are ordered lexicographically by their
// barycentric coordinate (d+1 nonnegative integers summing to b^n), so the
// construction is deterministic.  corners[k] is the vertex at b^n * e_k;
// for d = 2 that order is (o, i, j) = (left, right, top) corner.
//
// Throws ResourceError when the stage would exceed `max_vertices`.
Graph build_gasket(const GasketSpec& spec, std::int64_t max_vertices = 4'000'000);

// How stage n+1 is glued from stage-n pieces.  Junction vertices carry the
// barycentric coordinates of stage 1 (sum b); piece p's slot k tells which
// junction vertex plays corner k of that piece.  outer[k] is the junction
// index of the composite corner k.
struct GluingLayout {
    int d = 0;
    int b = 0;
    int num_junctions = 0;
    std::vector<std::vector<int>> piece_slots;  // [piece][corner] -> junction
    std::vector<int> outer;                     // [corner] -> junction

    int num_pieces() const { return static_cast<int>(piece_slots.size()); }
};

// Number of stage-n pieces in stage n+1: C(b+d-1, d).
int piece_count(int d, int b);

GluingLayout build_layout(int d, int b);

}  // namespace sgao
