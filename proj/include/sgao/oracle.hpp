#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sgao/bigint.hpp"
#include "sgao/graph.hpp"
#include "sgao/states.hpp"

namespace sgao {

// One orientation of a graph: bit i set <=> edge i runs from its lower to
// its higher endpoint.  Only graphs with <= 32 vertices and <= 34 edges are
// accepted by the sweep routines below; the caps keep enumeration honest
// about what fits in a sitting.
using OrientationBits = std::uint64_t;

struct SweepLimits {
    int max_edges = 34;
    // Reject orientations containing a directed triangle before running the
    // full acyclicity test.  Pure optimization; never changes results.
    bool triangle_filter = true;
};

bool is_acyclic(const Graph& g, OrientationBits bits);

// Reachability between corners of an acyclic orientation, as a strict
// partial order on corner indices (u precedes v iff a directed path runs
// from corner u to corner v).  Transitive and antisymmetric by
// construction; throws std::invalid_argument on a cyclic orientation.
CornerPoset corner_reachability(const Graph& g, OrientationBits bits);

// Exhaustive count of acyclic orientations over all 2^E orientations.
BigCount count_bruteforce(const Graph& g, const SweepLimits& limits = {},
                          int threads = 1);

// Acyclic orientation counts bucketed by labeled corner poset.
struct LabeledStateVector {
    int k = 0;
    std::vector<std::pair<CornerPoset, BigCount>> states;  // sorted, nonzero

    BigCount total() const;
    BigCount count_of(const CornerPoset& p) const;  // 0 when absent
    bool operator==(const LabeledStateVector&) const = default;
};

LabeledStateVector classify_orientations(const Graph& g,
                                         const SweepLimits& limits = {},
                                         int threads = 1);

struct ChromaticLimits {
    int max_edges = 30;
    // Cache subproblems keyed by their exact edge list.  Sound but only
    // catches identical subgraphs, so it is off by default.
    bool memoize = false;
};

// (-1)^v P(g, -1), the acyclic orientation count by way of the chromatic
// polynomial, computed with deletion-contraction.  Independent of the
// orientation sweep in both algorithm and code path.
BigCount count_chromatic(const Graph& g, const ChromaticLimits& limits = {});

}  // namespace sgao
