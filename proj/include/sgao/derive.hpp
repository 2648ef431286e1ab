#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgao/gasket.hpp"
#include "sgao/oracle.hpp"
#include "sgao/recur.hpp"
#include "sgao/states.hpp"

namespace sgao {

// Combines per-piece corner posets into the composite corner poset.
//
// Each piece state is the exact corner reachability of some acyclic
// orientation of the piece.  Pieces share junction vertices and nothing
// else, so a composite orientation is exactly one acyclic orientation per
// piece, and a composite directed cycle must cross junctions; cutting it at
// junction visits yields corner-to-corner paths inside single pieces, i.e.
// arcs of the junction digraph whose arcs are the piece poset pairs routed
// through the layout slots.  Conversely every junction-digraph cycle lifts
// to a composite closed walk.  Hence: composite acyclic <=> junction
// digraph acyclic, and composite corner reachability = transitive closure
// of the junction digraph restricted to the outer corners.
//
// Returns the composite outer poset, or nullopt when the junction digraph
// is cyclic (the assignment contributes nothing).
std::optional<CornerPoset> glue(const GluingLayout& lay,
                                const std::vector<CornerPoset>& piece_states);

struct DeriveStats {
    BigCount assignments = 0;  // (#posets on d+1 corners)^pieces
    BigCount accepted = 0;     // assignments whose junction digraph is acyclic
};

struct DeriveOptions {
    int threads = 1;
    bool force_dp = false;       // use the frontier DP even when direct fits
    std::int64_t max_dp_states = 20'000'000;
};

// Derives the stage recursion for SG_{d,b} by enumerating poset assignments
// over one gluing layout.  Direct product enumeration for up to 6 pieces;
// the sweep-line DP over junction frontiers otherwise.  The returned system
// passes RecursionSystem::check(); class well-definedness (all labeled
// posets of an orbit acquiring identical polynomials) is asserted during
// assembly.
RecursionSystem derive_recursion(int d, int b, const DeriveOptions& opts = {},
                                 DeriveStats* stats = nullptr);

// Folds labeled counts into per-class values.  Requires every labeled poset
// of a class to carry the same count (throws std::runtime_error otherwise).
ClassVector fold_to_classes(const LabeledStateVector& v, const ClassTable& t,
                            int stage);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Applies `sys` to stage-n class values and compares against the observed
// labeled classification of the stage-(n+1) graph, poset by poset.
VerifyReport verify_recursion(const RecursionSystem& sys, const ClassVector& from,
                              const LabeledStateVector& observed_next);

}  // namespace sgao
