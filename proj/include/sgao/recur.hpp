#pragma once

#include <string>
#include <vector>

#include "sgao/bigint.hpp"
#include "sgao/poly.hpp"
#include "sgao/states.hpp"

namespace sgao {

// Stage-to-stage recursion for labeled corner-state counts of SG_{d,b}.
// One polynomial per state class; all polys are homogeneous of total degree
// equal to the piece count.  Variable i of each polynomial is class i of
// `classes`, values taken per labeled representative.  The total count of
// acyclic orientations is the orbit-size weighted sum over classes.
struct RecursionSystem {
    int d = 0;
    int b = 0;
    int pieces = 0;
    ClassTable classes;
    std::vector<Polynomial> polys;

    int num_classes() const { return classes.size(); }
    void check() const;  // structural invariants; throws std::logic_error

    bool operator==(const RecursionSystem& o) const {
        return d == o.d && b == o.b && pieces == o.pieces &&
               classes.reps == o.classes.reps && classes.orbit_size == o.classes.orbit_size &&
               polys == o.polys;
    }
};

// Hand-transcribed recursions for (d,b) = (2,2) and (2,3); throws
// std::invalid_argument for other parameters.  These serve as the published
// reference that freshly derived systems are checked against.
RecursionSystem builtin_system(int d, int b);
bool has_builtin_system(int d, int b);

// Per-class labeled counts at one stage (index order = class order).
struct ClassVector {
    int stage = 0;
    std::vector<BigCount> x;
};

struct StageSequence {
    int d = 0;
    int b = 0;
    std::vector<int> orbit_size;
    std::vector<ClassVector> stages;  // stages[n].stage == n

    const ClassVector& at(int n) const;
    // Total acyclic orientation count at stage n: sum orbit_size[i] * x[i].
    BigCount f(int n) const;
};

// Runs the recursion from the stage-0 state (a single labeled chain) up to
// stage n_max inclusive.
StageSequence iterate(const RecursionSystem& sys, int n_max);

// Total count at stage n from the closed form in f(n-1) and the stage-(n-1)
// class values, bypassing the per-class polynomials.  Only the (2,2) and
// (2,3) forms are known; requires n >= 1 and stage n-1 present in `seq`.
//
// The closed form is f(n) = f(n-1)^P - 2 s(n-1)^3 R(n-1), where s is the
// pair-presence combination below (3a+2b+c for k=3) and R the cofactor.
BigCount f_direct(const StageSequence& seq, int n);

// Class-weighted count of labeled posets containing the ordered pair
// (u, v): coefficient of class i is the number of labeled posets in orbit i
// with u preceding v.  For k = 3 this is 3a + 2b + c regardless of (u, v).
Polynomial pair_presence_poly(const ClassTable& t, int u, int v);

// Cofactor R in the closed form above: 1 for (2,2), a cubic for (2,3).
Polynomial f_rejection_cofactor(int d, int b, int nclasses);

}  // namespace sgao
