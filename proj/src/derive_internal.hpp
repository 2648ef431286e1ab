#pragma once

#include <cstdint>
#include <unordered_map>

#include "sgao/gasket.hpp"
#include "sgao/recur.hpp"
#include "sgao/states.hpp"

namespace sgao::detail {

// Exponent multiset of one monomial, packed as 4-bit counters per class.
// Valid while #classes <= 16 and piece count <= 15, which covers every
// layout the deriver accepts.
using ExpKey = std::uint64_t;

inline ExpKey exp_field(int class_id) { return ExpKey(1) << (4 * class_id); }

using RawPoly = std::unordered_map<ExpKey, std::uint64_t>;

// Accumulated coefficients keyed by labeled outer poset bitmask.
struct RawPolys {
    std::unordered_map<std::uint32_t, RawPoly> per_outer;
};

void merge_raw(RawPolys& into, const RawPolys& from);

// Checks class well-definedness and converts raw counts into the system.
RecursionSystem assemble_system(int d, int b, int pieces, const ClassTable& table,
                                const RawPolys& raw);

RawPolys enumerate_direct(const GluingLayout& lay, const ClassTable& table, int threads);
RawPolys enumerate_dp(const GluingLayout& lay, const ClassTable& table,
                      std::int64_t max_states);

}  // namespace sgao::detail
