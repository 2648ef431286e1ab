#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sgao {

// Strict partial order on k labeled corners, k in [2, 5].  Encoded as a
// bitmask over the k(k-1) ordered pairs (u, v), u != v; bit set means
// u precedes v (u "reaches" v).  Irreflexivity is structural; antisymmetry
// and transitivity are semantic and checked by is_valid().
struct CornerPoset {
    int k = 0;
    std::uint32_t rel = 0;

    static int slot(int k, int u, int v);  // pair (u,v) -> bit index

    bool has(int u, int v) const { return (rel >> slot(k, u, v)) & 1u; }
    CornerPoset with(int u, int v) const;

    // Order-reverse (transpose).  An involution on valid posets.
    CornerPoset reversed() const;

    // Relabel corners: element u becomes perm[u].
    CornerPoset permuted(const std::vector<int>& perm) const;

    bool is_valid() const;
    int num_pairs() const;
    std::vector<std::pair<int, int>> pairs() const;

    auto operator<=>(const CornerPoset&) const = default;
};

// All valid posets on k labeled corners, sorted by bitmask.
// Counts: k=2 -> 3, k=3 -> 19, k=4 -> 219, k=5 -> 4231.
const std::vector<CornerPoset>& enumerate_posets(int k);

// Orbit decomposition of the labeled posets under corner relabeling
// (all k! permutations) and, optionally, order reversal.  Classes are
// sorted by descending pair count of the canonical representative, then
// ascending bitmask, and named "a", "b", "c", ...  For k = 3 with reversal
// this yields 4 classes: a = chain (orbit 6), b = one-below-two / two-below-one
// (orbit 6), c = single relation (orbit 6), d = antichain (orbit 1).
struct ClassTable {
    int k = 0;
    bool reversal = true;
    std::vector<CornerPoset> reps;
    std::vector<int> orbit_size;
    std::vector<std::string> names;

    int size() const { return static_cast<int>(reps.size()); }

    // Class id of a labeled poset; throws std::invalid_argument when the
    // mask is not a valid poset.
    int class_of(const CornerPoset& p) const;

    // Canonical (minimal) orbit member of a labeled poset.
    CornerPoset canonical(const CornerPoset& p) const;

private:
    friend ClassTable orbit_classes(int k, bool use_reversal);
    std::unordered_map<std::uint32_t, int> lookup_;
};

ClassTable orbit_classes(int k, bool use_reversal = true);

}  // namespace sgao
