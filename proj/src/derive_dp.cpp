// Frontier dynamic program for deriving stage recursions when the direct
// product over pieces is too large (e.g. ten pieces for b = 4).
//
// Pieces are processed in layout order.  The DP state is the transitive
// reachability relation restricted to "active" junction vertices: those
// already touched by a processed piece but still needed, either by a later
// piece or by the final outer-corner readout.  Junctions whose incident
// pieces are all processed can be dropped: any future path through them
// would need an unprocessed incident piece.  Dropping is sound because the
// relation is kept transitively closed, so paths through dropped vertices
// survive as direct pairs.
//
// The relation is encoded as an 8x8 bit matrix over the sorted active list,
// which bounds the frontier at 8 vertices; every supported layout stays
// within that (the b = 4 layout peaks at 7).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sgao/errors.hpp"
#include "derive_internal.hpp"

namespace sgao::detail {

namespace {

using Rel = std::uint64_t;  // bit (i*8+j): active[i] reaches active[j]

using SmallPoly = std::vector<std::pair<ExpKey, std::uint64_t>>;  // sorted

void poly_add(SmallPoly& p, ExpKey key, std::uint64_t cnt) {
    auto it = std::lower_bound(p.begin(), p.end(), key,
                               [](const auto& e, ExpKey k) { return e.first < k; });
    if (it != p.end() && it->first == key)
        it->second += cnt;
    else
        p.insert(it, {key, cnt});
}

struct Step {
    std::vector<int> active;         // junction ids after this piece, sorted
    std::vector<int> old_pos;        // previous active -> position in work list
    std::vector<int> slot_pos;       // piece corners -> position in work list
    std::vector<int> keep_pos;       // surviving work positions, in new order
    int work_size = 0;
};

}  // namespace

RawPolys enumerate_dp(const GluingLayout& lay, const ClassTable& table,
                      std::int64_t max_states) {
    int npieces = lay.num_pieces();
    int k = table.k;
    const auto& posets = enumerate_posets(k);
    int nposets = static_cast<int>(posets.size());

    std::vector<int> class_of(nposets);
    for (int r = 0; r < nposets; ++r) class_of[r] = table.class_of(posets[r]);

    // Last piece touching each junction; outer corners are never dropped.
    std::vector<int> last(lay.num_junctions, -1);
    for (int p = 0; p < npieces; ++p)
        for (int j : lay.piece_slots[p]) last[j] = p;
    for (int j : lay.outer) last[j] = npieces;

    // Precompute, per piece, the frontier bookkeeping.
    std::vector<Step> steps(npieces);
    std::vector<int> active;
    for (int p = 0; p < npieces; ++p) {
        Step& st = steps[p];
        std::vector<int> work = active;
        for (int j : lay.piece_slots[p])
            if (std::find(work.begin(), work.end(), j) == work.end()) work.push_back(j);
        std::sort(work.begin(), work.end());
        st.work_size = static_cast<int>(work.size());
        if (st.work_size > 8)
            throw ResourceError("derive dp: frontier exceeds 8 junctions");

        auto pos_in_work = [&work](int j) {
            return static_cast<int>(
                std::find(work.begin(), work.end(), j) - work.begin());
        };
        for (int j : active) st.old_pos.push_back(pos_in_work(j));
        for (int j : lay.piece_slots[p]) st.slot_pos.push_back(pos_in_work(j));

        std::vector<int> next;
        for (int j : work)
            if (last[j] > p) next.push_back(j);
        for (int j : next) st.keep_pos.push_back(pos_in_work(j));
        st.active = next;
        active = std::move(next);
    }
    if (static_cast<int>(active.size()) != k)
        throw std::logic_error("derive dp: final frontier is not the outer corners");

    // Route each poset's pairs through each piece's slot positions.
    std::vector<std::vector<std::vector<std::pair<int, int>>>> arcs(npieces);
    for (int p = 0; p < npieces; ++p) {
        arcs[p].resize(nposets);
        for (int r = 0; r < nposets; ++r)
            for (auto [u, v] : posets[r].pairs())
                arcs[p][r].emplace_back(steps[p].slot_pos[u], steps[p].slot_pos[v]);
    }

    std::unordered_map<Rel, SmallPoly> states;
    states[0] = {{ExpKey(0), 1}};

    for (int p = 0; p < npieces; ++p) {
        const Step& st = steps[p];
        std::unordered_map<Rel, SmallPoly> next;
        std::int64_t entries = 0;

        for (const auto& [rel, poly] : states) {
            // Expand the stored relation into row masks over work positions.
            std::uint8_t base[8] = {};
            int na = static_cast<int>(st.old_pos.size());
            for (int i = 0; i < na; ++i)
                for (int j = 0; j < na; ++j)
                    if ((rel >> (i * 8 + j)) & 1)
                        base[st.old_pos[i]] |= std::uint8_t(1u << st.old_pos[j]);

            for (int r = 0; r < nposets; ++r) {
                std::uint8_t out[8];
                std::copy(std::begin(base), std::end(base), std::begin(out));
                for (auto [u, v] : arcs[p][r]) out[u] |= std::uint8_t(1u << v);

                // Transitive closure, then cycle check via self-reach.
                for (int m = 0; m < st.work_size; ++m)
                    for (int i = 0; i < st.work_size; ++i)
                        if ((out[i] >> m) & 1) out[i] |= out[m];
                bool cyclic = false;
                for (int i = 0; i < st.work_size && !cyclic; ++i)
                    if ((out[i] >> i) & 1) cyclic = true;
                if (cyclic) continue;

                Rel nrel = 0;
                int nk = static_cast<int>(st.keep_pos.size());
                for (int i = 0; i < nk; ++i)
                    for (int j = 0; j < nk; ++j)
                        if (i != j && ((out[st.keep_pos[i]] >> st.keep_pos[j]) & 1))
                            nrel |= Rel(1) << (i * 8 + j);

                SmallPoly& dst = next[nrel];
                ExpKey field = exp_field(class_of[r]);
                for (const auto& [key, cnt] : poly) poly_add(dst, key + field, cnt);
            }
        }

        for (const auto& [rel, poly] : next)
            entries += static_cast<std::int64_t>(poly.size());
        if (entries > max_states)
            throw ResourceError("derive dp: state table exceeded cap at piece " +
                                std::to_string(p));
        states = std::move(next);
    }

    // Final frontier = outer corners sorted by junction id; translate matrix
    // positions back to corner indices.
    std::vector<int> corner_of(k);
    for (int i = 0; i < k; ++i) {
        auto it = std::find(lay.outer.begin(), lay.outer.end(), active[i]);
        if (it == lay.outer.end())
            throw std::logic_error("derive dp: stray junction in final frontier");
        corner_of[i] = static_cast<int>(it - lay.outer.begin());
    }

    RawPolys raw;
    for (const auto& [rel, poly] : states) {
        std::uint32_t out_rel = 0;
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (i != j && ((rel >> (i * 8 + j)) & 1))
                    out_rel |= 1u << CornerPoset::slot(k, corner_of[i], corner_of[j]);
        auto& dst = raw.per_outer[out_rel];
        for (const auto& [key, cnt] : poly) dst[key] += cnt;
    }
    return raw;
}

}  // namespace sgao::detail
