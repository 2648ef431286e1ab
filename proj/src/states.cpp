#include "sgao/states.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace sgao {

int CornerPoset::slot(int k, int u, int v) {
    // Row-major over ordered pairs, diagonal removed.
    return u * (k - 1) + (v < u ? v : v - 1);
}

CornerPoset CornerPoset::with(int u, int v) const {
    CornerPoset r = *this;
    r.rel |= 1u << slot(k, u, v);
    return r;
}

CornerPoset CornerPoset::reversed() const {
    CornerPoset r{k, 0};
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v && has(u, v)) r.rel |= 1u << slot(k, v, u);
    return r;
}

CornerPoset CornerPoset::permuted(const std::vector<int>& perm) const {
    CornerPoset r{k, 0};
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v && has(u, v)) r.rel |= 1u << slot(k, perm[u], perm[v]);
    return r;
}

bool CornerPoset::is_valid() const {
    if (k < 2 || k > 5) return false;
    if (rel >> (k * (k - 1))) return false;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            if (has(u, v) && has(v, u)) return false;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v) {
            if (u == v || !has(u, v)) continue;
            for (int w = 0; w < k; ++w)
                if (w != u && w != v && has(v, w) && !has(u, w)) return false;
        }
    return true;
}

int CornerPoset::num_pairs() const { return std::popcount(rel); }

std::vector<std::pair<int, int>> CornerPoset::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < k; ++v)
            if (u != v && has(u, v)) out.emplace_back(u, v);
    return out;
}

const std::vector<CornerPoset>& enumerate_posets(int k) {
    if (k < 2 || k > 5) throw std::invalid_argument("enumerate_posets: k must be 2..5");
    static std::vector<CornerPoset> cache[6];
    auto& out = cache[k];
    if (!out.empty()) return out;
    std::uint32_t limit = 1u << (k * (k - 1));
    for (std::uint32_t m = 0; m < limit; ++m) {
        CornerPoset p{k, m};
        if (p.is_valid()) out.push_back(p);
    }
    return out;
}

namespace {

std::string class_name(int i) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i = i / 26 - 1;
    } while (i >= 0);
    return s;
}

}  // namespace

ClassTable orbit_classes(int k, bool use_reversal) {
    const auto& posets = enumerate_posets(k);

    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    auto canon = [&](const CornerPoset& p) {
        std::uint32_t best = p.rel;
        for (const auto& pm : perms) {
            std::uint32_t a = p.permuted(pm).rel;
            best = std::min(best, a);
            if (use_reversal) best = std::min(best, p.permuted(pm).reversed().rel);
        }
        return CornerPoset{k, best};
    };

    // canonical rep -> orbit size
    std::map<std::uint32_t, int> orbits;
    std::unordered_map<std::uint32_t, std::uint32_t> canon_of;
    for (const auto& p : posets) {
        CornerPoset c = canon(p);
        ++orbits[c.rel];
        canon_of[p.rel] = c.rel;
    }

    std::vector<std::pair<CornerPoset, int>> classes;
    for (auto [rel, size] : orbits) classes.push_back({CornerPoset{k, rel}, size});
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
        if (x.first.num_pairs() != y.first.num_pairs())
            return x.first.num_pairs() > y.first.num_pairs();
        return x.first.rel < y.first.rel;
    });

    ClassTable t;
    t.k = k;
    t.reversal = use_reversal;
    std::unordered_map<std::uint32_t, int> id_of_canon;
    for (int i = 0; i < static_cast<int>(classes.size()); ++i) {
        t.reps.push_back(classes[i].first);
        t.orbit_size.push_back(classes[i].second);
        t.names.push_back(class_name(i));
        id_of_canon[classes[i].first.rel] = i;
    }
    for (const auto& [rel, crel] : canon_of) t.lookup_[rel] = id_of_canon.at(crel);
    return t;
}

int ClassTable::class_of(const CornerPoset& p) const {
    if (p.k != k) throw std::invalid_argument("class_of: wrong k");
    auto it = lookup_.find(p.rel);
    if (it == lookup_.end()) throw std::invalid_argument("class_of: not a valid poset");
    return it->second;
}

CornerPoset ClassTable::canonical(const CornerPoset& p) const {
    return reps[class_of(p)];
}

}  // namespace sgao
