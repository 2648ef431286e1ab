#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "sgao/gasket.hpp"
#include "sgao/graph.hpp"
#include "sgao/oracle.hpp"
#include "sgao/recur.hpp"

namespace sgao {

// ---- Graph text format ----
// Header line "# d b n V E" (values), then "# corners c0 c1 ... cd", then one
// "u v" line per edge.  d/b/n echo how the graph was built; V/E are checked
// on parse.
std::string graph_to_text(const Graph& g, const GasketSpec& spec);

struct ParsedGraph {
    Graph graph;
    GasketSpec spec;
};
ParsedGraph graph_from_text(const std::string& text);

// ---- JSON ----
// RecursionSystem: {format_version, d, b, pieces, variables, orbit_sizes,
// class_reps (pair lists), polys: {name: [{exp, coef}]}}, coefficients as
// decimal strings.  Parsing rebuilds the class table from (d+1, reversal)
// and cross-checks it against the stored reps.
std::string system_to_json(const RecursionSystem& sys);
RecursionSystem system_from_json(const std::string& text);

// LabeledStateVector: {k, states: [{poset: [[u,v],...], count: "decimal"}]}
std::string states_to_json(const LabeledStateVector& v);
LabeledStateVector states_from_json(const std::string& text);

std::string class_table_to_json(const ClassTable& t);

// StageSequence: CSV with header "n,f,<class names...>".
std::string sequence_to_csv(const StageSequence& seq,
                            const std::vector<std::string>& names);

// ---- Derived-system cache ----
inline constexpr int kSystemFormatVersion = 1;

// SGAO_CACHE_DIR, else $HOME/.cache/sgao, else ./.sgao-cache.
std::filesystem::path default_cache_dir();

// nullopt when absent, unreadable, or written by another format version.
std::optional<RecursionSystem> load_cached_system(int d, int b,
                                                  const std::filesystem::path& dir);
void store_cached_system(const RecursionSystem& sys,
                         const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace sgao
