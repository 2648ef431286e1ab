#include "sgao/serde.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sgao/states.hpp"

namespace sgao {

using nlohmann::json;

std::string graph_to_text(const Graph& g, const GasketSpec& spec) {
    std::ostringstream out;
    out << "# " << spec.d << " " << spec.b << " " << spec.n << " " << g.num_vertices
        << " " << g.num_edges() << "\n";
    out << "# corners";
    for (int c : g.corners) out << " " << c;
    out << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

ParsedGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    ParsedGraph pg;
    bool have_header = false;
    int expect_edges = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string first;
            ls >> first;
            if (first == "corners") {
                int c;
                while (ls >> c) pg.graph.corners.push_back(c);
            } else if (!have_header) {
                std::istringstream hs(line.substr(1));
                int d, b, n, v, e;
                if (!(hs >> d >> b >> n >> v >> e))
                    throw std::invalid_argument("graph text: bad header line");
                pg.spec = {d, b, n};
                pg.graph.num_vertices = v;
                expect_edges = e;
                have_header = true;
            }
            continue;
        }
        std::istringstream es(line);
        int u, v;
        if (!(es >> u >> v)) throw std::invalid_argument("graph text: bad edge line");
        pg.graph.edges.emplace_back(u, v);
    }
    if (!have_header) throw std::invalid_argument("graph text: missing header");
    if (expect_edges != pg.graph.num_edges())
        throw std::invalid_argument("graph text: edge count mismatch");
    pg.graph.normalize();
    if (expect_edges != pg.graph.num_edges())
        throw std::invalid_argument("graph text: duplicate edges");
    return pg;
}

namespace {

json poset_to_json(const CornerPoset& p) {
    json pairs = json::array();
    for (auto [u, v] : p.pairs()) pairs.push_back({u, v});
    return pairs;
}

CornerPoset poset_from_json(int k, const json& pairs) {
    CornerPoset p{k, 0};
    for (const auto& pr : pairs) {
        if (!pr.is_array() || pr.size() != 2)
            throw std::invalid_argument("poset json: bad pair");
        p = p.with(pr[0].get<int>(), pr[1].get<int>());
    }
    if (!p.is_valid()) throw std::invalid_argument("poset json: not a poset");
    return p;
}

}  // namespace

std::string system_to_json(const RecursionSystem& sys) {
    json j;
    j["format_version"] = kSystemFormatVersion;
    j["d"] = sys.d;
    j["b"] = sys.b;
    j["pieces"] = sys.pieces;
    j["variables"] = sys.classes.names;
    j["orbit_sizes"] = sys.classes.orbit_size;
    json reps = json::array();
    for (const auto& r : sys.classes.reps) reps.push_back(poset_to_json(r));
    j["class_reps"] = reps;
    json polys = json::object();
    for (int c = 0; c < sys.num_classes(); ++c) {
        json terms = json::array();
        for (const auto& [e, coef] : sys.polys[c].terms()) {
            json t;
            t["exp"] = std::vector<int>(e.begin(), e.end());
            t["coef"] = to_decimal(coef);
            terms.push_back(t);
        }
        polys[sys.classes.names[c]] = terms;
    }
    j["polys"] = polys;
    return j.dump(2) + "\n";
}

RecursionSystem system_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("format_version").get<int>() != kSystemFormatVersion)
        throw std::invalid_argument("system json: format version mismatch");
    RecursionSystem sys;
    sys.d = j.at("d").get<int>();
    sys.b = j.at("b").get<int>();
    sys.pieces = j.at("pieces").get<int>();
    sys.classes = orbit_classes(sys.d + 1, true);

    auto names = j.at("variables").get<std::vector<std::string>>();
    auto sizes = j.at("orbit_sizes").get<std::vector<int>>();
    if (names != sys.classes.names || sizes != sys.classes.orbit_size)
        throw std::invalid_argument("system json: class table mismatch");
    const json& reps = j.at("class_reps");
    if (static_cast<int>(reps.size()) != sys.classes.size())
        throw std::invalid_argument("system json: class rep count mismatch");
    for (int c = 0; c < sys.classes.size(); ++c)
        if (poset_from_json(sys.d + 1, reps[c]) != sys.classes.reps[c])
            throw std::invalid_argument("system json: class rep mismatch");

    for (int c = 0; c < sys.classes.size(); ++c) {
        Polynomial p(sys.classes.size());
        for (const auto& t : j.at("polys").at(names[c])) {
            auto ev = t.at("exp").get<std::vector<int>>();
            Polynomial::Exponents e;
            for (int x : ev) {
                if (x < 0 || x > 255) throw std::invalid_argument("system json: exponent");
                e.push_back(static_cast<std::uint8_t>(x));
            }
            p.add_term(e, parse_big(t.at("coef").get<std::string>()));
        }
        sys.polys.push_back(std::move(p));
    }
    sys.check();
    return sys;
}

std::string states_to_json(const LabeledStateVector& v) {
    json j;
    j["k"] = v.k;
    json states = json::array();
    for (const auto& [p, cnt] : v.states) {
        json s;
        s["poset"] = poset_to_json(p);
        s["count"] = to_decimal(cnt);
        states.push_back(s);
    }
    j["states"] = states;
    return j.dump(2) + "\n";
}

LabeledStateVector states_from_json(const std::string& text) {
    json j = json::parse(text);
    LabeledStateVector v;
    v.k = j.at("k").get<int>();
    for (const auto& s : j.at("states")) {
        CornerPoset p = poset_from_json(v.k, s.at("poset"));
        v.states.emplace_back(p, parse_big(s.at("count").get<std::string>()));
    }
    std::sort(v.states.begin(), v.states.end(),
              [](const auto& a, const auto& b) { return a.first.rel < b.first.rel; });
    return v;
}

std::string class_table_to_json(const ClassTable& t) {
    json j;
    j["k"] = t.k;
    j["reversal"] = t.reversal;
    json classes = json::array();
    for (int c = 0; c < t.size(); ++c) {
        json cc;
        cc["name"] = t.names[c];
        cc["orbit_size"] = t.orbit_size[c];
        cc["representative"] = poset_to_json(t.reps[c]);
        classes.push_back(cc);
    }
    j["classes"] = classes;
    return j.dump(2) + "\n";
}

std::string sequence_to_csv(const StageSequence& seq,
                            const std::vector<std::string>& names) {
    std::ostringstream out;
    out << "n,f";
    for (const auto& n : names) out << "," << n;
    out << "\n";
    for (const auto& st : seq.stages) {
        out << st.stage << "," << to_decimal(seq.f(st.stage));
        for (const auto& x : st.x) out << "," << to_decimal(x);
        out << "\n";
    }
    return out.str();
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SGAO_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "sgao";
    return ".sgao-cache";
}

namespace {
std::filesystem::path cache_file(int d, int b, const std::filesystem::path& dir) {
    return dir / ("system-d" + std::to_string(d) + "-b" + std::to_string(b) + ".json");
}
}  // namespace

std::optional<RecursionSystem> load_cached_system(int d, int b,
                                                  const std::filesystem::path& dir) {
    std::error_code ec;
    auto path = cache_file(d, b, dir);
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    try {
        RecursionSystem sys = system_from_json(read_file(path));
        if (sys.d != d || sys.b != b) return std::nullopt;
        return sys;
    } catch (const std::exception&) {
        return std::nullopt;  // stale or foreign format: ignore, re-derive
    }
}

void store_cached_system(const RecursionSystem& sys, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    write_file(cache_file(sys.d, sys.b, dir), system_to_json(sys));
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + p.string());
}

}  // namespace sgao
