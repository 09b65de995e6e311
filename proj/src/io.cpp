#include "vclab/io.hpp"

#include <fstream>
#include <sstream>

#include "vclab/error.hpp"

namespace vclab {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

std::vector<std::string> bit_strings(const std::vector<BitVec>& rows) {
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.to_string());
    return out;
}

}  // namespace

Json to_json(const SetSystem& system) {
    Json j;
    j["ground_size"] = system.ground_size();
    j["members"] = bit_strings(system.members());
    return j;
}

Json to_json(const BiRelation& rel) {
    Json j;
    j["x_size"] = rel.x_size();
    j["y_size"] = rel.y_size();
    j["rows"] = bit_strings(rel.rows());
    return j;
}

Json to_json(const FormulaSet& delta) {
    Json j;
    j["relations"] = Json::array();
    for (const auto& r : delta.relations()) j["relations"].push_back(to_json(r));
    return j;
}

Json to_json(const RootedGraph& g) {
    Json j;
    j["n_vertices"] = g.n_vertices();
    j["roots"] = g.roots();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Json to_json(const UltrametricSpace& space) {
    Json j;
    j["p"] = space.p();
    j["depth"] = space.depth();
    if (space.is_full()) {
        j["elements"] = "all";
    } else {
        j["elements"] = Json::array();
        for (auto e : space.elements()) j["elements"].push_back(space.to_string(e));
    }
    return j;
}

Json to_json(const UltrametricSpace& space, const Ball& ball) {
    Json j;
    j["center"] = space.to_string(ball.center);
    j["radius"] = ball.radius;
    return j;
}

SetSystem set_system_from_json(const Json& j) {
    return guarded("SetSystem", [&] {
        const auto n = j.at("ground_size").get<std::size_t>();
        const auto members = j.at("members").get<std::vector<std::string>>();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (members[i].size() != n) {
                throw InputShapeError("member " + std::to_string(i) + " has length " +
                                      std::to_string(members[i].size()) + ", expected " + std::to_string(n));
            }
        }
        return SetSystem::from_strings(n, members);
    });
}

BiRelation relation_from_json(const Json& j) {
    return guarded("BiRelation", [&] {
        const auto x = j.at("x_size").get<std::size_t>();
        const auto y = j.at("y_size").get<std::size_t>();
        const auto rows = j.at("rows").get<std::vector<std::string>>();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != y) {
                throw InputShapeError("row " + std::to_string(i) + " has length " + std::to_string(rows[i].size()) +
                                      ", expected " + std::to_string(y));
            }
        }
        return BiRelation::from_strings(x, y, rows);
    });
}

FormulaSet formula_set_from_json(const Json& j) {
    return guarded("FormulaSet", [&] {
        std::vector<BiRelation> rels;
        for (const auto& r : j.at("relations")) rels.push_back(relation_from_json(r));
        return FormulaSet(std::move(rels));
    });
}

RootedGraph rooted_graph_from_json(const Json& j) {
    return guarded("RootedGraph", [&] {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("RootedGraph: each edge must be a pair");
            edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        return RootedGraph(j.at("n_vertices").get<std::size_t>(), j.at("roots").get<std::vector<std::size_t>>(),
                           std::move(edges));
    });
}

UltrametricSpace space_from_json(const Json& j) {
    return guarded("Space", [&] {
        const auto p = j.at("p").get<unsigned>();
        const auto depth = j.at("depth").get<unsigned>();
        const auto& el = j.at("elements");
        if (el.is_string()) {
            if (el.get<std::string>() != "all") throw ParseError("Space: elements must be \"all\" or a list");
            return UltrametricSpace(p, depth);
        }
        return UltrametricSpace::from_strings(p, depth, el.get<std::vector<std::string>>());
    });
}

Ball ball_from_json(const UltrametricSpace& space, const Json& j) {
    return guarded("Ball", [&] {
        return Ball{space.parse(j.at("center").get<std::string>()), j.at("radius").get<unsigned>()};
    });
}

InputKind detect_kind(const Json& j) {
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    if (j.contains("ground_size") && j.contains("members")) return InputKind::set_system;
    if (j.contains("x_size") && j.contains("rows")) return InputKind::relation;
    if (j.contains("relations")) return InputKind::formula_set;
    if (j.contains("n_vertices") && j.contains("roots")) return InputKind::rooted_graph;
    if (j.contains("p") && j.contains("depth")) return InputKind::space;
    throw ParseError("unrecognized input document");
}

Json fit_report(const FitResult& fit, const GrowthClass& growth) {
    Json j;
    j["slope"] = fit.slope;
    j["intercept"] = fit.intercept;
    j["r2"] = fit.r2;
    j["t_range"] = {fit.t_lo, fit.t_hi};
    j["classification"] = to_string(growth.kind);
    j["label"] = "finite-range proxy for the growth exponent";
    if (!fit.warnings.empty()) j["warnings"] = fit.warnings;
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace vclab
