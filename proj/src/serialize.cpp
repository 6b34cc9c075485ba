#include "ringroad/serialize.hpp"

#include <cmath>
#include <sstream>

#include "ringroad/bounds.hpp"

namespace ringroad {

using nlohmann::json;

json to_json(const EmbeddedGraph& emb) {
    json j;
    j["white"] = emb.graph.white_count;
    j["black"] = emb.graph.black_count;
    json edges = json::array();
    for (const MultiEdge& e : emb.graph.edges) edges.push_back({e.id, e.tail, e.head});
    j["edges"] = std::move(edges);
    json rot = json::object();
    for (std::size_t v = 0; v < emb.rotations.order.size(); ++v) {
        json seq = json::array();
        for (const EdgeEnd& end : emb.rotations.order[v])
            seq.push_back({end.edge, end.at_head ? "head" : "tail"});
        rot[std::to_string(v)] = std::move(seq);
    }
    j["rotations"] = std::move(rot);
    return j;
}

EmbeddedGraph embedded_graph_from_json(const json& j) {
    EmbeddedGraph emb;
    emb.graph.white_count = j.at("white").get<int>();
    emb.graph.black_count = j.at("black").get<int>();
    for (const auto& e : j.at("edges"))
        emb.graph.edges.push_back(MultiEdge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
    emb.rotations.order.resize(emb.graph.vertex_count());
    for (const auto& [key, seq] : j.at("rotations").items()) {
        const int v = std::stoi(key);
        if (v < 0 || v >= emb.graph.vertex_count())
            throw std::invalid_argument("embedded graph json: rotation for unknown vertex");
        for (const auto& end : seq)
            emb.rotations.order[v].push_back(
                EdgeEnd{end.at(0).get<int>(), end.at(1).get<std::string>() == "head"});
    }
    validate_embedding(emb);
    return emb;
}

json to_json(const VoltageGraph& vg) {
    json j = to_json(vg.base);
    j["modulus"] = vg.modulus;
    json alpha = json::object();
    for (std::size_t e = 0; e < vg.alpha.size(); ++e) alpha[std::to_string(e)] = vg.alpha[e];
    j["alpha"] = std::move(alpha);
    return j;
}

VoltageGraph voltage_graph_from_json(const json& j) {
    VoltageGraph vg;
    vg.base = embedded_graph_from_json(j);
    vg.modulus = j.at("modulus").get<std::int64_t>();
    vg.alpha.assign(vg.base.graph.edges.size(), 0);
    for (const auto& [key, val] : j.at("alpha").items()) {
        const std::size_t e = std::stoul(key);
        if (e >= vg.alpha.size())
            throw std::invalid_argument("voltage graph json: alpha for unknown edge");
        vg.alpha[e] = val.get<std::int64_t>();
    }
    validate_voltage_graph(vg);
    return vg;
}

json to_json(const TransitionGraph& tg) {
    return json{{"n", tg.n}, {"solid", tg.solid}, {"dotted", tg.dotted}};
}

TransitionGraph transition_graph_from_json(const json& j) {
    TransitionGraph tg;
    tg.n = j.at("n").get<std::int64_t>();
    tg.solid = j.at("solid").get<std::vector<int>>();
    tg.dotted = j.at("dotted").get<std::vector<int>>();
    validate_transition_graph(tg);
    return tg;
}

json to_json(const CutSystem& cs) {
    json j = to_json(cs.base);
    j["modulus"] = cs.modulus;
    json curves = json::array();
    for (const CutCurve& c : cs.curves) {
        if (c.kind == CutCurve::Kind::Arc)
            curves.push_back(
                {{"kind", "arc"}, {"endpoints", {c.endpoint_faces[0], c.endpoint_faces[1]}}});
        else
            curves.push_back({{"kind", "loop"}});
    }
    j["curves"] = std::move(curves);
    json crossings = json::object();
    for (std::size_t ci = 0; ci < cs.crossings.size(); ++ci)
        for (std::size_t e = 0; e < cs.crossings[ci].size(); ++e)
            if (cs.crossings[ci][e] != 0)
                crossings[std::to_string(e) + "," + std::to_string(ci)] = cs.crossings[ci][e];
    j["crossings"] = std::move(crossings);
    return j;
}

CutSystem cut_system_from_json(const json& j) {
    CutSystem cs;
    cs.base = embedded_graph_from_json(j);
    cs.modulus = j.at("modulus").get<std::int64_t>();
    for (const auto& c : j.at("curves")) {
        CutCurve curve;
        if (c.at("kind").get<std::string>() == "arc") {
            curve.kind = CutCurve::Kind::Arc;
            curve.endpoint_faces[0] = c.at("endpoints").at(0).get<int>();
            curve.endpoint_faces[1] = c.at("endpoints").at(1).get<int>();
        } else {
            curve.kind = CutCurve::Kind::Loop;
        }
        cs.curves.push_back(curve);
    }
    cs.crossings.assign(cs.curves.size(),
                        std::vector<std::int64_t>(cs.base.graph.edges.size(), 0));
    for (const auto& [key, val] : j.at("crossings").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("cut system json: crossing key must be 'edge,curve'");
        const std::size_t e = std::stoul(key.substr(0, comma));
        const std::size_t c = std::stoul(key.substr(comma + 1));
        if (c >= cs.crossings.size() || e >= cs.base.graph.edges.size())
            throw std::invalid_argument("cut system json: crossing key out of range");
        cs.crossings[c][e] = val.get<std::int64_t>();
    }
    validate_cut_system(cs);
    return cs;
}

json to_json(const SearchResult& r) {
    return json{{"n", r.n},
                {"min_genus", r.min_genus},
                {"counted", r.counted},
                {"require_ham", r.require_ham},
                {"witness", to_json(r.witness)}};
}

json construction_file(const TransitionGraph& tg) {
    const VoltageGraph vg = tg_to_voltage(tg);
    const EmbeddedGraph derived = derive_embedding(vg);
    json j;
    j["type"] = "construction";
    j["n"] = tg.n;
    j["transition"] = to_json(tg);
    j["claims"] = {{"genus", euler_genus(derived)},
                   {"hamiltonian_faces", hamiltonian_faces(derived).size()},
                   {"simple_complete_bipartite",
                    is_simple_complete_bipartite(derived.graph, static_cast<int>(tg.n))},
                   {"l_c", l_c(tg.n).genus}};
    return j;
}

json construction3d_file(const Construct3d& c) {
    json j;
    j["type"] = "construction3d";
    j["n"] = c.cs.modulus;
    j["cut_system"] = to_json(c.cs);
    j["claims"] = {{"base_genus", c.base_genus},
                   {"arcs", c.arcs},
                   {"rh_genus", c.rh},
                   {"l_c_star", l_c_star(c.cs.modulus)},
                   {"bijective", true},
                   {"hamiltonian_face", true},
                   {"n4_exception", c.n4_exception}};
    return j;
}

namespace {

template <typename T>
void check(VerifyOutcome& out, const std::string& what, const T& stored, const T& computed) {
    if (stored != computed) {
        std::ostringstream os;
        os << what << ": stored " << stored << ", recomputed " << computed;
        out.ok = false;
        out.diffs.push_back(os.str());
    }
}

VerifyOutcome verify_construction(const json& j) {
    VerifyOutcome out;
    const TransitionGraph tg = transition_graph_from_json(j.at("transition"));
    const VoltageGraph vg = tg_to_voltage(tg);
    const EmbeddedGraph derived = derive_embedding(vg);
    const json& claims = j.at("claims");
    check(out, "n", j.at("n").get<std::int64_t>(), tg.n);
    check(out, "genus", claims.at("genus").get<std::int64_t>(), euler_genus(derived));
    check(out, "hamiltonian_faces", claims.at("hamiltonian_faces").get<std::int64_t>(),
          static_cast<std::int64_t>(hamiltonian_faces(derived).size()));
    check(out, "simple_complete_bipartite", claims.at("simple_complete_bipartite").get<bool>(),
          is_simple_complete_bipartite(derived.graph, static_cast<int>(tg.n)));
    if (claims.contains("l_c"))
        check(out, "l_c", claims.at("l_c").get<std::int64_t>(), l_c(tg.n).genus);
    return out;
}

VerifyOutcome verify_construction3d(const json& j) {
    VerifyOutcome out;
    const CutSystem cs = cut_system_from_json(j.at("cut_system"));
    const json& claims = j.at("claims");
    const std::int64_t base_genus = euler_genus(cs.base);
    const std::int64_t arcs = arc_count(cs);
    check(out, "n", j.at("n").get<std::int64_t>(), cs.modulus);
    check(out, "base_genus", claims.at("base_genus").get<std::int64_t>(), base_genus);
    check(out, "arcs", claims.at("arcs").get<std::int64_t>(), arcs);
    check(out, "rh_genus", claims.at("rh_genus").get<std::int64_t>(),
          rh_genus(base_genus, cs.modulus, arcs));
    check(out, "bijective", claims.at("bijective").get<bool>(), cut_voltage_bijective(cs));
    VoltageGraph vg{cs.base, cs.modulus, cut_voltage(cs)};
    check(out, "hamiltonian_face", claims.at("hamiltonian_face").get<bool>(),
          derived_has_hamiltonian_face(vg));
    if (claims.contains("l_c_star"))
        check(out, "l_c_star", claims.at("l_c_star").get<std::int64_t>(), l_c_star(cs.modulus));
    const bool exception = claims.value("n4_exception", false);
    if (!exception)
        check(out, "rh_genus == l_c_star", claims.at("rh_genus").get<std::int64_t>(),
              l_c_star(cs.modulus));
    else
        check(out, "exceptional genus", claims.at("rh_genus").get<std::int64_t>(),
              l_c_star_attainable(cs.modulus));
    return out;
}

}  // namespace

VerifyOutcome verify_file(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "construction") return verify_construction(j);
    if (type == "construction3d") return verify_construction3d(j);
    VerifyOutcome out;
    out.ok = false;
    out.diffs.push_back("unknown file type: " + type);
    return out;
}

std::string to_dot(const Multigraph& g) {
    std::ostringstream os;
    os << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.white_count; ++v)
        os << "  w" << v << " [style=filled, fillcolor=white];\n";
    for (int v = 0; v < g.black_count; ++v)
        os << "  b" << v << " [style=filled, fillcolor=gray];\n";
    for (const MultiEdge& e : g.edges)
        os << "  w" << e.tail << " -- b" << (e.head - g.white_count) << " [label=\"e" << e.id
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_svg(const TransitionGraph& tg) {
    validate_transition_graph(tg);
    const int n = static_cast<int>(tg.n);
    const double size = 440.0, cx = size / 2, cy = size / 2, r = size / 2 - 60;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\">\n";
    os << "<defs><marker id=\"a\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" "
          "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\"/></marker></defs>\n";
    auto px = [&](int v) { return cx + r * std::cos(2 * M_PI * v / n - M_PI / 2); };
    auto py = [&](int v) { return cy + r * std::sin(2 * M_PI * v / n - M_PI / 2); };
    auto arc = [&](int u, int v, double bend, const char* dash) {
        const double x1 = px(u), y1 = py(u), x2 = px(v), y2 = py(v);
        const double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        const double qx = mx + bend * (mx - cx), qy = my + bend * (my - cy);
        os << "<path d=\"M" << x1 << "," << y1 << " Q" << qx << "," << qy << " " << x2 << ","
           << y2 << "\" fill=\"none\" stroke=\"black\" " << dash
           << " marker-end=\"url(#a)\"/>\n";
    };
    for (int i = 0; i < n; ++i)
        arc(tg.solid[i], tg.solid[(i + 1) % n], 0.25, "stroke-width=\"1.6\"");
    for (int i = 0; i < n; ++i)
        arc(tg.dotted[i], tg.dotted[(i + 1) % n], -0.35,
            "stroke-width=\"1.1\" stroke-dasharray=\"5,4\"");
    for (int v = 0; v < n; ++v) {
        os << "<circle cx=\"" << px(v) << "\" cy=\"" << py(v)
           << "\" r=\"13\" fill=\"white\" stroke=\"black\"/>\n";
        os << "<text x=\"" << px(v) << "\" y=\"" << py(v) + 4
           << "\" text-anchor=\"middle\" font-size=\"12\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ringroad
