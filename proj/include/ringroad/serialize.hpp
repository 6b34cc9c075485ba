#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ringroad/cut_system.hpp"
#include "ringroad/embedding.hpp"
#include "ringroad/search.hpp"
#include "ringroad/transition.hpp"
#include "ringroad/voltage.hpp"

namespace ringroad {

nlohmann::json to_json(const EmbeddedGraph& emb);
EmbeddedGraph embedded_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VoltageGraph& vg);
VoltageGraph voltage_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TransitionGraph& tg);
TransitionGraph transition_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CutSystem& cs);
CutSystem cut_system_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& r);

/// Construction file: a transition graph together with the claims a verifier
/// must recompute (genus, Hamiltonian face count, simplicity, the bound).
nlohmann::json construction_file(const TransitionGraph& tg);

/// 3-dimensional construction file: a cut system plus its claims.
nlohmann::json construction3d_file(const Construct3d& c);

struct VerifyOutcome {
    bool ok = true;
    std::vector<std::string> diffs;
};

/// Recomputes every claim in a construction or construction3d file from the
/// raw combinatorial data; stored values are never trusted.
VerifyOutcome verify_file(const nlohmann::json& j);

/// Undirected view of the multigraph.
std::string to_dot(const Multigraph& g);

/// Schematic of a transition graph: vertices on a circle, solid edges drawn
/// outside, dotted edges dashed inside.
std::string to_svg(const TransitionGraph& tg);

}  // namespace ringroad
