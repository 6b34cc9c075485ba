#include "ringroad/voltage.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringroad {

void validate_voltage_graph(const VoltageGraph& vg) {
    validate_embedding(vg.base);
    if (vg.base.graph.white_count != 1 || vg.base.graph.black_count != 1)
        throw std::invalid_argument("voltage graph: base must be a dipole");
    if (vg.modulus < 1) throw std::invalid_argument("voltage graph: modulus must be >= 1");
    if (vg.alpha.size() != vg.base.graph.edges.size())
        throw std::invalid_argument("voltage graph: alpha must cover every edge");
    for (std::int64_t a : vg.alpha)
        if (a < 0 || a >= vg.modulus)
            throw std::invalid_argument("voltage graph: alpha value out of range");
}

bool is_bijective_voltage(const VoltageGraph& vg) {
    if (static_cast<std::int64_t>(vg.alpha.size()) != vg.modulus) return false;
    std::vector<char> seen(vg.alpha.size(), 0);
    for (std::int64_t a : vg.alpha) {
        if (seen[a]) return false;
        seen[a] = 1;
    }
    return true;
}

Multigraph derive_graph(const VoltageGraph& vg) {
    validate_voltage_graph(vg);
    const int n = static_cast<int>(vg.modulus);
    const int m = static_cast<int>(vg.base.graph.edges.size());
    Multigraph d;
    d.white_count = n;
    d.black_count = n;
    d.edges.resize(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < m; ++i) {
        const int g = static_cast<int>(vg.alpha[i]);
        for (int a = 0; a < n; ++a) {
            const int id = i * n + a;
            d.edges[id] = MultiEdge{id, a, n + (a + g) % n};
        }
    }
    return d;
}

EmbeddedGraph derive_embedding(const VoltageGraph& vg) {
    EmbeddedGraph emb;
    emb.graph = derive_graph(vg);
    const int n = static_cast<int>(vg.modulus);
    emb.rotations.order.resize(2 * n);
    const auto& white_rot = vg.base.rotations.order[0];
    const auto& black_rot = vg.base.rotations.order[1];
    for (int a = 0; a < n; ++a) {
        auto& rot = emb.rotations.order[a];
        rot.reserve(white_rot.size());
        for (const EdgeEnd& end : white_rot) rot.push_back(EdgeEnd{end.edge * n + a, false});
    }
    for (int c = 0; c < n; ++c) {
        auto& rot = emb.rotations.order[n + c];
        rot.reserve(black_rot.size());
        for (const EdgeEnd& end : black_rot) {
            const int g = static_cast<int>(vg.alpha[end.edge]);
            const int a = ((c - g) % n + n) % n;
            rot.push_back(EdgeEnd{end.edge * n + a, true});
        }
    }
    return emb;
}

Zn net_voltage(const Face& face, const VoltageGraph& vg) {
    std::int64_t sum = 0;
    for (const Dart& d : face.boundary) sum += d.dir * vg.alpha[d.edge];
    return zn(sum, vg.modulus);
}

std::pair<std::int64_t, std::int64_t> derived_face_profile(const Face& face,
                                                           const VoltageGraph& vg) {
    const std::int64_t ord = zn_order(net_voltage(face, vg));
    return {vg.modulus / ord, face.size() * ord};
}

std::int64_t total_derived_faces(const VoltageGraph& vg) {
    std::int64_t total = 0;
    for (const Face& f : trace_faces(vg.base)) total += derived_face_profile(f, vg).first;
    return total;
}

std::int64_t derived_genus_from_base(const VoltageGraph& vg) {
    const std::int64_t n = vg.modulus;
    const std::int64_t m = static_cast<std::int64_t>(vg.base.graph.edges.size());
    const std::int64_t f = total_derived_faces(vg);
    const std::int64_t defect = 2 - 2 * n + n * m - f;
    if (defect % 2 != 0) throw std::logic_error("derived_genus_from_base: odd Euler defect");
    return defect / 2;
}

bool face_generates_hamiltonian(const Face& face, const VoltageGraph& vg) {
    const std::int64_t n = vg.modulus;
    const Zn g = net_voltage(face, vg);
    const std::int64_t ord = zn_order(g);
    if (static_cast<std::int64_t>(face.size()) * ord != 2 * n) return false;
    // The derived face is a cycle through all 2n vertices iff the white (resp.
    // black) corner offsets of the base walk land in pairwise distinct cosets
    // of <g>, i.e. are distinct mod n/|g|.
    const std::int64_t cosets = n / ord;
    std::vector<char> white_seen(cosets, 0), black_seen(cosets, 0);
    std::int64_t offset = 0;
    for (const Dart& d : face.boundary) {
        auto& seen = d.dir > 0 ? white_seen : black_seen;
        const std::int64_t c = mod_reduce(offset, cosets);
        if (seen[c]) return false;
        seen[c] = 1;
        offset += d.dir * vg.alpha[d.edge];
    }
    return true;
}

bool derived_has_hamiltonian_face(const VoltageGraph& vg) {
    for (const Face& f : trace_faces(vg.base))
        if (face_generates_hamiltonian(f, vg)) return true;
    return false;
}

}  // namespace ringroad
