#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringroad/voltage.hpp"

namespace ringroad {

/// Exact minimum over all embedded voltage dipoles (D_n, bijective voltages
/// over Z_n) of the derived-embedding genus, optionally restricted to
/// embeddings with a Hamiltonian derived face.
struct SearchResult {
    int n = 0;
    std::int64_t min_genus = -1;
    VoltageGraph witness;
    std::uint64_t counted = 0;  // canonical classes (reduced) or raw pairs
    bool require_ham = true;
};

struct SearchOptions {
    bool require_ham = true;
    bool symmetry_reduction = true;
    int jobs = 1;
    bool allow_big = false;  // n = 9 costs (8!)^2 before reduction
    std::optional<std::string> checkpoint_path;
};

/// Domain 3 <= n <= 8 (9 with allow_big).  Deterministic: fixed enumeration
/// order, ties resolved to the first witness.
SearchResult enumerate_min_genus(int n, const SearchOptions& opts = {});

/// Rotation pair for D_n with voltages fixed to alpha(e_i) = i, as the two
/// cyclic edge orders anchored at edge 0.
struct RotationPair {
    std::vector<int> white;
    std::vector<int> black;

    bool operator==(const RotationPair&) const = default;
    bool operator<(const RotationPair&) const;
};

/// Canonical representative of the pair's class under edge relabelings
/// e_i -> e_{u*i+c} (units u of Z_n, shifts c) applied to both rotations,
/// with each sequence re-anchored at edge 0.  Idempotent.
RotationPair canonical_reduce(const RotationPair& pair, int n);

/// Genus distribution over canonical classes; with require_ham only classes
/// whose derived embedding has a Hamiltonian face are counted.
std::map<std::int64_t, std::uint64_t> histogram(int n, bool require_ham);

/// Derived genus and Hamiltonian-face flag for one rotation pair, computed
/// from base faces.  Exposed for oracle tests against the general machinery.
struct PairEvaluation {
    std::int64_t genus = 0;
    bool has_hamiltonian = false;
};
PairEvaluation evaluate_pair(const RotationPair& pair, int n);

VoltageGraph pair_to_voltage(const RotationPair& pair, int n);

}  // namespace ringroad
