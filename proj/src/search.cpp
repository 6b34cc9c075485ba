#include "ringroad/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ringroad/zmod.hpp"

namespace ringroad {

bool RotationPair::operator<(const RotationPair& o) const {
    if (white != o.white) return white < o.white;
    return black < o.black;
}

namespace {

// Affine relabelings x -> u*x + c with u a unit of Z_n.
struct Affine {
    int u = 1, c = 0;
};

std::vector<Affine> affine_group(int n) {
    std::vector<Affine> taus;
    for (int u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (int c = 0; c < n; ++c) taus.push_back({u, c});
    }
    if (n == 1) taus.push_back({1, 0});
    return taus;
}

std::vector<int> apply_anchored(const Affine& t, const std::vector<int>& seq, int n) {
    std::vector<int> out(seq.size());
    int zero_at = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out[i] = (t.u * seq[i] + t.c) % n;
        if (out[i] == 0) zero_at = static_cast<int>(i);
    }
    std::rotate(out.begin(), out.begin() + zero_at, out.end());
    return out;
}

}  // namespace

RotationPair canonical_reduce(const RotationPair& pair, int n) {
    if (static_cast<int>(pair.white.size()) != n || static_cast<int>(pair.black.size()) != n)
        throw std::invalid_argument("canonical_reduce: sequences must have length n");
    RotationPair best;
    bool first = true;
    for (const Affine& t : affine_group(n)) {
        RotationPair cand{apply_anchored(t, pair.white, n), apply_anchored(t, pair.black, n)};
        if (first || cand < best) {
            best = std::move(cand);
            first = false;
        }
    }
    return best;
}

VoltageGraph pair_to_voltage(const RotationPair& pair, int n) {
    VoltageGraph vg;
    vg.base = dipole_embedding(pair.white, pair.black);
    vg.modulus = n;
    vg.alpha.resize(n);
    std::iota(vg.alpha.begin(), vg.alpha.end(), 0);
    return vg;
}

namespace {

// Tight evaluation of one rotation pair: trace base faces through the
// successor arrays, count derived faces via net-voltage orders, and test for
// a face whose lift is a Hamiltonian cycle.
struct Evaluator {
    int n;
    std::vector<std::int64_t> ord;  // ord[g] = order of g in Z_n

    explicit Evaluator(int n_) : n(n_), ord(n_) {
        for (int g = 0; g < n; ++g) ord[g] = n / std::gcd<std::int64_t>(g, n);
    }

    PairEvaluation run(const int* succ_w, const int* succ_b) const {
        std::uint32_t unused = (1u << (2 * n)) - 1;  // bit 2e: dart e+, bit 2e+1: dart e-
        std::int64_t faces = 0;
        bool ham = false;
        int walk_edges[20];
        int walk_dirs[20];
        while (unused) {
            const int start = std::countr_zero(unused);
            int d = start;
            int k = 0;
            std::int64_t net = 0;
            do {
                unused &= ~(1u << d);
                const int e = d >> 1;
                if ((d & 1) == 0) {  // tail->head
                    walk_edges[k] = e;
                    walk_dirs[k] = +1;
                    net += e;
                    d = 2 * succ_b[e] + 1;
                } else {
                    walk_edges[k] = e;
                    walk_dirs[k] = -1;
                    net -= e;
                    d = 2 * succ_w[e];
                }
                ++k;
            } while (d != start);
            const std::int64_t g = mod_reduce(net, n);
            const std::int64_t o = ord[g];
            faces += n / o;
            if (!ham && static_cast<std::int64_t>(k) * o == 2 * n) {
                // Hamiltonian iff white and black corner offsets land in
                // distinct cosets of the net-voltage subgroup.
                const std::int64_t cosets = n / o;
                std::uint32_t wseen = 0, bseen = 0;
                std::int64_t off = 0;
                bool ok = true;
                for (int i = 0; i < k && ok; ++i) {
                    const std::uint32_t bit = 1u << mod_reduce(off, cosets);
                    if (walk_dirs[i] > 0) {
                        if (wseen & bit) ok = false;
                        wseen |= bit;
                    } else {
                        if (bseen & bit) ok = false;
                        bseen |= bit;
                    }
                    off += walk_dirs[i] * walk_edges[i];
                }
                ham = ham || ok;
            }
        }
        PairEvaluation ev;
        ev.genus = (2 - 2 * static_cast<std::int64_t>(n) +
                    static_cast<std::int64_t>(n) * n - faces) /
                   2;
        ev.has_hamiltonian = ham;
        return ev;
    }
};

std::vector<std::vector<int>> anchored_orders(int n) {
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<std::vector<int>> all;
    do {
        std::vector<int> seq{0};
        seq.insert(seq.end(), rest.begin(), rest.end());
        all.push_back(std::move(seq));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return all;
}

std::vector<int> successors(const std::vector<int>& seq) {
    std::vector<int> s(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) s[seq[i]] = seq[(i + 1) % seq.size()];
    return s;
}

struct OuterTask {
    std::vector<int> white;
    std::vector<Affine> stabilizer;  // trivial when symmetry reduction is off
};

struct PartialBest {
    std::int64_t genus = -1;
    std::size_t outer = 0;
    std::size_t inner = 0;
    RotationPair pair;

    bool better_than(const PartialBest& o) const {
        if (genus < 0) return false;
        if (o.genus < 0) return true;
        if (genus != o.genus) return genus < o.genus;
        if (outer != o.outer) return outer < o.outer;
        return inner < o.inner;
    }
};

struct Checkpoint {
    std::set<std::size_t> done;
    PartialBest best;
    std::uint64_t counted = 0;
};

Checkpoint load_checkpoint(const std::string& path, int n) {
    Checkpoint cp;
    std::ifstream in(path);
    if (!in) return cp;
    nlohmann::json j;
    in >> j;
    if (j.value("n", -1) != n) return cp;
    for (const auto& x : j["done"]) cp.done.insert(x.get<std::size_t>());
    cp.counted = j.value("counted", std::uint64_t{0});
    if (j.contains("best")) {
        cp.best.genus = j["best"]["genus"].get<std::int64_t>();
        cp.best.outer = j["best"]["outer"].get<std::size_t>();
        cp.best.inner = j["best"]["inner"].get<std::size_t>();
        cp.best.pair.white = j["best"]["white"].get<std::vector<int>>();
        cp.best.pair.black = j["best"]["black"].get<std::vector<int>>();
    }
    return cp;
}

void save_checkpoint(const std::string& path, int n, const Checkpoint& cp) {
    nlohmann::json j;
    j["n"] = n;
    j["done"] = cp.done;
    j["counted"] = cp.counted;
    if (cp.best.genus >= 0)
        j["best"] = {{"genus", cp.best.genus},
                     {"outer", cp.best.outer},
                     {"inner", cp.best.inner},
                     {"white", cp.best.pair.white},
                     {"black", cp.best.pair.black}};
    std::ofstream out(path);
    out << j.dump();
}

}  // namespace

SearchResult enumerate_min_genus(int n, const SearchOptions& opts) {
    if (n < 3 || n > 9) throw std::invalid_argument("enumerate_min_genus: 3 <= n <= 9");
    if (n == 9 && !opts.allow_big)
        throw std::invalid_argument("enumerate_min_genus: n = 9 requires allow_big");

    const std::vector<std::vector<int>> orders = anchored_orders(n);
    const std::vector<Affine> taus = affine_group(n);

    // Outer tasks: one per white rotation; with reduction, only canonical
    // representatives survive and carry their stabilizer for the inner filter.
    std::vector<OuterTask> tasks;
    for (const auto& w : orders) {
        if (!opts.symmetry_reduction) {
            tasks.push_back({w, {}});
            continue;
        }
        bool canonical = true;
        std::vector<Affine> stab;
        for (const Affine& t : taus) {
            const std::vector<int> img = apply_anchored(t, w, n);
            if (img < w) {
                canonical = false;
                break;
            }
            if (img == w) stab.push_back(t);
        }
        if (!canonical) continue;
        if (stab.size() == 1) stab.clear();  // trivial stabilizer: no inner filter
        tasks.push_back({w, std::move(stab)});
    }

    Checkpoint cp;
    if (opts.checkpoint_path) cp = load_checkpoint(*opts.checkpoint_path, n);

    Evaluator eval(n);
    std::mutex merge_mutex;
    std::atomic<std::size_t> next_task{0};
    PartialBest best = cp.best;
    std::uint64_t counted = cp.counted;

    auto worker = [&]() {
        for (;;) {
            const std::size_t ti = next_task.fetch_add(1);
            if (ti >= tasks.size()) return;
            {
                std::lock_guard<std::mutex> lk(merge_mutex);
                if (cp.done.count(ti)) continue;
            }
            const OuterTask& task = tasks[ti];
            const std::vector<int> succ_w = successors(task.white);
            PartialBest local;
            std::uint64_t local_count = 0;
            for (std::size_t bi = 0; bi < orders.size(); ++bi) {
                const std::vector<int>& b = orders[bi];
                if (!task.stabilizer.empty()) {
                    bool keep = true;
                    for (const Affine& t : task.stabilizer) {
                        if (apply_anchored(t, b, n) < b) {
                            keep = false;
                            break;
                        }
                    }
                    if (!keep) continue;
                }
                ++local_count;
                const std::vector<int> succ_b = successors(b);
                const PairEvaluation ev = eval.run(succ_w.data(), succ_b.data());
                if (opts.require_ham && !ev.has_hamiltonian) continue;
                PartialBest cand{ev.genus, ti, bi, RotationPair{task.white, b}};
                if (cand.better_than(local)) local = cand;
            }
            std::lock_guard<std::mutex> lk(merge_mutex);
            counted += local_count;
            if (local.better_than(best)) best = local;
            cp.done.insert(ti);
            cp.best = best;
            cp.counted = counted;
            if (opts.checkpoint_path) save_checkpoint(*opts.checkpoint_path, n, cp);
        }
    };

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (best.genus < 0) throw std::runtime_error("enumerate_min_genus: no admissible embedding");
    SearchResult result;
    result.n = n;
    result.min_genus = best.genus;
    result.witness = pair_to_voltage(best.pair, n);
    result.counted = counted;
    result.require_ham = opts.require_ham;
    return result;
}

PairEvaluation evaluate_pair(const RotationPair& pair, int n) {
    Evaluator eval(n);
    return eval.run(successors(pair.white).data(), successors(pair.black).data());
}

std::map<std::int64_t, std::uint64_t> histogram(int n, bool require_ham) {
    if (n < 3 || n > 8) throw std::invalid_argument("histogram: 3 <= n <= 8");
    const std::vector<std::vector<int>> orders = anchored_orders(n);
    const std::vector<Affine> taus = affine_group(n);
    Evaluator eval(n);
    std::map<std::int64_t, std::uint64_t> hist;
    for (const auto& w : orders) {
        bool canonical = true;
        std::vector<Affine> stab;
        for (const Affine& t : taus) {
            const std::vector<int> img = apply_anchored(t, w, n);
            if (img < w) {
                canonical = false;
                break;
            }
            if (img == w) stab.push_back(t);
        }
        if (!canonical) continue;
        const std::vector<int> succ_w = successors(w);
        for (const auto& b : orders) {
            if (stab.size() > 1) {
                bool keep = true;
                for (const Affine& t : stab)
                    if (apply_anchored(t, b, n) < b) {
                        keep = false;
                        break;
                    }
                if (!keep) continue;
            }
            const PairEvaluation ev = eval.run(succ_w.data(), successors(b).data());
            if (require_ham && !ev.has_hamiltonian) continue;
            ++hist[ev.genus];
        }
    }
    return hist;
}

}  // namespace ringroad
