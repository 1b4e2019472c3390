#include "entropic/coupling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <utility>

namespace entropic {

namespace {

constexpr double kResidualZero = 1e-12;

bool tuple_less(const CouplingCell& a, const CouplingCell& b) {
    return a.idx < b.idx;
}

void canonicalize(Coupling& c) {
    std::sort(c.cells.begin(), c.cells.end(), tuple_less);
}

// Greedy loop over raw residual vectors. Totals must agree across marginals
// (up to dust); used both for full distributions and for the residual
// sub-marginals of transfer_coupling.
std::vector<CouplingCell> greedy_core(std::vector<std::vector<double>> residual) {
    const std::size_t t = residual.size();

    // Lazy max-heaps of (mass, index); stale entries are skipped on peek.
    using Entry = std::pair<double, std::uint32_t>;
    auto cmp = [](const Entry& a, const Entry& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second > b.second;  // lowest index wins ties
    };
    std::vector<std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)>>
        heaps(t, std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)>(cmp));
    for (std::size_t i = 0; i < t; ++i)
        for (std::uint32_t u = 0; u < residual[i].size(); ++u)
            if (residual[i][u] > 0.0) heaps[i].push({residual[i][u], u});

    std::vector<CouplingCell> cells;
    for (;;) {
        double step = std::numeric_limits<double>::infinity();
        std::vector<std::uint32_t> tuple(t);
        for (std::size_t i = 0; i < t; ++i) {
            auto& h = heaps[i];
            while (!h.empty() && h.top().first != residual[i][h.top().second])
                h.pop();
            if (h.empty() || h.top().first <= kResidualZero) {
                step = 0.0;
                break;
            }
            tuple[i] = h.top().second;
            step = std::min(step, h.top().first);
        }
        if (step <= kResidualZero) break;

        cells.push_back({tuple, step});
        for (std::size_t i = 0; i < t; ++i) {
            double& r = residual[i][tuple[i]];
            r -= step;
            if (r < kResidualZero) r = 0.0;
            if (r > 0.0) heaps[i].push({r, tuple[i]});
        }
    }
    return cells;
}

std::vector<std::vector<double>> project(const Coupling& c) {
    std::vector<std::vector<double>> proj(c.shape.size());
    for (std::size_t i = 0; i < c.shape.size(); ++i)
        proj[i].assign(c.shape[i], 0.0);
    for (const auto& cell : c.cells)
        for (std::size_t i = 0; i < cell.idx.size(); ++i)
            proj[i][cell.idx[i]] += cell.mass;
    return proj;
}

}  // namespace

double Coupling::total_mass() const {
    double s = 0.0;
    for (const auto& c : cells) s += c.mass;
    return s;
}

Coupling greedy_mec(const std::vector<Dist>& marginals) {
    if (marginals.empty())
        throw std::invalid_argument("greedy_mec: need at least one marginal");
    Coupling out;
    out.shape.reserve(marginals.size());
    std::vector<std::vector<double>> residual;
    residual.reserve(marginals.size());
    for (const Dist& d : marginals) {
        out.shape.push_back(d.size());
        residual.push_back(d.probs());
    }
    out.cells = greedy_core(std::move(residual));
    canonicalize(out);
    return out;
}

double coupling_entropy(const Coupling& c) {
    std::vector<double> masses;
    masses.reserve(c.cells.size());
    for (const auto& cell : c.cells) masses.push_back(cell.mass);
    return shannon_bits(masses);
}

CouplingValidation validate_coupling(const Coupling& c,
                                     const std::vector<Dist>& marginals,
                                     double tol) {
    if (c.shape.size() != marginals.size())
        throw std::invalid_argument("validate_coupling: marginal count mismatch");
    for (std::size_t i = 0; i < c.shape.size(); ++i)
        if (c.shape[i] != marginals[i].size())
            throw std::invalid_argument("validate_coupling: shape mismatch");

    CouplingValidation v;
    v.pass = true;

    double total = 0.0;
    for (const auto& cell : c.cells) {
        if (cell.idx.size() != c.shape.size()) {
            v.pass = false;
            v.message = "cell arity mismatch";
            return v;
        }
        for (std::size_t i = 0; i < cell.idx.size(); ++i)
            if (cell.idx[i] >= c.shape[i]) {
                v.pass = false;
                v.message = "cell index out of range";
                return v;
            }
        if (cell.mass < 0.0) {
            v.pass = false;
            v.message = "negative cell mass";
        }
        total += cell.mass;
    }
    for (std::size_t k = 1; k < c.cells.size(); ++k)
        if (c.cells[k].idx == c.cells[k - 1].idx) {
            v.pass = false;
            v.message = "duplicate index tuple";
        }
    if (std::abs(total - 1.0) > tol) {
        v.pass = false;
        if (v.message.empty()) v.message = "total mass not 1";
    }

    const auto proj = project(c);
    for (std::size_t i = 0; i < proj.size(); ++i) {
        v.errors.emplace_back(proj[i].size());
        for (std::size_t u = 0; u < proj[i].size(); ++u) {
            const double err = std::abs(proj[i][u] - marginals[i][u]);
            v.errors[i][u] = err;
            v.max_error = std::max(v.max_error, err);
        }
    }
    if (v.max_error > tol) {
        v.pass = false;
        if (v.message.empty()) v.message = "projection error above tolerance";
    }
    return v;
}

namespace {

// --- exact small-instance oracle ------------------------------------------

struct TreeStep {
    std::uint16_t edge;       // index into the tree's edge list
    bool leaf_is_row;         // which endpoint forces the mass
};

struct SpanningTree {
    std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;  // (row, col)
    std::vector<TreeStep> order;  // leaf-elimination schedule
};

// All spanning trees of the complete bipartite graph K_{nr,nc}, with a
// precomputed leaf-elimination order each. nr, nc <= 4 keeps this tiny
// (K_{4,4} has 4096 trees).
std::vector<SpanningTree> enumerate_trees(int nr, int nc) {
    const int ne = nr * nc;
    const int want = nr + nc - 1;
    std::vector<SpanningTree> trees;

    for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
        if (std::popcount(mask) != want) continue;

        // union-find over nr + nc nodes; rows 0..nr-1, cols nr..nr+nc-1
        std::array<int, 8> parent{};
        for (int i = 0; i < nr + nc; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool acyclic = true;
        SpanningTree t;
        for (int e = 0; e < ne && acyclic; ++e) {
            if (!(mask & (1u << e))) continue;
            const int r = e / nc, c = e % nc;
            const int a = find(r), b = find(nr + c);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[a] = b;
            t.edges.push_back({static_cast<std::uint8_t>(r),
                               static_cast<std::uint8_t>(c)});
        }
        if (!acyclic || static_cast<int>(t.edges.size()) != want) continue;

        // connected (acyclic with nr+nc-1 edges over nr+nc nodes => tree)
        std::array<int, 8> degree{};
        for (auto [r, c] : t.edges) {
            ++degree[r];
            ++degree[nr + c];
        }

        // leaf elimination: repeatedly consume the lowest-numbered leaf
        std::vector<bool> used(t.edges.size(), false);
        SpanningTree sched = t;
        for (int step = 0; step < want; ++step) {
            int leaf = -1;
            for (int node = 0; node < nr + nc; ++node)
                if (degree[node] == 1) {
                    leaf = node;
                    break;
                }
            for (std::size_t e = 0; e < t.edges.size(); ++e) {
                if (used[e]) continue;
                const int r = t.edges[e].first, c = nr + t.edges[e].second;
                if (r == leaf || c == leaf) {
                    used[e] = true;
                    --degree[r];
                    --degree[c];
                    sched.order.push_back({static_cast<std::uint16_t>(e),
                                           r == leaf});
                    break;
                }
            }
        }
        trees.push_back(std::move(sched));
    }
    return trees;
}

const std::vector<SpanningTree>& trees_for(int nr, int nc) {
    static const auto cache = [] {
        std::array<std::vector<SpanningTree>, 25> all;
        for (int r = 1; r <= 4; ++r)
            for (int c = 1; c <= 4; ++c) all[r * 5 + c] = enumerate_trees(r, c);
        return all;
    }();
    return cache[nr * 5 + nc];
}

}  // namespace

Coupling brute_force_mec_small(const std::vector<Dist>& marginals) {
    if (marginals.size() != 2)
        throw std::invalid_argument(
            "brute_force_mec_small: exactly 2 marginals required");
    const std::size_t nr = marginals[0].size(), nc = marginals[1].size();
    if (nr > 4 || nc > 4)
        throw std::invalid_argument(
            "brute_force_mec_small: support above 4 states");

    const auto& trees = trees_for(static_cast<int>(nr), static_cast<int>(nc));
    double best_h = std::numeric_limits<double>::infinity();
    std::vector<double> best_mass;
    const SpanningTree* best_tree = nullptr;

    std::array<double, 4> row{}, col{};
    std::array<double, 7> mass{};
    for (const auto& t : trees) {
        for (std::size_t i = 0; i < nr; ++i) row[i] = marginals[0][i];
        for (std::size_t j = 0; j < nc; ++j) col[j] = marginals[1][j];

        bool feasible = true;
        for (const TreeStep& s : t.order) {
            const auto [r, c] = t.edges[s.edge];
            double m = s.leaf_is_row ? row[r] : col[c];
            if (m < -1e-12) {
                feasible = false;
                break;
            }
            if (m < 0.0) m = 0.0;
            mass[s.edge] = m;
            row[r] -= m;
            col[c] -= m;
        }
        if (!feasible) continue;
        for (std::size_t i = 0; i < nr && feasible; ++i)
            if (std::abs(row[i]) > 1e-9) feasible = false;
        for (std::size_t j = 0; j < nc && feasible; ++j)
            if (std::abs(col[j]) > 1e-9) feasible = false;
        if (!feasible) continue;

        double h = 0.0;
        for (std::size_t e = 0; e < t.edges.size(); ++e)
            if (mass[e] > 0.0) h -= mass[e] * std::log2(mass[e]);
        if (h < best_h) {
            best_h = h;
            best_tree = &t;
            best_mass.assign(mass.begin(), mass.begin() + t.edges.size());
        }
    }
    if (!best_tree)
        throw std::runtime_error("brute_force_mec_small: no feasible vertex");

    Coupling out;
    out.shape = {nr, nc};
    for (std::size_t e = 0; e < best_tree->edges.size(); ++e)
        if (best_mass[e] > 0.0)
            out.cells.push_back({{best_tree->edges[e].first,
                                  best_tree->edges[e].second},
                                 best_mass[e]});
    canonicalize(out);
    return out;
}

Coupling transfer_coupling(const Coupling& p,
                           const std::vector<Dist>& noisy_marginals,
                           double delta) {
    const std::size_t t = p.shape.size();
    if (noisy_marginals.size() != t)
        throw std::invalid_argument("transfer_coupling: marginal count mismatch");
    for (std::size_t i = 0; i < t; ++i)
        if (noisy_marginals[i].size() != p.shape[i])
            throw std::invalid_argument("transfer_coupling: shape mismatch");

    auto proj = project(p);
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t u = 0; u < proj[i].size(); ++u)
            if (std::abs(noisy_marginals[i][u] - proj[i][u]) > delta + 1e-12)
                throw std::invalid_argument(
                    "transfer_coupling: marginal deviates by more than delta");

    Coupling q = p;

    // Phase I: wherever a projection exceeds its noisy target, rescale the
    // contributing cells proportionally so the projection matches exactly.
    // Rescaling only shrinks masses, so no projection can newly overshoot;
    // one ascending pass over (marginal, coordinate) clears every excess.
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<std::vector<std::size_t>> by_coord(p.shape[i]);
        for (std::size_t k = 0; k < q.cells.size(); ++k)
            by_coord[q.cells[k].idx[i]].push_back(k);
        for (std::size_t u = 0; u < p.shape[i]; ++u) {
            double cur = 0.0;
            for (std::size_t k : by_coord[u]) cur += q.cells[k].mass;
            const double target = noisy_marginals[i][u];
            if (cur <= target || cur <= 0.0) continue;
            const double factor = target / cur;
            for (std::size_t k : by_coord[u]) q.cells[k].mass *= factor;
        }
    }

    // Phase II: couple the residual excess of every marginal and add it in.
    auto qproj = project(q);
    std::vector<std::vector<double>> residual(t);
    for (std::size_t i = 0; i < t; ++i) {
        residual[i].resize(p.shape[i]);
        for (std::size_t u = 0; u < p.shape[i]; ++u)
            residual[i][u] =
                std::max(0.0, noisy_marginals[i][u] - qproj[i][u]);
    }
    const auto extra = greedy_core(std::move(residual));

    std::map<std::vector<std::uint32_t>, double> merged;
    for (const auto& cell : q.cells)
        if (cell.mass > 0.0) merged[cell.idx] += cell.mass;
    for (const auto& cell : extra) merged[cell.idx] += cell.mass;

    Coupling out;
    out.shape = p.shape;
    out.cells.reserve(merged.size());
    for (auto& [idx, mass] : merged) out.cells.push_back({idx, mass});
    return out;  // map iteration is already in tuple order
}

}  // namespace entropic
