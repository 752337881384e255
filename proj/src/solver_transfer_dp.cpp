#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "rainbow/solvers.hpp"

namespace rainbow {

// Exact gamma_r2 for C(n;{1,s}) by dynamic programming over a sliding window
// of the last s processed vertices.
//
// Cell state per window vertex: (label, residual demand), where the residual
// demand is the set of colors an empty-labeled vertex still has to receive
// from vertices processed later. Nonempty labels carry no demand, so a cell
// has at most 7 states: encodings 0..3 are empty cells with demand mask
// 0..3, encodings 4..6 are labels {1},{2},{1,2}.
//
// A window is the base-7 number with digit t = cell of vertex (i - t) after
// vertex i was processed. Processing vertex i+1 with label L:
//   - discharges L from the head (vertex i, distance 1) and from the tail
//     (vertex i+1-s, distance s); the tail then leaves the window and must
//     have no residual demand;
//   - pushes a new head cell for i+1 whose demand starts at {1,2} minus the
//     labels of its two already-processed neighbors (old head and old tail).
//
// Cyclic closure: the boundary configurations of the first s vertices are
// enumerated as full windows (labels plus deferred demands). A deferred
// demand D_j below the in-seed supply leaves an implied promise
// W_j = {1,2} \ supply \ D_j that the wrap neighbors of vertex j must
// deliver; the final window must discharge exactly those promises, and the
// final cells' own residuals must be covered by the seed labels.

namespace {

constexpr std::uint16_t INF = 0xFFFF;

int pow7(int e) {
    int r = 1;
    while (e-- > 0) r *= 7;
    return r;
}

struct Cell {
    int label;   // 0..3, the color mask
    int demand;  // 0..3, nonzero only when label == 0
};

Cell decode_cell(int c) { return c <= 3 ? Cell{0, c} : Cell{c - 3, 0}; }
int encode_cell(int label, int demand) { return label == 0 ? demand : 3 + label; }

struct DpTables {
    std::vector<std::int32_t> trans;       // [(window << 2) | L] = next window, -1 if the tail exits uncovered
    std::vector<std::uint8_t> demand_units;  // total demanded colors across the window's cells
    std::vector<std::int32_t> swapped;     // window with colors 1 and 2 exchanged
};

std::shared_ptr<const DpTables> dp_tables(int s) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const DpTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;

    const int states = pow7(s);
    const int top = pow7(s - 1);
    const int mid = s >= 2 ? pow7(s - 2) : 1;
    auto tables = std::make_shared<DpTables>();
    tables->trans.assign(static_cast<std::size_t>(states) * 4, -1);
    tables->demand_units.assign(static_cast<std::size_t>(states), 0);
    tables->swapped.assign(static_cast<std::size_t>(states), 0);

    // per-cell color swap: demands 1<->2, labels {1}<->{2}
    const int cell_swap[7] = {0, 2, 1, 3, 5, 4, 6};

    for (int w = 0; w < states; ++w) {
        Cell head = decode_cell(w % 7);
        Cell tail = decode_cell(w / top);
        int rest = (w / 7) % mid;  // cells between head and tail, unchanged
        for (int L = 0; L <= 3; ++L) {
            if (tail.demand & ~L) continue;  // tail exits uncovered
            int head2 = encode_cell(head.label, head.demand & ~L);
            int newcell = encode_cell(L, L ? 0 : (3 & ~head.label & ~tail.label));
            int next = newcell + 7 * (head2 + 7 * rest);
            tables->trans[(static_cast<std::size_t>(w) << 2) | static_cast<std::size_t>(L)] =
                static_cast<std::int32_t>(next);
        }
        int units = 0, mirror = 0;
        for (int t = s - 1, x = 0; t >= 0; --t) {
            x = w;
            for (int d = 0; d < t; ++d) x /= 7;
            int cell = x % 7;
            units += label_size(static_cast<Label>(decode_cell(cell).demand));
            mirror = mirror * 7 + cell_swap[cell];
        }
        tables->demand_units[static_cast<std::size_t>(w)] = static_cast<std::uint8_t>(units);
        // mirror built with digit s-1 first keeps digit order intact
        tables->swapped[static_cast<std::size_t>(w)] = static_cast<std::int32_t>(mirror);
    }
    cache[s] = tables;
    return tables;
}

struct Seed {
    int window = 0;
    int cost = 0;
    std::array<int, 6> label{};    // label of vertex j
    std::array<int, 6> promise{};  // colors vertex j must receive from its wrap neighbors
};

// Seed windows cover vertices 0..s-1 (digit t = vertex s-1-t). Demands that
// re-request an in-seed supplied color are dominated and skipped.
std::vector<Seed> enumerate_seeds(int s) {
    const int states = pow7(s);
    std::vector<Seed> seeds;
    for (int w = 0; w < states; ++w) {
        Seed seed;
        seed.window = w;
        std::array<Cell, 6> cells{};
        int x = w;
        for (int t = 0; t < s; ++t, x /= 7) cells[static_cast<std::size_t>(s - 1 - t)] = decode_cell(x % 7);
        bool ok = true;
        for (int j = 0; j < s && ok; ++j) {
            seed.label[static_cast<std::size_t>(j)] = cells[static_cast<std::size_t>(j)].label;
            seed.cost += label_size(static_cast<Label>(cells[static_cast<std::size_t>(j)].label));
        }
        for (int j = 0; j < s && ok; ++j) {
            if (cells[static_cast<std::size_t>(j)].label != 0) continue;
            int supply = 0;
            if (j > 0) supply |= cells[static_cast<std::size_t>(j - 1)].label;
            if (j + 1 < s) supply |= cells[static_cast<std::size_t>(j + 1)].label;
            int demand = cells[static_cast<std::size_t>(j)].demand;
            if (demand & supply) { ok = false; break; }
            seed.promise[static_cast<std::size_t>(j)] = 3 & ~supply & ~demand;
        }
        if (ok) seeds.push_back(seed);
    }
    std::sort(seeds.begin(), seeds.end(), [](const Seed& a, const Seed& b) {
        return a.cost != b.cost ? a.cost < b.cost : a.window < b.window;
    });
    return seeds;
}

struct Dp {
    int n, s;
    int states;
    std::shared_ptr<const DpTables> tables;

    // Final window digit t holds vertex n-1-t.
    bool closure_ok(int final_window, const Seed& seed) const {
        std::array<Cell, 6> cells{};
        int x = final_window;
        for (int t = 0; t < s; ++t, x /= 7) cells[static_cast<std::size_t>(t)] = decode_cell(x % 7);
        for (int t = 0; t < s; ++t) {
            // vertex m = n-1-t; wrap suppliers: seed vertex s-1-t, plus seed
            // vertex 0 when m == n-1.
            int supply = seed.label[static_cast<std::size_t>(s - 1 - t)];
            if (t == 0) supply |= seed.label[0];
            if (cells[static_cast<std::size_t>(t)].demand & ~supply) return false;
        }
        for (int j = 0; j < s; ++j) {
            int promise = seed.promise[static_cast<std::size_t>(j)];
            if (!promise) continue;
            // wrap suppliers of seed vertex j: vertex n-s+j (digit s-1-j),
            // plus vertex n-1 (digit 0) when j == 0.
            int supply = cells[static_cast<std::size_t>(s - 1 - j)].label;
            if (j == 0) supply |= cells[0].label;
            if (promise & ~supply) return false;
        }
        return true;
    }

    // Admissible remaining-weight bound after layer i: vertices whose whole
    // neighborhood lies beyond layer i force weight at ceil(interior / 3).
    int tail_bound(int i) const {
        int interior = n - 1 - 2 * s - i;
        return interior > 0 ? (interior + 2) / 3 : 0;
    }
};

} // namespace

SolverResult solve_transfer_dp(int n, int s, int k) {
    if (k != 2) throw UnsupportedParameters("transfer dp supports k = 2 only");
    if (s < 2 || s > 6) throw UnsupportedGraph("transfer dp supports jump sets {1,s} with 2 <= s <= 6");
    if (n < 2 * s + 1)
        throw UnsupportedGraph("transfer dp needs n >= 2s+1 = " + std::to_string(2 * s + 1) +
                               ", got n = " + std::to_string(n));
    auto t0 = std::chrono::steady_clock::now();

    Dp dp;
    dp.n = n;
    dp.s = s;
    dp.states = pow7(s);
    dp.tables = dp_tables(s);
    const auto& trans = dp.tables->trans;
    const auto& demand_units = dp.tables->demand_units;
    const auto& swapped = dp.tables->swapped;

    // Color swap maps optima to optima, so only the canonical half of the
    // boundary configurations has to be searched; the mirrored witnesses are
    // recovered in the reconstruction walk.
    std::vector<Seed> seeds = enumerate_seeds(s);
    std::erase_if(seeds, [&](const Seed& seed) {
        return swapped[static_cast<std::size_t>(seed.window)] < seed.window;
    });

    // Phase 1: forward minimum cost per seed; all-{1} is a valid upper bound.
    int best = n;
    std::vector<int> seed_best(seeds.size(), INF);
    std::uint64_t expanded = 0;

    std::vector<std::uint16_t> cost_a(static_cast<std::size_t>(dp.states));
    std::vector<std::uint16_t> cost_b(static_cast<std::size_t>(dp.states));
    std::vector<int> frontier_a, frontier_b;
    std::vector<std::uint32_t> stamp_a(static_cast<std::size_t>(dp.states), 0);
    std::vector<std::uint32_t> stamp_b(static_cast<std::size_t>(dp.states), 0);
    std::uint32_t epoch = 0;

    for (std::size_t si = 0; si < seeds.size(); ++si) {
        const Seed& seed = seeds[si];
        if (seed.cost + dp.tail_bound(s - 1) > best) break;  // seeds are cost-sorted

        auto* cur_cost = &cost_a;
        auto* cur_stamp = &stamp_a;
        auto* nxt_cost = &cost_b;
        auto* nxt_stamp = &stamp_b;
        auto* cur_front = &frontier_a;
        auto* nxt_front = &frontier_b;

        ++epoch;
        cur_front->clear();
        (*cur_cost)[static_cast<std::size_t>(seed.window)] = static_cast<std::uint16_t>(seed.cost);
        (*cur_stamp)[static_cast<std::size_t>(seed.window)] = epoch;
        cur_front->push_back(seed.window);

        for (int i = s - 1; i < n - 1; ++i) {
            ++epoch;
            nxt_front->clear();
            int bound = best - dp.tail_bound(i);
            // Window demands must be paid by labels on the next s vertices
            // (two dischargeable cells per label), except in the closing
            // window where the boundary labels discharge them for free.
            bool count_window = i < n - s;
            for (int w : *cur_front) {
                int c = (*cur_cost)[static_cast<std::size_t>(w)];
                if (c > bound) continue;
                if (count_window &&
                    c + ((demand_units[static_cast<std::size_t>(w)] + 1) >> 1) > best)
                    continue;
                ++expanded;
                for (int L = 0; L <= 3; ++L) {
                    std::int32_t t = trans[(static_cast<std::size_t>(w) << 2) | static_cast<std::size_t>(L)];
                    if (t < 0) continue;
                    int nc = c + label_size(static_cast<Label>(L));
                    auto ti = static_cast<std::size_t>(t);
                    if ((*nxt_stamp)[ti] != epoch) {
                        (*nxt_stamp)[ti] = epoch;
                        (*nxt_cost)[ti] = static_cast<std::uint16_t>(nc);
                        nxt_front->push_back(t);
                    } else if (nc < (*nxt_cost)[ti]) {
                        (*nxt_cost)[ti] = static_cast<std::uint16_t>(nc);
                    }
                }
            }
            std::swap(cur_cost, nxt_cost);
            std::swap(cur_stamp, nxt_stamp);
            std::swap(cur_front, nxt_front);
        }

        int sb = INF;
        for (int w : *cur_front) {
            int c = (*cur_cost)[static_cast<std::size_t>(w)];
            if (c < sb && dp.closure_ok(w, seed)) sb = c;
        }
        seed_best[si] = sb;
        best = std::min(best, sb);
    }

    // The all-{1} fallback applies only if no seed achieved `best`; for our
    // graphs some seed always does, but keep the search honest.
    std::vector<Label> witness_labels;

    // Phase 2: lexicographically smallest optimal assignment across winning
    // seeds, by exact backward cost-to-go and a smallest-label forward walk.
    std::vector<std::size_t> winners;
    for (std::size_t si = 0; si < seeds.size(); ++si)
        if (seed_best[si] == best) winners.push_back(si);
    std::sort(winners.begin(), winners.end(), [&](std::size_t a, std::size_t b) {
        return seeds[a].label < seeds[b].label ||
               (seeds[a].label == seeds[b].label && seeds[a].window < seeds[b].window);
    });

    const int layers = n - s + 1;  // layer index i - (s-1), for i = s-1 .. n-1
    std::vector<std::uint16_t> togo;
    for (std::size_t si : winners) {
        const Seed& seed = seeds[si];
        togo.assign(static_cast<std::size_t>(layers) * static_cast<std::size_t>(dp.states), INF);
        auto at = [&](int layer) { return togo.begin() + static_cast<std::ptrdiff_t>(layer) * dp.states; };
        auto last = at(layers - 1);
        for (int w = 0; w < dp.states; ++w)
            if (dp.closure_ok(w, seed)) last[w] = 0;
        for (int layer = layers - 2; layer >= 0; --layer) {
            auto cur = at(layer);
            auto nxt = at(layer + 1);
            for (int w = 0; w < dp.states; ++w) {
                std::uint16_t bv = INF;
                for (int L = 0; L <= 3; ++L) {
                    std::int32_t t = trans[(static_cast<std::size_t>(w) << 2) | static_cast<std::size_t>(L)];
                    if (t < 0 || nxt[t] == INF) continue;
                    auto cand = static_cast<std::uint16_t>(nxt[t] + label_size(static_cast<Label>(L)));
                    bv = std::min(bv, cand);
                }
                cur[w] = bv;
            }
        }
        if (at(0)[seed.window] == INF || seed.cost + at(0)[seed.window] != best)
            continue;  // pruned-away tie candidates cannot occur for winners

        // Two walks per winner: the straight lexicographic one, and the one
        // whose color-swapped image is lexicographically smallest (covering
        // the mirrored boundary configurations dropped in phase 1, where
        // digit order 0,2,1,3 maps to 0,1,2,3 after the swap).
        static constexpr int kLabelOrder[2][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}};
        for (int variant = 0; variant < 2; ++variant) {
            std::vector<Label> cand(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < s; ++j)
                cand[static_cast<std::size_t>(j)] = static_cast<Label>(seed.label[static_cast<std::size_t>(j)]);
            int w = seed.window;
            for (int i = s; i < n; ++i) {
                int layer = i - s;  // layer of w before processing vertex i
                auto nxt = at(layer + 1);
                std::uint16_t need = at(layer)[w];
                for (int L : kLabelOrder[variant]) {
                    std::int32_t t = trans[(static_cast<std::size_t>(w) << 2) | static_cast<std::size_t>(L)];
                    if (t < 0 || nxt[t] == INF) continue;
                    if (label_size(static_cast<Label>(L)) + nxt[t] == need) {
                        cand[static_cast<std::size_t>(i)] = static_cast<Label>(L);
                        w = t;
                        break;
                    }
                }
            }
            if (variant == 1)
                cand = swap_colors(RainbowAssignment(2, std::move(cand)), 1, 2).labels;
            if (witness_labels.empty() || cand < witness_labels) witness_labels = cand;
        }
    }

    if (witness_labels.empty()) {
        // No seed matched the all-{1} bound: the bound itself is optimal.
        witness_labels.assign(static_cast<std::size_t>(n), 1);
    }

    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Graph g = make_circulant(n, {1, s});
    return SolverResult::checked(g, "transfer-dp", best, RainbowAssignment(2, std::move(witness_labels)),
                                 expanded, ms, true);
}

} // namespace rainbow
