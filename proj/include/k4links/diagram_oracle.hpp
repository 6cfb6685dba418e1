#pragma once

#include "k4links/rational.hpp"
#include "k4links/rotation_map.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4links {

/// Small multigraph with edge multiplicities and loop counts, for the
/// series-parallel reduction and test oracles.
struct MultiGraph {
    int n = 0;
    std::array<std::array<int, 8>, 8> adj{}; // parallel edge counts
    std::array<int, 8> loops{};

    static MultiGraph from_map(const RotationMap& m) {
        MultiGraph g;
        g.n = m.vertices;
        for (int d = 0; d < m.dart_count(); ++d) {
            const int e = m.involution[d];
            if (e < d) continue;
            const int a = RotationMap::vertex_of(d), b = RotationMap::vertex_of(e);
            if (a == b)
                g.loops[a] += 1;
            else {
                g.adj[a][b] += 1;
                g.adj[b][a] += 1;
            }
        }
        return g;
    }
};

/// True when the multigraph reduces to at most a single vertex under
/// exhaustive loop deletion, parallel-edge merging, and removal/suppression
/// of vertices of degree <= 2 (equivalently: treewidth <= 2, no K4 minor).
inline bool is_k4_minor_free(MultiGraph g) {
    std::array<bool, 8> alive{};
    for (int i = 0; i < g.n; ++i) alive[i] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.n; ++x) {
            if (!alive[x]) continue;
            if (g.loops[x] > 0) {
                g.loops[x] = 0;
                changed = true;
            }
            for (int y = 0; y < g.n; ++y) {
                if (g.adj[x][y] > 1) {
                    g.adj[x][y] = g.adj[y][x] = 1;
                    changed = true;
                }
            }
            int deg = 0, nb1 = -1, nb2 = -1;
            for (int y = 0; y < g.n; ++y) {
                if (g.adj[x][y] > 0) {
                    deg += g.adj[x][y];
                    if (nb1 < 0)
                        nb1 = y;
                    else
                        nb2 = y;
                }
            }
            if (deg == 0) {
                alive[x] = false;
                changed = true;
            } else if (deg == 1) {
                g.adj[x][nb1] = g.adj[nb1][x] = 0;
                alive[x] = false;
                changed = true;
            } else if (deg == 2) {
                if (nb2 < 0) {
                    // double edge to one neighbour becomes a loop there
                    g.adj[x][nb1] = g.adj[nb1][x] = 0;
                    g.loops[nb1] += 1;
                } else {
                    g.adj[x][nb1] = g.adj[nb1][x] = 0;
                    g.adj[x][nb2] = g.adj[nb2][x] = 0;
                    g.adj[nb1][nb2] += 1;
                    g.adj[nb2][nb1] += 1;
                }
                alive[x] = false;
                changed = true;
            }
        }
    }
    int remaining = 0;
    for (int i = 0; i < g.n; ++i) remaining += alive[i] ? 1 : 0;
    return remaining <= 1;
}

inline bool is_k4_minor_free(const RotationMap& m) {
    return is_k4_minor_free(MultiGraph::from_map(m));
}

/// Crossing-independent part of the torus factorization: which vertices were
/// removed as curls, and for each doubled-cycle block the list of
/// (vertex, incoming-slot) pairs that determine the crossing signs.
struct DiagramReduction {
    int vertices = 0;
    int loop_count = 0;
    int components = 0;
    std::vector<std::vector<std::pair<int, int>>> chains; // (vertex, incoming slot s)
};

/// Torus factorization of a diagram: one signed twist count per block,
/// plus curls and the traced component count.
struct TorusFactorization {
    std::vector<std::pair<int, int>> chains; // (length, signed twist sum q)
    int loop_count = 0;
    int components = 0;

    std::vector<int> factors() const {
        std::vector<int> f;
        for (auto& c : chains) f.push_back(c.second);
        return f;
    }
};

namespace detail {

inline int trace_components(const RotationMap& m) {
    const int nd = m.dart_count();
    std::vector<char> seen(nd, 0);
    int orbits = 0;
    for (int d = 0; d < nd; ++d) {
        if (seen[d]) continue;
        ++orbits;
        int x = d;
        do {
            seen[x] = 1;
            x = m.involution[RotationMap::opposite(x)];
        } while (x != d);
    }
    // each closed strand yields one orbit per traversal direction
    if (orbits % 2 != 0) throw std::runtime_error("trace_components: odd orbit count");
    return orbits / 2;
}

struct Reducer {
    std::vector<int> inv;
    std::vector<char> alive;
    DiagramReduction out;

    explicit Reducer(const RotationMap& m)
        : inv(m.involution), alive(m.vertices, 1) {
        out.vertices = m.vertices;
        out.components = trace_components(m);
    }

    int dart_count() const { return static_cast<int>(inv.size()); }

    bool vertex_alive(int d) const { return alive[RotationMap::vertex_of(d)]; }

    /// Removes one curl (Reidemeister I): the loop vertex disappears and its
    /// two outer darts are joined; a doubly-looped vertex leaves a bare
    /// circle behind.
    bool remove_one_loop() {
        for (int d = 0; d < dart_count(); ++d) {
            if (!vertex_alive(d)) continue;
            const int e = inv[d];
            if (RotationMap::vertex_of(e) != RotationMap::vertex_of(d)) continue;
            const int x = RotationMap::vertex_of(d);
            if (((d ^ e) & 3) == 2)
                throw std::runtime_error("Reducer: opposite-slot loop in a planar map");
            int c = -1, dd = -1;
            for (int s = 0; s < 4; ++s) {
                const int cand = 4 * x + s;
                if (cand == d || cand == e) continue;
                if (c < 0)
                    c = cand;
                else
                    dd = cand;
            }
            const int p = inv[c], q = inv[dd];
            alive[x] = 0;
            ++out.loop_count;
            if (p == dd) {
                // second loop on the same vertex: a free circle remains
            } else {
                inv[p] = q;
                inv[q] = p;
            }
            return true;
        }
        return false;
    }

    std::vector<int> piece_of(int start_vertex) const {
        std::vector<int> stack{start_vertex}, piece;
        std::vector<char> seen(alive.size(), 0);
        seen[start_vertex] = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            piece.push_back(x);
            for (int s = 0; s < 4; ++s) {
                const int y = RotationMap::vertex_of(inv[4 * x + s]);
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return piece;
    }

    bool connected_avoiding(const std::vector<int>& piece, int d1, int d2) const {
        // darts d1,d2 and their partners blocked
        const int b1 = inv[d1], b2 = inv[d2];
        std::vector<char> seen(alive.size(), 0);
        std::vector<int> stack{piece[0]};
        seen[piece[0]] = 1;
        std::size_t cnt = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                const int dart = 4 * x + s;
                if (dart == d1 || dart == d2 || dart == b1 || dart == b2) continue;
                const int y = RotationMap::vertex_of(inv[dart]);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
        return cnt == piece.size();
    }

    /// Splits at a 2-edge cut (inverse of the 2-edge sum): every side keeps
    /// its rotation and gains one closure edge.
    bool split_one_cut() {
        std::vector<char> handled(alive.size(), 0);
        for (std::size_t v0 = 0; v0 < alive.size(); ++v0) {
            if (!alive[v0] || handled[v0]) continue;
            const std::vector<int> piece = piece_of(static_cast<int>(v0));
            for (int x : piece) handled[x] = 1;
            std::vector<int> edges; // least dart of each edge
            for (int x : piece)
                for (int s = 0; s < 4; ++s) {
                    const int d = 4 * x + s;
                    if (inv[d] > d) edges.push_back(d);
                }
            for (std::size_t a = 0; a < edges.size(); ++a) {
                for (std::size_t b = a + 1; b < edges.size(); ++b) {
                    const int d1 = edges[a], d2 = edges[b];
                    if (connected_avoiding(piece, d1, d2)) continue;
                    // side of d1's vertex after removing the cut
                    std::vector<char> side(alive.size(), 0);
                    {
                        std::vector<int> stack{RotationMap::vertex_of(d1)};
                        side[RotationMap::vertex_of(d1)] = 1;
                        while (!stack.empty()) {
                            const int x = stack.back();
                            stack.pop_back();
                            for (int s = 0; s < 4; ++s) {
                                const int dart = 4 * x + s;
                                if (dart == d1 || dart == d2 || dart == inv[d1] ||
                                    dart == inv[d2])
                                    continue;
                                const int y = RotationMap::vertex_of(inv[dart]);
                                if (!side[y]) {
                                    side[y] = 1;
                                    stack.push_back(y);
                                }
                            }
                        }
                    }
                    const int e1 = inv[d1], e2 = inv[d2];
                    const int d2_same = side[RotationMap::vertex_of(d2)] ? d2 : e2;
                    const int d2_other = d2_same == d2 ? e2 : d2;
                    inv[d1] = d2_same;
                    inv[d2_same] = d1;
                    inv[e1] = d2_other;
                    inv[d2_other] = e1;
                    return true;
                }
            }
        }
        return false;
    }

    /// Remaining pieces must be doubled cycles; records (vertex, incoming
    /// slot) along a chosen orientation.
    void extract_chains() {
        std::vector<char> handled(alive.size(), 0);
        for (std::size_t v0 = 0; v0 < alive.size(); ++v0) {
            if (!alive[v0] || handled[v0]) continue;
            const std::vector<int> piece = piece_of(static_cast<int>(v0));
            for (int x : piece) handled[x] = 1;
            std::vector<std::pair<int, int>> chain;
            if (piece.size() == 2) {
                const int u = piece[0];
                const int w = piece[1];
                // group the four parallel edges: slots {0,1} of u come in
                chain.emplace_back(u, 0);
                const int s0 = RotationMap::slot_of(inv[4 * u + 2]);
                const int s1 = RotationMap::slot_of(inv[4 * u + 3]);
                chain.emplace_back(w, adjacent_pair_start(s0, s1, w));
            } else {
                // walk the doubled cycle
                const int start = piece[0];
                int prev = start;
                int cur = neighbour_of(start, -1);
                std::vector<std::pair<int, int>> order{{start, -1}};
                while (cur != start) {
                    order.emplace_back(cur, prev);
                    const int nxt = neighbour_of(cur, prev);
                    prev = cur;
                    cur = nxt;
                }
                order[0].second = prev; // predecessor of the start closes the cycle
                if (order.size() != piece.size())
                    throw std::runtime_error("Reducer: block is not a doubled cycle");
                for (auto [x, from] : order) {
                    int sa = -1, sb = -1;
                    for (int s = 0; s < 4; ++s) {
                        if (RotationMap::vertex_of(inv[4 * x + s]) != from) continue;
                        if (sa < 0)
                            sa = s;
                        else
                            sb = s;
                    }
                    if (sb < 0)
                        throw std::runtime_error("Reducer: chain vertex lacks a doubled edge");
                    chain.emplace_back(x, adjacent_pair_start(sa, sb, x));
                }
            }
            out.chains.push_back(std::move(chain));
        }
    }

    int neighbour_of(int x, int excluded) const {
        for (int s = 0; s < 4; ++s) {
            const int y = RotationMap::vertex_of(inv[4 * x + s]);
            if (y != x && y != excluded) return y;
        }
        // doubled 2-cycle end: walk back the way we came
        return excluded;
    }

    static int adjacent_pair_start(int sa, int sb, int vertex) {
        if ((sa + 1) % 4 == sb) return sa;
        if ((sb + 1) % 4 == sa) return sb;
        throw std::runtime_error("Reducer: incoming darts not rotation-adjacent at vertex " +
                                 std::to_string(vertex));
    }
};

} // namespace detail

/// Crossing-independent reduction: curls removed, 2-edge cuts split, blocks
/// identified. Requires a connected K4-minor-free map.
inline DiagramReduction reduce_diagram(const RotationMap& m) {
    if (m.vertices < 1) throw std::invalid_argument("reduce_diagram: empty map");
    {
        std::vector<char> seen(m.vertices, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                const int y = RotationMap::vertex_of(m.involution[4 * x + s]);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
        if (cnt != m.vertices)
            throw std::invalid_argument("reduce_diagram: map not connected");
    }
    if (!is_k4_minor_free(m))
        throw std::invalid_argument("reduce_diagram: map is not K4-minor-free");

    detail::Reducer red(m);
    for (;;) {
        if (red.remove_one_loop()) continue;
        if (red.split_one_cut()) continue;
        break;
    }
    red.extract_chains();
    std::size_t chain_vertices = 0;
    for (auto& c : red.out.chains) chain_vertices += c.size();
    if (chain_vertices + static_cast<std::size_t>(red.out.loop_count) !=
        static_cast<std::size_t>(m.vertices))
        throw std::runtime_error("reduce_diagram: vertex accounting failed");
    return red.out;
}

/// Signed twist count of one block under a crossing assignment. The sign at
/// a vertex compares the over-pair parity with the incoming-slot parity; any
/// consistent convention gives the same |q| multiset.
inline int chain_twist(const std::vector<std::pair<int, int>>& chain, std::uint32_t crossings) {
    int q = 0;
    for (auto [x, s] : chain) {
        const bool over_odd = (crossings >> x) & 1u;
        q += (over_odd == (((s + 1) & 1) != 0)) ? 1 : -1;
    }
    return q;
}

inline TorusFactorization factorize(const RotationMap& m) {
    const DiagramReduction red = reduce_diagram(m);
    TorusFactorization f;
    f.loop_count = red.loop_count;
    f.components = red.components;
    for (auto& c : red.chains)
        f.chains.emplace_back(static_cast<int>(c.size()), chain_twist(c, m.crossings));
    return f;
}

/// Minimal diagrams realize the crossing number: no curls and no twist
/// cancellation in any block.
inline bool is_minimal(const RotationMap& m) {
    const TorusFactorization f = factorize(m);
    if (f.loop_count != 0) return false;
    for (auto [len, q] : f.chains)
        if (q != len && q != -len) return false;
    return true;
}

/// Within this diagram class the unknot is exactly one component whose every
/// torus factor is trivial.
inline bool is_unknot(const RotationMap& m) {
    const TorusFactorization f = factorize(m);
    if (f.components != 1) return false;
    for (auto [len, q] : f.chains)
        if (q > 1 || q < -1) return false;
    return true;
}

/// Exhaustive rooted-diagram counts at a fixed vertex count.
struct OracleCounts {
    Int maps = 0;          // rooted 4-regular genus-0 maps, before the minor filter
    Int k4_free_maps = 0;  // after the filter
    Int all = 0;           // rooted diagrams: k4-free maps times crossing choices
    Int minimal = 0;
    Int unknot = 0;
};

inline OracleCounts count_rooted_diagrams(int v) {
    OracleCounts c;
    enumerate_rooted_maps(v, [&](const RotationMap& m) {
        c.maps += 1;
        if (!is_k4_minor_free(m)) return;
        c.k4_free_maps += 1;
        c.all += pow2(static_cast<unsigned long>(v));
        const DiagramReduction red = reduce_diagram(m);
        const std::uint32_t sigmas = 1u << v;
        for (std::uint32_t sigma = 0; sigma < sigmas; ++sigma) {
            bool minimal = red.loop_count == 0;
            bool unknot = red.components == 1;
            for (auto& chain : red.chains) {
                if (!minimal && !unknot) break;
                const int q = chain_twist(chain, sigma);
                const int len = static_cast<int>(chain.size());
                if (q != len && q != -len) minimal = false;
                if (q > 1 || q < -1) unknot = false;
            }
            if (minimal) c.minimal += 1;
            if (unknot) c.unknot += 1;
        }
    });
    return c;
}

} // namespace k4links
