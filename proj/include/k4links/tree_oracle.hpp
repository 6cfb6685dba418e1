#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace k4links {

namespace detail {

/// Free trees on m vertices as adjacency lists, one representative per
/// isomorphism class (leaf extension with canonical dedup).
inline std::vector<std::vector<std::vector<int>>> free_trees(int m) {
    auto canon = [](const std::vector<std::vector<int>>& adj) {
        const int n = static_cast<int>(adj.size());
        std::function<std::string(int, int)> enc = [&](int v, int parent) {
            std::vector<std::string> kids;
            for (int w : adj[v])
                if (w != parent) kids.push_back(enc(w, v));
            std::sort(kids.begin(), kids.end());
            std::string s = "(";
            for (auto& k : kids) s += k;
            return s + ")";
        };
        std::string best;
        for (int r = 0; r < n; ++r) {
            std::string s = enc(r, -1);
            if (best.empty() || s < best) best = std::move(s);
        }
        return best;
    };

    std::vector<std::vector<std::vector<int>>> cur{{{}}}; // the 1-vertex tree
    for (int size = 2; size <= m; ++size) {
        std::vector<std::vector<std::vector<int>>> next;
        std::set<std::string> seen;
        for (const auto& t : cur) {
            for (std::size_t v = 0; v < t.size(); ++v) {
                auto grown = t;
                grown.emplace_back();
                grown[v].push_back(static_cast<int>(t.size()));
                grown.back().push_back(static_cast<int>(v));
                if (seen.insert(canon(grown)).second) next.push_back(std::move(grown));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

/// Vertex labels of a given size: multisets over signed odd values of
/// absolute value >= 3, canonically sorted. Size 0 is the empty label.
inline std::vector<std::vector<int>> knot_labels(int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int remaining, int min_abs, int min_sign) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int a = min_abs; a <= remaining; a += 2) {
            for (int sign = (a == min_abs ? min_sign : 0); sign < 2; ++sign) {
                cur.push_back(sign == 0 ? a : -a);
                rec(remaining - a, a, sign);
                cur.pop_back();
            }
        }
    };
    rec(size, 3, 0);
    return out;
}

/// Edge labels of a given even size: one value of size 2, two (signed) of
/// each even size >= 4, matching the edge-label series.
inline std::vector<int> edge_labels(int size) {
    if (size == 2) return {2};
    return {size, -size};
}

} // namespace detail

/// Counts isomorphism classes of the labelled trees that encode non-split
/// link types of total size n: vertices carry multisets of signed odd
/// values >= 3 (or the empty label), edges carry signed even values, and the
/// size is the sum of all absolute values.
inline std::size_t enumerate_T_trees(int n) {
    if (n < 2 || n > 24) throw std::invalid_argument("enumerate_T_trees: n out of range");
    std::set<std::string> classes;

    auto label_str = [](const std::vector<int>& label) {
        std::string s = "{";
        for (int x : label) s += std::to_string(x) + ",";
        return s + "}";
    };

    const int max_vertices = n / 2 + 1;
    for (int m = 1; m <= max_vertices; ++m) {
        for (const auto& adj : detail::free_trees(m)) {
            // collect edges (a < b)
            std::vector<std::pair<int, int>> edges;
            std::vector<std::vector<int>> edge_index(m, std::vector<int>(m, -1));
            for (int a = 0; a < m; ++a)
                for (int b : adj[a])
                    if (a < b) {
                        edge_index[a][b] = edge_index[b][a] = static_cast<int>(edges.size());
                        edges.emplace_back(a, b);
                    }
            const int ne = static_cast<int>(edges.size());
            if (2 * ne > n) continue;

            std::vector<int> edge_value(ne, 0);
            std::vector<std::vector<int>> vertex_label(m);

            std::function<std::string(int, int)> enc = [&](int v, int parent) {
                std::vector<std::string> kids;
                for (int w : adj[v]) {
                    if (w == parent) continue;
                    kids.push_back("<" + std::to_string(edge_value[edge_index[v][w]]) +
                                   enc(w, v) + ">");
                }
                std::sort(kids.begin(), kids.end());
                std::string s = "(" + label_str(vertex_label[v]);
                for (auto& k : kids) s += k;
                return s + ")";
            };

            std::function<void(int, int)> assign_vertices = [&](int vi, int remaining) {
                if (vi == m) {
                    if (remaining != 0) return;
                    std::string best;
                    for (int r = 0; r < m; ++r) {
                        std::string s = enc(r, -1);
                        if (best.empty() || s < best) best = std::move(s);
                    }
                    classes.insert(best);
                    return;
                }
                for (int size = 0; size <= remaining; ++size) {
                    if (size == 1 || size == 2 || size == 4) continue; // no odd >=3 multiset has these sizes
                    for (const auto& label : detail::knot_labels(size)) {
                        vertex_label[vi] = label;
                        assign_vertices(vi + 1, remaining - size);
                    }
                }
                vertex_label[vi].clear();
            };

            std::function<void(int, int)> assign_edges = [&](int ei, int remaining) {
                if (ei == ne) {
                    assign_vertices(0, remaining);
                    return;
                }
                for (int size = 2; size <= remaining - 2 * (ne - 1 - ei); size += 2) {
                    for (int value : detail::edge_labels(size)) {
                        edge_value[ei] = value;
                        assign_edges(ei + 1, remaining - size);
                    }
                }
            };
            assign_edges(0, n);
        }
    }
    return classes.size();
}

} // namespace k4links
