#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace k4links {

/// A rooted 4-regular map as a rotation system. Dart d sits at vertex d/4 in
/// counterclockwise slot d%4; the rotation is the fixed cyclic order of the
/// four slots, and the map structure lives entirely in the edge involution.
/// An optional crossing bit per vertex selects which opposite dart pair
/// overcrosses: bit 0 -> slots {0,2}, bit 1 -> slots {1,3}.
struct RotationMap {
    int vertices = 0;
    std::vector<int> involution; // size 4*vertices, fixed-point free
    int root_dart = 0;
    std::uint32_t crossings = 0;

    int dart_count() const { return 4 * vertices; }
    static int vertex_of(int dart) { return dart >> 2; }
    static int slot_of(int dart) { return dart & 3; }
    static int rot_next(int dart) { return (dart & ~3) | ((dart + 1) & 3); }
    static int opposite(int dart) { return dart ^ 2; }
    bool crossing_bit(int vertex) const { return (crossings >> vertex) & 1u; }
};

/// BFS canonical relabelling of the darts from a chosen root. Two rooted
/// maps are isomorphic exactly when their codes coincide; the code of the
/// whole map is the involution rewritten in the new labels.
inline std::vector<int> canonical_code(const RotationMap& m, int root) {
    const int nd = m.dart_count();
    std::vector<int> new_id(nd, -1);
    std::vector<int> by_id(nd, -1);
    int next_block = 0;
    auto open_block = [&](int dart) {
        int d = dart;
        for (int k = 0; k < 4; ++k) {
            new_id[d] = 4 * next_block + k;
            by_id[4 * next_block + k] = d;
            d = RotationMap::rot_next(d);
        }
        ++next_block;
    };
    open_block(root);
    for (int id = 0; id < nd; ++id) {
        const int partner = m.involution[by_id[id]];
        if (new_id[partner] < 0) open_block(partner);
    }
    std::vector<int> code(nd);
    for (int id = 0; id < nd; ++id) code[id] = new_id[m.involution[by_id[id]]];
    return code;
}

/// The same map rebuilt in the canonical labels of `root`, crossings carried
/// along (a slot rotation by an odd amount flips the over-pair bit).
inline RotationMap relabel(const RotationMap& m, int root) {
    const int nd = m.dart_count();
    std::vector<int> new_id(nd, -1);
    std::vector<int> by_id(nd, -1);
    std::vector<int> entry_slot(m.vertices, 0);
    int next_block = 0;
    auto open_block = [&](int dart) {
        entry_slot[next_block] = RotationMap::slot_of(dart);
        int d = dart;
        for (int k = 0; k < 4; ++k) {
            new_id[d] = 4 * next_block + k;
            by_id[4 * next_block + k] = d;
            d = RotationMap::rot_next(d);
        }
        ++next_block;
    };
    open_block(root);
    for (int id = 0; id < nd; ++id) {
        const int partner = m.involution[by_id[id]];
        if (new_id[partner] < 0) open_block(partner);
    }
    RotationMap out;
    out.vertices = m.vertices;
    out.involution.resize(nd);
    out.root_dart = 0;
    for (int id = 0; id < nd; ++id) out.involution[id] = new_id[m.involution[by_id[id]]];
    for (int b = 0; b < next_block; ++b) {
        const int old_vertex = RotationMap::vertex_of(by_id[4 * b]);
        bool bit = m.crossing_bit(old_vertex);
        if (entry_slot[b] & 1) bit = !bit;
        if (bit) out.crossings |= (1u << b);
    }
    return out;
}

/// Lexicographically least code over all root choices: an unrooted map key.
inline std::vector<int> unrooted_key(const RotationMap& m) {
    std::vector<int> best;
    for (int r = 0; r < m.dart_count(); ++r) {
        std::vector<int> code = canonical_code(m, r);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

namespace detail {

/// Open boundary paths of the partially built face permutation, with undo.
/// Arcs are added as darts get paired; a path closing on itself completes a
/// face.
class FaceTracker {
public:
    explicit FaceTracker(int nd)
        : start_of_end_(nd), end_of_start_(nd), closed_(0) {
        for (int d = 0; d < nd; ++d) {
            start_of_end_[d] = d;
            end_of_start_[d] = d;
        }
    }

    int closed_faces() const { return closed_; }

    struct Undo {
        int u, w, s, e;
        bool cycle;
    };

    Undo add_arc(int u, int w) {
        const int s = start_of_end_[u];
        const int e = end_of_start_[w];
        Undo undo{u, w, s, e, s == w};
        if (undo.cycle) {
            ++closed_;
            start_of_end_[u] = -1;
            end_of_start_[w] = -1;
        } else {
            end_of_start_[s] = e;
            start_of_end_[e] = s;
            start_of_end_[u] = -1;
            end_of_start_[w] = -1;
        }
        return undo;
    }

    void remove_arc(const Undo& undo) {
        if (undo.cycle) --closed_;
        start_of_end_[undo.u] = undo.s;
        end_of_start_[undo.w] = undo.e;
        if (!undo.cycle) {
            end_of_start_[undo.s] = undo.u;
            start_of_end_[undo.e] = undo.w;
        }
    }

private:
    std::vector<int> start_of_end_;
    std::vector<int> end_of_start_;
    int closed_;
};

} // namespace detail

/// Enumerates every connected genus-zero 4-regular rooted map with exactly
/// `v` vertices, each exactly once, in canonical labels (root dart 0).
///
/// Backtracking over the edge involution in dart order; a pairing may reach
/// an already opened vertex or open the next fresh block at its slot 0,
/// which reproduces the canonical traversal labelling and makes generated
/// maps pairwise non-isomorphic as rooted maps. Face counting is maintained
/// incrementally and genus-positive branches are cut early.
inline void enumerate_rooted_maps(int v, const std::function<void(const RotationMap&)>& emit) {
    if (v < 1 || v > 7) throw std::invalid_argument("enumerate_rooted_maps: v out of range");
    const int nd = 4 * v;
    const int target_faces = v + 2;
    RotationMap m;
    m.vertices = v;
    m.involution.assign(nd, -1);
    detail::FaceTracker faces(nd);
    int used = 1;
    int paired = 0;

    std::function<void(int)> rec = [&](int i) {
        while (i < 4 * used && m.involution[i] >= 0) ++i;
        if (i == nd) {
            if (used == v && faces.closed_faces() == target_faces) emit(m);
            return;
        }
        if (i >= 4 * used) return; // opened region exhausted, rest unreachable

        auto try_pair = [&](int j, bool fresh) {
            if (fresh) ++used;
            m.involution[i] = j;
            m.involution[j] = i;
            paired += 2;
            auto u1 = faces.add_arc(i, RotationMap::rot_next(j));
            auto u2 = faces.add_arc(j, RotationMap::rot_next(i));
            const int remaining = (nd - paired) / 2;
            const int closed = faces.closed_faces();
            const bool feasible = closed + 2 * remaining >= target_faces &&
                                  (closed < target_faces || remaining == 0) &&
                                  closed <= target_faces;
            if (feasible) rec(i + 1);
            faces.remove_arc(u2);
            faces.remove_arc(u1);
            paired -= 2;
            m.involution[i] = -1;
            m.involution[j] = -1;
            if (fresh) --used;
        };

        for (int j = i + 1; j < 4 * used; ++j)
            if (m.involution[j] < 0) try_pair(j, false);
        if (used < v) try_pair(4 * used, true);
    };
    rec(0);
}

/// Reference enumeration for cross-checks: every involution on the darts of
/// `v` fixed rotation blocks, filtered to connected genus-zero maps, counted
/// as rooted maps through canonical codes over all root choices.
inline std::size_t count_rooted_maps_reference(int v) {
    if (v < 1 || v > 3) throw std::invalid_argument("count_rooted_maps_reference: v out of range");
    const int nd = 4 * v;
    std::vector<int> inv(nd, -1);
    std::vector<std::vector<int>> codes;

    auto connected = [&]() {
        std::vector<char> seen(v, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                const int y = RotationMap::vertex_of(inv[4 * x + s]);
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
            }
        }
        return cnt == v;
    };
    auto face_count = [&]() {
        std::vector<char> seen(nd, 0);
        int faces = 0;
        for (int d = 0; d < nd; ++d) {
            if (seen[d]) continue;
            ++faces;
            int x = d;
            do {
                seen[x] = 1;
                x = RotationMap::rot_next(inv[x]);
            } while (x != d);
        }
        return faces;
    };

    std::function<void()> rec = [&]() {
        int a = 0;
        while (a < nd && inv[a] >= 0) ++a;
        if (a == nd) {
            if (!connected() || face_count() != v + 2) return;
            RotationMap m;
            m.vertices = v;
            m.involution = inv;
            for (int r = 0; r < nd; ++r) codes.push_back(canonical_code(m, r));
            return;
        }
        for (int b = a + 1; b < nd; ++b) {
            if (inv[b] >= 0) continue;
            inv[a] = b;
            inv[b] = a;
            rec();
            inv[a] = -1;
            inv[b] = -1;
        }
    };
    rec();
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes.size();
}

} // namespace k4links
