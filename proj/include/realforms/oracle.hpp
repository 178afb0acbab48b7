#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

#include "realforms/equipment.hpp"
#include "realforms/errors.hpp"

namespace realforms {

// ---------------------------------------------------------------------------
// Brute-force oracle: build the closed surface explicitly as 2^n camera
// copies glued along their boundaries, then measure genus, fixed-locus
// components, and orientability directly from the cell structure.  Nothing
// here reuses the closed-form code paths — the two must agree on every valid
// model, and the tests hold them to it.
//
// Cell bookkeeping: copy w carries one camera; boundary segment (i,j) with
// label α lifts to the edge set {w, wα} (|W|/2 edges), and the corner between
// segments j and j+1 (labels α, β) lifts to vertex orbits {w, wα, wβ, wαβ}
// (|W|/4 vertices).  A full-circle contour has no corner, so each of its
// |W|/2 circular edges receives one artificial vertex (orbit {w, wα}) to stay
// a well-formed 1-cell; the pair adds 0 to χ.
// ---------------------------------------------------------------------------

inline constexpr int kDefaultOracleRankLimit = 12;
inline constexpr int kHardOracleRankLimit = 16;

struct OracleVertex {
    int contour = 0;           // 0-based contour index
    int corner = 0;            // 0-based corner index (between segments corner, corner+1)
    std::uint32_t rep = 0;     // minimal copy in the stabilizer orbit
    bool artificial = false;   // true for the helper vertex on a full circle
};

struct OracleEdge {
    int label = 0;             // generator owning the mirror segment
    int contour = 0;           // 0-based contour index
    int segment = 0;           // 0-based position within the contour
    std::uint32_t copy = 0;    // minimal copy of the pair {w, w^label}
    int v0 = 0;                // endpoint vertex ids (v0 == v1 for circles)
    int v1 = 0;
};

struct GluedSurface {
    int n = 0;
    long long quotient_genus = 0;
    int num_contours = 0;
    long long copies = 0;  // 2^n
    std::vector<OracleVertex> vertices;
    std::vector<OracleEdge> edges;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(std::size_t size) : parent(size) {
        for (std::size_t i = 0; i < size; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

inline std::uint32_t label_bit(int label) { return std::uint32_t{1} << (label - 1); }

}  // namespace detail

inline GluedSurface build_surface(const EquipmentModel& model,
                                  int max_rank = kDefaultOracleRankLimit) {
    require_valid(model);
    const int n = model.system.n;
    if (max_rank > kHardOracleRankLimit) max_rank = kHardOracleRankLimit;
    if (n > max_rank)
        throw ResourceLimitError("oracle limit: rank " + std::to_string(n) + " exceeds " +
                                 std::to_string(max_rank));

    GluedSurface s;
    s.n = n;
    s.quotient_genus = model.quotient_genus;
    s.num_contours = static_cast<int>(model.system.contours.size());
    s.copies = 1LL << n;
    const std::uint32_t W = static_cast<std::uint32_t>(s.copies);

    // First pass: vertices.  Corner (i,j) of a subdivided contour produces
    // one vertex per orbit of <α, β> on the copies; a full circle produces
    // one artificial vertex per orbit of <α>.
    std::map<std::tuple<int, int, std::uint32_t>, int> vid;
    for (int i = 0; i < s.num_contours; ++i) {
        const auto& c = model.system.contours[static_cast<std::size_t>(i)];
        const int m = static_cast<int>(c.size());
        if (m == 1) {
            const std::uint32_t A = detail::label_bit(c[0]);
            for (std::uint32_t w = 0; w < W; ++w) {
                if (w < (w ^ A)) {
                    vid[{i, 0, w}] = static_cast<int>(s.vertices.size());
                    s.vertices.push_back({i, 0, w, true});
                }
            }
            continue;
        }
        for (int j = 0; j < m; ++j) {
            const std::uint32_t A = detail::label_bit(c[static_cast<std::size_t>(j)]);
            const std::uint32_t B = detail::label_bit(c[static_cast<std::size_t>((j + 1) % m)]);
            for (std::uint32_t w = 0; w < W; ++w) {
                const std::uint32_t rep =
                    std::min(std::min(w, w ^ A), std::min(w ^ B, w ^ A ^ B));
                if (w == rep) {
                    vid[{i, j, w}] = static_cast<int>(s.vertices.size());
                    s.vertices.push_back({i, j, w, false});
                }
            }
        }
    }

    // Second pass: edges.  Segment j of contour i runs between corner j-1
    // (labels prev, cur) and corner j (labels cur, next).
    for (int i = 0; i < s.num_contours; ++i) {
        const auto& c = model.system.contours[static_cast<std::size_t>(i)];
        const int m = static_cast<int>(c.size());
        if (m == 1) {
            const std::uint32_t A = detail::label_bit(c[0]);
            for (std::uint32_t w = 0; w < W; ++w) {
                if (w < (w ^ A)) {
                    const int v = vid.at({i, 0, w});
                    s.edges.push_back({c[0], i, 0, w, v, v});
                }
            }
            continue;
        }
        for (int j = 0; j < m; ++j) {
            const std::uint32_t A = detail::label_bit(c[static_cast<std::size_t>(j)]);
            const std::uint32_t P = detail::label_bit(c[static_cast<std::size_t>((j + m - 1) % m)]);
            const std::uint32_t N = detail::label_bit(c[static_cast<std::size_t>((j + 1) % m)]);
            for (std::uint32_t w = 0; w < W; ++w) {
                if (w >= (w ^ A)) continue;
                const std::uint32_t r0 =
                    std::min(std::min(w, w ^ P), std::min(w ^ A, w ^ P ^ A));
                const std::uint32_t r1 =
                    std::min(std::min(w, w ^ A), std::min(w ^ N, w ^ A ^ N));
                const int v0 = vid.at({i, (j + m - 1) % m, r0});
                const int v1 = vid.at({i, j, r1});
                s.edges.push_back({c[static_cast<std::size_t>(j)], i, j, w, v0, v1});
            }
        }
    }
    return s;
}

// Euler characteristic of the glued surface: the 2^n camera interiors
// contribute |W| (2 - 2g~ - k) (each camera is a genus-g~ surface with k
// boundary circles whose own boundary cells are replaced by the shared
// orbits), plus shared vertices, minus shared edges.  Genus = (2 - χ)/2.
inline long long genus_oracle(const GluedSurface& s) {
    const long long chi = s.copies * (2 - 2 * s.quotient_genus - s.num_contours) +
                          static_cast<long long>(s.vertices.size()) -
                          static_cast<long long>(s.edges.size());
    if (chi % 2 != 0) throw std::logic_error("glued surface has odd Euler characteristic");
    const long long g = (2 - chi) / 2;
    if (g < 0) throw std::logic_error("glued surface has negative genus");
    return g;
}

namespace detail {

// Union edges of equal label sharing a vertex; the classes are the connected
// components of each generator's fixed locus.
inline UnionFind oval_components(const GluedSurface& s) {
    UnionFind uf(s.edges.size());
    // Vertex -> incident (label, edge) pairs, then join per label.
    std::vector<std::vector<std::pair<int, int>>> incident(s.vertices.size());
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        const auto& ed = s.edges[e];
        incident[static_cast<std::size_t>(ed.v0)].push_back({ed.label, static_cast<int>(e)});
        if (ed.v1 != ed.v0)
            incident[static_cast<std::size_t>(ed.v1)].push_back({ed.label, static_cast<int>(e)});
    }
    for (auto& inc : incident) {
        std::sort(inc.begin(), inc.end());
        for (std::size_t t = 1; t < inc.size(); ++t)
            if (inc[t].first == inc[t - 1].first) uf.unite(inc[t - 1].second, inc[t].second);
    }
    return uf;
}

}  // namespace detail

inline std::map<int, long long> trace_ovals(const GluedSurface& s) {
    auto uf = detail::oval_components(s);
    std::map<int, long long> counts;
    for (int l = 1; l <= s.n; ++l) counts[l] = 0;
    std::vector<char> seen(s.edges.size(), 0);
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        const int root = uf.find(static_cast<int>(e));
        if (!seen[static_cast<std::size_t>(root)]) {
            seen[static_cast<std::size_t>(root)] = 1;
            counts[s.edges[static_cast<std::size_t>(root)].label] += 1;
        }
    }
    return counts;
}

// Sorted sizes (edge counts) of all fixed-locus components; the stabilizer
// mechanism forces each size to be 1 (full circle), 2 (equal neighbours), or
// 4 (distinct neighbours).
inline std::vector<long long> oval_component_sizes(const GluedSurface& s) {
    auto uf = detail::oval_components(s);
    std::map<int, long long> size;
    for (std::size_t e = 0; e < s.edges.size(); ++e) size[uf.find(static_cast<int>(e))] += 1;
    std::vector<long long> out;
    out.reserve(size.size());
    for (const auto& [root, count] : size) out.push_back(count);
    std::sort(out.begin(), out.end());
    return out;
}

// A form is orientable iff its mirror separates the surface: delete the
// edges labeled α from the copy-adjacency graph and exactly 2 components
// must remain.
inline std::map<int, bool> check_orientable_forms(const GluedSurface& s) {
    std::map<int, bool> out;
    for (int alpha = 1; alpha <= s.n; ++alpha) {
        detail::UnionFind uf(static_cast<std::size_t>(s.copies));
        for (const auto& e : s.edges) {
            if (e.label == alpha) continue;
            uf.unite(static_cast<int>(e.copy),
                     static_cast<int>(e.copy ^ detail::label_bit(e.label)));
        }
        int components = 0;
        for (long long w = 0; w < s.copies; ++w)
            if (uf.find(static_cast<int>(w)) == static_cast<int>(w)) ++components;
        out[alpha] = (components == 2);
    }
    return out;
}

// 2-color the copies by generator-count parity; every edge must join
// opposite colors (this is the orientability of the glued surface itself).
inline bool check_checkerboard(const GluedSurface& s) {
    for (const auto& e : s.edges) {
        const std::uint32_t other = e.copy ^ detail::label_bit(e.label);
        if ((std::popcount(e.copy) & 1) == (std::popcount(other) & 1)) return false;
    }
    return true;
}

// Plain-text incidence dump (one line per edge orbit) for diffing against
// other implementations; includes the corner stabilizer listing.
inline std::string incidence_listing(const GluedSurface& s) {
    std::ostringstream os;
    os << "copies " << s.copies << " edges " << s.edges.size() << " vertices "
       << s.vertices.size() << "\n";
    for (std::size_t v = 0; v < s.vertices.size(); ++v) {
        const auto& vx = s.vertices[v];
        os << "v" << v << ": contour " << vx.contour + 1 << " corner " << vx.corner + 1
           << " rep " << vx.rep << (vx.artificial ? " artificial" : "") << "\n";
    }
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        const auto& ed = s.edges[e];
        os << "e" << e << ": s" << ed.label << " contour " << ed.contour + 1 << " seg "
           << ed.segment + 1 << " copies (" << ed.copy << ","
           << (ed.copy ^ detail::label_bit(ed.label)) << ") verts (" << ed.v0 << "," << ed.v1
           << ")\n";
    }
    return os.str();
}

}  // namespace realforms
