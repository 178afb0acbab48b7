#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace realforms {

// ---------------------------------------------------------------------------
// (Z_2)^n arithmetic.
//
// The group generated by the real forms of a commutative equipment is
// elementary abelian: an element is determined by the parity with which each
// generator occurs, so a bitmask with XOR is the entire multiplication table.
// ---------------------------------------------------------------------------

inline constexpr int kMaxGenerators = 32;

struct GroupElement {
    int n = 0;               // element of (Z_2)^n
    std::uint32_t bits = 0;  // bit i-1 set iff generator i occurs an odd number of times

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement identity_element(int n) {
    if (n < 1 || n > kMaxGenerators)
        throw std::invalid_argument("group rank must be in 1.." + std::to_string(kMaxGenerators));
    return GroupElement{n, 0};
}

inline GroupElement generator(int n, int i) {
    if (n < 1 || n > kMaxGenerators)
        throw std::invalid_argument("group rank must be in 1.." + std::to_string(kMaxGenerators));
    if (i < 1 || i > n)
        throw std::invalid_argument("generator index out of range");
    return GroupElement{n, std::uint32_t{1} << (i - 1)};
}

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
    if (a.n != b.n)
        throw std::invalid_argument("cannot multiply elements of different ranks");
    return GroupElement{a.n, a.bits ^ b.bits};
}

// Each real form reverses orientation of the surface, and the orientation
// behaviour of a product depends only on the parity of the number of factors:
// the orientation character of (Z_2)^n is the bit-weight parity.
inline bool is_antiholomorphic(const GroupElement& a) {
    return (std::popcount(a.bits) & 1) != 0;
}

// ---------------------------------------------------------------------------
// Coxeter matrices and finite-type recognition.
//
// Entries m(i,j) record the order of s_i s_j; m(i,i) = 1, off-diagonal
// entries are >= 2 or infinite (encoded as 0).  Indices are 0-based.
// ---------------------------------------------------------------------------

using CoxOrder = unsigned;
inline constexpr CoxOrder kInfiniteOrder = 0;

class CoxeterMatrix {
public:
    explicit CoxeterMatrix(int rank) : rank_(rank) {
        if (rank < 1) throw std::invalid_argument("Coxeter matrix rank must be positive");
        m_.assign(static_cast<std::size_t>(rank) * rank, 2);
        for (int i = 0; i < rank; ++i) at(i, i) = 1;
    }

    // All off-diagonal entries 2: the matrix of n commuting involutions.
    static CoxeterMatrix all_commuting(int rank) { return CoxeterMatrix(rank); }

    int rank() const { return rank_; }

    CoxOrder operator()(int i, int j) const {
        check_index(i);
        check_index(j);
        return m_[static_cast<std::size_t>(i) * rank_ + j];
    }

    void set(int i, int j, CoxOrder m) {
        check_index(i);
        check_index(j);
        if (i == j) throw std::invalid_argument("diagonal entries are fixed at 1");
        if (m == 1) throw std::invalid_argument("off-diagonal entries must be >= 2 or infinite (0)");
        at(i, j) = m;
        at(j, i) = m;
    }

    friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

private:
    void check_index(int i) const {
        if (i < 0 || i >= rank_) throw std::invalid_argument("Coxeter matrix index out of range");
    }
    CoxOrder& at(int i, int j) { return m_[static_cast<std::size_t>(i) * rank_ + j]; }

    int rank_;
    std::vector<CoxOrder> m_;
};

enum class CoxeterFamily { A, B, D, E, F, H, I2 };

inline std::string to_string(CoxeterFamily f) {
    switch (f) {
        case CoxeterFamily::A: return "A";
        case CoxeterFamily::B: return "B";
        case CoxeterFamily::D: return "D";
        case CoxeterFamily::E: return "E";
        case CoxeterFamily::F: return "F";
        case CoxeterFamily::H: return "H";
        case CoxeterFamily::I2: return "I2";
    }
    return "?";
}

struct IrreducibleFactor {
    CoxeterFamily family;
    int rank;
    CoxOrder dihedral_order = 0;  // m for I2(m), 0 for the other families
    std::vector<int> vertices;    // matrix indices of the component, ascending

    friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

struct CoxeterClassification {
    bool finite = false;
    std::vector<IrreducibleFactor> factors;  // meaningful only when finite
    std::string reason;                      // non-empty explanation when not finite
};

namespace detail {

// Classify one connected component of the Coxeter graph (vertices `comp`,
// edges where m >= 3 or infinite).  Returns false with a reason if the
// component is not of finite type.
inline bool classify_component(const CoxeterMatrix& M, const std::vector<int>& comp,
                               IrreducibleFactor& out, std::string& reason) {
    const int r = static_cast<int>(comp.size());
    out.vertices = comp;
    out.dihedral_order = 0;
    if (r == 1) {
        out.family = CoxeterFamily::A;
        out.rank = 1;
        return true;
    }

    // Gather component edges and degrees.
    std::map<int, int> local;  // matrix index -> 0..r-1
    for (int i = 0; i < r; ++i) local[comp[i]] = i;
    std::vector<std::vector<int>> adj(r);
    int edge_count = 0;
    bool has_infinite = false;
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b) {
            CoxOrder m = M(comp[a], comp[b]);
            if (m == kInfiniteOrder) has_infinite = true;
            if (m >= 3 || m == kInfiniteOrder) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++edge_count;
            }
        }
    if (has_infinite) {
        reason = "infinite bond";
        return false;
    }
    if (edge_count != r - 1) {
        reason = "cycle in the Coxeter graph";
        return false;
    }

    if (r == 2) {
        // Rank-2 components are reported uniformly in dihedral form I2(m).
        out.family = CoxeterFamily::I2;
        out.rank = 2;
        out.dihedral_order = M(comp[0], comp[1]);
        return true;
    }

    // Tree of rank >= 3.  Finite types allow at most one branch vertex of
    // degree 3 and tightly constrained edge labels.
    int branch = -1;
    for (int a = 0; a < r; ++a) {
        if (adj[a].size() >= 4) {
            reason = "vertex of degree >= 4";
            return false;
        }
        if (adj[a].size() == 3) {
            if (branch >= 0) {
                reason = "two branch vertices";
                return false;
            }
            branch = a;
        }
    }

    auto label = [&](int a, int b) { return M(comp[a], comp[b]); };

    if (branch < 0) {
        // A path.  Read the edge labels from one end.
        int start = -1;
        for (int a = 0; a < r; ++a)
            if (adj[a].size() == 1) { start = a; break; }
        std::vector<CoxOrder> labels;
        int prev = -1, cur = start;
        while (true) {
            int next = -1;
            for (int b : adj[cur])
                if (b != prev) { next = b; break; }
            if (next < 0) break;
            labels.push_back(label(cur, next));
            prev = cur;
            cur = next;
        }
        int big = 0;  // labels >= 4
        for (CoxOrder L : labels)
            if (L >= 4) ++big;
        if (big == 0) {
            out.family = CoxeterFamily::A;
            out.rank = r;
            return true;
        }
        if (big >= 2) {
            reason = "two bonds of order >= 4 on a path";
            return false;
        }
        const std::size_t pos = [&] {
            for (std::size_t p = 0; p < labels.size(); ++p)
                if (labels[p] >= 4) return p;
            return labels.size();
        }();
        const CoxOrder L = labels[pos];
        const bool terminal = (pos == 0 || pos + 1 == labels.size());
        if (L == 4) {
            if (terminal) {
                out.family = CoxeterFamily::B;
                out.rank = r;
                return true;
            }
            if (r == 4 && labels.size() == 3 && pos == 1) {
                out.family = CoxeterFamily::F;
                out.rank = 4;
                return true;
            }
            reason = "interior order-4 bond outside the rank-4 pattern";
            return false;
        }
        if (L == 5 && terminal && (r == 3 || r == 4)) {
            out.family = CoxeterFamily::H;
            out.rank = r;
            return true;
        }
        reason = "bond of order " + std::to_string(L) + " on a path of rank " + std::to_string(r);
        return false;
    }

    // One branch vertex: all labels must be 3 and the three leg lengths
    // must match D/E patterns.
    for (int a = 0; a < r; ++a)
        for (int b : adj[a])
            if (a < b && label(a, b) != 3) {
                reason = "branch vertex with a bond of order >= 4";
                return false;
            }
    std::vector<int> legs;
    for (int b : adj[branch]) {
        int len = 1, prev = branch, cur = b;
        while (true) {
            int next = -1;
            for (int c : adj[cur])
                if (c != prev) { next = c; break; }
            if (next < 0) break;
            ++len;
            prev = cur;
            cur = next;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs[0] == 1 && legs[1] == 1) {
        out.family = CoxeterFamily::D;
        out.rank = r;  // legs (1,1,c) give D_{c+3}
        return true;
    }
    if (legs[0] == 1 && legs[1] == 2 && legs[2] >= 2 && legs[2] <= 4) {
        out.family = CoxeterFamily::E;
        out.rank = r;  // legs (1,2,c), c=2,3,4 give E6, E7, E8
        return true;
    }
    reason = "branch legs (" + std::to_string(legs[0]) + "," + std::to_string(legs[1]) + "," +
             std::to_string(legs[2]) + ") match no finite type";
    return false;
}

}  // namespace detail

// Decompose the Coxeter graph (edges where m(i,j) >= 3 or infinite) into
// connected components and match each one against the finite-type list
// A_r, B_r, D_r, E6-E8, F4, H3, H4, I2(m).  Anything else is not finite.
inline CoxeterClassification classify_coxeter_matrix(const CoxeterMatrix& M) {
    const int r = M.rank();
    std::vector<int> comp_of(r, -1);
    CoxeterClassification result;
    result.finite = true;
    for (int root = 0; root < r; ++root) {
        if (comp_of[root] >= 0) continue;
        std::vector<int> comp{root};
        comp_of[root] = root;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int a = comp[head];
            for (int b = 0; b < r; ++b) {
                if (comp_of[b] >= 0) continue;
                CoxOrder m = M(a, b);
                if (m >= 3 || m == kInfiniteOrder) {
                    comp_of[b] = root;
                    comp.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        IrreducibleFactor factor;
        std::string reason;
        if (!detail::classify_component(M, comp, factor, reason)) {
            result.finite = false;
            result.factors.clear();
            result.reason = "component {";
            for (std::size_t i = 0; i < comp.size(); ++i)
                result.reason += (i ? "," : "") + std::to_string(comp[i]);
            result.reason += "}: " + reason;
            return result;
        }
        result.factors.push_back(std::move(factor));
    }
    return result;
}

}  // namespace realforms
