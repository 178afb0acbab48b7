#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "realforms/errors.hpp"
#include "realforms/group.hpp"

namespace realforms {

// ---------------------------------------------------------------------------
// Swelling systems: k cyclic label sequences over generators 1..n.
//
// Contour i lists the boundary-segment labels of one quotient boundary
// contour in cyclic order.  Constraints: adjacent labels distinct whenever a
// contour has more than one segment (including the wrap-around pair), and
// every generator must appear somewhere.
// ---------------------------------------------------------------------------

struct SwellingSystem {
    int n = 0;                               // generators are labeled 1..n
    std::vector<std::vector<int>> contours;  // contour i = cyclic label sequence

    friend bool operator==(const SwellingSystem&, const SwellingSystem&) = default;
};

struct Violation {
    std::string code;     // "rank-range", "no-contours", "empty-contour",
                          // "label-range", "adjacent-equal", "label-unused",
                          // "negative-quotient-genus"
    int contour = 0;      // 1-based; 0 when not applicable
    int position = 0;     // 1-based; 0 when not applicable
    int position2 = 0;    // second position of an adjacent-equal pair
    int label = 0;        // offending or missing label; 0 when not applicable
    std::string message;
};

inline std::vector<Violation> validate(const SwellingSystem& sys) {
    std::vector<Violation> out;
    if (sys.n < 1 || sys.n > kMaxGenerators) {
        out.push_back({"rank-range", 0, 0, 0, sys.n,
                       "n must be in 1.." + std::to_string(kMaxGenerators) + ", got " +
                           std::to_string(sys.n)});
        return out;  // nothing else is meaningful without a label range
    }
    if (sys.contours.empty()) {
        out.push_back({"no-contours", 0, 0, 0, 0, "at least one contour is required"});
        return out;
    }
    std::vector<char> seen(static_cast<std::size_t>(sys.n) + 1, 0);
    for (std::size_t ci = 0; ci < sys.contours.size(); ++ci) {
        const auto& c = sys.contours[ci];
        const int ci1 = static_cast<int>(ci) + 1;
        if (c.empty()) {
            out.push_back({"empty-contour", ci1, 0, 0, 0,
                           "contour " + std::to_string(ci1) + " has no segments"});
            continue;
        }
        const int m = static_cast<int>(c.size());
        for (int j = 0; j < m; ++j) {
            if (c[j] < 1 || c[j] > sys.n) {
                out.push_back({"label-range", ci1, j + 1, 0, c[j],
                               "contour " + std::to_string(ci1) + " position " +
                                   std::to_string(j + 1) + ": label " + std::to_string(c[j]) +
                                   " outside 1.." + std::to_string(sys.n)});
            } else {
                seen[static_cast<std::size_t>(c[j])] = 1;
            }
        }
        if (m > 1) {
            for (int j = 0; j < m; ++j) {
                const int jn = (j + 1) % m;
                if (c[j] == c[jn]) {
                    out.push_back({"adjacent-equal", ci1, j + 1, jn + 1, c[j],
                                   "contour " + std::to_string(ci1) + ": equal labels at cyclically "
                                   "adjacent positions (" + std::to_string(j + 1) + "," +
                                       std::to_string(jn + 1) + ")"});
                }
            }
        }
    }
    for (int l = 1; l <= sys.n; ++l) {
        if (!seen[static_cast<std::size_t>(l)]) {
            out.push_back({"label-unused", 0, 0, 0, l,
                           "label " + std::to_string(l) + " appears in no contour"});
        }
    }
    return out;
}

inline bool is_valid(const SwellingSystem& sys) { return validate(sys).empty(); }

inline void require_valid(const SwellingSystem& sys) {
    auto v = validate(sys);
    if (!v.empty()) throw std::invalid_argument("invalid swelling system: " + v.front().message);
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Two systems are isomorphic iff one maps onto the other by a label
// bijection, a contour permutation (matching equal lengths), and independent
// cyclic shifts of each contour — and crucially NOT by reversal, so mirror-image
// systems stay distinct.  The canonical key is the lexicographic minimum of
// the byte encoding [n, k, lengths (descending), flattened labels] over that
// entire move group, with labels renumbered by first appearance (which
// realizes the minimum over label bijections for any fixed reading order).
// ---------------------------------------------------------------------------

class CanonicalKey {
public:
    CanonicalKey() = default;
    explicit CanonicalKey(std::vector<unsigned char> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<unsigned char>& bytes() const { return bytes_; }

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
        return std::lexicographical_compare_three_way(a.bytes_.begin(), a.bytes_.end(),
                                                      b.bytes_.begin(), b.bytes_.end());
    }

    std::string to_string() const {
        static const char* hex = "0123456789abcdef";
        std::string s;
        s.reserve(bytes_.size() * 2);
        for (unsigned char b : bytes_) {
            s.push_back(hex[b >> 4]);
            s.push_back(hex[b & 15]);
        }
        return s;
    }

private:
    std::vector<unsigned char> bytes_;
};

namespace detail {

// Byte encoding of a system exactly as stored: [n, k, m_1..m_k, labels...].
inline std::vector<unsigned char> plain_encoding(const SwellingSystem& sys) {
    std::vector<unsigned char> enc;
    std::size_t total = 0;
    for (const auto& c : sys.contours) total += c.size();
    enc.reserve(2 + sys.contours.size() + total);
    enc.push_back(static_cast<unsigned char>(sys.n));
    enc.push_back(static_cast<unsigned char>(sys.contours.size()));
    for (const auto& c : sys.contours) enc.push_back(static_cast<unsigned char>(c.size()));
    for (const auto& c : sys.contours)
        for (int x : c) enc.push_back(static_cast<unsigned char>(x));
    return enc;
}

}  // namespace detail

inline CanonicalKey canonical_form(const SwellingSystem& sys) {
    require_valid(sys);
    const int k = static_cast<int>(sys.contours.size());
    std::size_t total = 0;
    for (const auto& c : sys.contours) {
        if (c.size() > 255) throw ResourceLimitError("contour too long for canonical encoding");
        total += c.size();
    }
    if (k > 8) throw ResourceLimitError("too many contours for brute-force canonicalization");
    if (total > 255) throw ResourceLimitError("system too large for canonical encoding");

    std::vector<int> lens_desc(k);
    for (int i = 0; i < k; ++i) lens_desc[i] = static_cast<int>(sys.contours[i].size());
    std::sort(lens_desc.begin(), lens_desc.end(), std::greater<>());

    std::vector<unsigned char> best;
    std::vector<unsigned char> cand;
    cand.reserve(2 + k + total);
    std::vector<int> renumber(static_cast<std::size_t>(sys.n) + 1, 0);

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        bool lengths_match = true;
        for (int i = 0; i < k; ++i)
            if (static_cast<int>(sys.contours[static_cast<std::size_t>(perm[i])].size()) !=
                lens_desc[static_cast<std::size_t>(i)]) {
                lengths_match = false;
                break;
            }
        if (!lengths_match) continue;

        // Odometer over the rotation of each contour in permuted order.
        std::vector<int> rot(k, 0);
        while (true) {
            cand.clear();
            cand.push_back(static_cast<unsigned char>(sys.n));
            cand.push_back(static_cast<unsigned char>(k));
            for (int len : lens_desc) cand.push_back(static_cast<unsigned char>(len));
            std::fill(renumber.begin(), renumber.end(), 0);
            int next_label = 0;
            for (int i = 0; i < k; ++i) {
                const auto& c = sys.contours[static_cast<std::size_t>(perm[i])];
                const int m = static_cast<int>(c.size());
                for (int j = 0; j < m; ++j) {
                    const int x = c[static_cast<std::size_t>((j + rot[i]) % m)];
                    int& r = renumber[static_cast<std::size_t>(x)];
                    if (r == 0) r = ++next_label;
                    cand.push_back(static_cast<unsigned char>(r));
                }
            }
            if (best.empty() || cand < best) best = cand;

            int pos = k - 1;
            while (pos >= 0) {
                const int m = lens_desc[static_cast<std::size_t>(pos)];
                if (++rot[pos] < m) break;
                rot[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return CanonicalKey(std::move(best));
}

// Decode the canonical key back into the orbit's distinguished representative.
inline SwellingSystem canonical_representative(const SwellingSystem& sys) {
    const auto key = canonical_form(sys).bytes();
    SwellingSystem rep;
    rep.n = key[0];
    const int k = key[1];
    std::size_t at = 2 + static_cast<std::size_t>(k);
    for (int i = 0; i < k; ++i) {
        const int m = key[2 + static_cast<std::size_t>(i)];
        std::vector<int> c(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) c[static_cast<std::size_t>(j)] = key[at++];
        rep.contours.push_back(std::move(c));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Isomorphism testing with an explicit witness.
//
// A witness (η, t, ψ) certifies isomorphism a → b through
//     b.contours[η(i)][(j + t_i) mod m_i] = ψ(a.contours[i][j]).
// ---------------------------------------------------------------------------

struct IsomorphismWitness {
    std::vector<int> contour_map;  // η, 0-based: contour i of a -> contour_map[i] of b
    std::vector<int> shifts;       // t_i: position shift applied to contour i of a
    std::vector<int> label_map;    // ψ: label u of a -> label_map[u-1] of b (values 1-based)
};

inline SwellingSystem apply_witness(const SwellingSystem& a, const IsomorphismWitness& w) {
    require_valid(a);
    const int k = static_cast<int>(a.contours.size());
    if (static_cast<int>(w.contour_map.size()) != k || static_cast<int>(w.shifts.size()) != k ||
        static_cast<int>(w.label_map.size()) != a.n)
        throw std::invalid_argument("witness shape does not match the system");
    SwellingSystem out;
    out.n = a.n;
    out.contours.assign(static_cast<std::size_t>(k), {});
    for (int i = 0; i < k; ++i) {
        const auto& c = a.contours[static_cast<std::size_t>(i)];
        const int m = static_cast<int>(c.size());
        const int target = w.contour_map[static_cast<std::size_t>(i)];
        if (target < 0 || target >= k) throw std::invalid_argument("witness contour map out of range");
        auto& dst = out.contours[static_cast<std::size_t>(target)];
        dst.assign(static_cast<std::size_t>(m), 0);
        const int t = ((w.shifts[static_cast<std::size_t>(i)] % m) + m) % m;
        for (int j = 0; j < m; ++j) {
            const int u = c[static_cast<std::size_t>(j)];
            dst[static_cast<std::size_t>((j + t) % m)] = w.label_map[static_cast<std::size_t>(u - 1)];
        }
    }
    return out;
}

namespace detail {

// Exhaustive witness search over contour matchings × shifts; the label
// bijection is forced pointwise and checked for consistency.  `matrix_filter`
// optionally constrains ψ to preserve a pair of Coxeter matrices.
inline std::optional<IsomorphismWitness> witness_search(const SwellingSystem& a,
                                                        const SwellingSystem& b,
                                                        const CoxeterMatrix* Ma,
                                                        const CoxeterMatrix* Mb) {
    const int k = static_cast<int>(a.contours.size());
    if (static_cast<int>(b.contours.size()) != k || a.n != b.n) return std::nullopt;

    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> psi(static_cast<std::size_t>(a.n) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(a.n) + 1, 0);
    do {
        bool lengths_match = true;
        for (int i = 0; i < k; ++i)
            if (a.contours[static_cast<std::size_t>(i)].size() !=
                b.contours[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].size()) {
                lengths_match = false;
                break;
            }
        if (!lengths_match) continue;

        std::vector<int> shift(static_cast<std::size_t>(k), 0);
        while (true) {
            std::fill(psi.begin(), psi.end(), 0);
            std::fill(used.begin(), used.end(), 0);
            bool ok = true;
            for (int i = 0; ok && i < k; ++i) {
                const auto& ca = a.contours[static_cast<std::size_t>(i)];
                const auto& cb = b.contours[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
                const int m = static_cast<int>(ca.size());
                for (int j = 0; j < m; ++j) {
                    const int u = ca[static_cast<std::size_t>(j)];
                    const int v = cb[static_cast<std::size_t>((j + shift[static_cast<std::size_t>(i)]) % m)];
                    int& image = psi[static_cast<std::size_t>(u)];
                    if (image == 0) {
                        if (used[static_cast<std::size_t>(v)]) { ok = false; break; }
                        image = v;
                        used[static_cast<std::size_t>(v)] = 1;
                    } else if (image != v) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok && Ma != nullptr) {
                // ψ must carry the first matrix onto the second.  Labels not
                // fixed by the contour data (impossible for valid systems)
                // would remain 0 and fail the range check below.
                for (int u = 1; ok && u <= a.n; ++u)
                    for (int v = 1; ok && v <= a.n; ++v) {
                        const int pu = psi[static_cast<std::size_t>(u)];
                        const int pv = psi[static_cast<std::size_t>(v)];
                        if (pu == 0 || pv == 0 || (*Mb)(pu - 1, pv - 1) != (*Ma)(u - 1, v - 1))
                            ok = false;
                    }
            }
            if (ok) {
                IsomorphismWitness w;
                w.contour_map = perm;
                w.shifts = shift;
                w.label_map.resize(static_cast<std::size_t>(a.n));
                for (int u = 1; u <= a.n; ++u)
                    w.label_map[static_cast<std::size_t>(u - 1)] = psi[static_cast<std::size_t>(u)];
                return w;
            }

            int pos = k - 1;
            while (pos >= 0) {
                const int m = static_cast<int>(a.contours[static_cast<std::size_t>(pos)].size());
                if (++shift[static_cast<std::size_t>(pos)] < m) break;
                shift[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace detail

inline std::optional<IsomorphismWitness> are_isomorphic(const SwellingSystem& a,
                                                        const SwellingSystem& b) {
    require_valid(a);
    require_valid(b);
    if (a.n != b.n || a.contours.size() != b.contours.size()) return std::nullopt;
    if (canonical_form(a) != canonical_form(b)) return std::nullopt;
    auto w = detail::witness_search(a, b, nullptr, nullptr);
    if (!w) throw std::logic_error("equal canonical keys but witness search failed");
    return w;
}

// Constrained variant: the label bijection must additionally carry Ma onto Mb
// (needed when generators carry non-commutative Coxeter data).
inline std::optional<IsomorphismWitness> are_isomorphic(const SwellingSystem& a,
                                                        const SwellingSystem& b,
                                                        const CoxeterMatrix& Ma,
                                                        const CoxeterMatrix& Mb) {
    require_valid(a);
    require_valid(b);
    if (Ma.rank() != a.n || Mb.rank() != b.n)
        throw std::invalid_argument("Coxeter matrix rank must equal the system rank");
    if (a.n != b.n || a.contours.size() != b.contours.size()) return std::nullopt;
    return detail::witness_search(a, b, &Ma, &Mb);
}

}  // namespace realforms
