#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "realforms/swelling.hpp"

namespace realforms {

// ---------------------------------------------------------------------------
// Equipment models: a swelling system together with the genus of the quotient
// surface.  All surface invariants (genus, orbifold measure, oval counts,
// bound verdicts, presentation data) are derived from this pair in exact
// integer/rational arithmetic.
// ---------------------------------------------------------------------------

struct EquipmentModel {
    SwellingSystem system;
    long long quotient_genus = 0;

    friend bool operator==(const EquipmentModel&, const EquipmentModel&) = default;
};

inline std::vector<Violation> validate(const EquipmentModel& model) {
    auto out = validate(model.system);
    if (model.quotient_genus < 0)
        out.push_back({"negative-quotient-genus", 0, 0, 0, 0,
                       "quotient genus must be non-negative, got " +
                           std::to_string(model.quotient_genus)});
    return out;
}

inline bool is_valid(const EquipmentModel& model) { return validate(model).empty(); }

inline void require_valid(const EquipmentModel& model) {
    auto v = validate(model);
    if (!v.empty()) throw std::invalid_argument("invalid equipment model: " + v.front().message);
}

// ---------------------------------------------------------------------------
// Exact rationals (tiny: denominators here are only ever 1 or 2, but the type
// keeps the arithmetic honest and prints the wire format "p/q").
// ---------------------------------------------------------------------------

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    int sign() const { return num < 0 ? -1 : (num > 0 ? 1 : 0); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

enum class Geometry { Spherical, Euclidean, Hyperbolic };

inline std::string to_string(Geometry g) {
    switch (g) {
        case Geometry::Spherical: return "spherical";
        case Geometry::Euclidean: return "euclidean";
        case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

struct MuResult {
    Rational value;
    Geometry geometry = Geometry::Spherical;
};

namespace detail {

// Total length of the subdivided contours (those with at least 2 segments).
// Full-circle contours carry no corner points, so they contribute nothing to
// the branching terms of the covering formulas.
inline long long subdivided_length(const SwellingSystem& sys) {
    long long L = 0;
    for (const auto& c : sys.contours)
        if (c.size() > 1) L += static_cast<long long>(c.size());
    return L;
}

}  // namespace detail

// Corner order n(i,j) between segments j and j+1 of contour i (1-based).
// Distinct commuting involutions always multiply to an element of order 2.
inline long long corner_order(const EquipmentModel& model, int contour, int corner) {
    require_valid(model);
    const int k = static_cast<int>(model.system.contours.size());
    if (contour < 1 || contour > k) throw std::invalid_argument("contour index out of range");
    const auto& c = model.system.contours[static_cast<std::size_t>(contour - 1)];
    if (c.size() < 2)
        throw std::domain_error("contour " + std::to_string(contour) +
                                " is a full circle and has no corners");
    if (corner < 1 || corner > static_cast<int>(c.size()))
        throw std::invalid_argument("corner index out of range");
    return 2;
}

// Genus of the glued surface, by the Riemann–Hurwitz count for the 2^n-fold
// branched quotient map:
//     4g - 4 = 2^n (4g~ - 4 + 2k) + 2^{n-1} * (total subdivided length),
// where only subdivided contours contribute branching (each corner point has
// stabilizer of order 4; a full circle has none).  Rejects any parameter
// combination that fails to produce a non-negative integer.
inline long long genus(const EquipmentModel& model) {
    require_valid(model);
    const int n = model.system.n;
    const long long W = 1LL << n;
    const long long k = static_cast<long long>(model.system.contours.size());
    const long long L = detail::subdivided_length(model.system);
    const long long rhs4 = W * (4 * model.quotient_genus - 4 + 2 * k) + (W / 2) * L;
    const long long num = rhs4 + 4;
    if (num % 4 != 0)
        throw std::domain_error("quotient data yields a non-integer genus");
    const long long g = num / 4;
    if (g < 0) throw std::domain_error("quotient data yields a negative genus");
    return g;
}

// Orbifold measure μ = 4g~ + 2k - 4 + Σ_{corners} (1 - 1/n(i,j)).  With all
// corner orders 2 every subdivided segment contributes 1/2 per corner; full
// circles contribute nothing.  The sign classifies the quotient geometry
// (μ is -2 times the orbifold Euler characteristic).
inline MuResult mu(const EquipmentModel& model) {
    require_valid(model);
    const long long k = static_cast<long long>(model.system.contours.size());
    const long long L = detail::subdivided_length(model.system);
    Rational value(2 * (4 * model.quotient_genus + 2 * k - 4) + L, 2);
    Geometry geom = value.sign() < 0   ? Geometry::Spherical
                    : value.sign() == 0 ? Geometry::Euclidean
                                        : Geometry::Hyperbolic;
    return MuResult{value, geom};
}

// Maximum of h over all ranks is controlled by this bound: f(2) = 2 and
// f(n) = -(n-9) 2^{n-3} - 2 for n > 2 (peaks at 30 for n = 7, 8).
inline long long f_bound(int n) {
    if (n < 2) throw std::domain_error("f is defined for n >= 2");
    if (n > 60) throw std::domain_error("f(n) exceeds 64-bit range for n > 60");
    if (n == 2) return 2;
    return -static_cast<long long>(n - 9) * (1LL << (n - 3)) - 2;
}

struct OvalReport {
    std::map<int, long long> per_form;  // label -> component count of its fixed locus
    long long total = 0;
    long long genus = 0;
    long long h = 0;  // total - 2*genus
    bool harnack_ok = false;
    bool thm31_ok = false;
    bool genus_bound_ok = false;
};

// Ovals per form, by the stabilizer-orbit rule.  Segments labeled α lift to
// |W|/2 edges; the edges of one fixed-locus component form a coset of the
// subgroup generated by the two neighbouring labels, so each segment
// contributes |W| / (2 |<u,v>|) components:
//   equal neighbours (u = v):    |W|/4   (the classical 2^{n-2}),
//   distinct neighbours:         |W|/8   (2^{n-3}),
//   full circle (m_i = 1):       |W|/2   (2^{n-1}).
// For n >= 3 this is exactly the L¹/L² rule; for n = 1, 2 the orbit form
// remains correct where the exponent form would not parse.
inline OvalReport oval_counts(const EquipmentModel& model) {
    require_valid(model);
    const int n = model.system.n;
    const long long W = 1LL << n;
    OvalReport rpt;
    for (int l = 1; l <= n; ++l) rpt.per_form[l] = 0;
    for (const auto& c : model.system.contours) {
        const int m = static_cast<int>(c.size());
        if (m == 1) {
            rpt.per_form[c[0]] += W / 2;
            continue;
        }
        for (int j = 0; j < m; ++j) {
            const int u = c[static_cast<std::size_t>((j + m - 1) % m)];
            const int v = c[static_cast<std::size_t>((j + 1) % m)];
            rpt.per_form[c[static_cast<std::size_t>(j)]] += (u == v) ? W / 4 : W / 8;
        }
    }
    for (const auto& [label, count] : rpt.per_form) rpt.total += count;
    rpt.genus = genus(model);
    rpt.h = rpt.total - 2 * rpt.genus;

    rpt.harnack_ok = true;
    for (const auto& [label, count] : rpt.per_form)
        if (count > rpt.genus + 1) rpt.harnack_ok = false;
    rpt.thm31_ok = (n >= 2) ? (rpt.h <= f_bound(n)) : true;
    rpt.genus_bound_ok =
        (n >= 3) ? (static_cast<long long>(n - 4) * (1LL << (n - 3)) <= rpt.genus - 1) : true;
    return rpt;
}

struct BoundVerdicts {
    bool harnack_ok = false;
    bool thm31_ok = false;
    bool genus_bound_ok = false;
};

// Strict bound checker (the inequalities are stated for n > 2; smaller ranks
// are a domain error here, while oval_counts reports them as vacuously true).
inline BoundVerdicts check_bounds(const EquipmentModel& model) {
    require_valid(model);
    if (model.system.n < 3) throw std::domain_error("bounds are stated for n >= 3");
    const OvalReport rpt = oval_counts(model);
    return BoundVerdicts{rpt.harnack_ok, rpt.thm31_ok, rpt.genus_bound_ok};
}

// ---------------------------------------------------------------------------
// Planar realization presentation: generators a_α, b_α (handles of the
// quotient), c_i (boundary contours), s[i,j] (reflections, j = 1..m_i+1),
// with the four defining relation families.
// ---------------------------------------------------------------------------

struct PresentationRelation {
    std::vector<std::string> word;  // factors, "name" or "name^-1"; word = 1
    std::string display;
};

struct PresentationRecord {
    long long quotient_genus = 0;
    int num_contours = 0;
    std::vector<std::string> generators;
    std::vector<PresentationRelation> relations;
    std::vector<std::vector<unsigned>> corner_orders;  // [i][j]: order at corner j of contour i
};

inline PresentationRecord planar_presentation(const EquipmentModel& model) {
    require_valid(model);
    PresentationRecord rec;
    rec.quotient_genus = model.quotient_genus;
    rec.num_contours = static_cast<int>(model.system.contours.size());

    auto s_name = [](int i, int j) {
        return "s[" + std::to_string(i) + "," + std::to_string(j) + "]";
    };

    for (long long a = 1; a <= model.quotient_genus; ++a) {
        rec.generators.push_back("a" + std::to_string(a));
        rec.generators.push_back("b" + std::to_string(a));
    }
    for (int i = 1; i <= rec.num_contours; ++i) rec.generators.push_back("c" + std::to_string(i));
    for (int i = 1; i <= rec.num_contours; ++i) {
        const int m = static_cast<int>(model.system.contours[static_cast<std::size_t>(i - 1)].size());
        for (int j = 1; j <= m + 1; ++j) rec.generators.push_back(s_name(i, j));
    }

    // Reflection involutions: s[i,j]^2 = 1.
    for (int i = 1; i <= rec.num_contours; ++i) {
        const int m = static_cast<int>(model.system.contours[static_cast<std::size_t>(i - 1)].size());
        for (int j = 1; j <= m + 1; ++j) {
            PresentationRelation rel;
            rel.word = {s_name(i, j), s_name(i, j)};
            rel.display = s_name(i, j) + "^2 = 1";
            rec.relations.push_back(std::move(rel));
        }
    }

    // Corner relations: (s[i,j] s[i,j+1])^{n(i,j)} = 1, with n(i,j) = 2 at
    // genuine corners and the degenerate order 1 on full circles (the two
    // reflection generators of a circle coincide).
    for (int i = 1; i <= rec.num_contours; ++i) {
        const int m = static_cast<int>(model.system.contours[static_cast<std::size_t>(i - 1)].size());
        std::vector<unsigned> orders;
        for (int j = 1; j <= m; ++j) {
            const unsigned ord = (m == 1) ? 1u : 2u;
            orders.push_back(ord);
            PresentationRelation rel;
            for (unsigned t = 0; t < ord; ++t) {
                rel.word.push_back(s_name(i, j));
                rel.word.push_back(s_name(i, j + 1));
            }
            rel.display = "(" + s_name(i, j) + " " + s_name(i, j + 1) + ")^" +
                          std::to_string(ord) + " = 1";
            rec.relations.push_back(std::move(rel));
        }
        rec.corner_orders.push_back(std::move(orders));
    }

    // Long relation: Π [a_α, b_α] Π c_i = 1.
    {
        PresentationRelation rel;
        std::string disp;
        for (long long a = 1; a <= model.quotient_genus; ++a) {
            const std::string an = "a" + std::to_string(a);
            const std::string bn = "b" + std::to_string(a);
            rel.word.insert(rel.word.end(), {an, bn, an + "^-1", bn + "^-1"});
            disp += an + " " + bn + " " + an + "^-1 " + bn + "^-1 ";
        }
        for (int i = 1; i <= rec.num_contours; ++i) {
            rel.word.push_back("c" + std::to_string(i));
            disp += "c" + std::to_string(i) + " ";
        }
        rel.display = disp + "= 1";
        rec.relations.push_back(std::move(rel));
    }

    // Boundary conjugation: s[i,1] c_i s[i,m_i+1] = c_i.
    for (int i = 1; i <= rec.num_contours; ++i) {
        const int m = static_cast<int>(model.system.contours[static_cast<std::size_t>(i - 1)].size());
        const std::string ci = "c" + std::to_string(i);
        PresentationRelation rel;
        rel.word = {s_name(i, 1), ci, s_name(i, m + 1), ci + "^-1"};
        rel.display = s_name(i, 1) + " " + ci + " " + s_name(i, m + 1) + " = " + ci;
        rec.relations.push_back(std::move(rel));
    }

    return rec;
}

// Two models present homeomorphic equipped surfaces iff the quotient genera
// agree and the swelling systems are isomorphic.
inline bool topologically_equivalent(const EquipmentModel& a, const EquipmentModel& b) {
    require_valid(a);
    require_valid(b);
    if (a.quotient_genus != b.quotient_genus) return false;
    return are_isomorphic(a.system, b.system).has_value();
}

}  // namespace realforms
