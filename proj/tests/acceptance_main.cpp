// Acceptance gate: runs every primary criterion end to end and prints one
// PASS/FAIL line per criterion.  The exit code is the number of failed
// criteria, so a fully green run exits 0.
//
// Criterion 2 is expected to fail honestly on five (n, m) pairs: the genus
// target is met everywhere, but the classical oval-total target exceeds the
// true maximum there, which this binary demonstrates by exhausting all
// labelings of the same length.  See the README for the analysis.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <realforms.hpp>

using namespace realforms;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    std::string verdict_note;
    bool ok = true;

    void fail(const std::string& why) {
        ok = false;
        std::cout << "[" << id << "] FAIL " << why << "\n";
    }
    void note(const std::string& what) { std::cout << "[" << id << "] " << what << "\n"; }
};

long long oracle_total(const EquipmentModel& model) {
    long long total = 0;
    for (const auto& [label, count] : trace_ovals(build_surface(model))) total += count;
    return total;
}

// Exhaustive maximum oval total over all single-contour labelings of exactly
// the given length (quotient genus 0); the length pins the genus, so this is
// the true maximum at the extremal family's genus.
long long exhaustive_max_total(int n, int length) {
    EnumerationBounds b;
    b.n = n;
    b.max_contours = 1;
    b.max_total_m = length;
    b.max_quotient_genus = 0;
    long long best = -1;
    enumerate_models(b, [&](const EquipmentModel& m) {
        if (static_cast<int>(m.system.contours[0].size()) != length) return;
        best = std::max(best, oval_counts(m).total);
    });
    return best;
}

SwellingSystem random_valid_system(std::mt19937& rng) {
    for (;;) {
        const int n = 2 + static_cast<int>(rng() % 4u);  // 2..5
        const int k = 1 + static_cast<int>(rng() % 3u);  // 1..3
        std::vector<std::vector<int>> contours;
        int total = 0;
        for (int i = 0; i < k; ++i) {
            const int m = 1 + static_cast<int>(rng() % 6u);
            total += m;
            std::vector<int> c;
            for (int j = 0; j < m; ++j)
                c.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n)));
            contours.push_back(std::move(c));
        }
        if (total > 12) continue;
        SwellingSystem s{n, contours};
        if (is_valid(s)) return s;
    }
}

SwellingSystem random_orbit_move(const SwellingSystem& a, std::mt19937& rng) {
    const int k = static_cast<int>(a.contours.size());
    IsomorphismWitness w;
    w.contour_map.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) w.contour_map[static_cast<std::size_t>(i)] = i;
    for (int i = k - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
        std::swap(w.contour_map[static_cast<std::size_t>(i)], w.contour_map[static_cast<std::size_t>(j)]);
    }
    // the image contour must have the source's length; fix mismatches by
    // permuting only within equal-length groups
    for (int i = 0; i < k; ++i) {
        while (a.contours[static_cast<std::size_t>(w.contour_map[static_cast<std::size_t>(i)])].size() !=
               a.contours[static_cast<std::size_t>(i)].size()) {
            for (int j = i + 1; j < k; ++j) {
                if (a.contours[static_cast<std::size_t>(w.contour_map[static_cast<std::size_t>(j)])].size() ==
                    a.contours[static_cast<std::size_t>(i)].size()) {
                    std::swap(w.contour_map[static_cast<std::size_t>(i)], w.contour_map[static_cast<std::size_t>(j)]);
                    break;
                }
            }
        }
    }
    for (int i = 0; i < k; ++i)
        w.shifts.push_back(static_cast<int>(rng() % static_cast<unsigned>(a.contours[static_cast<std::size_t>(i)].size())));
    w.label_map.resize(static_cast<std::size_t>(a.n));
    for (int s = 0; s < a.n; ++s) w.label_map[static_cast<std::size_t>(s)] = s + 1;
    for (int i = a.n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng() % static_cast<unsigned>(i + 1));
        std::swap(w.label_map[static_cast<std::size_t>(i)], w.label_map[static_cast<std::size_t>(j)]);
    }
    return apply_witness(a, w);
}

// Label-permutation-invariant fingerprint used to certify two systems
// non-isomorphic through the oracle alone.
struct OracleProfile {
    long long genus = 0;
    std::vector<long long> sorted_ovals;
    std::vector<long long> component_sizes;

    friend bool operator==(const OracleProfile&, const OracleProfile&) = default;
};

OracleProfile oracle_profile(const SwellingSystem& s) {
    auto surf = build_surface(EquipmentModel{s, 0});
    OracleProfile p;
    p.genus = genus_oracle(surf);
    for (const auto& [label, count] : trace_ovals(surf)) p.sorted_ovals.push_back(count);
    std::sort(p.sorted_ovals.begin(), p.sorted_ovals.end());
    p.component_sizes = oval_component_sizes(surf);
    return p;
}

std::multiset<std::size_t> length_multiset(const SwellingSystem& s) {
    std::multiset<std::size_t> out;
    for (const auto& c : s.contours) out.insert(c.size());
    return out;
}

std::string contours_to_string(const SwellingSystem& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.contours.size(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < s.contours[i].size(); ++j) {
            if (j) out += ",";
            out += std::to_string(s.contours[i][j]);
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

int main() {
    std::vector<std::pair<int, std::string>> summary;
    int failures = 0;

    auto conclude = [&](Criterion& c, long long elapsed_ms, const std::string& detail) {
        std::cout << "[" << c.id << "] " << (c.ok ? "criterion PASS" : "criterion FAIL") << " ("
                  << elapsed_ms << " ms)\n\n";
        summary.push_back({c.id, std::string(c.ok ? "PASS" : "FAIL") + " - " + detail});
        if (!c.ok) ++failures;
    };

    // ----------------------------------------------------------------- 1 ---
    {
        Criterion c{1, ""};
        const auto t0 = Clock::now();
        std::cout << "== [1] closed-form rank bound table ==\n";
        const std::map<int, long long> table{{2, 2},  {3, 4},  {4, 8},  {5, 14},
                                             {6, 22}, {7, 30}, {8, 30}, {9, -2}};
        for (const auto& [n, want] : table) {
            const long long got = f_bound(n);
            std::cout << "[1] f(" << n << ") = " << got << " (expect " << want << ")\n";
            if (got != want) c.fail("f(" + std::to_string(n) + ") mismatch");
        }
        long long best = f_bound(3);
        for (int n = 3; n <= 60; ++n) best = std::max(best, f_bound(n));
        std::cout << "[1] max f(n) over 3 <= n <= 60 = " << best << " (expect 30)\n";
        if (best != 30) c.fail("max f(n) is not 30");
        const long long dt = ms_since(t0);
        if (dt > 1000) c.fail("runtime budget exceeded (instant expected)");
        conclude(c, dt, "f table exact, max 30");
    }

    // ----------------------------------------------------------------- 2 ---
    {
        Criterion c{2, ""};
        const auto t0 = Clock::now();
        std::cout << "== [2] extremal family vs oracle ==\n";
        int total_misses = 0;
        for (int n = 4; n <= 6; ++n) {
            for (int m = 0; m <= 2; ++m) {
                if (n + 2 * m <= 4) continue;
                const long long target_g = (1LL << (n - 3)) * (n + 2 * m - 4) + 1;
                const long long target_total = 2 * target_g - (n - 9) * (1LL << (n - 3)) - 2;
                auto model = construct_extremal(n, m);
                const long long g_closed = genus(model);
                const long long g_oracle = genus_oracle(build_surface(model));
                auto rpt = oval_counts(model);
                const long long t_closed = rpt.total;
                const long long t_oracle = oracle_total(model);
                const bool genus_ok = (g_closed == target_g) && (g_oracle == target_g);
                const bool total_ok = (t_closed == target_total) && (t_oracle == target_total);
                std::cout << "[2] (n=" << n << ",m=" << m << ") " << contours_to_string(model.system)
                          << ": genus closed " << g_closed << " / oracle " << g_oracle
                          << " / target " << target_g << (genus_ok ? " ok" : " MISMATCH")
                          << "; total closed " << t_closed << " / oracle " << t_oracle
                          << " / target " << target_total;
                if (!genus_ok) {
                    std::cout << "\n";
                    c.fail("genus target missed at (n=" + std::to_string(n) + ",m=" +
                           std::to_string(m) + ")");
                    continue;
                }
                if (t_closed != t_oracle) {
                    std::cout << "\n";
                    c.fail("closed-form and oracle totals disagree");
                    continue;
                }
                if (total_ok) {
                    std::cout << " ok\n";
                } else {
                    const long long true_max =
                        exhaustive_max_total(n, static_cast<int>(model.system.contours[0].size()));
                    std::cout << " MISS (exhaustive max over all length-"
                              << model.system.contours[0].size() << " labelings is " << true_max
                              << ")\n";
                    ++total_misses;
                    if (t_closed != true_max)
                        c.fail("construction is not even maximal at (n=" + std::to_string(n) +
                               ",m=" + std::to_string(m) + ")");
                }
            }
        }
        if (total_misses > 0)
            c.fail(std::to_string(total_misses) +
                   " of 8 pairs fall short of the classical total target; the measured "
                   "totals are the true maxima at those lengths (deficit 2^{n-3} each)");
        const long long dt = ms_since(t0);
        if (dt > 1000) c.fail("runtime budget exceeded (< 1 s expected)");
        conclude(c, dt,
                 c.ok ? "genus and totals on target, oracle-confirmed"
                      : "genus on target everywhere (oracle-confirmed); classical total target "
                        "unattainable at (5,0),(5,1),(5,2),(6,0),(6,1) - documented expected red");
    }

    // ----------------------------------------------------------------- 3 ---
    {
        Criterion c{3, ""};
        const auto t0 = Clock::now();
        std::cout << "== [3] rank-three tightness by exhaustion ==\n";
        EnumerationBounds b;
        b.n = 3;
        b.max_contours = 1;
        b.max_total_m = 8;
        b.max_quotient_genus = 0;
        long long overall_max = -1;
        std::map<int, long long> best_by_m;
        bool hexagon_attains = false;
        enumerate_models(b, [&](const EquipmentModel& m) {
            const int len = static_cast<int>(m.system.contours[0].size());
            const long long h = oval_counts(m).h;
            overall_max = std::max(overall_max, h);
            auto [it, fresh] = best_by_m.try_emplace(len, h);
            if (!fresh) it->second = std::max(it->second, h);
            if (len == 6 && h == 4 &&
                m.system.contours == std::vector<std::vector<int>>{{1, 2, 1, 2, 1, 3}})
                hexagon_attains = true;
        });
        for (const auto& [len, best] : best_by_m)
            std::cout << "[3] m1 = " << len << ": max h = " << best << " (genus " << len - 3
                      << ")\n";
        if (overall_max != 4 || overall_max != f_bound(3))
            c.fail("max h over the family is not 4 = f(3)");
        if (!hexagon_attains) c.fail("[[1,2,1,2,1,3]] does not attain h = 4 at m1 = 6");
        if (best_by_m.count(5) == 0 || best_by_m.at(5) > 3)
            c.fail("an m1 = 5 labeling exceeds h = 3");
        // First attainment among genus > 1 models (m1 >= 5): the bound's
        // regime.  On the torus (m1 = 4, g = 1) h = 4 is already reached,
        // which the bound does not constrain.
        int first_attained = 0;
        for (const auto& [len, best] : best_by_m)
            if (len >= 5 && best == 4) {
                first_attained = len;
                break;
            }
        std::cout << "[3] first h = 4 among genus > 1 models at m1 = " << first_attained << "\n";
        c.note("note: m1 = 4 attains h = 4 at genus 1 ([[1,2,1,3]], the torus); the sharp "
               "claim concerns genus > 1, where first attainment is m1 = 6 (genus 3)");
        if (first_attained != 6) c.fail("first genus > 1 attainment is not at m1 = 6");
        const long long dt = ms_since(t0);
        if (dt > 1000) c.fail("runtime budget exceeded (< 1 s expected)");
        conclude(c, dt, "max h = 4 = f(3); first genus>1 attainment m1=6 by [[1,2,1,2,1,3]]; "
                        "m1=5 stays below 4");
    }

    // -------------------------------------------------------------- 4, 5 ---
    {
        Criterion c4{4, ""};
        Criterion c5{5, ""};
        const auto t0 = Clock::now();
        std::cout << "== [4] bound sweep and == [5] oracle equivalence ==\n";
        long long models_checked = 0;
        long long bound_violations = 0;
        long long oracle_disagreements = 0;
        for (int n = 3; n <= 5; ++n) {
            EnumerationBounds b;
            b.n = n;
            b.max_contours = 2;
            b.max_total_m = 10;
            b.max_quotient_genus = 1;
            long long count_n = 0;
            enumerate_models(b, [&](const EquipmentModel& m) {
                ++models_checked;
                ++count_n;
                const OvalReport rpt = oval_counts(m);
                if (!rpt.harnack_ok || !rpt.thm31_ok || !rpt.genus_bound_ok) {
                    ++bound_violations;
                    if (bound_violations <= 5)
                        c4.fail("bound violated by n=" + std::to_string(n) + " " +
                                contours_to_string(m.system) +
                                " qg=" + std::to_string(m.quotient_genus));
                }
                auto surf = build_surface(m);
                bool agree = genus_oracle(surf) == rpt.genus && trace_ovals(surf) == rpt.per_form &&
                             check_checkerboard(surf);
                for (const auto& [label, orientable] : check_orientable_forms(surf))
                    if (!orientable) agree = false;
                if (!agree) {
                    ++oracle_disagreements;
                    if (oracle_disagreements <= 5)
                        c5.fail("oracle disagrees on n=" + std::to_string(n) + " " +
                                contours_to_string(m.system) +
                                " qg=" + std::to_string(m.quotient_genus));
                }
            });
            std::cout << "[4/5] n = " << n << ": " << count_n << " models checked\n";
        }
        std::cout << "[4] bound violations: " << bound_violations << " / " << models_checked
                  << "\n";
        std::cout << "[5] oracle disagreements: " << oracle_disagreements << " / "
                  << models_checked << "\n";
        if (bound_violations != 0) c4.fail("sweep found bound violations");
        if (oracle_disagreements != 0) c5.fail("sweep found oracle disagreements");
        const long long dt = ms_since(t0);
        if (dt > 120000) c4.fail("runtime budget exceeded (< 2 min expected)");
        conclude(c4, dt, "h <= f(n), per-form <= g+1, genus lower bound: zero violations over " +
                             std::to_string(models_checked) + " models");
        conclude(c5, dt, "oracle genus/ovals/orientability/checkerboard: zero disagreements over " +
                             std::to_string(models_checked) + " models");
    }

    // ----------------------------------------------------------------- 6 ---
    {
        Criterion c{6, ""};
        const auto t0 = Clock::now();
        std::cout << "== [6] isomorphism soundness ==\n";
        std::mt19937 rng(20250819u);
        int orbit_ok = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            SwellingSystem a = random_valid_system(rng);
            SwellingSystem b = random_orbit_move(a, rng);
            if (canonical_form(a) != canonical_form(b)) {
                c.fail("orbit pair with different canonical keys: " + contours_to_string(a));
                break;
            }
            auto w = are_isomorphic(a, b);
            if (!w || apply_witness(a, *w) != b) {
                c.fail("orbit pair without a verifying witness: " + contours_to_string(a));
                break;
            }
            ++orbit_ok;
        }
        std::cout << "[6] orbit pairs verified: " << orbit_ok << " / 1000\n";

        int distinct_ok = 0;
        long long draws = 0;
        while (distinct_ok < 1000 && draws < 200000) {
            ++draws;
            SwellingSystem a = random_valid_system(rng);
            SwellingSystem b = random_valid_system(rng);
            if (a.n != b.n) continue;
            bool certified_distinct = false;
            if (a.contours.size() != b.contours.size() ||
                length_multiset(a) != length_multiset(b)) {
                certified_distinct = true;  // no bijection of contours can exist
            } else if (oracle_profile(a) != oracle_profile(b)) {
                certified_distinct = true;  // the glued surfaces differ as invariants
            }
            if (!certified_distinct) continue;
            if (canonical_form(a) == canonical_form(b)) {
                c.fail("certified-distinct pair shares a canonical key");
                break;
            }
            if (are_isomorphic(a, b).has_value()) {
                c.fail("certified-distinct pair reported isomorphic");
                break;
            }
            ++distinct_ok;
        }
        std::cout << "[6] certified non-orbit pairs verified: " << distinct_ok << " / 1000\n";
        if (orbit_ok != 1000) c.fail("orbit-pair verification incomplete");
        if (distinct_ok != 1000) c.fail("non-orbit-pair verification incomplete");
        conclude(c, ms_since(t0),
                 "1000 orbit pairs witness-verified; 1000 certified-distinct pairs rejected");
    }

    // ----------------------------------------------------------------- 7 ---
    std::cout << "== [7] scale note ==\n"
              << "[7] NOTE the general-genus inequality and its attainment for every rank at\n"
              << "    infinitely many genera are not exhaustively checkable; criteria 2-4 cover\n"
              << "    them at desk scale and criterion 5 pins the closed forms to the oracle.\n\n";

    std::cout << "== summary ==\n";
    for (const auto& [id, line] : summary) std::cout << "criterion " << id << ": " << line << "\n";
    std::cout << "criterion 7: NOTE - scale limitation documented above\n";
    std::cout << "failed criteria: " << failures << "\n";
    return failures;
}
