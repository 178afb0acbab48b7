#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "realforms/equipment.hpp"
#include "realforms/errors.hpp"

namespace realforms {

// ---------------------------------------------------------------------------
// Extremal constructions.
//
// For n >= 4 the single-contour genus-0-quotient family of length n+2m
// realizes genus g = 2^{n-3}(n+2m-4)+1; construct_extremal returns the
// representative with the largest possible oval total at that genus.  The
// classical target total 2g-(n-9)2^{n-3}-2 is met exactly when a labeling
// exists in which every letter sits between two equal neighbours as often as
// the length permits; see the notes emitted by the CLI for the cases where
// the true maximum falls short of that target.
// ---------------------------------------------------------------------------

inline EquipmentModel construct_extremal(int n, int m) {
    if (n == 3)
        throw std::domain_error(
            "the alternating-tail labeling is invalid at n = 3; use construct_extremal_n3");
    if (n < 4) throw std::domain_error("construct_extremal requires n >= 4");
    if (n > kMaxGenerators) throw std::domain_error("n exceeds the supported label range");
    if (m < 0) throw std::domain_error("m must be non-negative");
    if (n + 2 * m <= 4) throw std::domain_error("need n + 2m > 4");

    std::vector<int> word;
    const int L = n + 2 * m;
    if (m == 0) {
        // Shortest valid single contour covering all labels: [1..n].
        for (int x = 1; x <= n; ++x) word.push_back(x);
    } else if (n % 2 == 0 && 2 * m >= n - 2) {
        // Comb word: letter 2 in every even slot, the letters {1,3,4,...,n}
        // in contiguous blocks across the odd slots (last letter padded).
        // Every odd slot has equal neighbours and every block boundary costs
        // one even slot its equal-neighbour property; this maximizes the
        // oval total and meets the classical target exactly.
        std::vector<int> odd_slots{1};
        for (int x = 3; x <= n; ++x) odd_slots.push_back(x);
        while (static_cast<int>(odd_slots.size()) < L / 2) odd_slots.push_back(n);
        for (int x : odd_slots) {
            word.push_back(x);
            word.push_back(2);
        }
    } else {
        // Alternating-tail word [1, ..., n-1, (2, n) x m, 2].
        for (int x = 1; x < n; ++x) word.push_back(x);
        for (int t = 0; t < m; ++t) {
            word.push_back(2);
            word.push_back(n);
        }
        word.push_back(2);
    }

    EquipmentModel model{SwellingSystem{n, {word}}, 0};
    require_valid(model);
    return model;
}

// n = 3 attainment: the pattern (1,2)^{(m1-2)/2}, 1, 3 reaches h = 4 = f(3)
// at genus m1 - 3 for every even m1 >= 6 (no shorter odd contour and no
// 5-gon labeling reaches past h = 3 among models of genus > 1).
inline EquipmentModel construct_extremal_n3(int target_m1) {
    if (target_m1 < 6 || target_m1 % 2 != 0)
        throw std::domain_error("construct_extremal_n3 requires even target_m1 >= 6");
    std::vector<int> word;
    for (int t = 0; t < (target_m1 - 2) / 2; ++t) {
        word.push_back(1);
        word.push_back(2);
    }
    word.push_back(1);
    word.push_back(3);
    EquipmentModel model{SwellingSystem{3, {word}}, 0};
    require_valid(model);
    return model;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of canonical models.
//
// Strategy: walk contour-length compositions in non-increasing order, fill
// labels depth-first under the adjacency constraint with first appearances
// forced into the order 1, 2, 3, ... (every orbit has exactly one such
// filling per reading order), and keep a system iff it literally equals its
// own canonical representative.  Each isomorphism class therefore appears
// exactly once, and sorting by canonical key makes the emission order
// independent of worker count.
// ---------------------------------------------------------------------------

struct EnumerationBounds {
    int n = 0;
    int max_contours = 2;
    int max_total_m = 10;
    long long max_quotient_genus = 0;
};

namespace detail {

inline void check_enumeration_budget(const EnumerationBounds& b) {
    if (b.n < 1 || b.max_contours < 1 || b.max_total_m < 1 || b.max_quotient_genus < 0)
        throw std::invalid_argument("enumeration bounds must be positive");
    if (b.n > 6)
        throw ResourceLimitError("enumeration budget: n <= 6 (requested " + std::to_string(b.n) +
                                 ")");
    if (b.max_total_m > 14)
        throw ResourceLimitError("enumeration budget: total segments <= 14");
    if (b.max_contours > 4) throw ResourceLimitError("enumeration budget: contours <= 4");
    if (b.max_quotient_genus > 4)
        throw ResourceLimitError("enumeration budget: quotient genus <= 4");
}

// All non-increasing contour-length vectors with at most max_k parts and
// total at most max_total.
inline std::vector<std::vector<int>> length_compositions(int max_k, int max_total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_k) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, max_total, max_total);
    return out;
}

// Depth-first fill of one length composition; calls `keep` for every valid
// system that is its own canonical representative.
inline void fill_composition(int n, const std::vector<int>& lens,
                             const std::function<void(const SwellingSystem&)>& keep) {
    const int k = static_cast<int>(lens.size());
    int total = 0;
    for (int len : lens) total += len;
    if (total < n) return;  // cannot cover all labels

    SwellingSystem sys;
    sys.n = n;
    sys.contours.assign(static_cast<std::size_t>(k), {});
    for (int i = 0; i < k; ++i)
        sys.contours[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lens[static_cast<std::size_t>(i)]), 0);

    auto rec = [&](auto&& self, int ci, int pos, int used_max, int filled) -> void {
        if (ci == k) {
            if (used_max != n) return;
            if (detail::plain_encoding(sys) != canonical_form(sys).bytes()) return;
            keep(sys);
            return;
        }
        auto& c = sys.contours[static_cast<std::size_t>(ci)];
        const int m = static_cast<int>(c.size());
        if (pos == m) {
            self(self, ci + 1, 0, used_max, filled);
            return;
        }
        // Labels still missing must fit into the remaining slots.
        if (n - used_max > total - filled) return;
        const int limit = std::min(n, used_max + 1);
        for (int x = 1; x <= limit; ++x) {
            if (m > 1) {
                if (pos > 0 && c[static_cast<std::size_t>(pos - 1)] == x) continue;
                if (pos == m - 1 && c[0] == x) continue;
            }
            c[static_cast<std::size_t>(pos)] = x;
            self(self, ci, pos + 1, std::max(used_max, x), filled + 1);
        }
        c[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, 0, 0, 0);
}

}  // namespace detail

// Emit every isomorphism class within the bounds exactly once, as the
// canonical representative paired with each quotient genus 0..max, ordered
// by (canonical key, quotient genus).  `jobs` > 1 partitions the length
// compositions across threads; the merged order is identical for any count.
inline void enumerate_models(const EnumerationBounds& bounds,
                             const std::function<void(const EquipmentModel&)>& sink,
                             int jobs = 1) {
    detail::check_enumeration_budget(bounds);
    jobs = std::clamp(jobs, 1, 64);

    const auto compositions = detail::length_compositions(bounds.max_contours, bounds.max_total_m);
    using Keyed = std::pair<std::vector<unsigned char>, SwellingSystem>;
    std::vector<std::vector<Keyed>> buckets(static_cast<std::size_t>(jobs));

    auto worker = [&](int wid) {
        auto& bucket = buckets[static_cast<std::size_t>(wid)];
        for (std::size_t idx = static_cast<std::size_t>(wid); idx < compositions.size();
             idx += static_cast<std::size_t>(jobs)) {
            detail::fill_composition(bounds.n, compositions[idx], [&](const SwellingSystem& sys) {
                bucket.push_back({detail::plain_encoding(sys), sys});
            });
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int wid = 0; wid < jobs; ++wid) threads.emplace_back(worker, wid);
        for (auto& t : threads) t.join();
    }

    std::vector<Keyed> all;
    for (auto& bucket : buckets)
        for (auto& item : bucket) all.push_back(std::move(item));
    std::sort(all.begin(), all.end(),
              [](const Keyed& a, const Keyed& b) { return a.first < b.first; });

    for (const auto& [key, sys] : all)
        for (long long qg = 0; qg <= bounds.max_quotient_genus; ++qg)
            sink(EquipmentModel{sys, qg});
}

inline std::vector<EquipmentModel> enumerate_models_vec(const EnumerationBounds& bounds,
                                                        int jobs = 1) {
    std::vector<EquipmentModel> out;
    enumerate_models(bounds, [&](const EquipmentModel& m) { out.push_back(m); }, jobs);
    return out;
}

// ---------------------------------------------------------------------------
// Empirical h maximization over an enumerated family.
// ---------------------------------------------------------------------------

struct MaxHResult {
    long long value = 0;                        // overall maximum of h
    std::vector<EquipmentModel> witnesses;      // every model attaining it, emission order
    std::map<long long, long long> per_genus;   // genus -> max h at that genus
};

inline MaxHResult max_h(const EnumerationBounds& bounds, int jobs = 1) {
    MaxHResult result;
    bool first = true;
    enumerate_models(bounds, [&](const EquipmentModel& model) {
        const OvalReport rpt = oval_counts(model);
        if (first || rpt.h > result.value) {
            result.value = rpt.h;
            result.witnesses.clear();
            first = false;
        }
        if (rpt.h == result.value) result.witnesses.push_back(model);
        auto [it, inserted] = result.per_genus.try_emplace(rpt.genus, rpt.h);
        if (!inserted && rpt.h > it->second) it->second = rpt.h;
    }, jobs);
    if (first) throw std::invalid_argument("no models within the enumeration bounds");
    return result;
}

}  // namespace realforms
