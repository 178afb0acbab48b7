#pragma once

#include <climits>
#include <string>
#include <vector>

#include <json.hpp>

#include "realforms/equipment.hpp"
#include "realforms/oracle.hpp"

namespace realforms {

// ---------------------------------------------------------------------------
// Wire formats.
//
//   model:  {"n": int, "quotient_genus": int, "contours": [[int,...],...]}
//           (labels 1-based; quotient_genus defaults to 0 when absent, so a
//           bare swelling-system document is accepted everywhere)
//   report: {"genus", "mu", "geometry", "ovals", "total", "h",
//            "harnack_ok", "thm31_ok", "genus_bound_ok"} in exactly that
//           order; "mu" is an exact rational string "p/q"; "ovals" maps the
//           label (as a string) to its count.
//
// Malformed documents (wrong JSON, wrong types) surface as nlohmann
// exceptions; semantically invalid models parse fine and fail validate().
// ---------------------------------------------------------------------------

namespace detail {

// Out-of-range integers saturate to values validate() rejects, so an absurd
// document yields a diagnosable violation instead of silent truncation.
inline int saturate_int(long long v) {
    if (v > INT_MAX) return INT_MAX;
    if (v < INT_MIN) return INT_MIN;
    return static_cast<int>(v);
}

}  // namespace detail

inline EquipmentModel model_from_json(const nlohmann::json& j) {
    EquipmentModel model;
    model.system.n = detail::saturate_int(j.at("n").get<long long>());
    if (j.contains("quotient_genus"))
        model.quotient_genus = j.at("quotient_genus").get<long long>();
    const auto& contours = j.at("contours");
    if (!contours.is_array())
        throw nlohmann::json::type_error::create(302, "contours must be an array", &j);
    for (const auto& c : contours) {
        if (!c.is_array())
            throw nlohmann::json::type_error::create(302, "each contour must be an array", &j);
        std::vector<int> labels;
        labels.reserve(c.size());
        for (const auto& x : c) labels.push_back(detail::saturate_int(x.get<long long>()));
        model.system.contours.push_back(std::move(labels));
    }
    return model;
}

inline EquipmentModel parse_model(const std::string& text) {
    return model_from_json(nlohmann::json::parse(text));
}

inline nlohmann::ordered_json model_to_json(const EquipmentModel& model) {
    nlohmann::ordered_json j;
    j["n"] = model.system.n;
    j["quotient_genus"] = model.quotient_genus;
    j["contours"] = model.system.contours;
    return j;
}

inline nlohmann::ordered_json violations_to_json(const std::vector<Violation>& violations) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
        nlohmann::ordered_json item;
        item["code"] = v.code;
        if (v.contour > 0) item["contour"] = v.contour;
        if (v.position > 0) item["position"] = v.position;
        if (v.position2 > 0) item["position2"] = v.position2;
        if (v.label != 0) item["label"] = v.label;
        item["message"] = v.message;
        arr.push_back(std::move(item));
    }
    return arr;
}

inline nlohmann::ordered_json report_to_json(const EquipmentModel& model) {
    const OvalReport rpt = oval_counts(model);
    const MuResult mures = mu(model);
    nlohmann::ordered_json j;
    j["genus"] = rpt.genus;
    j["mu"] = mures.value.to_string();
    j["geometry"] = to_string(mures.geometry);
    nlohmann::ordered_json ovals;
    for (const auto& [label, count] : rpt.per_form) ovals[std::to_string(label)] = count;
    j["ovals"] = std::move(ovals);
    j["total"] = rpt.total;
    j["h"] = rpt.h;
    j["harnack_ok"] = rpt.harnack_ok;
    j["thm31_ok"] = rpt.thm31_ok;
    j["genus_bound_ok"] = rpt.genus_bound_ok;
    return j;
}

inline nlohmann::ordered_json presentation_to_json(const PresentationRecord& rec) {
    nlohmann::ordered_json j;
    j["quotient_genus"] = rec.quotient_genus;
    j["num_contours"] = rec.num_contours;
    j["generators"] = rec.generators;
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const auto& rel : rec.relations) {
        nlohmann::ordered_json item;
        item["word"] = rel.word;
        item["display"] = rel.display;
        rels.push_back(std::move(item));
    }
    j["relations"] = std::move(rels);
    j["corner_orders"] = rec.corner_orders;
    return j;
}

inline nlohmann::ordered_json oracle_report_to_json(const GluedSurface& s) {
    nlohmann::ordered_json j;
    j["copies"] = s.copies;
    j["edges"] = s.edges.size();
    j["vertices"] = s.vertices.size();
    j["genus"] = genus_oracle(s);
    nlohmann::ordered_json ovals;
    for (const auto& [label, count] : trace_ovals(s)) ovals[std::to_string(label)] = count;
    j["ovals"] = std::move(ovals);
    nlohmann::ordered_json orient;
    for (const auto& [label, ok] : check_orientable_forms(s)) orient[std::to_string(label)] = ok;
    j["orientable"] = std::move(orient);
    j["checkerboard"] = check_checkerboard(s);
    return j;
}

}  // namespace realforms
