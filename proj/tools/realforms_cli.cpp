// Command-line front end: validate / analyze / oracle / extremal / enumerate /
// bounds-table over the JSON wire formats.
//
// Exit codes: 0 ok, 1 domain or verdict failure, 2 parse error, 3 resource
// limit exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <realforms.hpp>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_validate(const std::string& path) {
    const auto model = realforms::parse_model(read_input(path));
    const auto violations = realforms::validate(model);
    ordered_json out;
    out["ok"] = violations.empty();
    out["violations"] = realforms::violations_to_json(violations);
    std::cout << out.dump(2) << "\n";
    return violations.empty() ? 0 : 1;
}

void require_valid_or_report(const realforms::EquipmentModel& model) {
    const auto violations = realforms::validate(model);
    if (violations.empty()) return;
    ordered_json out;
    out["ok"] = false;
    out["violations"] = realforms::violations_to_json(violations);
    std::cerr << out.dump(2) << "\n";
    throw std::domain_error("input model is invalid (see violation report)");
}

void print_report_table(const realforms::EquipmentModel& model) {
    const auto rpt = realforms::oval_counts(model);
    const auto m = realforms::mu(model);
    std::cout << "genus          " << rpt.genus << "\n"
              << "mu             " << m.value.to_string() << " (" << to_string(m.geometry)
              << ")\n";
    std::cout << "ovals         ";
    for (const auto& [label, count] : rpt.per_form)
        std::cout << " " << label << ":" << count;
    std::cout << "\n"
              << "total          " << rpt.total << "\n"
              << "h              " << rpt.h << "\n"
              << "harnack_ok     " << (rpt.harnack_ok ? "true" : "false") << "\n"
              << "thm31_ok       " << (rpt.thm31_ok ? "true" : "false") << "\n"
              << "genus_bound_ok " << (rpt.genus_bound_ok ? "true" : "false") << "\n";
}

int run_analyze(const std::string& path, bool with_presentation, const std::string& format) {
    const auto model = realforms::parse_model(read_input(path));
    require_valid_or_report(model);
    if (format == "table") {
        print_report_table(model);
        if (with_presentation) {
            const auto rec = realforms::planar_presentation(model);
            std::cout << "generators    ";
            for (const auto& g : rec.generators) std::cout << " " << g;
            std::cout << "\nrelations\n";
            for (const auto& rel : rec.relations) std::cout << "  " << rel.display << "\n";
        }
        return 0;
    }
    ordered_json out = realforms::report_to_json(model);
    if (with_presentation)
        out["presentation"] = realforms::presentation_to_json(realforms::planar_presentation(model));
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_oracle(const std::string& path, int limit) {
    const auto model = realforms::parse_model(read_input(path));
    require_valid_or_report(model);
    const auto surface = realforms::build_surface(model, limit);

    ordered_json out = realforms::oracle_report_to_json(surface);
    const auto closed = realforms::oval_counts(model);
    const bool genus_agree = realforms::genus_oracle(surface) == closed.genus;
    const auto traced = realforms::trace_ovals(surface);
    bool ovals_agree = true;
    for (const auto& [label, count] : closed.per_form) {
        auto it = traced.find(label);
        if (it == traced.end() || it->second != count) ovals_agree = false;
    }
    bool orientable_all = true;
    for (const auto& [label, ok] : realforms::check_orientable_forms(surface))
        orientable_all = orientable_all && ok;
    const bool checker = realforms::check_checkerboard(surface);

    ordered_json agreement;
    agreement["genus"] = genus_agree;
    agreement["ovals"] = ovals_agree;
    agreement["orientable_all"] = orientable_all;
    agreement["checkerboard"] = checker;
    out["agreement"] = std::move(agreement);
    const bool agree = genus_agree && ovals_agree && orientable_all && checker;
    out["agree"] = agree;
    std::cout << out.dump(2) << "\n";
    return agree ? 0 : 1;
}

int run_extremal(int n, int m, int m1, bool m_set, bool m1_set, const std::string& format) {
    realforms::EquipmentModel model;
    if (n == 3) {
        if (m_set)
            throw std::domain_error(
                "the alternating-tail family is undefined at n = 3; pass --m1 (even, >= 6) to use "
                "the exhaustive-search pattern instead");
        if (!m1_set) throw std::domain_error("n = 3 requires --m1 (even, >= 6)");
        model = realforms::construct_extremal_n3(m1);
        std::cerr << "note: at n = 3 the alternating-tail labeling is invalid (it repeats a label "
                     "on adjacent segments); emitting the search pattern (1,2)^t,1,3 instead.\n"
                     "note: no 5-segment contour at n = 3 exceeds h = 3, so h = 4 = f(3) is first "
                     "reached at m1 = 6 (genus 3); a genus-1 model [[1,2,1,3]] also reaches h = 4 "
                     "at m1 = 4 but lies outside the genus > 1 regime the bound addresses.\n";
    } else {
        if (m1_set) throw std::domain_error("--m1 applies only to n = 3");
        if (!m_set) throw std::domain_error("--m is required for n >= 4");
        model = realforms::construct_extremal(n, m);
        const auto rpt = realforms::oval_counts(model);
        const long long target_g =
            (1LL << (n - 3)) * (n + 2LL * m - 4) + 1;
        const long long target_total = 2 * target_g - static_cast<long long>(n - 9) * (1LL << (n - 3)) - 2;
        if (rpt.total != target_total) {
            std::cerr << "note: at (n,m) = (" << n << "," << m << ") the maximum oval total over "
                      << "all models of genus " << target_g << " is " << rpt.total
                      << "; the classical target " << target_total
                      << " is not attainable by any valid labeling.\n";
        }
    }
    if (format == "table") {
        const auto rpt = realforms::oval_counts(model);
        std::cout << "contours       " << realforms::model_to_json(model)["contours"].dump() << "\n"
                  << "genus          " << rpt.genus << "\n"
                  << "total          " << rpt.total << "\n"
                  << "h              " << rpt.h << "\n";
        return 0;
    }
    std::cout << realforms::model_to_json(model).dump(2) << "\n";
    return 0;
}

int run_enumerate(int n, int max_k, int max_m, long long max_qg, int jobs,
                  const std::string& emit) {
    realforms::EnumerationBounds bounds{n, max_k, max_m, max_qg};
    realforms::enumerate_models(bounds, [&](const realforms::EquipmentModel& model) {
        if (emit == "reports") {
            ordered_json line;
            line["model"] = realforms::model_to_json(model);
            line["report"] = realforms::report_to_json(model);
            std::cout << line.dump() << "\n";
        } else {
            std::cout << realforms::model_to_json(model).dump() << "\n";
        }
    }, jobs);
    return 0;
}

int run_bounds_table(int max_n, const std::string& format) {
    if (max_n < 2) throw std::domain_error("--max-n must be at least 2");
    struct Row {
        int n;
        long long f;
        long long genus_lower;
    };
    std::vector<Row> rows;
    for (int n = 2; n <= max_n; ++n) {
        // (n-4) 2^{n-3} + 1; exact also at n = 2 where the power is 1/2.
        const long long gl = (n == 2) ? 0 : (static_cast<long long>(n - 4) * (1LL << (n - 3)) + 1);
        rows.push_back({n, realforms::f_bound(n), gl});
    }
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json item;
            item["n"] = r.n;
            item["f"] = r.f;
            item["genus_lower_bound"] = r.genus_lower;
            arr.push_back(std::move(item));
        }
        std::cout << arr.dump(2) << "\n";
        return 0;
    }
    std::cout << std::left << std::setw(4) << "n" << std::setw(14) << "f(n)" << "min genus\n";
    for (const auto& r : rows)
        std::cout << std::left << std::setw(4) << r.n << std::setw(14) << r.f << r.genus_lower
                  << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swelling Coxeter systems of real orientable equipments"};
    app.require_subcommand(1);

    std::string in_path = "-";
    bool with_presentation = false;
    std::string format = "json";
    int oracle_limit = realforms::kDefaultOracleRankLimit;

    auto* validate_cmd = app.add_subcommand("validate", "check a model document and report violations");
    validate_cmd->add_option("file", in_path, "input JSON file, or - for stdin");

    auto* analyze_cmd = app.add_subcommand("analyze", "full closed-form report for a model");
    analyze_cmd->add_option("file", in_path, "input JSON file, or - for stdin");
    analyze_cmd->add_flag("--presentation", with_presentation,
                          "include the planar-realization presentation");
    analyze_cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* oracle_cmd = app.add_subcommand("oracle", "surface-gluing oracle report and agreement verdict");
    oracle_cmd->add_option("file", in_path, "input JSON file, or - for stdin");
    oracle_cmd->add_option("--oracle-limit", oracle_limit, "maximum rank to glue (default 12)");

    int ex_n = 0, ex_m = 0, ex_m1 = 0;
    auto* extremal_cmd = app.add_subcommand("extremal", "construct a maximal-oval-total model");
    extremal_cmd->add_option("--n", ex_n, "number of generators")->required();
    auto* m_opt = extremal_cmd->add_option("--m", ex_m, "tail length parameter (n >= 4)");
    auto* m1_opt = extremal_cmd->add_option("--m1", ex_m1, "contour length for n = 3 (even, >= 6)");
    extremal_cmd->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    int en_n = 0, en_max_k = 2, en_max_m = 10, en_jobs = 1;
    long long en_max_qg = 0;
    std::string en_emit = "models";
    auto* enum_cmd = app.add_subcommand("enumerate", "stream every model class within bounds (JSON lines)");
    enum_cmd->add_option("--n", en_n, "number of generators")->required();
    enum_cmd->add_option("--max-k", en_max_k, "maximum number of contours (default 2)");
    enum_cmd->add_option("--max-m", en_max_m, "maximum total segment count (default 10)");
    enum_cmd->add_option("--max-qgenus", en_max_qg, "maximum quotient genus (default 0)");
    enum_cmd->add_option("--jobs", en_jobs, "worker threads (output order is identical)");
    enum_cmd->add_option("--emit", en_emit, "models or reports")
        ->check(CLI::IsMember({"models", "reports"}));

    int bt_max_n = 9;
    std::string bt_format = "table";
    auto* bounds_cmd = app.add_subcommand("bounds-table", "table of n, f(n), and the genus lower bound");
    bounds_cmd->add_option("--max-n", bt_max_n, "last row (default 9)");
    bounds_cmd->add_option("--format", bt_format, "table (default) or json")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(in_path);
        if (analyze_cmd->parsed()) return run_analyze(in_path, with_presentation, format);
        if (oracle_cmd->parsed()) return run_oracle(in_path, oracle_limit);
        if (extremal_cmd->parsed())
            return run_extremal(ex_n, ex_m, ex_m1, m_opt->count() > 0, m1_opt->count() > 0, format);
        if (enum_cmd->parsed())
            return run_enumerate(en_n, en_max_k, en_max_m, en_max_qg, en_jobs, en_emit);
        if (bounds_cmd->parsed()) return run_bounds_table(bt_max_n, bt_format);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const realforms::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
