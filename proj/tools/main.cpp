// mourre-lab: threshold energies, band coefficients and positivity scans for
// the discrete Schrödinger operator, from one binary.
//
// Subcommands: thresholds | catalog | interpolate | verify | converge.
// All file output goes through an atomic temp-file + rename; floats are
// printed as shortest round-trip decimals so identical configurations give
// byte-identical files.  Exit codes: 0 ok, 2 bad configuration, 3 solver
// failure, 4 certification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <mourre/catalog.hpp>
#include <mourre/errors.hpp>
#include <mourre/interpolation.hpp>
#include <mourre/pingpong.hpp>
#include <mourre/symbol.hpp>
#include <mourre/textio.hpp>
#include <mourre/verifier.hpp>

namespace {

using nlohmann::json;

void emit(const std::string& path, std::string content) {
    if (!content.empty() && content.back() != '\n') content.push_back('\n');
    if (path.empty())
        std::cout << content;
    else
        mourre::util::atomic_write_file(path, content);
}

mourre::pingpong::Variant variant_from_cli(const std::string& name) {
    using mourre::pingpong::Variant;
    if (name == "j2") return Variant::J2_DECREASING;
    if (name == "f") return Variant::F_INCREASING;
    if (name == "g") return Variant::G_VARIANT;
    if (name == "well-dec") return Variant::WELL_DECREASING;
    if (name == "well-inc") return Variant::WELL_INCREASING;
    throw mourre::domain_error("unknown variant '" + name +
                               "' (expected j2, f, g, well-dec or well-inc)");
}

// Threshold reference: "zeroth" or "<variant>:n=<k>[:well=<w>]".
mourre::pingpong::ThresholdSolution resolve_threshold(int kappa, const std::string& spec) {
    if (spec == "zeroth") return mourre::pingpong::zeroth_solution(kappa);
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.empty()) throw mourre::domain_error("empty threshold reference");
    mourre::pingpong::PingPongProblem p;
    p.kappa = kappa;
    p.variant = variant_from_cli(parts[0]);
    bool have_n = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto eq = parts[i].find('=');
        if (eq == std::string::npos)
            throw mourre::domain_error("bad threshold reference field '" + parts[i] + "'");
        const std::string key = parts[i].substr(0, eq);
        const int value = std::stoi(parts[i].substr(eq + 1));
        if (key == "n") {
            p.n = value;
            have_n = true;
        } else if (key == "well") {
            p.well_index = value;
        } else {
            throw mourre::domain_error("unknown threshold reference key '" + key + "'");
        }
    }
    if (!have_n)
        throw mourre::domain_error("threshold reference '" + spec + "' is missing n=<depth>");
    return mourre::pingpong::solve(p);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

std::pair<double, double> parse_band_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw mourre::domain_error("band '" + text + "' must be <lo>:<hi>");
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

std::string thresholds_csv(const std::vector<mourre::pingpong::ThresholdSolution>& seq) {
    std::ostringstream out;
    out << "kappa,variant,well,n,E,order_m,omega,chain\n";
    for (const auto& s : seq) {
        out << s.kappa << ',' << mourre::pingpong::to_string(s.variant) << ',' << s.well_index
            << ',' << s.n << ',' << mourre::util::format_double(s.E) << ',' << s.order_m << ',';
        for (std::size_t i = 0; i < s.omega.size(); ++i)
            out << (i ? " " : "") << mourre::util::format_double(s.omega[i]);
        out << ',';
        for (std::size_t i = 0; i < s.X.size(); ++i)
            out << (i ? " " : "") << mourre::util::format_double(s.X[i]);
        out << '\n';
    }
    return out.str();
}

std::string thresholds_json(const std::vector<mourre::pingpong::ThresholdSolution>& seq) {
    json arr = json::array();
    for (const auto& s : seq) arr.push_back(json::parse(mourre::pingpong::to_json_string(s)));
    return arr.dump(2);
}

int cmd_thresholds(int kappa, const std::string& variant, int n_max, int well,
                   const std::string& format, const std::string& out) {
    const auto seq = mourre::pingpong::sequence(kappa, variant_from_cli(variant), n_max, well);
    emit(out, format == "csv" ? thresholds_csv(seq) : thresholds_json(seq));
    return 0;
}

int cmd_catalog(int kappa, int dim, int n_max, const std::string& format,
                const std::string& out) {
    const auto entries = mourre::catalog::build_catalog(kappa, dim, n_max);
    emit(out, format == "csv" ? mourre::catalog::to_csv(entries)
                              : mourre::catalog::to_json_string(entries));
    return 0;
}

std::string report_csv(const mourre::interpolation::SolveReport& rep) {
    std::ostringstream out;
    out << "j,rho\n";
    for (const auto& [j, rho] : rep.combination.terms)
        out << j << ',' << mourre::util::format_double(rho) << '\n';
    return out.str();
}

int cmd_interpolate(int kappa, int band_index, const std::string& left_spec,
                    const std::string& right_spec, const std::string& sigma_text, bool search,
                    int budget, const std::string& format, const std::string& out) {
    mourre::interpolation::InterpolationProblem prob;
    prob.kappa = kappa;
    if (band_index > 0) {
        mourre::pingpong::PingPongProblem p;
        p.kappa = kappa;
        p.n = band_index;
        prob.left = mourre::pingpong::solve(p);
        if (band_index == 1) {
            prob.right = mourre::pingpong::zeroth_solution(kappa);
        } else {
            p.n = band_index - 1;
            prob.right = mourre::pingpong::solve(p);
        }
    } else if (!left_spec.empty() && !right_spec.empty()) {
        prob.left = resolve_threshold(kappa, left_spec);
        prob.right = resolve_threshold(kappa, right_spec);
    } else {
        throw mourre::domain_error(
            "interpolate needs --band <index> or both --band-left and --band-right");
    }

    const int depth = prob.left.n;
    if (!sigma_text.empty()) {
        prob.sigma = parse_int_list(sigma_text);
    } else {
        for (int j = 1; j <= 2 * depth; ++j) prob.sigma.push_back(j);
    }

    if (search) {
        const auto pool = mourre::interpolation::default_sigma_pool(depth, budget);
        const auto result = mourre::interpolation::search_sigma(prob, pool, budget);
        if (format == "csv") {
            emit(out, report_csv(result.report));
        } else {
            json j = json::parse(mourre::interpolation::to_json_string(result.report));
            j["searched"] = json::array();
            for (const auto& v : result.verdicts)
                j["searched"].push_back({{"sigma", v.sigma},
                                         {"solved", v.solved},
                                         {"certified", v.certified},
                                         {"note", v.note}});
            emit(out, j.dump(2));
        }
        return 0;
    }

    const auto rep = mourre::interpolation::solve_coefficients(prob);
    emit(out, format == "csv" ? report_csv(rep) : mourre::interpolation::to_json_string(rep));
    return 0;
}

int cmd_verify(int kappa, int dim, const std::string& band, const std::string& left_spec,
               const std::string& right_spec, std::optional<double> energy,
               const std::string& rho_text, const std::string& sigma_text, int e_samples,
               int x_samples, int y_samples, const std::string& report_out,
               const std::string& plot_out) {
    const auto rho = parse_double_list(rho_text);
    if (rho.empty()) throw mourre::domain_error("verify needs --rho with at least one value");
    std::vector<int> sigma;
    if (!sigma_text.empty())
        sigma = parse_int_list(sigma_text);
    else
        for (int j = 1; j <= static_cast<int>(rho.size()); ++j) sigma.push_back(j);
    if (sigma.size() != rho.size())
        throw mourre::domain_error("--sigma and --rho must have the same length");
    mourre::symbol::Combination c;
    c.kappa = kappa;
    for (std::size_t i = 0; i < rho.size(); ++i) c.terms.emplace_back(sigma[i], rho[i]);

    std::vector<mourre::verifier::PlotSample> samples;
    auto* sink = plot_out.empty() ? nullptr : &samples;

    if (energy) {
        const auto v = dim == 3 ? mourre::verifier::scan_3d(c, *energy, y_samples, x_samples, sink)
                                : mourre::verifier::scan_2d(c, *energy, x_samples, sink);
        json j;
        j["E"] = v.E;
        j["kind"] = std::string(mourre::verifier::to_string(v.kind));
        j["min_value"] = v.min_value;
        j["argmin"] = v.argmin;
        j["zeros"] = v.zeros;
        if (!v.witness.empty()) j["witness"] = v.witness;
        emit(report_out, j.dump(2));
        if (!plot_out.empty()) emit(plot_out, mourre::verifier::plot_csv(samples));
        return 0;
    }

    double lo = 0, hi = 0;
    if (!band.empty()) {
        std::tie(lo, hi) = parse_band_range(band);
    } else if (!left_spec.empty() && !right_spec.empty()) {
        lo = resolve_threshold(kappa, left_spec).E;
        hi = resolve_threshold(kappa, right_spec).E;
    } else {
        throw mourre::domain_error(
            "verify needs --band <lo>:<hi>, --band-left/--band-right or --energy");
    }
    if (lo > hi) std::swap(lo, hi);

    const auto report =
        dim == 3 ? mourre::verifier::certify_band_3d(c, lo, hi, e_samples, y_samples, x_samples,
                                                     sink)
                 : mourre::verifier::certify_band(c, lo, hi, e_samples, x_samples, sink);
    emit(report_out, mourre::verifier::scan_to_json_string(report));
    if (!plot_out.empty()) emit(plot_out, mourre::verifier::plot_csv(samples));
    if (!report.certified) {
        json err;
        err["error"] = "certification";
        err["message"] = report.failure.empty() ? "band not certified" : report.failure;
        std::cerr << err.dump() << '\n';
        return 4;
    }
    return 0;
}

int cmd_converge(int kappa, int n_max, const std::string& format, const std::string& out) {
    const auto study = mourre::verifier::convergence_study(kappa, n_max);
    emit(out, format == "csv" ? mourre::verifier::convergence_csv(study)
                              : mourre::verifier::convergence_to_json_string(study));
    return 0;
}

int error_out(const char* kind, const std::string& message, int code) {
    json err;
    err["error"] = kind;
    err["message"] = message;
    std::cerr << err.dump() << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold energies and Mourre-positivity certificates for the "
                 "discrete Schrödinger operator"};
    app.require_subcommand(1);

    int kappa = 2, dim = 2, n_max = 6, well = 1, band_index = 0, budget = 64;
    int e_samples = 256, x_samples = 512, y_samples = 64;
    std::string variant = "j2", format = "json", out, band, left_spec, right_spec;
    std::string rho_text, sigma_text, report_out, plot_out;
    std::optional<double> energy;
    bool search = false;

    auto* th = app.add_subcommand("thresholds", "Solve a threshold family");
    th->add_option("--kappa", kappa, "Chebyshev order")->default_val(2);
    th->add_option("--variant", variant, "j2 | f | g | well-dec | well-inc")->default_val("j2");
    th->add_option("--n-max", n_max, "Deepest chain to solve")->default_val(6);
    th->add_option("--well", well, "Well index for well-dec / well-inc")->default_val(1);
    th->add_option("--format", format, "csv | json")->default_val("json");
    th->add_option("--out", out, "Output file (stdout when absent)");

    auto* cat = app.add_subcommand("catalog", "Enumerate known threshold energies");
    cat->add_option("--kappa", kappa)->default_val(2);
    cat->add_option("--dim", dim, "2 | 3")->default_val(2);
    cat->add_option("--n-max", n_max, "Chain depth cap for the families")->default_val(6);
    cat->add_option("--format", format, "csv | json")->default_val("json");
    cat->add_option("--out", out, "Output file (stdout when absent)");

    auto* ip = app.add_subcommand("interpolate", "Solve band coefficients");
    ip->add_option("--kappa", kappa)->default_val(2);
    ip->add_option("--band", band_index, "Band index n (edges = depth n and n-1 thresholds)");
    ip->add_option("--band-left", left_spec, "Left edge, e.g. j2:n=2 or zeroth");
    ip->add_option("--band-right", right_spec, "Right edge reference");
    ip->add_option("--sigma", sigma_text, "Comma list of multipliers j (default 1..2n)");
    ip->add_flag("--search", search, "Search the default candidate pool for a valid sigma");
    ip->add_option("--budget", budget, "Candidate cap for --search")->default_val(64);
    ip->add_option("--format", format, "csv | json")->default_val("json");
    ip->add_option("--out", out, "Output file (stdout when absent)");

    auto* vf = app.add_subcommand("verify", "Scan or certify positivity of a combination");
    vf->add_option("--kappa", kappa)->default_val(2);
    vf->add_option("--dim", dim, "2 | 3")->default_val(2);
    vf->add_option("--band", band, "Energy band <lo>:<hi>");
    vf->add_option("--band-left", left_spec, "Left edge reference, e.g. j2:n=2");
    vf->add_option("--band-right", right_spec, "Right edge reference");
    vf->add_option("--energy", energy, "Single energy to scan instead of a band");
    vf->add_option("--rho", rho_text, "Comma list of coefficients")->required();
    vf->add_option("--sigma", sigma_text, "Comma list of multipliers (default 1..len(rho))");
    vf->add_option("--e-samples", e_samples, "Interior energies per band")->default_val(256);
    vf->add_option("--x-samples", x_samples, "Samples per slice")->default_val(512);
    vf->add_option("--y-samples", y_samples, "Slices per energy (dim 3)")->default_val(64);
    vf->add_option("--report-out", report_out, "Report JSON file (stdout when absent)");
    vf->add_option("--plot-out", plot_out, "Long-format CSV of every evaluated sample");

    auto* cv = app.add_subcommand("converge", "Threshold gap decay study");
    cv->add_option("--kappa", kappa)->default_val(3);
    cv->add_option("--n-max", n_max, "Largest study index (chain depth 2n)")->default_val(100);
    cv->add_option("--format", format, "csv | json")->default_val("json");
    cv->add_option("--out", out, "Output file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return error_out("config", e.what(), 2);
    }

    try {
        if (th->parsed()) return cmd_thresholds(kappa, variant, n_max, well, format, out);
        if (cat->parsed()) return cmd_catalog(kappa, dim, n_max, format, out);
        if (ip->parsed())
            return cmd_interpolate(kappa, band_index, left_spec, right_spec, sigma_text, search,
                                   budget, format, out);
        if (vf->parsed())
            return cmd_verify(kappa, dim, band, left_spec, right_spec, energy, rho_text,
                              sigma_text, e_samples, x_samples, y_samples, report_out, plot_out);
        if (cv->parsed()) return cmd_converge(kappa, n_max, format, out);
    } catch (const mourre::domain_error& e) {
        return error_out("config", e.what(), 2);
    } catch (const mourre::certification_error& e) {
        return error_out("certification", e.what(), 4);
    } catch (const mourre::error& e) {
        return error_out("solver", e.what(), 3);
    } catch (const std::exception& e) {
        return error_out("internal", e.what(), 1);
    }
    return 0;
}
