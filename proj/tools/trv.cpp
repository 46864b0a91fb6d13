// Command-line front end: catalog/file ingestion, the verification suites,
// and JSON-lines / CSV report emission.
//
// Exit codes: 0 all checks pass, 1 bad input or cap exceeded, 2 a property
// check failed, 3 I/O trouble.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trv/json_io.hpp"
#include "trv/suites.hpp"
#include "trv/trv.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInput = 1;
constexpr int kExitPropertyViolation = 2;
constexpr int kExitIo = 3;

struct OutputOptions {
    std::string path;  // empty = stdout
    std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--out", out.path, "write the report to a file instead of stdout");
    cmd->add_option("--format", out.format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
}

int emit(const trv::ReportSink& sink, const OutputOptions& out) {
    std::ostringstream body;
    if (out.format == "csv") {
        sink.write_csv(body);
    } else {
        sink.write_json(body);
    }
    if (out.path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out.path);
        if (!f) throw trv::IoError("cannot write " + out.path);
        f << body.str();
    }
    return sink.all_pass() ? kExitPass : kExitPropertyViolation;
}

trv::FiniteGroup resolve_group(const std::string& spec) {
    const auto from_catalog = trv::find_catalog_group(spec);
    if (from_catalog) {
        if (std::filesystem::exists(spec)) {
            std::cerr << "warning: '" << spec
                      << "' names both a catalog group and a file; using the catalog\n";
        }
        return *from_catalog;
    }
    return trv::load_group(spec);
}

// Subgroup spec: comma-separated generators, each an element label or index,
// optionally wrapped in braces. "{e,(12)}" and "0,2" both work.
trv::Subgroup parse_subgroup(const trv::FiniteGroup& G, std::string spec) {
    std::erase_if(spec, [](char c) { return c == '{' || c == '}' || c == ' '; });
    std::vector<int> gens;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string token = spec.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!token.empty()) {
            if (const auto byLabel = G.element_by_label(token)) {
                gens.push_back(*byLabel);
            } else {
                try {
                    const int index = std::stoi(token);
                    if (index < 0 || index >= G.order()) throw std::out_of_range("index");
                    gens.push_back(index);
                } catch (const std::exception&) {
                    throw trv::ValidationError("unknown group element '" + token + "'");
                }
            }
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return trv::generated_subgroup(G, gens);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transversal, quasigroup and division-sphere toolkit"};
    app.require_subcommand(1);

    // ---- transversals ------------------------------------------------------
    std::string tr_group;
    std::string tr_subgroup_spec;
    std::string tr_subgroup_file;
    bool tr_all_subgroups = false;
    trv::TransversalSuiteConfig tr_cfg;
    OutputOptions tr_out;
    CLI::App* tr = app.add_subcommand(
        "transversals", "enumerate right transversals and their induced quasigroups");
    tr->add_option("group", tr_group, "catalog name (e.g. S3) or group JSON file")->required();
    tr->add_option("--subgroup", tr_subgroup_spec,
                   "subgroup generators, e.g. \"{e,(12)}\" or \"0,2\"");
    tr->add_option("--subgroup-file", tr_subgroup_file, "subgroup JSON file {\"members\":[...]}");
    tr->add_flag("--all-subgroups", tr_all_subgroups,
                 "sweep every subgroup (default when no subgroup is given)");
    tr->add_flag("--generating-only", tr_cfg.generating_only,
                 "keep only transversals whose reps generate the group");
    tr->add_option("--limit", tr_cfg.limit, "max transversals per subgroup (sampled beyond)");
    tr->add_option("--seed", tr_cfg.seed, "sampling seed");
    tr->add_option("--cap-enum", tr_cfg.enum_cap, "hard cap on the enumeration size");
    add_output_flags(tr, tr_out);

    // ---- extension ---------------------------------------------------------
    std::string ext_file;
    trv::ExtensionSuiteConfig ext_cfg;
    std::string ext_emit_torsion, ext_emit_universal;
    OutputOptions ext_out;
    CLI::App* ext = app.add_subcommand(
        "extension", "build the torsion and universal extension groups of a quasigroup");
    ext->add_option("quasigroup", ext_file, "quasigroup JSON file")->required();
    ext->add_option("--seed", ext_cfg.seed, "seed for sampled associativity scans");
    ext->add_option("--samples", ext_cfg.sampled_triples,
                    "sampled triples when the order exceeds the exhaustive limit");
    ext->add_option("--cap-closure", ext_cfg.closure_cap, "torsion closure cap");
    ext->add_option("--cap-table", ext_cfg.table_cap, "Cayley table materialization cap");
    ext->add_option("--emit-group", ext_emit_torsion,
                    "write the torsion extension as a group JSON file");
    ext->add_option("--emit-universal", ext_emit_universal,
                    "write the universal extension as a group JSON file");
    add_output_flags(ext, ext_out);

    // ---- sphere ------------------------------------------------------------
    trv::SphereSuiteConfig sp_cfg;
    std::optional<double> sp_tol;
    OutputOptions sp_out;
    CLI::App* sp = app.add_subcommand("sphere", "run the reflection sphere quasigroup suite");
    sp->add_option("--dim", sp_cfg.dim, "ambient dimension (sphere S^{dim-1})")->required();
    sp->add_option("--samples", sp_cfg.samples, "sample count");
    sp->add_option("--seed", sp_cfg.seed, "sampling seed");
    sp->add_option("--tol", sp_tol, "override every residual tolerance");
    add_output_flags(sp, sp_out);

    // ---- cayley ------------------------------------------------------------
    trv::CayleySuiteConfig cay_cfg;
    std::optional<double> cay_tol;
    OutputOptions cay_out;
    CLI::App* cay = app.add_subcommand(
        "cayley", "run the division sphere suite (real/complex/quaternion/octonion)");
    cay->add_option("--dim", cay_cfg.dim, "algebra dimension: 1, 2, 4 or 8")->required();
    cay->add_option("--samples", cay_cfg.samples, "sample count");
    cay->add_option("--seed", cay_cfg.seed, "sampling seed");
    cay->add_option("--tol", cay_tol, "override the residual tolerance");
    add_output_flags(cay, cay_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (tr->parsed()) {
            const trv::FiniteGroup G = resolve_group(tr_group);
            std::vector<trv::Subgroup> subgroups;
            if (!tr_subgroup_spec.empty()) {
                subgroups.push_back(parse_subgroup(G, tr_subgroup_spec));
            } else if (!tr_subgroup_file.empty()) {
                subgroups.push_back(
                    trv::subgroup_from_json(G, trv::detail::read_file(tr_subgroup_file)));
            } else {
                subgroups = trv::all_subgroups(G);
            }
            return emit(trv::run_transversal_suite(G, tr_group, subgroups, tr_cfg), tr_out);
        }
        if (ext->parsed()) {
            const trv::RightQuasigroup q = trv::load_quasigroup(ext_file);
            std::optional<trv::FiniteGroup> torsion_grp, universal_grp;
            const trv::ReportSink sink = trv::run_extension_suite(
                q, ext_cfg, ext_emit_torsion.empty() ? nullptr : &torsion_grp,
                ext_emit_universal.empty() ? nullptr : &universal_grp);
            if (torsion_grp) trv::save_group(ext_emit_torsion, *torsion_grp);
            if (universal_grp) trv::save_group(ext_emit_universal, *universal_grp);
            return emit(sink, ext_out);
        }
        if (sp->parsed()) {
            if (sp_tol) {
                sp_cfg.tol_unit = sp_cfg.tol_identity = sp_cfg.tol_chi = sp_cfg.tol_section =
                    sp_cfg.tol_coset = *sp_tol;
            }
            return emit(trv::run_sphere_suite(sp_cfg), sp_out);
        }
        if (cay->parsed()) {
            if (cay_tol) cay_cfg.tol = *cay_tol;
            return emit(trv::run_cayley_suite(cay_cfg), cay_out);
        }
    } catch (const trv::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const trv::CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const trv::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
