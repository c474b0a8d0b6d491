// curvesys: generate, verify, search and tabulate extremal curve systems.
//
// Exit status: 0 = success / all checks pass, 1 = a check or search
// comparison failed, 2 = usage or format error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvesys/bounds.hpp"
#include "curvesys/constructions.hpp"
#include "curvesys/serialize.hpp"
#include "curvesys/torus.hpp"

namespace {

using namespace curvesys;

unsigned env_threads() {
    const char* v = std::getenv("CURVESYS_THREADS");
    if (!v) return 1;
    long t = std::strtol(v, nullptr, 10);
    if (t < 1) return 1;
    if (t > 256) return 256;
    return static_cast<unsigned>(t);
}

// Every check that applies to the system at hand.
VerificationReport run_all_checks(const CurveSystem& sys) {
    VerificationReport rep = verify_k_system(sys);
    if (sys.boundary == 0) {
        rep.merge(verify_homology_consistency(sys));
        if (sys.k == 1) rep.merge(verify_class_budget(sys));
    }
    rep.merge(check_degree_bounds(sys));
    if (sys.k == 1) {
        CheckEntry c{"global-upper-bound"};
        auto table = bounds(sys.genus, sys.boundary, 1);
        c.note = "N = " + std::to_string(sys.size()) + " <= " + table.upper.str();
        if (BigInt(sys.size()) > table.upper) {
            c.passed = false;
            c.witnesses.push_back("N exceeds " + table.upper_formula);
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

nlohmann::ordered_json report_json(const VerificationReport& rep) {
    nlohmann::ordered_json out;
    out["ok"] = rep.ok();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["check"] = c.check;
        jc["passed"] = c.passed;
        if (!c.note.empty()) jc["note"] = c.note;
        if (!c.witnesses.empty()) jc["witnesses"] = c.witnesses;
        if (!c.warnings.empty()) jc["warnings"] = c.warnings;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    return out;
}

void emit_document(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::filesystem::path path(out_path);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << payload;
    }
    std::filesystem::rename(tmp, path);
}

int cmd_generate(const std::string& kind, int genus, int boundary, const std::string& out_path) {
    if (kind == "canonical-vectors") {
        std::string payload;
        for (const auto& v : gf2::canonical_family(genus)) payload += v.to_string() + "\n";
        emit_document(payload, out_path);
        std::cerr << "canonical family g=" << genus << ": " << 2 * genus + 1 << " vectors\n";
        return 0;
    }

    CurveSystem sys;
    if (kind == "polygon")
        sys = polygon_system(genus);
    else if (kind == "boundary")
        sys = boundary_system(genus, boundary);
    else if (kind == "closed-lower")
        sys = closed_lower_system(genus);
    else if (kind == "hyperelliptic")
        sys = hyperelliptic_system(genus);
    else
        throw CLI::ValidationError("unknown kind '" + kind + "'");

    auto rep = run_all_checks(sys);
    if (!rep.ok()) {
        std::cerr << "self-verification failed; nothing written\n" << rep.to_string();
        return 1;
    }

    auto table = bounds(sys.genus, sys.boundary, 1);
    std::ostream& info = out_path.empty() ? std::cerr : std::cout;
    info << "N=" << sys.size() << ", upper bound " << table.upper.str() << "\n";
    info << "bounds: " << table.lower.str() << " <= N(1," << sys.genus;
    if (sys.boundary > 0) info << "," << sys.boundary;
    info << ") <= " << table.upper.str();
    if (table.exact) info << " (exact)";
    info << "\n";
    if (BigInt(sys.size()) >= table.lower) info << ">= " << table.lower.str() << " required: ok\n";

    emit_document(write_system_string(sys), out_path);
    return 0;
}

int cmd_verify(const std::string& in_path, std::optional<unsigned> k_override, bool as_json) {
    CurveSystem sys = read_system(in_path);
    if (k_override) sys.k = *k_override;
    auto rep = run_all_checks(sys);
    if (as_json)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << rep.to_string();
    return rep.ok() ? 0 : 1;
}

int cmd_search_torus(int k, long long bound, bool jmm_cutoff, bool as_json) {
    TorusSearchOptions opts;
    opts.jmm_cutoff = jmm_cutoff;
    opts.threads = env_threads();
    auto res = search_torus(k, bound, opts);
    std::string witness;
    for (const auto& c : res.witness) witness += (witness.empty() ? "" : " ") + c.to_string();
    int status = 0;
    std::string compare;
    if (k == 1) {
        compare = res.size == 3 ? "matches N(1,1) = 3" : "DISAGREES with N(1,1) = 3";
        if (res.size != 3) status = 1;
    } else {
        compare = "<= 2k+3 = " + std::to_string(2 * k + 3) +
                  (res.size <= static_cast<std::size_t>(2 * k + 3) ? ": ok" : ": VIOLATED");
        if (res.size > static_cast<std::size_t>(2 * k + 3)) status = 1;
    }
    if (as_json) {
        nlohmann::ordered_json out;
        out["target"] = "torus";
        out["k"] = k;
        out["bound"] = bound;
        out["max"] = res.size;
        out["witness"] = witness;
        out["comparison"] = compare;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "max " << res.size << " (" << compare << ")\n";
        std::cout << "witness: " << witness << "\n";
    }
    return status;
}

int cmd_search_genus2(bool no_prefilter, bool as_json) {
    auto res = enumerate_max_systems_genus2(!no_prefilter);
    int status = (res.max_edges == 12 && res.classes.size() == 2) ? 0 : 1;
    if (as_json) {
        nlohmann::ordered_json out;
        out["target"] = "genus2";
        out["max_edges"] = res.max_edges;
        out["labeled_count"] = res.labeled_count;
        auto classes = nlohmann::ordered_json::array();
        for (const auto& cls : res.classes) {
            nlohmann::ordered_json jc;
            jc["degree_sequence"] = cls.degree_sequence;
            jc["labeled_count"] = cls.labeled_count;
            jc["automorphisms"] = cls.automorphisms;
            jc["three_connected"] = cls.three_connected;
            classes.push_back(std::move(jc));
        }
        out["classes"] = std::move(classes);
        out["matches_theorem"] = status == 0;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "max edges " << res.max_edges << "; " << res.classes.size()
                  << " isomorphism classes (" << res.labeled_count << " labeled maxima)\n";
        for (const auto& cls : res.classes) {
            std::cout << "  degrees";
            for (int d : cls.degree_sequence) std::cout << " " << d;
            std::cout << "; " << cls.labeled_count << " labelings; |Aut| = " << cls.automorphisms
                      << (cls.three_connected ? "; 3-connected" : "") << "\n";
        }
        std::cout << (status == 0 ? "matches N(1,2) = 12 with two orbits\n"
                                  : "DISAGREES with N(1,2) = 12\n");
    }
    return status;
}

int cmd_search_gf2(int genus, bool certified, bool as_json) {
    gf2::MaxOddFamilyOptions opts;
    opts.use_bound_cutoff = !certified;
    opts.threads = env_threads();
    auto res = gf2::max_odd_family(genus, opts);
    const std::size_t expect = static_cast<std::size_t>(2 * genus + 1);
    int status = res.size == expect ? 0 : 1;
    std::string witness;
    for (const auto& v : res.witness) witness += (witness.empty() ? "" : " ") + v.to_string();
    if (as_json) {
        nlohmann::ordered_json out;
        out["target"] = "gf2";
        out["genus"] = genus;
        out["max"] = res.size;
        out["expected"] = expect;
        out["witness"] = witness;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "max family " << res.size << " (2g+1 = " << expect
                  << (status == 0 ? ": ok" : ": DISAGREES") << ")\n";
        std::cout << "witness: " << witness << "\n";
    }
    return status;
}

int cmd_bounds(int genus, int boundary, bool as_json) {
    auto t = bounds(genus, boundary, 1);
    if (as_json) {
        nlohmann::ordered_json out;
        out["genus"] = genus;
        out["boundary"] = boundary;
        out["lower"] = t.lower.str();
        out["upper"] = t.upper.str();
        out["exact"] = t.exact;
        out["lower_formula"] = t.lower_formula;
        out["upper_formula"] = t.upper_formula;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::string name = "N(1," + std::to_string(genus) +
                       (boundary > 0 ? "," + std::to_string(boundary) : "") + ")";
    if (t.exact)
        std::cout << name << " = " << t.lower.str() << " (exact)\n";
    else
        std::cout << t.lower.str() << " <= " << name << " <= " << t.upper.str() << "\n";
    std::cout << "lower: " << t.lower_formula << "\n";
    std::cout << "upper: " << t.upper_formula << "\n";
    return 0;
}

int cmd_export_dot(const std::string& in_path, const std::string& flavor,
                   const std::string& out_path) {
    CurveSystem sys = read_system(in_path);
    auto fl = flavor == "odd" ? IntersectionGraph::Flavor::Odd : IntersectionGraph::Flavor::All;
    emit_document(to_dot(intersection_graph(sys, fl)), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"extremal systems of curves on surfaces: constructions, verification, search"};
    app.require_subcommand(1);

    std::string kind, in_path, out_path, flavor = "all";
    int genus = 2, boundary = 0, k = 1;
    long long bound = 5;
    bool as_json = false, jmm_cutoff = false, certified = false, no_prefilter = false;
    std::optional<unsigned> k_override;

    auto* gen = app.add_subcommand("generate", "construct a curve system and write it as JSON");
    gen->add_option("kind", kind, "polygon|boundary|closed-lower|hyperelliptic|canonical-vectors")
        ->required()
        ->check(CLI::IsMember(
            {"polygon", "boundary", "closed-lower", "hyperelliptic", "canonical-vectors"}));
    gen->add_option("--genus", genus, "genus g")->required();
    gen->add_option("--boundary", boundary, "boundary components (boundary kind only)");
    gen->add_option("--out", out_path, "output path (stdout when omitted)");

    auto* ver = app.add_subcommand("verify", "run every applicable check on a system file");
    ver->add_option("input", in_path, "system JSON file")->required();
    unsigned k_flag = 0;
    auto* kopt = ver->add_option("--k", k_flag, "re-check against this declared k");
    ver->add_flag("--json", as_json, "machine-readable report");

    auto* sea = app.add_subcommand("search", "exhaustive searches (torus | genus2 | gf2)");
    sea->add_option("target", kind, "torus|genus2|gf2")
        ->required()
        ->check(CLI::IsMember({"torus", "genus2", "gf2"}));
    sea->add_option("--k", k, "intersection bound (torus)");
    sea->add_option("--bound", bound, "height bound for torus enumeration");
    sea->add_option("--genus", genus, "genus (gf2)");
    sea->add_flag("--jmm-cutoff", jmm_cutoff, "prune the torus search with the 2k+3 bound");
    sea->add_flag("--certified", certified, "gf2: exhaust without the 2g+1 cutoff");
    sea->add_flag("--no-euler-prefilter", no_prefilter, "genus2: test 13..15-edge subsets too");
    sea->add_flag("--json", as_json, "machine-readable report");

    auto* bnd = app.add_subcommand("bounds", "print the N(1,g,n) bound table row");
    bnd->add_option("--genus", genus, "genus g")->required();
    bnd->add_option("--boundary", boundary, "boundary components");
    bnd->add_flag("--json", as_json, "machine-readable output");

    auto* dot = app.add_subcommand("export-dot", "write an intersection graph in DOT format");
    dot->add_option("input", in_path, "system JSON file")->required();
    dot->add_option("--flavor", flavor, "all|odd")->check(CLI::IsMember({"all", "odd"}));
    dot->add_option("--out", out_path, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(kind, genus, boundary, out_path);
        if (ver->parsed()) {
            if (kopt->count() > 0) k_override = k_flag;
            return cmd_verify(in_path, k_override, as_json);
        }
        if (sea->parsed()) {
            if (kind == "torus") return cmd_search_torus(k, bound, jmm_cutoff, as_json);
            if (kind == "genus2") return cmd_search_genus2(no_prefilter, as_json);
            return cmd_search_gf2(genus, certified, as_json);
        }
        if (bnd->parsed()) return cmd_bounds(genus, boundary, as_json);
        if (dot->parsed()) return cmd_export_dot(in_path, flavor, out_path);
    } catch (const curvesys::FormatError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
