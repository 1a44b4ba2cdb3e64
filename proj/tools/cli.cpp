#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "bandprime/corpus.hpp"
#include "bandprime/error.hpp"

namespace bandprime::cli {

namespace {

int status_of(const Error& e) {
    switch (e.kind()) {
        case Error::Kind::inconsistency: return inconsistency;
        case Error::Kind::resource: return resource_cap;
        default: return input_error;
    }
}

Json diagram_json(const OrientedDiagram& od) {
    return {{"crossings", od.diagram.crossing_count()},
            {"components", od.components},
            {"signs", od.signs},
            {"writhe", od.writhe()}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_text(std::ostream& out, const Json& r) {
    const Json& inv = r["invariants"];
    const Json& sp = r["speciality"];
    out << "pd: " << r["input"]["pd"].get<std::string>() << "\n";
    out << "crossings: " << r["diagram"]["crossings"] << "  writhe: " << r["diagram"]["writhe"] << "\n";
    out << "alternating: " << yes_no(sp["is_alternating"].get<bool>())
        << "  special: " << yes_no(sp["is_special"].get<bool>());
    if (!sp["orientable_color"].is_null()) out << "  orientable color: " << sp["orientable_color"].get<std::string>();
    out << "\n";
    out << "signature: " << inv["signature"] << "  determinant: " << inv["determinant"] << "  genus: " << inv["genus"]
        << "\n";
    out << "alexander: " << inv["alexander"]["string"].get<std::string>() << "\n";
    out << "fibered: "
        << (inv["fibered_alternating"].is_null() ? "unknown" : yes_no(inv["fibered_alternating"].get<bool>())) << "\n";
    if (!r["hfk"].is_null()) {
        out << "hfk:";
        for (const auto& e : r["hfk"]["entries"])
            out << " (" << e["alexander"] << "," << e["maslov"].dump() << "):" << e["rank"];
        out << "  delta " << r["hfk"]["delta_grading"].dump() << "\n";
    }
    const Json& cert = r["certificate"];
    if (cert.contains("error")) {
        out << "certificate: withheld (" << cert["error"].get<std::string>() << ")\n";
    } else {
        out << "certificate: " << cert["verdict"].get<std::string>() << " (" << cert["factors"].size()
            << " factor(s))\n";
        int i = 0;
        for (const auto& f : cert["factors"])
            out << "  factor " << ++i << ": flow lattice " << f["flow_lattice"]["gram"].dump() << ", signature "
                << f["signature"] << "\n";
        for (const auto& n : cert["notes"]) out << "  note: " << n.get<std::string>() << "\n";
    }
    out << "minimality: " << r["minimality"]["verdict"].get<std::string>() << "\n";
}

// Compares tabulated values against a report; returns the mismatching field names.
std::vector<std::string> mismatches(const CorpusEntry& e, const Json& r) {
    std::vector<std::string> bad;
    const Json& inv = r["invariants"];
    if (e.sigma && inv["signature"].get<int>() != *e.sigma) bad.push_back("sigma");
    if (e.det && inv["determinant"].get<long long>() != *e.det) bad.push_back("det");
    // The Seifert-algorithm genus is only known to be minimal on alternating diagrams.
    if (e.genus && r["speciality"]["is_alternating"].get<bool>() && inv["genus"].get<int>() != *e.genus)
        bad.push_back("genus");
    if (e.alexander) {
        try {
            if (to_json(LaurentPolynomial::from_compact(*e.alexander))["terms"] != inv["alexander"]["terms"])
                bad.push_back("alexander");
        } catch (const Error&) {
            bad.push_back("alexander");
        }
    }
    return bad;
}

std::string file_stem(std::size_t index, const std::string& name) {
    std::string s;
    for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ? c : '_';
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%04zu_", index);
    return prefix + s + ".json";
}

}  // namespace

AnalyzeResult analyze(const std::string& pd, const AnalyzeOptions& opt) {
    AnalyzeResult res;
    try {
        const Diagram d = parse_pd(pd);
        const OrientedDiagram od = orient(d);
        if (!od.is_knot()) throw PreconditionError("input has " + std::to_string(od.components) + " components");
        Json r{{"schema", kReportSchema},
               {"command", "analyze"},
               {"input", {{"pd", d.to_pd()}, {"hash", hex_hash(diagram_hash(d))}}},
               {"diagram", diagram_json(od)},
               {"speciality", to_json(classify_special(od))}};
        const MinimalityEvidence m = minimality_evidence(od, opt.assert_two_bridge);
        r["invariants"] = to_json(m.invariants);
        r["hfk"] = m.hfk ? to_json(*m.hfk) : Json(nullptr);
        try {
            const CertificateReport c = band_prime_certificate(od, opt.lattice);
            r["certificate"] = to_json(c);
            if (c.verdict == CertificateVerdict::inconsistency) {
                res.status = inconsistency;
                res.error = "certificate inconsistency";
            }
        } catch (const ResourceError& e) {
            r["certificate"] = {{"verdict", nullptr}, {"error", e.what()}};
            res.status = resource_cap;
            res.error = e.what();
        }
        r["minimality"] = to_json(m);
        r["minimality"].erase("invariant_bundle");
        r["minimality"].erase("hfk");
        res.report = std::move(r);
    } catch (const Error& e) {
        res.report = nullptr;
        res.status = status_of(e);
        res.error = e.what();
    }
    return res;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Band-primeness certificates and ribbon concordance evidence for knot diagrams", "bandprime"};
    app.require_subcommand(1);

    bool json = false;
    std::size_t rank_cap = LatticeOptions{}.rank_cap;
    bool two_bridge = false;
    std::string out_dir;

    auto* an = app.add_subcommand("analyze", "Analyze one PD code");
    std::optional<std::string> pd, pd_file;
    an->add_option("--pd", pd, "PD code, e.g. \"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\"");
    an->add_option("--pd-file", pd_file, "File holding a PD code");
    an->add_flag("--json", json, "Emit the JSON report");
    an->add_option("--rank-cap", rank_cap, "Largest lattice rank to decompose");
    an->add_flag("--assert-two-bridge", two_bridge, "Assert that the knot is two-bridge");
    an->add_option("--out", out_dir, "Also write the report to this directory");

    auto* ba = app.add_subcommand("batch", "Analyze every entry of a corpus file");
    std::string corpus_file;
    ba->add_option("corpus", corpus_file, "Corpus file (.csv or .json)")->required();
    ba->add_flag("--json", json, "Emit the summary as JSON");
    ba->add_option("--rank-cap", rank_cap, "Largest lattice rank to decompose");
    ba->add_flag("--assert-two-bridge", two_bridge, "Assert that every entry is two-bridge");
    ba->add_option("--out", out_dir, "Directory for per-entry reports");

    auto* pa = app.add_subcommand("pair", "Ribbon concordance obstructions for lower <= upper");
    std::string lower, upper;
    pa->add_option("--lower", lower, "PD code of the lower knot")->required();
    pa->add_option("--upper", upper, "PD code of the upper knot")->required();
    pa->add_flag("--json", json, "Emit the JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? ok : input_error;
    }

    AnalyzeOptions opt;
    opt.lattice.rank_cap = rank_cap;
    opt.assert_two_bridge = two_bridge;

    try {
        if (*an) {
            if (pd.has_value() == pd_file.has_value()) {
                err << "error: give exactly one of --pd and --pd-file\n";
                return input_error;
            }
            const AnalyzeResult res = analyze(pd ? *pd : read_file(*pd_file), opt);
            if (res.report.is_null()) {
                err << "error: " << res.error << "\n";
                return res.status;
            }
            if (json)
                out << res.report.dump(2) << "\n";
            else
                print_text(out, res.report);
            if (!out_dir.empty()) {
                std::filesystem::create_directories(out_dir);
                write_file(std::filesystem::path(out_dir) / (res.report["input"]["hash"].get<std::string>() + ".json"),
                           res.report);
            }
            if (res.status != ok) err << "error: " << res.error << "\n";
            return res.status;
        }

        if (*ba) {
            const auto entries = load_corpus(corpus_file);
            if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
            std::map<std::string, int> counts{{"band_prime_certified", 0}, {"not_applicable", 0},
                                              {"inconsistency", 0},        {"input_error", 0},
                                              {"resource_cap", 0},         {"expectation_mismatch", 0}};
            Json rows = Json::array();
            for (std::size_t i = 0; i < entries.size(); ++i) {
                const CorpusEntry& e = entries[i];
                const AnalyzeResult res = analyze(e.pd, opt);
                Json row{{"name", e.name}, {"status", "ok"}, {"verdict", nullptr}, {"minimality", nullptr}};
                if (res.report.is_null()) {
                    row["status"] = res.status == inconsistency ? "inconsistency" : "input_error";
                    row["error"] = res.error;
                    ++counts[row["status"].get<std::string>()];
                    if (res.status != inconsistency) err << "warning: " << e.name << ": " << res.error << "\n";
                } else {
                    if (res.status == resource_cap) {
                        row["status"] = "resource_cap";
                        ++counts["resource_cap"];
                        err << "warning: " << e.name << ": " << res.error << "\n";
                    } else {
                        const std::string v = res.report["certificate"]["verdict"].get<std::string>();
                        row["verdict"] = v;
                        ++counts[v];
                    }
                    row["minimality"] = res.report["minimality"]["verdict"];
                    const auto bad = mismatches(e, res.report);
                    if (!bad.empty()) {
                        row["mismatch"] = bad;
                        ++counts["expectation_mismatch"];
                    }
                    if (!out_dir.empty())
                        write_file(std::filesystem::path(out_dir) / file_stem(i, e.name), res.report);
                }
                rows.push_back(std::move(row));
            }
            if (json) {
                Json summary{{"schema", kReportSchema}, {"command", "batch"}, {"entries", rows}, {"counts", Json::object()}};
                for (const auto& [k, v] : counts) summary["counts"][k] = v;
                out << summary.dump(2) << "\n";
            } else {
                for (const auto& row : rows)
                    out << row["name"].get<std::string>() << "\t"
                        << (row["verdict"].is_null() ? row["status"].get<std::string>()
                                                     : row["verdict"].get<std::string>())
                        << "\t" << (row["minimality"].is_null() ? "-" : row["minimality"].get<std::string>())
                        << (row.contains("mismatch") ? "\tmismatch" : "") << "\n";
                out << "entries: " << rows.size();
                for (const auto& [k, v] : counts) out << "  " << k << ": " << v;
                out << "\n";
            }
            if (counts["input_error"] + counts["resource_cap"] > 0)
                err << "warning: " << counts["input_error"] + counts["resource_cap"] << " entr"
                    << (counts["input_error"] + counts["resource_cap"] == 1 ? "y" : "ies") << " failed\n";
            return counts["inconsistency"] + counts["expectation_mismatch"] > 0 ? inconsistency : ok;
        }

        // pair
        const OrientedDiagram lo = orient(parse_pd(lower)), up = orient(parse_pd(upper));
        const KnotProfile pl = profile(lo), pu = profile(up);
        const auto findings = concordance_pair_obstructions(pl, pu, pu.special_alternating);
        if (json) {
            Json f = Json::array();
            for (const auto& x : findings) f.push_back(to_json(x));
            out << Json{{"schema", kReportSchema},
                        {"command", "pair"},
                        {"lower", {{"pd", lo.diagram.to_pd()}, {"invariants", to_json(pl.invariants)}}},
                        {"upper", {{"pd", up.diagram.to_pd()}, {"invariants", to_json(pu.invariants)}}},
                        {"upper_special_alternating", pu.special_alternating},
                        {"findings", f},
                        {"obstructed", !findings.empty()}}
                       .dump(2)
                << "\n";
        } else {
            for (const auto& x : findings) out << x.kind << ": " << x.message << "\n";
            out << (findings.empty() ? "no obstruction found" : "obstructed") << "\n";
        }
        return ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return status_of(e);
    }
}

}  // namespace bandprime::cli
