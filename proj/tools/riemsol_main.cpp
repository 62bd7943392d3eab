#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "riemsol/errors.hpp"
#include "riemsol/suites.hpp"

namespace {

struct CommandSpec {
    const char* name;
    riemsol::Suite suite;
    bool takes_name;
    const char* description;
};

constexpr CommandSpec kCommands[] = {
    {"validate", riemsol::Suite::Validate, false,
     "Build the manifold and check the structure axioms"},
    {"connection", riemsol::Suite::Connection, false,
     "Derive the Levi-Civita connection and verify its defining properties"},
    {"curvature", riemsol::Suite::Curvature, false,
     "Curvature tensor, Ricci data and curvature symmetries"},
    {"acm", riemsol::Suite::Acm, false,
     "Structure axioms, normality and the alpha/beta extraction"},
    {"classify", riemsol::Suite::Classify, false,
     "Structure classification (type, Einstein conditions, eta ^ d eta)"},
    {"identities", riemsol::Suite::Identities, false,
     "Full identity suite for normal structures with constant alpha, beta"},
    {"soliton", riemsol::Suite::Soliton, true,
     "Riemann/Ricci soliton residuals for declared instances"},
    {"gradient", riemsol::Suite::Gradient, true,
     "Gradient soliton checks for declared instances"},
    {"theorems", riemsol::Suite::Theorems, true,
     "Instance-level truth tables for the soliton theorems"},
    {"report", riemsol::Suite::All, false, "Everything, in dependency order"},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw riemsol::Error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"riemsol: exact verification of frame-presented 3-manifolds, almost contact "
                 "metric structures and Riemann solitons"};
    app.require_subcommand(1);

    struct Invocation {
        std::string file;
        std::string format = "text";
        bool quiet = false;
        std::string instance;
        riemsol::Suite suite = riemsol::Suite::All;
        bool takes_name = false;
    } inv;

    for (const CommandSpec& spec : kCommands) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        sub->add_option("file", inv.file, "manifest JSON file")->required();
        sub->add_option("--format", inv.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--quiet", inv.quiet, "suppress output; exit code only");
        if (spec.takes_name) {
            sub->add_option("--name", inv.instance, "only check the named instance");
        }
        sub->callback([&inv, &spec]() {
            inv.suite = spec.suite;
            inv.takes_name = spec.takes_name;
        });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        const std::string text = read_file(inv.file);
        const riemsol::Manifest manifest = riemsol::parse_manifest(text);
        riemsol::SuiteOptions opts;
        opts.source = inv.file;
        if (inv.takes_name && !inv.instance.empty()) opts.name_filter = inv.instance;
        const riemsol::ReportDocument doc = riemsol::run_suite(manifest, inv.suite, opts);
        if (!inv.quiet) {
            std::cout << (inv.format == "json" ? riemsol::report_to_json(doc)
                                               : riemsol::report_to_text(doc));
        }
        return doc.passed() ? 0 : 1;
    } catch (const riemsol::Error& err) {
        if (!inv.quiet) std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
}
