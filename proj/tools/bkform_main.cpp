// Command line front end: parse form specifications, run the decomposition /
// volume / classification machinery, emit machine- or human-readable reports.
//
// Exit codes: 0 success (classify: equivalent / isomorphic), 1 classify
// negative, 2 classify unknown / path-degenerate, 3 domain or validation
// error, 4 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bkforms/commands.hpp"
#include "bkforms/errors.hpp"
#include "bkforms/form_spec.hpp"
#include "bkforms/random_forms.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw bkforms::ValidationError("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit(const bkforms::Json& report, const std::string& format) {
    if (format == "text") {
        std::cout << bkforms::render_text(report);
    } else {
        std::cout << bkforms::canonical_dump(report);
    }
}

bkforms::CollarSeries density_from_option(const std::string& json_text, int order) {
    if (json_text.empty()) {
        return bkforms::CollarSeries(order, {bkforms::CircleFunction(1.0)});
    }
    return bkforms::collar_series_from_json(bkforms::parse_json(json_text), "density option")
        .resized(order);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laurent normal forms, volume polynomials and classification of "
                 "symplectic structures with order-k circle poles"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string spec_path;
    std::string spec_path_b;
    std::vector<double> eps_grid;
    double tol = 1e-8;
    int order = 16;

    auto* decompose = app.add_subcommand("decompose", "Laurent normal form and residue integrals");
    decompose->add_option("spec", spec_path, "form spec path or -")->required();

    auto* volume = app.add_subcommand("volume", "volume polynomial, Liouville volume, gap table");
    volume->add_option("spec", spec_path, "form spec path or -")->required();
    volume->add_option("--eps-grid", eps_grid, "cutoff radii for the gap table");

    auto* classify = app.add_subcommand("classify", "decide equivalence of two structures");
    classify->add_option("spec0", spec_path, "first form spec")->required();
    classify->add_option("spec1", spec_path_b, "second form spec")->required();
    std::string mode = "symplecto";
    classify->add_option("--mode", mode, "symplecto or poisson")
        ->check(CLI::IsMember({"symplecto", "poisson"}));
    classify->add_option("--tol", tol, "invariant comparison tolerance");

    auto* normalize = app.add_subcommand("normalize", "normalization polynomial for residues");
    std::vector<double> residues;
    normalize->add_option("--residues", residues, "a_{-1} ... a_{-k}, a_{-k} > 0")->required();
    normalize->add_option("--order", order, "series truncation order");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");

    auto* fixture = app.add_subcommand("fixture", "emit a bundled model as a form spec");
    std::string model = "torus2";
    int fixture_k = 2;
    double fixture_R = 1.0;
    int fixture_order = 16;
    double fixture_bulk = 0.0;
    std::string density0_json, density1_json;
    fixture->add_option("--model", model, "model name")->check(CLI::IsMember({"torus2"}));
    fixture->add_option("--k", fixture_k, "pole order");
    fixture->add_option("--R", fixture_R, "collar half-width");
    fixture->add_option("--order", fixture_order, "density truncation order");
    fixture->add_option("--bulk", fixture_bulk, "bulk integral");
    fixture->add_option("--density0", density0_json, "density JSON for circle Z1 (default 1)");
    fixture->add_option("--density1", density1_json, "density JSON for circle Z2 (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 4;
    }

    try {
        if (decompose->parsed()) {
            emit(bkforms::cmd_decompose(bkforms::parse_form_spec(read_input(spec_path))), format);
            return 0;
        }
        if (volume->parsed()) {
            const auto form = bkforms::parse_form_spec(read_input(spec_path));
            const auto& grid = eps_grid.empty() ? bkforms::default_eps_grid() : eps_grid;
            emit(bkforms::cmd_volume(form, grid), format);
            return 0;
        }
        if (classify->parsed()) {
            const auto f0 = bkforms::parse_form_spec(read_input(spec_path));
            const auto f1 = bkforms::parse_form_spec(read_input(spec_path_b));
            const auto outcome = bkforms::cmd_classify(f0, f1, mode, tol);
            emit(outcome.report, format);
            return outcome.exit_code;
        }
        if (normalize->parsed()) {
            emit(bkforms::cmd_normalize(residues, order), format);
            return 0;
        }
        if (selftest->parsed()) {
            return bkforms::selftest(std::cout) ? 0 : 3;
        }
        if (fixture->parsed()) {
            const auto form = bkforms::make_torus_two_circles(
                fixture_k, fixture_R, density_from_option(density0_json, fixture_order),
                density_from_option(density1_json, fixture_order), fixture_bulk);
            std::cout << bkforms::canonical_dump(bkforms::form_to_json(form));
            return 0;
        }
    } catch (const bkforms::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    }
    return 4;
}
