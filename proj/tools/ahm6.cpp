// Command line front end: classification, isotropy analysis, the identity
// verification suites and the three worked models, with deterministic text
// or JSON output.
//
// Exit codes: 0 all requested checks pass, 1 a verification check failed,
// 2 usage or parse errors.

#include <CLI11.hpp>
#include <iostream>

#include "ahm6/clifford.hpp"
#include "ahm6/parse.hpp"
#include "ahm6/reports.hpp"

using namespace ahm6;

namespace {

int cmd_classify(const std::string& form_text, const std::string& w4_text, int dim, bool as_json) {
    KForm t = parse_form(form_text, dim);
    if (!t.is_zero() && t.grade() != 3) throw std::invalid_argument("classify: --form must be a 3-form");
    IntrinsicTorsion gamma = theta(t);
    if (!w4_text.empty()) {
        KForm x = parse_form(w4_text, dim);
        if (!x.is_zero() && x.grade() != 1) throw std::invalid_argument("classify: --torsion-w4 must be a vector");
        gamma += theta(wedge(x, kaehler_form(dim)));
    }
    ClassifyReport rep = classify_report(gamma);
    if (as_json) {
        std::cout << classify_report_json(rep);
        return 0;
    }
    std::cout << "class:      " << rep.cls.str() << "\n";
    std::cout << "T2:         " << rep.split.t2.str() << "\n";
    std::cout << "X:          " << rep.split.x.str() << "\n";
    std::cout << "T12:        " << rep.split.t12.str() << "\n";
    std::cout << "W2 part:    " << (rep.split.w2.is_zero() ? "0" : "nonzero") << "\n";
    std::cout << "dOmega:     " << rep.d_omega.str() << "\n";
    std::cout << "deltaOmega: " << rep.delta_omega.str() << "\n";
    std::cout << "Tc:         " << (rep.tc ? rep.tc->str() : std::string("no characteristic connection")) << "\n";
    return 0;
}

int cmd_isotropy(const std::string& form_text, const std::string& ambient_name, bool as_json) {
    KForm t = parse_form(form_text, 6);
    if (!t.is_zero() && t.grade() != 3) throw std::invalid_argument("isotropy: --form must be a 3-form");
    Ambient ambient = ambient_name == "so6" ? Ambient::so6 : Ambient::u3;
    IsotropyResult res = isotropy_algebra(t, ambient);
    if (as_json) {
        std::cout << isotropy_report_json(res);
        return 0;
    }
    std::cout << "dim:       " << res.dim << "\n";
    std::cout << "orbit_tag: " << orbit_tag_str(res.tag) << "\n";
    for (const auto& g : res.generators) std::cout << "generator: " << g.str() << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, bool as_json) {
    SuiteResult result = run_verify_suite(suite);
    if (as_json) {
        std::cout << verify_report_json(result);
    } else {
        for (const auto& c : result.checks) {
            std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.pass && !c.detail.empty()) std::cout << " -- " << c.detail;
            std::cout << "\n";
        }
        std::cout << "suite '" << result.suite << "': "
                  << (result.all_pass() ? "all checks passed" : "FAILURES") << " ("
                  << result.checks.size() << " checks, " << result.elapsed_ms << " ms)\n";
    }
    return result.all_pass() ? 0 : 1;
}

int cmd_example(const std::string& name, const std::string& r1, const std::string& r2, bool as_json) {
    std::string out;
    if (name == "heisenberg") {
        out = heisenberg_report_json();
    } else if (name == "sl2c") {
        out = sl2c_report_json();
    } else if (name == "w3-family") {
        W3FamilyParams params{rat_parse(r1), rat_parse(r2)};
        out = w3_family_report_json(params);
    } else {
        throw std::invalid_argument("unknown example: " + name);
    }
    (void)as_json; // example reports are JSON-only
    std::cout << out;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact almost-hermitian structure calculator on R^6"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* classify = app.add_subcommand("classify", "Gray-Hervella classification of a torsion 3-form");
    std::string form_text, w4_text;
    int dim = 6;
    classify->add_option("--form", form_text, "3-form expression, e.g. 'e123 - e356'")->required();
    classify->add_option("--torsion-w4", w4_text, "extra W4 component given by a vector expression");
    classify->add_option("--dim", dim, "dimension (4 or 6)")->check(CLI::IsMember({4, 6}));

    auto* isotropy = app.add_subcommand("isotropy", "stabilizer of a 3-form");
    std::string iso_form, ambient = "u3";
    isotropy->add_option("--form", iso_form, "3-form expression")->required();
    isotropy->add_option("--ambient", ambient, "ambient algebra")->check(CLI::IsMember({"u3", "so6"}));

    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    std::string suite = "all";
    verify->add_option("--suite", suite, "algebra|decomposition|clifford|isotropy|models|all")
        ->check(CLI::IsMember({"algebra", "decomposition", "clifford", "isotropy", "models", "all"}));

    auto* example = app.add_subcommand("example", "worked homogeneous models");
    std::string example_name, r1 = "0", r2 = "0";
    example->add_option("name", example_name, "heisenberg|sl2c|w3-family")
        ->required()
        ->check(CLI::IsMember({"heisenberg", "sl2c", "w3-family"}));
    example->add_option("--r1", r1, "curvature parameter R^1_12 (rational p/q)");
    example->add_option("--r2", r2, "curvature parameter R^2_34 (rational p/q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(form_text, w4_text, dim, as_json);
        if (isotropy->parsed()) return cmd_isotropy(iso_form, ambient, as_json);
        if (verify->parsed()) return cmd_verify(suite, as_json);
        if (example->parsed()) return cmd_example(example_name, r1, r2, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
