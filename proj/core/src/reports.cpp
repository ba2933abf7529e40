#include "ahm6/reports.hpp"

#include <json.hpp>

namespace ahm6 {

namespace {

using nlohmann::json;

json form_json(const KForm& f) { return f.str(); }

json class_json(const GHClass& c) {
    json arr = json::array();
    if (c.w1) arr.push_back("W1");
    if (c.w2) arr.push_back("W2");
    if (c.w3) arr.push_back("W3");
    if (c.w4) arr.push_back("W4");
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

ClassifyReport classify_report(const IntrinsicTorsion& gamma) {
    ClassifyReport rep;
    rep.dim = gamma.dim();
    rep.cls = gray_hervella_class(gamma);
    rep.split = w_projection(gamma);
    rep.delta_omega = Rat(-1) * pi_codifferential(gamma);
    if (gamma.dim() == 6) {
        rep.d_omega = pi1_differential(gamma);
    } else {
        rep.d_omega = hodge(rep.delta_omega); // dim 4: d Omega = * delta Omega
    }
    if (rep.split.w2.is_zero()) rep.tc = characteristic_torsion(rep.split);
    return rep;
}

std::string classify_report_json(const ClassifyReport& report) {
    json j;
    j["schema"] = 1;
    j["dim"] = report.dim;
    j["class"] = class_json(report.cls);
    j["T2"] = form_json(report.split.t2);
    j["X"] = form_json(report.split.x);
    j["T12"] = form_json(report.split.t12);
    j["W2_nonzero"] = !report.split.w2.is_zero();
    j["dOmega"] = form_json(report.d_omega);
    j["deltaOmega"] = form_json(report.delta_omega);
    if (report.tc) j["Tc"] = form_json(*report.tc);
    else j["Tc"] = nullptr;
    return dump(j);
}

std::string isotropy_report_json(const IsotropyResult& result) {
    json j;
    j["schema"] = 1;
    j["dim"] = result.dim;
    j["orbit_tag"] = orbit_tag_str(result.tag);
    json gens = json::array();
    for (const auto& g : result.generators) gens.push_back(g.str());
    j["generators"] = gens;
    return dump(j);
}

std::string heisenberg_report_json() {
    HeisenbergReport rep = heisenberg_report();
    json j;
    j["schema"] = 1;
    j["model"] = "heisenberg";
    j["dOmega"] = form_json(rep.d_omega);
    j["Tc"] = form_json(rep.torsion);
    j["dTc"] = form_json(rep.d_torsion);
    j["sigma"] = form_json(rep.sigma);
    j["deltaOmega_zero"] = rep.delta_omega_zero;
    j["class"] = class_json(rep.cls);
    j["pure_W3"] = rep.pure_w3;
    j["parallel"] = rep.parallel;
    return dump(j);
}

std::string sl2c_report_json() {
    Sl2cReport rep = sl2c_model_report();
    json j;
    j["schema"] = 1;
    j["model"] = "sl2c";
    j["Tc"] = form_json(rep.torsion);
    j["jacobi"] = rep.jacobi;
    j["curvature_unique"] = rep.curvature_unique;
    j["curvature_is_4pr_so3"] = rep.curvature_is_4pr;
    j["clifford_scalar"] = rep.clifford_scalar;
    j["torsion_norm2"] = rat_str(rep.torsion_norm2);
    j["ric"] = rep.ric_is_minus4 ? "-4" : "unexpected";
    j["killing_nondegenerate"] = rep.killing_nondegenerate;
    j["spinor_kernel"] = rep.spinor_kernel;
    return dump(j);
}

std::string w3_family_report_json(const W3FamilyParams& params) {
    W3FamilyReport rep = w3_family(params);
    json j;
    j["schema"] = 1;
    j["model"] = "w3-family";
    j["r1"] = rat_str(params.r1);
    j["r2"] = rat_str(params.r2);
    j["jacobi"] = rep.jacobi;
    j["holonomy_dim"] = rep.holonomy_dim;
    j["center"] = json::array({"w1 - w2 + e5", "e6"});
    j["center_matches"] = rep.center_matches;
    j["quotient_matches"] = rep.quotient_matches;
    j["p1_class"] = three_dim_class_str(rep.p1_class);
    j["p2_class"] = three_dim_class_str(rep.p2_class);
    j["p1_p2_commute"] = rep.p1_p2_commute;
    json algebra = json::object();
    for (int i = 0; i < rep.algebra.dim(); ++i)
        for (int k = i + 1; k < rep.algebra.dim(); ++k) {
            const auto& c = rep.algebra.bracket_basis(i, k);
            std::string entry;
            for (int m = 0; m < rep.algebra.dim(); ++m) {
                if (rat_is_zero(c[static_cast<size_t>(m)])) continue;
                if (!entry.empty()) entry += " + ";
                entry += rat_str(c[static_cast<size_t>(m)]) + "*" + rep.algebra.labels()[static_cast<size_t>(m)];
            }
            if (!entry.empty())
                algebra["[" + rep.algebra.labels()[static_cast<size_t>(i)] + "," +
                        rep.algebra.labels()[static_cast<size_t>(k)] + "]"] = entry;
        }
    j["brackets"] = algebra;
    return dump(j);
}

std::string verify_report_json(const SuiteResult& result) {
    json j;
    j["schema"] = 1;
    j["suite"] = result.suite;
    j["elapsed_ms"] = result.elapsed_ms;
    j["pass"] = result.all_pass();
    json checks = json::array();
    for (const auto& c : result.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return dump(j);
}

} // namespace ahm6
