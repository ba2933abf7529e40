// Acceptance suite: runs every release criterion exactly (tolerance zero
// throughout) and prints one pass/fail line per criterion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "ahm6/reports.hpp"
#include "ahm6/verify.hpp"

using namespace ahm6;

namespace {

struct Criterion {
    std::string description;
    std::vector<std::string> checks; // named checks from the verify registry
};

bool run_criterion(int number, const Criterion& c, bool extra_ok, const std::string& extra_detail) {
    bool pass = extra_ok;
    std::string detail = extra_detail;
    for (const auto& name : c.checks) {
        CheckResult r = run_check(name);
        if (!r.pass) {
            pass = false;
            if (detail.empty()) detail = name + (r.detail.empty() ? "" : (": " + r.detail));
        }
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << c.description;
    if (!pass && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    return pass;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) return "<missing golden file>";
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    bool all = true;

    all &= run_criterion(1,
                         {"decomposition: projector ranks 2/6/12, reference bases, tau action and spectrum",
                          {"projector ranks 2/6/12", "reference basis membership",
                           "tau = 3*, *, -* and tau^2 spectrum"}},
                         true, "");

    all &= run_criterion(2,
                         {"morphism eigenvalues: Phi.Theta, Pi, Pi1 on full bases (dims 4 and 6)",
                          {"Phi.Theta = 3 Id on Lambda^3_2 and Id elsewhere",
                           "Pi(Theta(X ^ Omega)) = 4X and W4 dependence",
                           "Pi1.Theta factors -6/-2/+2"}},
                         true, "");

    all &= run_criterion(3, {"character suite: chi values and J traces", {"character suite"}}, true, "");

    all &= run_criterion(4, {"W2 suite: dim 16, Psi_T image, rank 16", {"W2 = Ker(Phi) and Psi_T"}},
                         true, "");

    all &= run_criterion(5,
                         {"characteristic torsion: both expressions, coclosedness, hermitian and NK forms",
                          {"characteristic torsion formulas"}},
                         true, "");

    {
        std::string golden = slurp(std::string(AHM6_GOLDEN_DIR) + "/heisenberg.json");
        std::string produced = heisenberg_report_json();
        bool bytes_equal = (golden == produced);
        all &= run_criterion(6, {"Heisenberg golden test (byte-exact report)",
                                 {"Heisenberg golden identities"}},
                             bytes_equal, bytes_equal ? "" : "report bytes differ from golden file");
    }

    all &= run_criterion(7,
                         {"isotropy suite: tabulated matrix, kernels, bounds, representatives",
                          {"tabulated 12x9 matrix entries", "kernel(A_T) = direct rho kernel",
                           "rank >= 3, dim <= 6, Omega excluded", "orbit representatives"}},
                         true, "");

    all &= run_criterion(8,
                         {"circle criterion: exhaustive |k| <= 5 sextic and case reports",
                          {"circle criterion (exhaustive |k| <= 5)", "one-parameter case reports",
                           "scalar-completion constraints (cases 1.3, 1.4)"}},
                         true, "");

    all &= run_criterion(9,
                         {"clifford suite: fixture relations, non-scalar squares, diagnostics, SO(3) identity",
                          {"gamma fixture anticommutation relations",
                           "Lemma: Lambda^3_12 squares are never scalar", "diagonal diagnostics",
                           "SO(3) model scalar identity"}},
                         true, "");

    all &= run_criterion(10,
                         {"homogeneous models: SL(2,C) data and the W3 family grid",
                          {"SL(2,C) model report", "W3 family over the grid"}},
                         true, "");

    all &= run_criterion(11, {"U(2)-case identities", {"U(2)-case identities"}}, true, "");

    all &= run_criterion(12,
                         {"property fallback: coupling, NK identities, link relations",
                          {"sigma and coupling forms", "NK algebraic identities",
                           "link relations checker"}},
                         true, "");

    auto end = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (" << ms << " ms)" << std::endl;
    return all ? 0 : 1;
}
