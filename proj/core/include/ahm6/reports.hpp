#pragma once

#include <optional>
#include <string>

#include "ahm6/homogeneous.hpp"
#include "ahm6/isotropy.hpp"
#include "ahm6/unitary.hpp"
#include "ahm6/verify.hpp"

namespace ahm6 {

// Machine-readable reports. All JSON is schema-versioned ("schema": 1) and
// deterministic: object keys are emitted sorted and rationals are printed
// as exact "p/q" strings.

struct ClassifyReport {
    int dim = 6;
    GHClass cls;
    TorsionSplit split;
    KForm d_omega;
    KForm delta_omega;
    std::optional<KForm> tc; // absent when the W2 part is nonzero
};

ClassifyReport classify_report(const IntrinsicTorsion& gamma);

std::string classify_report_json(const ClassifyReport& report);
std::string isotropy_report_json(const IsotropyResult& result);
std::string heisenberg_report_json();
std::string sl2c_report_json();
std::string w3_family_report_json(const W3FamilyParams& params);
std::string verify_report_json(const SuiteResult& result);

} // namespace ahm6
