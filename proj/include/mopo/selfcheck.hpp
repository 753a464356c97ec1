#ifndef MOPO_SELFCHECK_HPP
#define MOPO_SELFCHECK_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mopo {

struct CheckFamily {
    std::string name;
    bool pass = false;
    std::string detail;  // measured worst case, or the first failing input
};

struct SelfCheckReport {
    std::vector<CheckFamily> families;
    bool all_pass = false;
};

// Runs the fixed-seed invariant suites:
//   coefficient-unitarity   residuals < 1e-10, 1000 samples, both models
//   spectrum-reciprocity    squeeze * antisqueeze = 1 to 1e-12, 1e4 samples
//   phase-optimality        general >= optimized, equality at the optimum
//   model-consistency       exact vs linearized spectra within 1% to 5 omega_gvs
//   qpm-roundtrip           period -> signal-wavelength solve, < 1e-4 relative
// inject_fault corrupts one coefficient inside the unitarity harness (sign
// of V_s) to prove the suite can fail; the library itself is untouched.
SelfCheckReport run_selfcheck(bool inject_fault = false);

void print_text(const SelfCheckReport& report, std::ostream& out);
std::string to_json(const SelfCheckReport& report);

} // namespace mopo

#endif
