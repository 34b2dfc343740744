#ifndef LIECOH_VERIFY_HPP
#define LIECOH_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace liecoh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance battery; one entry per criterion.
std::vector<CheckResult> run_acceptance();

// Prints one line per criterion to the stream; returns 0 iff all pass.
int acceptance_main(std::ostream& os);

} // namespace liecoh

#endif
