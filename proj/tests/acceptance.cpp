#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "nearcentral/verify.hpp"

using namespace nearcentral;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::function<SuiteReport()> run;
};

}  // namespace

int main() {
    constexpr int jobs = 4;
    const std::vector<Criterion> criteria{
        {1, "generalized characters agree across methods, n <= 6", [] { return verify_genchar(6); }},
        {2, "orthogonal idempotents resolve the identity, n <= 5", [] { return verify_idempotents(5); }},
        {3, "connection coefficients match brute force, n <= 6",
         [] { return verify_connection(6, {}, jobs); }},
        {4, "dipole counts match brute force, n = 4..8", [] { return verify_dipoles(4, 8, 8, jobs); }},
        {5, "D_{n,p} = D_{n,n+1-p} for n <= 40 with a face-type witness",
         [] { return verify_symmetry(40, 7); }},
        {6, "decompositions of the full cycle match brute force, n <= 7",
         [] { return verify_decompositions(7, 7); }},
        {7, "JM product, content identities, binomial identity, branch boundaries",
         [] { return verify_identities(IdentityRanges{}); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const SuiteReport report = c.run();
        all = all && report.passed();
        std::cout << "Criterion " << c.number << ": " << (report.passed() ? "PASS" : "FAIL") << " - " << c.title
                  << " (" << report.checks << " checks, " << report.failures.size() << " failures)\n";
        for (const auto& f : report.failures) {
            std::cout << "    " << f << '\n';
        }
    }
    return all ? 0 : 1;
}
