// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff all pass.

#include <mindeg/paper_check.hpp>

#include <cstdio>

int main() {
    const std::vector<mindeg::CriterionResult> results = mindeg::run_paper_check();
    bool all = true;
    for (const mindeg::CriterionResult& r : results) {
        std::printf("%s  criterion %s  %-45s (%.2fs)  %s\n", r.pass ? "PASS" : "FAIL",
                    r.id.c_str(), r.name.c_str(), r.seconds, r.actual.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all ? 0 : 1;
}
