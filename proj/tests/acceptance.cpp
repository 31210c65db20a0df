// Acceptance gate: runs every release criterion and prints one verdict line
// per criterion. Criteria 1-9 are computed in-process from the library's own
// check table; criterion 10 runs the bundled command-line tool twice and
// demands byte-identical output. The process exits nonzero when any
// criterion fails.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symds/reproduce.hpp"

namespace {

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run_command(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        r.exit_code = -1;
        return r;
    }
    char buf[4096];
    size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status))
        r.exit_code = WEXITSTATUS(status);
    else
        r.exit_code = -1;
    return r;
}

void print_verdict(int number, const std::string& label, bool pass) {
    std::cout << "criterion " << number << " (" << label << "): " << (pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];

    const std::map<std::string, std::pair<int, std::string>> plan = {
        {"gate-counts", {1, "counting"}},
        {"gate-dimensions", {2, "dimensions"}},
        {"gate-vertex-sets", {3, "vertex sets"}},
        {"gate-named-matrices", {4, "named matrices"}},
        {"gate-term-rank", {5, "term rank"}},
        {"gate-decompositions", {6, "decompositions"}},
        {"gate-oracle-agreement", {7, "oracle agreement"}},
        {"gate-bases", {8, "bases"}},
        {"gate-entry-values", {9, "entry values"}},
    };

    int failures = 0;
    const std::vector<symds::CheckResult> gates = symds::criteria_checks();
    int seen = 0;
    for (const auto& g : gates) {
        const auto it = plan.find(g.id);
        if (it == plan.end()) {
            std::cerr << "unknown gate id: " << g.id << "\n";
            return 2;
        }
        ++seen;
        print_verdict(it->second.first, it->second.second, g.pass);
        if (!g.pass) {
            std::cout << "    expected: " << g.expected << "\n";
            std::cout << "    got:      " << g.got << "\n";
            ++failures;
        }
    }
    if (seen != static_cast<int>(plan.size())) {
        std::cerr << "expected " << plan.size() << " gates, saw " << seen << "\n";
        return 2;
    }

    const std::string cmd = "'" + cli + "' reproduce 2>/dev/null";
    const RunResult first = run_command(cmd);
    const RunResult second = run_command(cmd);
    const bool deterministic = first.exit_code >= 0 && second.exit_code >= 0 && !first.output.empty() &&
                               first.output == second.output && first.exit_code == second.exit_code;
    print_verdict(10, "determinism", deterministic);
    if (!deterministic) {
        std::cout << "    first run:  exit " << first.exit_code << ", " << first.output.size() << " bytes\n";
        std::cout << "    second run: exit " << second.exit_code << ", " << second.output.size() << " bytes\n";
        ++failures;
    }

    if (failures > 0) {
        std::cout << failures << " of 10 criteria failed\n";
        return 1;
    }
    std::cout << "all 10 criteria passed\n";
    return 0;
}
