// Acceptance harness: runs the twelve verification experiments with their
// reference configurations and prints one PASS/FAIL line each.  The exit
// code is the number of failed criteria.

#include "qpoints/experiment.hpp"

#include <exception>
#include <iostream>
#include <string>

int main() {
    const std::pair<const char*, const char*> criteria[] = {
        {"C1", "cover-correctness"},
        {"C2", "cover-scaling"},
        {"C3", "densest-sublinear"},
        {"C4", "lattice-point-bound"},
        {"C5", "duality"},
        {"C6", "subdivision"},
        {"C7", "parallel-lines"},
        {"C8", "proj-small-counts"},
        {"C9", "roundtrip"},
        {"C10", "union-consistency"},
        {"C11", "projection-degree"},
        {"C12", "schmidt-duality"},
    };

    int failures = 0;
    for (const auto& [label, id] : criteria) {
        std::string detail;
        bool pass = false;
        try {
            qpoints::ExperimentReport rep = qpoints::run_experiment(id, {});
            pass = rep.overall_pass;
            for (const qpoints::ExperimentCheck& c : rep.checks) {
                if (!detail.empty()) detail += "; ";
                detail += c.name;
                detail += c.pass ? " ok" : " FAILED";
                detail += " (" + c.detail + ")";
            }
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << label << " " << id << ": "
                  << detail << std::endl;
    }
    std::cout << "criteria passed: " << (12 - failures) << "/12" << std::endl;
    return failures;
}
