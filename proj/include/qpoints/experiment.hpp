#pragma once

#include "qpoints/cover.hpp"
#include "qpoints/fit.hpp"
#include "qpoints/lattice.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace qpoints {

// Deterministic RNG for experiment sampling.  std::mt19937_64's output
// sequence is fixed by the standard, and the range reduction below avoids
// the unspecified std distributions, so seeded runs reproduce everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    long long uniform(long long lo, long long hi);

private:
    std::mt19937_64 eng_;
};

// A random primitive lattice of the exact given rank, entries of the
// pre-saturation generators drawn uniformly from [-entry_bound, entry_bound].
IntegerLattice random_primitive_lattice(Rng& rng, std::size_t ambient, std::size_t rank,
                                        long long entry_bound);

// key = value configuration text; '#' starts a comment, blank lines ignored.
using Config = std::map<std::string, std::string>;
Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

struct ExperimentFit {
    std::string name;
    FitResult fit;
    bool sufficient = false;  // fitted from >= 3 grid points
};

struct ExperimentCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ExperimentRow {
    std::vector<std::string> values;  // parallel to ExperimentReport::columns
    double elapsed_ms = 0;
};

struct ExperimentReport {
    std::string id;
    std::map<std::string, std::string> params;  // resolved configuration
    std::vector<std::string> columns;
    std::vector<ExperimentRow> rows;
    std::vector<ExperimentFit> fits;
    std::vector<ExperimentCheck> checks;
    bool overall_pass = false;

    // CSV of the grid rows; the trailing elapsed_ms column is the only
    // nondeterministic part.
    std::string to_csv() const;
    // Full JSON report; wall-clock data is isolated under "timing_ms" so the
    // rest of the document is reproducible byte for byte.
    std::string to_json() const;
};

std::vector<std::string> experiment_ids();

// Run one named experiment.  Unknown ids and malformed configuration throw
// std::invalid_argument; every known key has a default, so an empty config
// reproduces the reference setup.
ExperimentReport run_experiment(const std::string& id, const Config& cfg);

}  // namespace qpoints
