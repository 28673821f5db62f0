#include "qpoints/experiment.hpp"

#include "qpoints/projection.hpp"
#include "qpoints/subdivision.hpp"
#include "qpoints/variety.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace qpoints {

using ordered_json = nlohmann::ordered_json;

long long Rng::uniform(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long long>(eng_());  // full 64-bit range
    const std::uint64_t limit = (UINT64_MAX / span) * span;
    std::uint64_t r;
    do {
        r = eng_();
    } while (r >= limit);
    return lo + static_cast<long long>(r % span);
}

IntegerLattice random_primitive_lattice(Rng& rng, std::size_t ambient, std::size_t rank,
                                        long long entry_bound) {
    if (rank < 1 || rank > ambient)
        throw std::invalid_argument("random_primitive_lattice: bad rank");
    if (entry_bound < 1)
        throw std::invalid_argument("random_primitive_lattice: bad entry bound");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        IntMatrix g(rank, ambient);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < ambient; ++j)
                g.at(i, j) = make_int(rng.uniform(-entry_bound, entry_bound));
        if (hnf(g).rank != rank) continue;
        return saturate(IntegerLattice::from_generators(g));
    }
    throw std::runtime_error("random_primitive_lattice: rejection sampling failed");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key");
        if (cfg.count(key))
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
        cfg[key] = val;
    }
    return cfg;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

std::string fmt_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", d);
    return buf;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Config access with defaults; every read key is recorded so unknown keys
// can be rejected and the resolved values echoed into the report.
class Params {
public:
    Params(const Config& cfg, std::map<std::string, std::string>& echo)
        : cfg_(cfg), echo_(echo) {}

    long long ll(const std::string& key, long long dflt) {
        std::string s = fetch(key, std::to_string(dflt));
        try {
            return std::stoll(s);
        } catch (...) {
            throw std::invalid_argument("config key '" + key + "': expected integer, got '" +
                                        s + "'");
        }
    }

    double d(const std::string& key, double dflt) {
        std::string s = fetch(key, fmt_double(dflt));
        try {
            return std::stod(s);
        } catch (...) {
            throw std::invalid_argument("config key '" + key + "': expected number, got '" +
                                        s + "'");
        }
    }

    std::uint64_t u64(const std::string& key, std::uint64_t dflt) {
        std::string s = fetch(key, std::to_string(dflt));
        try {
            return std::stoull(s);
        } catch (...) {
            throw std::invalid_argument("config key '" + key + "': expected integer, got '" +
                                        s + "'");
        }
    }

    std::vector<long long> list(const std::string& key, const std::string& dflt) {
        std::string s = fetch(key, dflt);
        std::vector<long long> out;
        std::istringstream in(s);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            tok = trim(tok);
            if (tok.empty()) continue;
            try {
                out.push_back(std::stoll(tok));
            } catch (...) {
                throw std::invalid_argument("config key '" + key + "': bad list entry '" +
                                            tok + "'");
            }
        }
        if (out.empty())
            throw std::invalid_argument("config key '" + key + "': empty list");
        return out;
    }

    void reject_unknown() const {
        for (const auto& [k, v] : cfg_)
            if (!seen_.count(k))
                throw std::invalid_argument("unknown config key '" + k + "'");
    }

private:
    std::string fetch(const std::string& key, const std::string& dflt) {
        seen_.insert(key);
        auto it = cfg_.find(key);
        std::string val = it == cfg_.end() ? dflt : it->second;
        echo_[key] = val;
        return val;
    }

    const Config& cfg_;
    std::map<std::string, std::string>& echo_;
    std::set<std::string> seen_;
};

struct ReportBuilder {
    ExperimentReport rep;
    Stopwatch row_clock;

    explicit ReportBuilder(const std::string& id) { rep.id = id; }

    void columns(std::vector<std::string> cols) { rep.columns = std::move(cols); }

    void row(std::vector<std::string> values) {
        if (values.size() != rep.columns.size())
            throw std::logic_error("experiment row width mismatch");
        ExperimentRow r;
        r.values = std::move(values);
        r.elapsed_ms = row_clock.ms();
        rep.rows.push_back(std::move(r));
        row_clock = Stopwatch();
    }

    void fit(const std::string& name, const std::vector<std::pair<double, double>>& pts) {
        ExperimentFit f;
        f.name = name;
        f.sufficient = pts.size() >= 3;
        f.fit = fit_exponent(pts);
        rep.fits.push_back(f);
    }

    const ExperimentFit& last_fit() const { return rep.fits.back(); }

    void check(const std::string& name, bool pass, const std::string& detail) {
        rep.checks.push_back(ExperimentCheck{name, pass, detail});
    }

    ExperimentReport finish() {
        rep.overall_pass = true;
        for (const ExperimentCheck& c : rep.checks) rep.overall_pass &= c.pass;
        return std::move(rep);
    }
};

long long count_canonical_points(std::size_t n, long long B) {
    long long count = 0;
    for_each_proj_tuple(n, B, [&](const std::vector<long long>&) { ++count; });
    return count;
}

// ---------------------------------------------------------------- cover ----

ExperimentReport exp_cover_correctness(const Config& cfg) {
    ReportBuilder b("cover-correctness");
    Params p(cfg, b.rep.params);
    std::vector<long long> n_list = p.list("n_list", "2,3");
    long long b_max = p.ll("b_max", 8);
    p.reject_unknown();

    b.columns({"n", "k", "B", "points", "planes", "failures"});
    long long total_failures = 0;
    for (long long n : n_list) {
        if (n < 2) throw std::invalid_argument("cover-correctness: n must be >= 2");
        for (std::size_t k = 1; k < static_cast<std::size_t>(n); ++k) {
            for (long long B = 1; B <= b_max; ++B) {
                PlaneCover cover = cover_planes(n, k, B);
                long long points = 0, failures = 0;
                for_each_proj_tuple(n, B, [&](const std::vector<long long>& c) {
                    std::vector<Int> v(c.size());
                    for (std::size_t i = 0; i < c.size(); ++i) v[i] = make_int(c[i]);
                    ProjPoint x(std::move(v));
                    LinearVariety plane = cover_plane_for_point(x, k);
                    bool in_cover = std::binary_search(cover.planes.begin(),
                                                       cover.planes.end(), plane);
                    if (!in_cover || !plane_contains(plane, x)) ++failures;
                    ++points;
                });
                total_failures += failures;
                b.row({std::to_string(n), std::to_string(k), std::to_string(B),
                       std::to_string(points), std::to_string(cover.planes.size()),
                       std::to_string(failures)});
            }
        }
    }
    b.check("every_point_covered", total_failures == 0,
            std::to_string(total_failures) + " uncovered points");
    return b.finish();
}

ExperimentReport exp_cover_scaling(const Config& cfg) {
    ReportBuilder b("cover-scaling");
    Params p(cfg, b.rep.params);
    long long n = p.ll("n", 2);
    long long k = p.ll("k", 1);
    std::vector<long long> b_list = p.list("b_list", "4,8,16,32,64");
    double slope_min = p.d("slope_min", 1.2);
    double slope_max = p.d("slope_max", 1.8);
    double det_ratio_max = p.d("det_ratio_max", 6.0);
    p.reject_unknown();
    if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("cover-scaling: bad n, k");

    b.columns({"B", "points", "planes", "max_det_sq", "det_ratio"});
    std::vector<std::pair<double, double>> size_pts, det_pts;
    double worst_ratio = 0;
    for (long long B : b_list) {
        PlaneCover cover = cover_planes(n, k, B);
        long long points = count_canonical_points(n, B);
        Int max_det = cover.max_det_sq();
        // det(plane complement) ~ B^((n-k)/n), so det_sq stays within a
        // constant of B^(2(n-k)/n).
        double ratio = max_det.get_d() /
                       std::pow(static_cast<double>(B),
                                2.0 * static_cast<double>(n - k) / static_cast<double>(n));
        worst_ratio = std::max(worst_ratio, ratio);
        size_pts.emplace_back(static_cast<double>(B),
                              static_cast<double>(cover.planes.size()));
        det_pts.emplace_back(static_cast<double>(B), max_det.get_d());
        b.row({std::to_string(B), std::to_string(points),
               std::to_string(cover.planes.size()), max_det.get_str(),
               fmt_double(ratio)});
    }
    b.fit("cover_size_vs_B", size_pts);
    double slope = b.last_fit().fit.slope;
    b.fit("max_det_sq_vs_B", det_pts);
    b.check("cover_size_exponent",
            slope >= slope_min && slope <= slope_max,
            "slope " + fmt_double(slope) + " vs [" + fmt_double(slope_min) + ", " +
                fmt_double(slope_max) + "]");
    b.check("plane_det_bounded", worst_ratio <= det_ratio_max,
            "max det_sq / B^(2(n-k)/n) = " + fmt_double(worst_ratio) + " vs cap " +
                fmt_double(det_ratio_max));
    return b.finish();
}

ExperimentReport exp_densest_sublinear(const Config& cfg) {
    ReportBuilder b("densest-sublinear");
    Params p(cfg, b.rep.params);
    long long n = p.ll("n", 2);
    long long k = p.ll("k", 1);
    long long B = p.ll("b", 50);
    std::vector<long long> d_list = p.list("d_list", "1,2,4,8,16,32,64");
    double exp_max = p.d("exp_max", 0.75);
    double ratio_coeff = p.d("ratio_coeff", 2.0);
    double ratio_exp = p.d("ratio_exp", 0.75);
    p.reject_unknown();

    b.columns({"d", "last_det_sq", "points_on_union"});
    std::vector<std::pair<double, double>> pts;
    std::map<long long, std::size_t> counts;
    for (long long d : d_list) {
        DensestPlanes dp = densest_planes_count(n, k, d, B);
        counts[d] = dp.point_count;
        pts.emplace_back(static_cast<double>(d), static_cast<double>(dp.point_count));
        b.row({std::to_string(d), dp.planes.back().lattice().det_sq().get_str(),
               std::to_string(dp.point_count)});
    }
    b.fit("union_points_vs_d", pts);
    double slope = b.last_fit().fit.slope;
    b.check("exponent_le_max", slope <= exp_max,
            "slope " + fmt_double(slope) + " vs cap " + fmt_double(exp_max));
    long long d_min = d_list.front(), d_max = d_list.back();
    double allowed = ratio_coeff * static_cast<double>(counts[d_min]) *
                     std::pow(static_cast<double>(d_max), ratio_exp);
    b.check("endpoint_ratio", static_cast<double>(counts[d_max]) <= allowed,
            "N(" + std::to_string(d_max) + ") = " + std::to_string(counts[d_max]) +
                " vs allowed " + fmt_double(allowed));
    return b.finish();
}

// -------------------------------------------------------------- lattice ----

ExperimentReport exp_lattice_point_bound(const Config& cfg) {
    ReportBuilder b("lattice-point-bound");
    Params p(cfg, b.rep.params);
    long long ambient = p.ll("ambient", 3);
    long long rank = p.ll("rank", 2);
    long long samples = p.ll("samples", 200);
    long long det_sq_max = p.ll("det_sq_max", 100);
    long long entry_bound = p.ll("entry_bound", 4);
    std::vector<long long> b_list = p.list("b_list", "10,100");
    long long c_max = p.ll("c_max", 20);
    std::uint64_t seed = p.u64("seed", 20240601);
    p.reject_unknown();

    Rng rng(seed);
    std::vector<IntegerLattice> lats;
    while (static_cast<long long>(lats.size()) < samples) {
        IntegerLattice l = random_primitive_lattice(rng, ambient, rank, entry_bound);
        if (l.det_sq() <= make_int(det_sq_max)) lats.push_back(std::move(l));
    }

    b.columns({"B", "samples", "max_ratio", "violations"});
    long long total_violations = 0;
    const Int c_sq = make_int(c_max) * make_int(c_max);
    for (long long B : b_list) {
        double max_ratio = 0;
        long long violations = 0;
        Int b_pow = 1;
        for (long long i = 0; i < 2 * rank; ++i) b_pow *= make_int(B);
        for (const IntegerLattice& l : lats) {
            std::size_t count = points_in_box(l, make_int(B)).size();
            // count * sqrt(det_sq) <= c * B^rank, squared to stay exact.
            Int lhs = Int(count) * Int(count) * l.det_sq();
            if (lhs > c_sq * b_pow) ++violations;
            double ratio = static_cast<double>(count) * std::sqrt(l.det_sq().get_d()) /
                           std::pow(static_cast<double>(B), static_cast<double>(rank));
            max_ratio = std::max(max_ratio, ratio);
        }
        total_violations += violations;
        b.row({std::to_string(B), std::to_string(samples), fmt_double(max_ratio),
               std::to_string(violations)});
    }
    b.check("constant_bounded", total_violations == 0,
            std::to_string(total_violations) + " samples exceeded c = " +
                std::to_string(c_max));
    return b.finish();
}

ExperimentReport exp_duality(const Config& cfg) {
    ReportBuilder b("duality");
    Params p(cfg, b.rep.params);
    std::vector<long long> ambients = p.list("ambient_list", "3,4");
    long long samples = p.ll("samples", 1000);
    long long entry_bound = p.ll("entry_bound", 5);
    std::uint64_t seed = p.u64("seed", 20240602);
    p.reject_unknown();

    b.columns({"ambient", "samples", "det_mismatches", "involution_failures"});
    long long bad = 0;
    for (long long ambient : ambients) {
        if (ambient < 2) throw std::invalid_argument("duality: ambient must be >= 2");
        Rng rng(seed + static_cast<std::uint64_t>(ambient));
        long long det_mismatch = 0, invol_fail = 0;
        for (long long j = 0; j < samples; ++j) {
            std::size_t rank = 1 + static_cast<std::size_t>(j) %
                                       (static_cast<std::size_t>(ambient) - 1);
            IntegerLattice l = random_primitive_lattice(rng, ambient, rank, entry_bound);
            IntegerLattice c = orthogonal_complement(l);
            if (c.det_sq() != l.det_sq()) ++det_mismatch;
            if (orthogonal_complement(c) != l) ++invol_fail;
        }
        bad += det_mismatch + invol_fail;
        b.row({std::to_string(ambient), std::to_string(samples),
               std::to_string(det_mismatch), std::to_string(invol_fail)});
    }
    b.check("complement_preserves_det", bad == 0,
            std::to_string(bad) + " failures across ambients");
    return b.finish();
}

ExperimentReport exp_schmidt_duality(const Config& cfg) {
    ReportBuilder b("schmidt-duality");
    Params p(cfg, b.rep.params);
    long long ambient = p.ll("ambient", 3);
    std::vector<long long> hsq_list = p.list("hsq_list", "4,25,100");
    p.reject_unknown();
    if (ambient < 3) throw std::invalid_argument("schmidt-duality: ambient must be >= 3");

    b.columns({"h_sq", "rank1_count", "corank1_count"});
    bool all_equal = true;
    for (long long h : hsq_list) {
        std::size_t c1 = enum_primitive_lattices(ambient, 1, make_int(h)).size();
        std::size_t c2 = enum_primitive_lattices(ambient, ambient - 1, make_int(h)).size();
        all_equal = all_equal && c1 == c2;
        b.row({std::to_string(h), std::to_string(c1), std::to_string(c2)});
    }
    b.check("rank_corank_counts_equal", all_equal, "counts must match exactly");
    return b.finish();
}

ExperimentReport exp_roundtrip(const Config& cfg) {
    ReportBuilder b("roundtrip");
    Params p(cfg, b.rep.params);
    std::vector<long long> flat = p.list("cases", "3,2,25,4,3,25");
    p.reject_unknown();
    if (flat.size() % 3 != 0)
        throw std::invalid_argument("roundtrip: cases must be ambient,rank,hsq triples");

    b.columns({"ambient", "rank", "h_sq", "lattices", "failures"});
    long long total_failures = 0;
    for (std::size_t i = 0; i < flat.size(); i += 3) {
        std::size_t ambient = flat[i], rank = flat[i + 1];
        Int h_sq = make_int(flat[i + 2]);
        std::vector<IntegerLattice> lats = enum_primitive_lattices(ambient, rank, h_sq);
        long long failures = 0;
        for (const IntegerLattice& l : lats) {
            IntegerLattice c = orthogonal_complement(l);
            if (c.det_sq() != l.det_sq() || orthogonal_complement(c) != l) ++failures;
        }
        total_failures += failures;
        b.row({std::to_string(ambient), std::to_string(rank), h_sq.get_str(),
               std::to_string(lats.size()), std::to_string(failures)});
    }
    b.check("complement_roundtrip", total_failures == 0,
            std::to_string(total_failures) + " round-trip failures");
    return b.finish();
}

// -------------------------------------------------------------- variety ----

ExperimentReport exp_parallel_lines(const Config& cfg) {
    ReportBuilder b("parallel-lines");
    Params p(cfg, b.rep.params);
    std::vector<long long> b_list = p.list("b_list", "5,10,20");
    p.reject_unknown();

    b.columns({"B", "d", "expected", "actual"});
    bool all_exact = true;
    for (long long B : b_list) {
        Poly prod = Poly::constant(2, 1);
        for (long long d = 1; d <= B; ++d) {
            // Append the line x0 = d-1, keeping the union of x0 = 0 .. x0 = d-1.
            Poly line = Poly::variable(2, 0) - Poly::constant(2, make_int(d - 1));
            prod = prod * line;
            VarietySpec v = VarietySpec::affine(2, {prod});
            long long expected = d * (2 * B + 1);
            long long actual = count_affine_points(v, B);
            all_exact = all_exact && actual == expected;
            b.row({std::to_string(B), std::to_string(d), std::to_string(expected),
                   std::to_string(actual)});
        }
    }
    b.check("exact_counts", all_exact, "d parallel lines carry exactly d*(2B+1) points");
    return b.finish();
}

ExperimentReport exp_proj_small_counts(const Config& cfg) {
    ReportBuilder b("proj-small-counts");
    Params p(cfg, b.rep.params);
    p.reject_unknown();

    b.columns({"case", "expected", "actual"});
    auto record = [&](const std::string& name, std::size_t expected, std::size_t actual) {
        b.row({name, std::to_string(expected), std::to_string(actual)});
        b.check(name, expected == actual,
                "expected " + std::to_string(expected) + ", got " + std::to_string(actual));
    };
    record("p1_height1", 4, enum_proj_points(1, 1).size());
    record("p2_height1", 13, enum_proj_points(2, 1).size());
    VarietySpec conic = VarietySpec::projective(2, {Poly::parse("x0^2 + x1^2 - x2^2", 3)});
    record("conic_height1", 4, count_proj_points(conic, 1));
    VarietySpec hyper = VarietySpec::projective(2, {Poly::parse("x0", 3)});
    record("hyperplane_x0_height1", 4, count_proj_points(hyper, 1));
    IntegerLattice coord = IntegerLattice::from_generators(IntMatrix{{0, 1, 0}, {0, 0, 1}});
    record("hyperplane_x0_lattice_height1", 4,
           count_points_on_plane(plane_from_lattice(coord), 1));
    return b.finish();
}

ExperimentReport exp_union_consistency(const Config& cfg) {
    ReportBuilder b("union-consistency");
    Params p(cfg, b.rep.params);
    long long B = p.ll("b", 30);
    std::vector<long long> d_list = p.list("d_list", "2,4,8,16");
    double exp_max = p.d("exp_max", 0.75);
    p.reject_unknown();

    b.columns({"d", "points_via_lattices", "points_via_variety"});
    bool all_equal = true;
    std::vector<std::pair<double, double>> pts;
    for (long long d : d_list) {
        DensestPlanes dp = densest_planes_count(2, 1, d, B);
        VarietySpec u = union_of_planes_variety(dp.planes);
        std::size_t via_variety = count_proj_points(u, B);
        all_equal = all_equal && via_variety == dp.point_count;
        pts.emplace_back(static_cast<double>(d), static_cast<double>(dp.point_count));
        b.row({std::to_string(d), std::to_string(dp.point_count),
               std::to_string(via_variety)});
    }
    b.fit("union_points_vs_d", pts);
    double slope = b.last_fit().fit.slope;
    b.check("lattice_variety_agree", all_equal, "both counting paths must agree exactly");
    b.check("exponent_le_max", slope <= exp_max,
            "slope " + fmt_double(slope) + " vs cap " + fmt_double(exp_max));
    return b.finish();
}

// ----------------------------------------------------------- projection ----

ExperimentReport exp_projection_degree(const Config& cfg) {
    ReportBuilder b("projection-degree");
    Params p(cfg, b.rep.params);
    std::uint64_t seed = p.u64("seed", 20240603);
    long long random_curves = p.ll("random_curves", 10);
    p.reject_unknown();

    struct Entry {
        std::string label;
        SpaceCurve curve;
    };
    std::vector<Entry> corpus;

    auto mono_curve = [](unsigned a, unsigned bexp) {
        // x1 = x0^a, x2 = x0^b parametrizes (t, t^a, t^b); a generic plane
        // meets it in max(a, b) points.
        Poly p1 = Poly::variable(3, 1) - Poly::monomial(3, {a, 0, 0}, 1);
        Poly p2 = Poly::variable(3, 2) - Poly::monomial(3, {bexp, 0, 0}, 1);
        return SpaceCurve(std::move(p1), std::move(p2),
                          static_cast<long>(std::max(a, bexp)));
    };

    corpus.push_back({"twisted_cubic", mono_curve(2, 3)});
    const std::pair<unsigned, unsigned> monos[] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                                   {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4},
                                                   {3, 5}, {3, 6}, {4, 5}, {5, 6}};
    for (auto [a, be] : monos) {
        std::ostringstream name;
        name << "monomial_" << a << "_" << be;
        corpus.push_back({name.str(), mono_curve(a, be)});
    }

    Rng rng(seed);
    for (long long i = 0; i < random_curves; ++i) {
        // Dense parametrized curves (t, f(t), g(t)) with small coefficients.
        unsigned df = static_cast<unsigned>(rng.uniform(2, 5));
        unsigned dg = static_cast<unsigned>(rng.uniform(2, 6));
        auto dense = [&](unsigned deg) {
            Poly f(3);
            for (unsigned e = 0; e < deg; ++e)
                f.add_term({e, 0, 0}, make_int(rng.uniform(-3, 3)));
            f.add_term({deg, 0, 0}, make_int(rng.uniform(1, 3)));
            return f;
        };
        Poly p1 = Poly::variable(3, 1) - dense(df);
        Poly p2 = Poly::variable(3, 2) - dense(dg);
        std::ostringstream name;
        name << "dense_" << df << "_" << dg << "_" << i;
        corpus.push_back({name.str(),
                          SpaceCurve(std::move(p1), std::move(p2),
                                     static_cast<long>(std::max(df, dg)))});
    }

    b.columns({"curve", "declared_d", "d_drop0", "d_drop1", "d_drop2", "best_drop",
               "best_d"});
    bool bounds_ok = true;
    std::vector<long> cubic_degrees;
    for (const Entry& e : corpus) {
        long dd[3];
        for (std::size_t drop = 0; drop < 3; ++drop) {
            dd[drop] = projection_degree(e.curve, drop);
            if (dd[drop] > e.curve.declared_degree) bounds_ok = false;
        }
        BestProjection best = best_projection(e.curve);
        // Lower bound: the best image degree squares to at least d.
        if (best.degree * best.degree < e.curve.declared_degree) bounds_ok = false;
        if (e.label == "twisted_cubic")
            cubic_degrees = {dd[0], dd[1], dd[2]};
        b.row({e.label, std::to_string(e.curve.declared_degree), std::to_string(dd[0]),
               std::to_string(dd[1]), std::to_string(dd[2]),
               std::to_string(best.drop), std::to_string(best.degree)});
    }
    std::sort(cubic_degrees.begin(), cubic_degrees.end());
    bool cubic_ok = cubic_degrees == std::vector<long>{2, 3, 3};
    b.check("degree_bounds", bounds_ok,
            "each drop degree <= d and best degree^2 >= d over " +
                std::to_string(corpus.size()) + " curves");
    b.check("twisted_cubic_degrees", cubic_ok, "drop degrees must be {2,3,3}");
    return b.finish();
}

// ---------------------------------------------------------- subdivision ----

ExperimentReport exp_subdivision(const Config& cfg) {
    ReportBuilder b("subdivision");
    Params p(cfg, b.rep.params);
    std::vector<long long> k_list = p.list("k_list", "2,3,4");
    std::vector<long long> h_list = p.list("h_list", "10,100,1000,10000");
    p.reject_unknown();

    b.columns({"k", "H", "K", "K_bound", "last_endpoint", "checks_passed"});
    bool all_ok = true;
    for (long long k : k_list) {
        for (long long H : h_list) {
            SubdivisionScheme s = subdivide(static_cast<double>(H),
                                            static_cast<unsigned>(k));
            SubdivisionCheck c = verify_subdivision(s);
            all_ok = all_ok && c.all();
            int passed = c.shape_ok + c.recurrence_ok + c.count_bound_ok + c.ratio_ok +
                         c.f_property_ok;
            double bound = static_cast<double>(k) *
                           std::pow(static_cast<double>(H), 1.0 / static_cast<double>(k));
            b.row({std::to_string(k), std::to_string(H), std::to_string(s.K),
                   fmt_double(bound), fmt_double(s.endpoints.back()),
                   std::to_string(passed) + "/5"});
        }
    }
    b.check("all_invariants", all_ok, "shape, recurrence, count, ratio, f-property");
    return b.finish();
}

}  // namespace

std::vector<std::string> experiment_ids() {
    return {"cover-correctness", "cover-scaling",   "densest-sublinear",
            "lattice-point-bound", "duality",       "subdivision",
            "parallel-lines",     "proj-small-counts", "roundtrip",
            "union-consistency",  "projection-degree", "schmidt-duality"};
}

ExperimentReport run_experiment(const std::string& id, const Config& cfg) {
    using Fn = ExperimentReport (*)(const Config&);
    static const std::map<std::string, Fn> table = {
        {"cover-correctness", exp_cover_correctness},
        {"cover-scaling", exp_cover_scaling},
        {"densest-sublinear", exp_densest_sublinear},
        {"lattice-point-bound", exp_lattice_point_bound},
        {"duality", exp_duality},
        {"subdivision", exp_subdivision},
        {"parallel-lines", exp_parallel_lines},
        {"proj-small-counts", exp_proj_small_counts},
        {"roundtrip", exp_roundtrip},
        {"union-consistency", exp_union_consistency},
        {"projection-degree", exp_projection_degree},
        {"schmidt-duality", exp_schmidt_duality},
    };
    auto it = table.find(id);
    if (it == table.end()) {
        std::string known;
        for (const std::string& s : experiment_ids()) known += (known.empty() ? "" : ", ") + s;
        throw std::invalid_argument("unknown experiment '" + id + "' (known: " + known + ")");
    }
    return it->second(cfg);
}

std::string ExperimentReport::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << (columns.empty() ? "" : ",") << "elapsed_ms\n";
    for (const ExperimentRow& r : rows) {
        for (std::size_t i = 0; i < r.values.size(); ++i) os << (i ? "," : "") << r.values[i];
        os << (r.values.empty() ? "" : ",") << fmt_double(r.elapsed_ms) << "\n";
    }
    return os.str();
}

std::string ExperimentReport::to_json() const {
    ordered_json j;
    j["id"] = id;
    j["params"] = params;
    j["columns"] = columns;
    ordered_json jrows = ordered_json::array();
    for (const ExperimentRow& r : rows) jrows.push_back(r.values);
    j["rows"] = jrows;
    ordered_json jfits = ordered_json::array();
    for (const ExperimentFit& f : fits) {
        ordered_json jf;
        jf["name"] = f.name;
        jf["slope"] = f.fit.slope;
        jf["intercept"] = f.fit.intercept;
        jf["max_residual"] = f.fit.max_residual;
        jf["sufficient_data"] = f.sufficient;
        jfits.push_back(jf);
    }
    j["fits"] = jfits;
    ordered_json jchecks = ordered_json::array();
    for (const ExperimentCheck& c : checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        jchecks.push_back(jc);
    }
    j["checks"] = jchecks;
    j["overall_pass"] = overall_pass;
    ordered_json timing = ordered_json::array();
    for (const ExperimentRow& r : rows) timing.push_back(r.elapsed_ms);
    j["timing_ms"] = timing;
    return j.dump(2) + "\n";
}

}  // namespace qpoints
