// Command-line front end: plane covers, densest-plane counts, primitive
// lattice enumeration, exact point counting, projection degrees, subdivision
// schemes, and the reproducible experiment runner.

#include "qpoints/cover.hpp"
#include "qpoints/experiment.hpp"
#include "qpoints/projection.hpp"
#include "qpoints/subdivision.hpp"
#include "qpoints/variety.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qpoints;

// Basis serialization: rows joined by ';', entries by ','.
std::string format_basis(const IntMatrix& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.rows(); ++i) {
        if (i) os << ";";
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (j) os << ",";
            os << b.at(i, j).get_str();
        }
    }
    return os.str();
}

std::vector<std::string> read_poly_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open polynomial file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line) blank = blank && std::isspace(static_cast<unsigned char>(c));
        if (!blank) lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("no polynomials in " + path);
    return lines;
}

std::vector<Poly> parse_polys(const std::vector<std::string>& lines, std::size_t n_vars) {
    std::vector<Poly> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            out.push_back(Poly::parse(lines[i], n_vars));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return out;
}

std::size_t infer_n_vars(const std::vector<std::string>& lines) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        try {
            n = std::max(n, Poly::parse(lines[i]).n_vars());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return n;
}

int cmd_cover(long long n, long long k, long long B, const std::string& emit_path) {
    PlaneCover cover = cover_planes(n, k, B);
    long long points = 0;
    for_each_proj_tuple(n, B, [&](const std::vector<long long>&) { ++points; });
    std::cout << "n = " << n << ", k = " << k << ", B = " << B << "\n"
              << "points = " << points << "\n"
              << "planes = " << cover.planes.size() << "\n"
              << "max_det_sq = " << cover.max_det_sq().get_str() << "\n";
    if (!emit_path.empty()) {
        std::ofstream out(emit_path);
        if (!out) throw std::invalid_argument("cannot write " + emit_path);
        for (const LinearVariety& p : cover.planes)
            out << format_basis(p.lattice().basis()) << "\n";
        std::cout << "planes written to " << emit_path << "\n";
    }
    return 0;
}

int cmd_densest(long long n, long long k, long long d, long long B) {
    DensestPlanes dp = densest_planes_count(n, k, d, B);
    for (std::size_t i = 0; i < dp.planes.size(); ++i) {
        const IntegerLattice& l = dp.planes[i].lattice();
        std::cout << "plane " << (i + 1) << ": det_sq = " << l.det_sq().get_str()
                  << ", basis = " << format_basis(l.basis()) << "\n";
    }
    std::cout << "points_on_union = " << dp.point_count << "\n";
    return 0;
}

int cmd_enum_lattices(long long ambient, long long rank, long long hsq) {
    LatticeEnumeration e = enum_primitive_lattices_ex(ambient, rank, make_int(hsq));
    std::cout << "lattices = " << e.lattices.size() << "\n"
              << "search_radius_sq = " << e.search_radius_sq.get_str() << "\n"
              << "complete = " << (e.complete ? "yes" : "no") << "\n";
    for (const IntegerLattice& l : e.lattices)
        std::cout << "det_sq = " << l.det_sq().get_str()
                  << ", basis = " << format_basis(l.basis()) << "\n";
    return 0;
}

int cmd_count(const std::string& input, bool projective, long long B, long long vars) {
    std::vector<std::string> lines = read_poly_lines(input);
    std::size_t n_vars = vars > 0 ? static_cast<std::size_t>(vars) : infer_n_vars(lines);
    std::vector<Poly> gens = parse_polys(lines, n_vars);
    if (projective) {
        if (n_vars < 2)
            throw std::invalid_argument("projective counting needs at least 2 variables");
        VarietySpec v = VarietySpec::projective(n_vars - 1, std::move(gens));
        std::cout << "variety: projective, n = " << v.n() << ", generators = "
                  << v.generators().size() << ", degree = " << v.degree() << "\n"
                  << "count = " << count_proj_points(v, B) << "\n";
    } else {
        VarietySpec v = VarietySpec::affine(n_vars, std::move(gens));
        std::cout << "variety: affine, n = " << v.n() << ", generators = "
                  << v.generators().size() << ", degree = " << v.degree() << "\n"
                  << "count = " << count_affine_points(v, B) << "\n";
    }
    return 0;
}

int cmd_project(const std::string& input, long long degree) {
    std::vector<std::string> lines = read_poly_lines(input);
    if (lines.size() != 2)
        throw std::invalid_argument("projection input needs exactly 2 polynomials, got " +
                                    std::to_string(lines.size()));
    std::vector<Poly> gens = parse_polys(lines, 3);
    long d = degree > 0
                 ? static_cast<long>(degree)
                 : std::max(gens[0].total_degree(), gens[1].total_degree());
    SpaceCurve curve(std::move(gens[0]), std::move(gens[1]), d);
    std::cout << "declared_degree = " << curve.declared_degree << "\n";
    for (std::size_t drop = 0; drop < 3; ++drop) {
        std::cout << "drop x" << drop << ": ";
        try {
            std::cout << "degree " << projection_degree(curve, drop) << "\n";
        } catch (const std::invalid_argument& e) {
            std::cout << "collapsed (" << e.what() << ")\n";
        }
    }
    BestProjection best = best_projection(curve);
    std::cout << "best: drop x" << best.drop << ", degree " << best.degree << "\n";
    return 0;
}

int cmd_subdivide(double H, long long k) {
    SubdivisionScheme s = subdivide(H, static_cast<unsigned>(k));
    std::cout << "H = " << H << ", k = " << k << "\n"
              << "K = " << s.K << "\n"
              << "endpoints =";
    std::cout.precision(17);
    for (double e : s.endpoints) std::cout << " " << e;
    std::cout << "\n";
    SubdivisionCheck c = verify_subdivision(s);
    auto line = [](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "ok" : "FAIL") << "\n";
    };
    line("shape", c.shape_ok);
    line("recurrence", c.recurrence_ok);
    line("count_bound", c.count_bound_ok);
    line("ratio_bound", c.ratio_ok);
    line("f_property", c.f_property_ok);
    return c.all() ? 0 : 1;
}

int cmd_experiment(const std::string& id, const std::string& config_path,
                   const std::string& out_prefix, bool list) {
    if (list) {
        for (const std::string& s : experiment_ids()) std::cout << s << "\n";
        return 0;
    }
    Config cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    ExperimentReport rep = run_experiment(id, cfg);
    std::cout << "experiment: " << rep.id << "\n";
    for (const auto& [key, val] : rep.params) std::cout << "param " << key << " = " << val << "\n";
    std::cout << "rows = " << rep.rows.size() << "\n";
    for (const ExperimentFit& f : rep.fits)
        std::cout << "fit " << f.name << ": slope = " << f.fit.slope
                  << ", max_residual = " << f.fit.max_residual
                  << (f.sufficient ? "" : " (insufficient grid)") << "\n";
    for (const ExperimentCheck& c : rep.checks)
        std::cout << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " ("
                  << c.detail << ")\n";
    std::cout << "overall: " << (rep.overall_pass ? "PASS" : "FAIL") << "\n";
    if (!out_prefix.empty()) {
        std::ofstream csv(out_prefix + ".csv");
        std::ofstream json(out_prefix + ".json");
        if (!csv || !json)
            throw std::invalid_argument("cannot write report files at " + out_prefix);
        csv << rep.to_csv();
        json << rep.to_json();
        std::cout << "reports written to " << out_prefix << ".csv and " << out_prefix
                  << ".json\n";
    }
    return rep.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic toolkit for rational points, lattices, and plane covers"};
    // long-only help: `subdivide --h` would otherwise collide with the -h short flag
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    long long n = 0, k = 0, d = 0, B = 0, ambient = 0, rank = 0, hsq = 0, vars = 0,
              degree = 0;
    double H = 0;
    std::string emit_path, input, id, config_path, out_prefix;
    bool projective = false, affine = false, list = false;

    CLI::App* cover = app.add_subcommand("cover", "cover all points of P^n(Q, B) by k-planes");
    cover->add_option("--n", n, "projective dimension")->required();
    cover->add_option("--k", k, "plane dimension")->required();
    cover->add_option("--b", B, "height bound")->required();
    cover->add_option("--emit-planes", emit_path, "write plane bases to this file");

    CLI::App* densest = app.add_subcommand(
        "densest", "d lowest-determinant k-planes and the point count of their union");
    densest->add_option("--n", n, "projective dimension")->required();
    densest->add_option("--k", k, "plane dimension")->required();
    densest->add_option("--d", d, "number of planes")->required();
    densest->add_option("--b", B, "height bound")->required();

    CLI::App* enum_lat = app.add_subcommand(
        "enum-lattices", "primitive sublattices of Z^ambient with det_sq <= hsq");
    enum_lat->add_option("--ambient", ambient, "ambient dimension")->required();
    enum_lat->add_option("--rank", rank, "lattice rank")->required();
    enum_lat->add_option("--hsq", hsq, "squared determinant bound")->required();

    CLI::App* count = app.add_subcommand("count", "exact point count of a variety");
    count->add_option("--input", input, "polynomial file, one generator per line")
        ->required();
    CLI::Option* pflag = count->add_flag("--projective", projective,
                                         "projective count on canonical representatives");
    CLI::Option* aflag =
        count->add_flag("--affine", affine, "affine count over the integer box [-B, B]^n");
    pflag->excludes(aflag);
    aflag->excludes(pflag);
    count->add_option("--b", B, "height bound")->required();
    count->add_option("--vars", vars, "override the number of variables");

    CLI::App* project = app.add_subcommand(
        "project", "coordinate-projection degrees of a space curve (two polynomials in x0..x2)");
    project->add_option("--input", input, "polynomial file with the two generators")
        ->required();
    project->add_option("--degree", degree,
                        "declared curve degree (default: max total degree)");

    CLI::App* experiment = app.add_subcommand("experiment", "run a verification experiment");
    experiment->add_option("--id", id, "experiment id");
    experiment->add_option("--config", config_path, "key = value configuration file");
    experiment->add_option("--out", out_prefix, "write <out>.csv and <out>.json");
    experiment->add_flag("--list", list, "list experiment ids and exit");

    CLI::App* subdiv = app.add_subcommand("subdivide", "subdivision scheme of [2, H]");
    subdiv->add_option("--h", H, "upper endpoint")->required();
    subdiv->add_option("--k", k, "exponent parameter")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cover->parsed()) return cmd_cover(n, k, B, emit_path);
        if (densest->parsed()) return cmd_densest(n, k, d, B);
        if (enum_lat->parsed()) return cmd_enum_lattices(ambient, rank, hsq);
        if (count->parsed()) {
            if (projective == affine)
                throw std::invalid_argument("pass exactly one of --projective / --affine");
            return cmd_count(input, projective, B, vars);
        }
        if (project->parsed()) return cmd_project(input, degree);
        if (experiment->parsed()) {
            if (!list && id.empty())
                throw std::invalid_argument("--id is required (or use --list)");
            return cmd_experiment(id, config_path, out_prefix, list);
        }
        if (subdiv->parsed()) return cmd_subdivide(H, k);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
