#include "qpoints/variety.hpp"

#include <algorithm>

namespace qpoints {

namespace {

void check_generators(const std::vector<Poly>& gens, std::size_t n_vars, bool homogeneous) {
    if (gens.empty()) throw std::invalid_argument("VarietySpec: no generators");
    for (const Poly& g : gens) {
        if (g.n_vars() != n_vars)
            throw std::invalid_argument("VarietySpec: generator arity mismatch");
        if (g.is_zero())
            throw std::invalid_argument("VarietySpec: zero generator");
        if (homogeneous && !g.is_homogeneous())
            throw std::invalid_argument("VarietySpec: projective generator not homogeneous");
    }
}

}  // namespace

VarietySpec VarietySpec::affine(std::size_t n, std::vector<Poly> gens) {
    if (n < 1) throw std::invalid_argument("VarietySpec: ambient dimension must be >= 1");
    check_generators(gens, n, false);
    return VarietySpec(Kind::affine, n, std::move(gens));
}

VarietySpec VarietySpec::projective(std::size_t n, std::vector<Poly> gens) {
    if (n < 1) throw std::invalid_argument("VarietySpec: ambient dimension must be >= 1");
    check_generators(gens, n + 1, true);
    return VarietySpec(Kind::projective, n, std::move(gens));
}

long VarietySpec::degree() const {
    long d = 1;
    for (const Poly& g : gens_) d *= std::max(g.total_degree(), 0L);
    return d;
}

bool VarietySpec::vanishes_at(const std::vector<Int>& x) const {
    for (const Poly& g : gens_)
        if (g.evaluate(x) != 0) return false;
    return true;
}

namespace {

// Power tables pows[v][e] = x_v^e for e up to the per-variable degree caps.
std::vector<std::vector<Int>> make_tables(const std::vector<Int>& x,
                                          const std::vector<long>& caps) {
    std::vector<std::vector<Int>> pows(x.size());
    for (std::size_t v = 0; v < x.size(); ++v) {
        long d = caps[v] < 0 ? 0 : caps[v];
        pows[v].assign(static_cast<std::size_t>(d) + 1, Int(1));
        for (long e = 1; e <= d; ++e) pows[v][e] = pows[v][e - 1] * x[v];
    }
    return pows;
}

std::vector<long> degree_caps(const VarietySpec& v, std::size_t n_vars) {
    std::vector<long> caps(n_vars, 0);
    for (const Poly& g : v.generators())
        for (std::size_t i = 0; i < n_vars; ++i) caps[i] = std::max(caps[i], g.degree_in(i));
    return caps;
}

}  // namespace

long long count_affine_points(const VarietySpec& v, long long B) {
    if (v.kind() != VarietySpec::Kind::affine)
        throw std::invalid_argument("count_affine_points: variety is not affine");
    if (B < 0) throw std::invalid_argument("count_affine_points: negative height bound");
    const std::size_t n = v.n();
    const std::vector<long> caps = degree_caps(v, n);
    const Int lo = make_int(-B), hi = make_int(B);
    std::vector<Int> x(n, lo);
    long long count = 0;
    for (;;) {
        std::vector<std::vector<Int>> pows = make_tables(x, caps);
        bool zero = true;
        for (const Poly& g : v.generators())
            if (g.evaluate_with_tables(pows) != 0) {
                zero = false;
                break;
            }
        if (zero) ++count;
        // Odometer over the box, rightmost coordinate fastest.
        std::size_t i = n;
        for (;;) {
            if (i == 0) return count;
            --i;
            if (x[i] < hi) {
                ++x[i];
                break;
            }
            x[i] = lo;
        }
    }
}

std::size_t count_proj_points(const VarietySpec& v, long long B) {
    if (v.kind() != VarietySpec::Kind::projective)
        throw std::invalid_argument("count_proj_points: variety is not projective");
    const std::size_t nv = v.n() + 1;
    const std::vector<long> caps = degree_caps(v, nv);
    std::size_t count = 0;
    std::vector<Int> x(nv);
    for_each_proj_tuple(v.n(), B, [&](const std::vector<long long>& c) {
        for (std::size_t i = 0; i < nv; ++i) x[i] = make_int(c[i]);
        std::vector<std::vector<Int>> pows = make_tables(x, caps);
        for (const Poly& g : v.generators())
            if (g.evaluate_with_tables(pows) != 0) return;
        ++count;
    });
    return count;
}

VarietySpec union_of_planes_variety(const std::vector<LinearVariety>& planes) {
    if (planes.empty()) throw std::invalid_argument("union_of_planes_variety: no planes");
    const std::size_t ambient = planes.front().lattice().ambient_dim();
    Poly product = Poly::constant(ambient, 1);
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const LinearVariety& p = planes[i];
        if (p.lattice().ambient_dim() != ambient)
            throw std::invalid_argument("union_of_planes_variety: mixed ambient spaces");
        if (p.lattice().rank() != ambient - 1)
            throw std::invalid_argument("union_of_planes_variety: plane is not a hyperplane");
        for (std::size_t j = 0; j < i; ++j)
            if (planes[j] == p)
                throw std::invalid_argument("union_of_planes_variety: duplicate plane");
        // The hyperplane is cut out by the linear form of its rank-1
        // orthogonal complement.
        IntegerLattice normal = orthogonal_complement(p.lattice());
        Poly form(ambient);
        for (std::size_t c = 0; c < ambient; ++c) {
            Poly::Exponents e(ambient, 0);
            e[c] = 1;
            form.add_term(e, normal.basis().at(0, c));
        }
        product = product * form;
    }
    return VarietySpec::projective(ambient - 1, {std::move(product)});
}

}  // namespace qpoints
