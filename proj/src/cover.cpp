#include "qpoints/cover.hpp"

#include <algorithm>
#include <set>

namespace qpoints {

LinearVariety cover_plane_for_point(const ProjPoint& x, std::size_t k) {
    const std::size_t n = x.dim();
    if (k < 1 || k >= n)
        throw std::invalid_argument("cover_plane_for_point: need 1 <= k <= n-1");

    IntMatrix xrow(1, n + 1);
    xrow.set_row(0, x.coords());
    IntMatrix dual = kernel_basis(xrow);  // rank n, saturated
    IntMatrix red = lll_reduce(dual);     // rows sorted by nondecreasing norm

    IntMatrix shortest(n - k, n + 1);
    for (std::size_t i = 0; i < n - k; ++i) shortest.set_row(i, red.row(i));

    IntegerLattice span = IntegerLattice::from_generators(shortest);
    IntegerLattice sat = saturate(span);
    IntegerLattice plane_lat = orthogonal_complement(sat);

    LinearVariety plane(plane_lat);
    if (!plane_contains(plane, x))
        throw std::logic_error("cover_plane_for_point: constructed plane misses the point");
    return plane;
}

Int PlaneCover::max_det_sq() const {
    Int m = 0;
    for (const LinearVariety& p : planes)
        if (p.lattice().det_sq() > m) m = p.lattice().det_sq();
    return m;
}

PlaneCover cover_planes(std::size_t n, std::size_t k, long long B) {
    if (n < 2) throw std::invalid_argument("cover_planes: need n >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("cover_planes: need 1 <= k <= n-1");
    std::set<LinearVariety> seen;
    for_each_proj_tuple(n, B, [&](const std::vector<long long>& c) {
        std::vector<Int> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = make_int(c[i]);
        seen.insert(cover_plane_for_point(ProjPoint(std::move(v)), k));
    });
    PlaneCover cover;
    cover.n = n;
    cover.k = k;
    cover.height_bound = B;
    cover.planes.assign(seen.begin(), seen.end());
    return cover;
}

namespace {

Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Sign-canonical primitive vectors in Z^dim with squared norm <= r_sq.
std::vector<std::vector<Int>> short_primitive_vectors(std::size_t dim, const Int& r_sq) {
    std::vector<std::vector<Int>> out;
    long long box = isqrt(r_sq).get_si();
    if (box < 1) return out;
    for_each_proj_tuple(dim - 1, box, [&](const std::vector<long long>& c) {
        std::vector<Int> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = make_int(c[i]);
        if (norm_sq(v) <= r_sq) out.push_back(std::move(v));
    });
    return out;
}

// Squared norm bound on the generators of a primitive rank-r lattice with
// det_sq <= h_sq: a Minkowski-reduced basis has |b_i|^2 <= gamma_r^r * h_sq
// for r <= 4 (gamma_2^2 = 4/3, gamma_3^3 = 2, gamma_4^4 = 4); beyond that the
// Hermite bound gamma_r <= (4/3)^((r-1)/2) gives a radius that is searched
// but no longer certified exhaustive.
Int generator_radius_sq(std::size_t rank, const Int& h_sq, bool& complete) {
    complete = rank <= 4;
    switch (rank) {
        case 1: return h_sq;
        case 2: return cdiv(4 * h_sq, Int(3));
        case 3: return 2 * h_sq;
        case 4: return 4 * h_sq;
        default: {
            Rat bound = Rat(h_sq);
            Rat q(4, 3);
            for (std::size_t i = 0; i < rank * (rank - 1) / 2; ++i) bound *= q;
            return cdiv(bound.get_num(), bound.get_den());
        }
    }
}

void enum_rank1(std::size_t ambient, const Int& h_sq, std::set<IntegerLattice>& out) {
    for (const std::vector<Int>& v : short_primitive_vectors(ambient, h_sq)) {
        IntMatrix m(1, ambient);
        m.set_row(0, v);
        out.insert(IntegerLattice::from_generators(m));
    }
}

void enum_intermediate(std::size_t ambient, std::size_t rank, const Int& h_sq,
                       const Int& radius_sq, std::set<IntegerLattice>& out) {
    std::vector<std::vector<Int>> cand = short_primitive_vectors(ambient, radius_sq);
    std::vector<std::size_t> pick(rank);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t first) -> void {
        if (depth == rank) {
            IntMatrix m(rank, ambient);
            for (std::size_t i = 0; i < rank; ++i) m.set_row(i, cand[pick[i]]);
            if (gram_det_sq(m) == 0) return;  // dependent choice
            IntegerLattice span = IntegerLattice::from_generators(m);
            // Only spans already within budget are needed: the target's own
            // Minkowski basis is among the candidate subsets and spans it
            // exactly, so discarding over-budget spans loses nothing.
            if (span.det_sq() > h_sq) {
                IntegerLattice sat = saturate(span);
                if (sat.det_sq() > h_sq) return;
                out.insert(std::move(sat));
                return;
            }
            out.insert(saturate(span));
            return;
        }
        for (std::size_t i = first; i + (rank - depth) <= cand.size(); ++i) {
            pick[depth] = i;
            self(self, depth + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

LatticeEnumeration enum_primitive_lattices_ex(std::size_t ambient, std::size_t rank,
                                              const Int& h_sq) {
    if (ambient < 2) throw std::invalid_argument("enum_primitive_lattices: ambient must be >= 2");
    if (rank < 1 || rank >= ambient)
        throw std::invalid_argument("enum_primitive_lattices: need 1 <= rank <= ambient-1");
    if (h_sq < 1) throw std::invalid_argument("enum_primitive_lattices: h_sq must be >= 1");

    LatticeEnumeration result;
    std::set<IntegerLattice> acc;
    if (rank == 1) {
        result.search_radius_sq = h_sq;
        result.complete = true;
        enum_rank1(ambient, h_sq, acc);
    } else if (rank == ambient - 1) {
        // Complement bijection: rank-1 lattices of the same determinant.
        result.search_radius_sq = h_sq;
        result.complete = true;
        std::set<IntegerLattice> lines;
        enum_rank1(ambient, h_sq, lines);
        for (const IntegerLattice& l : lines) acc.insert(orthogonal_complement(l));
    } else {
        bool complete = false;
        Int radius_sq = generator_radius_sq(rank, h_sq, complete);
        result.search_radius_sq = radius_sq;
        result.complete = complete;
        enum_intermediate(ambient, rank, h_sq, radius_sq, acc);
    }
    result.lattices.assign(acc.begin(), acc.end());
    return result;
}

std::vector<IntegerLattice> enum_primitive_lattices(std::size_t ambient, std::size_t rank,
                                                    const Int& h_sq) {
    return enum_primitive_lattices_ex(ambient, rank, h_sq).lattices;
}

DensestPlanes densest_planes_count(std::size_t n, std::size_t k, std::size_t d,
                                   long long B, const DensestOptions& opts) {
    if (n < 2) throw std::invalid_argument("densest_planes_count: need n >= 2");
    if (k < 1 || k >= n) throw std::invalid_argument("densest_planes_count: need 1 <= k <= n-1");
    if (d < 1) throw std::invalid_argument("densest_planes_count: need d >= 1");
    if (B < 1) throw std::invalid_argument("densest_planes_count: need B >= 1");

    const std::size_t ambient = n + 1, rank = k + 1;
    LatticeEnumeration found;
    for (Int h_sq = 4;; h_sq *= 4) {
        found = enum_primitive_lattices_ex(ambient, rank, h_sq);
        if (!found.complete)
            throw std::invalid_argument(
                "densest_planes_count: lattice enumeration not certified exhaustive at this rank");
        if (found.lattices.size() >= d) break;
        if (h_sq > opts.h_sq_cap)
            throw std::invalid_argument(
                "densest_planes_count: fewer than d planes within the determinant cap");
    }

    DensestPlanes out;
    std::set<ProjPoint> on_union;
    for (std::size_t i = 0; i < d; ++i) {
        const IntegerLattice& lat = found.lattices[i];
        for (ProjPoint& p : primitive_points_up_to_sign(lat, B)) on_union.insert(std::move(p));
        out.planes.emplace_back(lat);
    }
    out.point_count = on_union.size();
    return out;
}

}  // namespace qpoints
