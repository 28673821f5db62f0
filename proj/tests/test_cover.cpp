#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpoints/cover.hpp"

#include <algorithm>
#include <set>

using namespace qpoints;

namespace {

// ---- oracle -----------------------------------------------------------------

// All primitive vectors of Z^ambient with |v|^2 <= h_sq, one per +-v pair,
// by scanning the full coordinate box.  Reference for rank-1 enumeration.
std::set<std::vector<long long>> primitive_vectors_oracle(std::size_t ambient,
                                                          long long h_sq) {
    long long B = 0;
    while ((B + 1) * (B + 1) <= h_sq) ++B;
    std::set<std::vector<long long>> out;
    std::vector<long long> v(ambient, -B);
    for (;;) {
        long long norm = 0, g = 0;
        for (long long x : v) {
            norm += x * x;
            g = std::gcd(g, x < 0 ? -x : x);
        }
        if (g == 1 && norm <= h_sq) {
            std::vector<long long> w(v);
            for (long long x : w) {
                if (x == 0) continue;
                if (x < 0)
                    for (long long& y : w) y = -y;
                break;
            }
            out.insert(w);
        }
        std::size_t i = 0;
        while (i < ambient && v[i] == B) v[i++] = -B;
        if (i == ambient) break;
        ++v[i];
    }
    return out;
}

}  // namespace

TEST_CASE("plane attached to a point") {
    ProjPoint x({Int(3), Int(5), Int(7)});
    LinearVariety line = cover_plane_for_point(x, 1);
    CHECK(line.plane_dim() == 1);
    CHECK(line.ambient_proj_dim() == 2);
    CHECK(plane_contains(line, x));
    CHECK(is_primitive(line.lattice()));

    CHECK_THROWS_AS(cover_plane_for_point(x, 0), std::invalid_argument);
    CHECK_THROWS_AS(cover_plane_for_point(x, 2), std::invalid_argument);

    ProjPoint y({Int(1), Int(0), Int(0), Int(0)});
    for (std::size_t k = 1; k <= 2; ++k) {
        LinearVariety p = cover_plane_for_point(y, k);
        CHECK(p.plane_dim() == k);
        CHECK(plane_contains(p, y));
    }
}

TEST_CASE("covers contain every enumerated point") {
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (long long B = 1; B <= (n == 2 ? 4 : 2); ++B) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(B);
                PlaneCover cover = cover_planes(n, k, B);
                CHECK(cover.n == n);
                CHECK(cover.k == k);
                CHECK(std::is_sorted(cover.planes.begin(), cover.planes.end()));
                for (const ProjPoint& x : enum_proj_points(n, B)) {
                    bool covered = false;
                    for (const LinearVariety& p : cover.planes)
                        covered = covered || plane_contains(p, x);
                    CHECK(covered);
                }
                // the attached plane itself is always in the cover
                for (const ProjPoint& x : enum_proj_points(n, B)) {
                    LinearVariety p = cover_plane_for_point(x, k);
                    CHECK(std::binary_search(cover.planes.begin(), cover.planes.end(), p));
                }
            }
        }
    }
}

TEST_CASE("cover size grows with B") {
    PlaneCover small = cover_planes(2, 1, 2);
    PlaneCover large = cover_planes(2, 1, 8);
    CHECK(small.planes.size() > 1);
    CHECK(large.planes.size() > small.planes.size());
    CHECK(large.max_det_sq() >= small.max_det_sq());
}

TEST_CASE("rank-1 enumeration matches the box oracle") {
    for (std::size_t ambient = 2; ambient <= 3; ++ambient) {
        for (long long h : {1, 2, 4, 9, 16}) {
            CAPTURE(ambient);
            CAPTURE(h);
            LatticeEnumeration e = enum_primitive_lattices_ex(ambient, 1, make_int(h));
            CHECK(e.complete);
            std::set<std::vector<long long>> want = primitive_vectors_oracle(ambient, h);
            REQUIRE(e.lattices.size() == want.size());
            for (const IntegerLattice& l : e.lattices) {
                REQUIRE(l.rank() == 1);
                std::vector<long long> v;
                for (const Int& c : l.basis().row(0)) v.push_back(c.get_si());
                // canonical HNF generator of a rank-1 lattice has positive
                // leading coordinate, matching the oracle normalization
                CHECK(want.count(v) == 1);
                CHECK(l.det_sq() <= make_int(h));
            }
        }
    }
}

TEST_CASE("enumeration invariants across ranks") {
    SUBCASE("corank one is complete and determinant-faithful") {
        LatticeEnumeration e = enum_primitive_lattices_ex(3, 2, Int(9));
        CHECK(e.complete);
        CHECK(std::is_sorted(e.lattices.begin(), e.lattices.end()));
        CHECK(std::adjacent_find(e.lattices.begin(), e.lattices.end()) ==
              e.lattices.end());
        for (const IntegerLattice& l : e.lattices) {
            CHECK(l.rank() == 2);
            CHECK(is_primitive(l));
            CHECK(l.det_sq() <= 9);
        }
        // duality pairs rank 1 with corank 1 bijectively
        CHECK(e.lattices.size() == enum_primitive_lattices(3, 1, Int(9)).size());
    }
    SUBCASE("intermediate rank is closed under complement") {
        std::vector<IntegerLattice> mid = enum_primitive_lattices(4, 2, Int(4));
        LatticeEnumeration ex = enum_primitive_lattices_ex(4, 2, Int(4));
        CHECK(ex.complete);
        CHECK(!mid.empty());
        for (const IntegerLattice& l : mid) {
            CHECK(l.rank() == 2);
            CHECK(is_primitive(l));
            CHECK(l.det_sq() <= 4);
            IntegerLattice c = orthogonal_complement(l);
            // the complement is again rank 2 with the same determinant,
            // so it must appear in the same enumeration
            CHECK(std::binary_search(mid.begin(), mid.end(), c));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(enum_primitive_lattices(1, 1, Int(4)), std::invalid_argument);
        CHECK_THROWS_AS(enum_primitive_lattices(3, 0, Int(4)), std::invalid_argument);
        CHECK_THROWS_AS(enum_primitive_lattices(3, 3, Int(4)), std::invalid_argument);
        CHECK_THROWS_AS(enum_primitive_lattices(3, 1, Int(0)), std::invalid_argument);
    }
}

TEST_CASE("densest planes") {
    SUBCASE("single densest line in the projective plane") {
        DensestPlanes dp = densest_planes_count(2, 1, 1, 5);
        REQUIRE(dp.planes.size() == 1);
        CHECK(dp.planes[0].lattice().det_sq() == 1);
        // a determinant-1 plane is a coordinate line, isomorphic to P^1
        CHECK(dp.point_count == enum_proj_points(1, 5).size());
    }
    SUBCASE("union counts are monotone in d") {
        DensestPlanes d2 = densest_planes_count(2, 1, 2, 10);
        DensestPlanes d4 = densest_planes_count(2, 1, 4, 10);
        CHECK(d2.planes.size() == 2);
        CHECK(d4.planes.size() == 4);
        CHECK(d4.point_count > d2.point_count);
        // selected planes are the global determinant minimizers, in order
        CHECK(std::is_sorted(d2.planes.begin(), d2.planes.end()));
        CHECK(d2.planes[0].lattice().det_sq() <= d2.planes[1].lattice().det_sq());
    }
    SUBCASE("cap exhaustion reports an error") {
        DensestOptions opts;
        opts.h_sq_cap = 2;
        CHECK_THROWS_AS(densest_planes_count(2, 1, 100, 5, opts), std::invalid_argument);
    }
}
