#include "doctest.h"

#include <set>
#include <stdexcept>

#include "cbundle/chern.hpp"
#include "cbundle/constructions.hpp"
#include "cbundle/errors.hpp"
#include "support.hpp"

using namespace cbundle;

namespace {

// Lattice-path criterion, independent of the cell bookkeeping: the word is
// a closed monotone path on the torus of fiber positions, and the
// realization is simplicial iff every fiber has >= 3 vertices and, for each
// set of at least two letters, the path projected to those letters never
// revisits a point.
bool simplicial_by_lattice(const Necklace& w)
{
    const auto counts = w.counts();
    const int k = w.alphabet_size();
    for (int a = 0; a < k; ++a) {
        if (counts[a] < 3) {
            return false;
        }
    }
    for (int mask = 1; mask < (1 << k); ++mask) {
        if (__builtin_popcount(mask) < 2) {
            continue;
        }
        std::set<std::array<std::size_t, 3>> seen;
        std::array<std::size_t, 3> point{0, 0, 0};
        for (Letter a : w.letters()) {
            if ((mask >> a & 1) == 0) {
                continue;
            }
            if (!seen.insert(point).second) {
                return false;
            }
            point[a] = (point[a] + 1) % counts[a];
        }
    }
    return true;
}

// Rotation classes of length-n words with every letter count >= 3, by
// canonicalizing all 3^n words.
std::set<std::vector<Letter>> screened_classes(std::size_t n)
{
    std::set<std::vector<Letter>> out;
    std::vector<Letter> w(n, 0);
    for (;;) {
        const Necklace x(w, 3);
        const auto c = x.counts();
        if (c[0] >= 3 && c[1] >= 3 && c[2] >= 3) {
            out.insert(x.canonical().letters());
        }
        std::size_t i = 0;
        while (i < n && w[i] == 2) {
            w[i++] = 0;
        }
        if (i == n) {
            return out;
        }
        ++w[i];
    }
}

Necklace round_trip(const SolidTorusRealization& r)
{
    const RealizedBundle rb = as_bundle(r);
    const CircleBundle b = test::expect_bundle(rb.map);
    const FiberOrientation o = propagate_orientation(b, default_seed(b));
    return extract_necklace(stalk(b, o, Simplex{0, 1, 2}));
}

} // namespace

TEST_CASE("standard bases")
{
    CHECK(boundary_simplex(3).f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(boundary_simplex(2).f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(octahedron_boundary().f_vector() == std::vector<std::size_t>{6, 12, 8});
    CHECK(icosahedron_boundary().f_vector() == std::vector<std::size_t>{12, 30, 20});
    CHECK(projective_plane_6().f_vector() == std::vector<std::size_t>{6, 15, 10});
    CHECK(projective_plane_6().euler_characteristic() == 1);
    CHECK(icosahedron_boundary().euler_characteristic() == 2);
    CHECK_THROWS_AS(boundary_simplex(0), InvalidSimplex);
}

TEST_CASE("product bundle shape")
{
    auto triangle = std::make_shared<const SimplicialComplex>(build_complex({{0, 1, 2}}));
    const ProductBundle p = product_bundle(triangle, 3);
    CHECK(p.total->vertices().size() == 9);
    CHECK(p.total->simplices(3).size() == 9);
    const CircleBundle b = test::expect_bundle(p.map);
    const Necklace w = extract_necklace(stalk(b, propagate_orientation(b, default_seed(b)), Simplex{0, 1, 2}));
    CHECK(w.counts() == std::array<std::size_t, 3>{3, 3, 3});

    auto sphere = std::make_shared<const SimplicialComplex>(boundary_simplex(3));
    const ProductBundle q = product_bundle(sphere, 3);
    CHECK(q.total->vertices().size() == 12);
    CHECK(q.total->euler_characteristic() == 0);
    CHECK(q.map(7) == 2);
    CHECK_THROWS_AS(product_bundle(sphere, 2), FiberTooSmall);
}

TEST_CASE("annulus realizations")
{
    const AnnulusRealization block = realize_annulus(Necklace::parse("000111"));
    CHECK_FALSE(block.simplicial());
    REQUIRE_FALSE(block.duplicated_edges().empty());
    const auto dup = block.duplicated_edges().front();
    const auto& edges = block.as_delta.cells(1);
    CHECK(std::set<VertexId>(edges[dup.first].vertices.begin(), edges[dup.first].vertices.end()) ==
          std::set<VertexId>(edges[dup.second].vertices.begin(), edges[dup.second].vertices.end()));

    const AnnulusRealization alternating = realize_annulus(Necklace::parse("010101"));
    CHECK(alternating.simplicial());
    CHECK(alternating.top_cells.size() == 6);
    CHECK(alternating.top_vertices().size() == 3);
    CHECK(alternating.bottom_vertices().size() == 3);
    CHECK(alternating.as_delta.f_vector() == std::vector<std::size_t>{6, 12, 6});

    CHECK_FALSE(realize_annulus(Necklace::parse("0011")).simplicial());
    CHECK_FALSE(realize_annulus(Necklace::parse("0101")).simplicial());
    CHECK_THROWS_AS(realize_annulus(Necklace::parse("000")), NotSurjective);
}

TEST_CASE("triangle realizations")
{
    const Necklace staircase = Necklace::parse("210210210");
    const SolidTorusRealization r = realize_over_triangle(staircase);
    CHECK(r.simplicial());
    CHECK(round_trip(r) == staircase);

    const SolidTorusRealization blocks = realize_over_triangle(Necklace::parse("000111222"));
    CHECK_FALSE(blocks.simplicial());
    CHECK_FALSE(blocks.duplicated_edges().empty());
    for (Letter i = 0; i < 3; ++i) {
        CHECK(is_block_word(blocks.face_annuli[i].word));
        CHECK_FALSE(blocks.face_annuli[i].duplicated_edges().empty());
    }
    CHECK_THROWS_AS(as_bundle(blocks), InvalidSimplex);

    CHECK_FALSE(realize_over_triangle(Necklace::parse("012")).simplicial());
    CHECK_THROWS_AS(realize_over_triangle(Necklace::parse("0101", 3)), NotSurjective);

    // Projecting away letter 0 leaves a block word on the other two.
    const SolidTorusRealization mixed = realize_over_triangle(Necklace::parse("010101222"));
    CHECK(is_block_word(delete_letter(mixed.word, 0)));
    CHECK_FALSE(mixed.simplicial());
}

TEST_CASE("realizations agree with the lattice criterion")
{
    for (std::size_t n = 3; n <= 10; ++n) {
        for_each_necklace(n, 3, true, [&](const Necklace& w) {
            const SolidTorusRealization r = realize_over_triangle(w);
            if (r.simplicial() != simplicial_by_lattice(w)) {
                FAIL_CHECK("mismatch on " << w.str());
            }
            for (Letter i = 0; i < 3; ++i) {
                const Necklace face = delete_letter(w, i);
                if (face.alphabet_size() == 2 &&
                    realize_annulus(face).simplicial() != simplicial_by_lattice(face)) {
                    FAIL_CHECK("annulus mismatch on " << face.str());
                }
            }
        });
    }
}

TEST_CASE("face restriction equals the annulus of the deleted word")
{
    for (std::size_t n = 3; n <= 9; ++n) {
        for_each_necklace(n, 3, true, [&](const Necklace& w) {
            const SolidTorusRealization r = realize_over_triangle(w);
            for (Letter i = 0; i < 3; ++i) {
                const DeltaComplex face = restrict_to_face(r, i);
                if (!(face == realize_annulus(delete_letter(w, i)).as_delta) || !(face == r.face_annuli[i].as_delta)) {
                    FAIL_CHECK("face " << int(i) << " of " << w.str());
                }
            }
        });
    }
}

TEST_CASE("simplicial verdict does not depend on the starting point")
{
    for (std::size_t n = 9; n <= 10; ++n) {
        for_each_necklace(n, 3, true, [&](const Necklace& w) {
            const bool verdict = realize_over_triangle(w).simplicial();
            for (std::size_t r = 1; r < n; ++r) {
                if (realize_over_triangle(w.rotated(r)).simplicial() != verdict) {
                    FAIL_CHECK(w.str() << " rotated by " << r);
                }
            }
        });
    }
}

TEST_CASE("realized bundles round-trip their necklace")
{
    std::size_t realizable = 0;
    for (std::size_t n = 9; n <= 10; ++n) {
        for_each_necklace(n, 3, true, [&](const Necklace& w) {
            const SolidTorusRealization r = realize_over_triangle(w);
            if (!r.simplicial()) {
                return;
            }
            ++realizable;
            if (!(round_trip(r) == w)) {
                FAIL_CHECK("round trip of " << w.str());
            }
        });
    }
    CHECK(realizable > 0);
}

TEST_CASE("screening at length 9")
{
    const ScreenReport report = screen_realizable(9);
    const auto classes = screened_classes(9);
    CHECK(report.screened == classes.size());
    CHECK(report.screened == 188);

    std::size_t realizable = 0;
    std::size_t blocks = 0;
    Rational best(0);
    for (const auto& letters : classes) {
        const Necklace w(letters, 3);
        if (is_block_word(w)) {
            ++blocks;
        }
        if (simplicial_by_lattice(w)) {
            ++realizable;
            best = std::max(best, abs(chern_local(w)));
        }
    }
    CHECK(report.realizable == realizable);
    CHECK(report.block_words == blocks);
    CHECK(blocks == 2);
    CHECK(report.block_words_rejected == 2);
    CHECK(report.block_words_with_duplicate_edge == 2);
    REQUIRE(report.max_realizable_abs.has_value());
    CHECK(*report.max_realizable_abs == best);
    CHECK(best == Rational(5, 18));
    CHECK(abs(chern_local(*report.max_realizable_witness)) == best);
    CHECK(report.excluded_extremum == Rational(1, 2));
    CHECK(report.ambiguities.empty());
    CHECK(report.bound_holds());

    CHECK_THROWS_AS(screen_realizable(8), std::invalid_argument);
}
