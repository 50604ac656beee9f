#include "doctest.h"

#include <string>

#include "cbundle/bundle.hpp"
#include "cbundle/constructions.hpp"
#include "cbundle/errors.hpp"
#include "support.hpp"

using namespace cbundle;

namespace {

using Complex = std::shared_ptr<const SimplicialComplex>;

Complex make(const std::vector<std::vector<VertexId>>& facets)
{
    return std::make_shared<const SimplicialComplex>(build_complex(facets));
}

Complex three_cycle()
{
    return make({{0, 1}, {1, 2}, {0, 2}});
}

// Annulus between the 3-cycle fibers over base vertices u and v, fiber
// vertex (w, j) having id 3w + j. With `flip` the v side is glued by
// j -> -j, which still gives an annulus.
void add_annulus(std::vector<std::vector<VertexId>>& facets, VertexId u, VertexId v, bool flip)
{
    auto at = [](VertexId w, int j) { return static_cast<VertexId>(3 * w + ((j % 3) + 3) % 3); };
    auto far = [&](int j) { return at(v, flip ? -j : j); };
    for (int j = 0; j < 3; ++j) {
        facets.push_back({at(u, j), at(u, j + 1), far(j + 1)});
        facets.push_back({at(u, j), far(j), far(j + 1)});
    }
}

std::map<VertexId, VertexId> fiber_map(VertexId base_vertices, VertexId fiber_size)
{
    std::map<VertexId, VertexId> m;
    for (VertexId v = 0; v < base_vertices * fiber_size; ++v) {
        m[v] = v / fiber_size;
    }
    return m;
}

bool mentions(const ValidationReport& r, const std::string& text)
{
    for (const auto& issue : r.issues) {
        if ((issue.where + " " + issue.what).find(text) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("product bundles validate")
{
    for (int m = 3; m <= 5; ++m) {
        CAPTURE(m);
        const ProductBundle p = product_bundle(std::make_shared<const SimplicialComplex>(boundary_simplex(3)), m);
        const CircleBundle b = test::expect_bundle(p.map);
        CHECK(b.total().f_vector() == std::vector<std::size_t>{std::size_t(4 * m), std::size_t(16 * m),
                                                                std::size_t(24 * m), std::size_t(12 * m)});
        CHECK(b.total().euler_characteristic() == 0);
        CHECK(b.fiber_cycle(2).size() == std::size_t(m));
    }
    const ProductBundle circle = product_bundle(three_cycle(), 4);
    const CircleBundle torus = test::expect_bundle(circle.map);
    CHECK(torus.total().euler_characteristic() == 0);
    CHECK(torus.total().dimension() == 2);
}

TEST_CASE("validator rejects non-bundles with itemized reasons")
{
    SUBCASE("disjoint union over the 3-simplex boundary")
    {
        const CircleBundle b = test::load_fixture_bundle("product_ddelta3_m3.json");
        std::vector<std::vector<VertexId>> facets;
        std::map<VertexId, VertexId> vm;
        for (const Simplex& f : b.total().facets()) {
            facets.push_back(f.vertices());
            std::vector<VertexId> shifted;
            for (VertexId v : f.vertices()) {
                shifted.push_back(v + 100);
            }
            facets.push_back(shifted);
        }
        for (const auto& [t, s] : b.map().vertex_map()) {
            vm[t] = s;
            vm[t + 100] = s;
        }
        const auto r = validate_bundle(make(facets), b.map().target_ptr(), vm);
        REQUIRE(std::holds_alternative<ValidationReport>(r));
        CHECK(mentions(std::get<ValidationReport>(r), "fiber"));
    }

    SUBCASE("two-vertex fibers merge and fail the cycle check")
    {
        // The staircase with m = 2 over the 3-cycle: the two fiber edges
        // over each base vertex coincide as simplices.
        std::vector<std::vector<VertexId>> facets;
        for (VertexId u = 0; u < 3; ++u) {
            const VertexId v = (u + 1) % 3;
            for (VertexId j = 0; j < 2; ++j) {
                const VertexId k = (j + 1) % 2;
                facets.push_back({2 * u + j, 2 * u + k, 2 * v + k});
                facets.push_back({2 * u + j, 2 * v + j, 2 * v + k});
            }
        }
        const auto r = validate_bundle(make(facets), three_cycle(), fiber_map(3, 2));
        REQUIRE(std::holds_alternative<ValidationReport>(r));
        CHECK(mentions(std::get<ValidationReport>(r), "fiber"));
        CHECK_THROWS_AS(product_bundle(three_cycle(), 2), FiberTooSmall);
    }

    SUBCASE("map that is not simplicial")
    {
        const auto r = validate_bundle(make({{0, 1, 2}}), three_cycle(), {{0, 0}, {1, 1}, {2, 2}});
        REQUIRE(std::holds_alternative<ValidationReport>(r));
        CHECK(mentions(std::get<ValidationReport>(r), "[0,1,2]"));
    }

    SUBCASE("missing stalk cell")
    {
        const CircleBundle b = test::load_fixture_bundle("product_ddelta3_m3.json");
        std::vector<std::vector<VertexId>> facets;
        for (const Simplex& f : b.total().facets()) {
            facets.push_back(f.vertices());
        }
        facets.pop_back();
        const auto r = validate_bundle(make(facets), b.map().target_ptr(), b.map().vertex_map());
        CHECK(std::holds_alternative<ValidationReport>(r));
    }

    SUBCASE("base of the wrong dimension")
    {
        const auto r = validate_bundle(make({{0, 1}}), make({{0}, {1}}), {{0, 0}, {1, 1}});
        CHECK(std::holds_alternative<ValidationReport>(r));
    }
}

TEST_CASE("orientation propagation on products")
{
    const int m = 4;
    const ProductBundle p = product_bundle(std::make_shared<const SimplicialComplex>(boundary_simplex(3)), m);
    const CircleBundle b = test::expect_bundle(p.map);
    const FiberOrientation o = propagate_orientation(b, {0, 1});
    // The staircase glues fiber j to fiber j, so "j -> j+1" everywhere.
    for (VertexId v = 0; v < 4 * m; ++v) {
        CHECK(o.successor(v) == (v / m) * m + (v % m + 1) % m);
    }
    const FiberOrientation back = propagate_orientation(b, {1, 0});
    CHECK(back == o.reversed());
    CHECK(back.seed() == DirectedEdge{1, 0});

    // Seeding anywhere along the propagated orientation gives the same one.
    for (const auto& [v, w] : o.successors()) {
        CHECK(propagate_orientation(b, {v, w}) == o);
    }

    CHECK_THROWS_AS(propagate_orientation(b, {0, 2 * m}), InvalidSeed);
    CHECK_THROWS_AS(propagate_orientation(b, {0, 2}), InvalidSeed);
    CHECK_THROWS_AS(propagate_orientation(b, {0, 999}), InvalidSeed);
}

TEST_CASE("non-orientable circle bundle over a circle")
{
    std::vector<std::vector<VertexId>> facets;
    add_annulus(facets, 0, 1, false);
    add_annulus(facets, 1, 2, false);
    add_annulus(facets, 0, 2, true);
    const CircleBundle klein = test::expect_bundle(SimplicialMap(make(facets), three_cycle(), fiber_map(3, 3)));
    CHECK(klein.total().euler_characteristic() == 0);
    CHECK_THROWS_AS(propagate_orientation(klein, default_seed(klein)), NonOrientableBundleStructure);

    std::vector<std::vector<VertexId>> untwisted;
    add_annulus(untwisted, 0, 1, false);
    add_annulus(untwisted, 1, 2, true);
    add_annulus(untwisted, 0, 2, true);
    const CircleBundle torus = test::expect_bundle(SimplicialMap(make(untwisted), three_cycle(), fiber_map(3, 3)));
    CHECK_NOTHROW(propagate_orientation(torus, default_seed(torus)));
}

TEST_CASE("stalks and necklaces of a product bundle")
{
    for (int m = 3; m <= 5; ++m) {
        CAPTURE(m);
        const ProductBundle p = product_bundle(std::make_shared<const SimplicialComplex>(boundary_simplex(3)), m);
        const CircleBundle b = test::expect_bundle(p.map);
        const FiberOrientation o = propagate_orientation(b, default_seed(b));

        const ElementaryStalk edge = stalk(b, o, Simplex{1, 3});
        CHECK(edge.cells.size() == std::size_t(2 * m));
        const Necklace ew = extract_necklace(edge);
        CHECK(ew.alphabet_size() == 2);
        CHECK(ew.count(0) == std::size_t(m));
        CHECK(ew.count(1) == std::size_t(m));

        for (const Simplex& t : b.base().simplices(2)) {
            const ElementaryStalk st = stalk(b, o, t);
            CHECK(st.cells.size() == std::size_t(3 * m));
            CHECK(st.base_simplex == t);
            for (std::size_t i = 0; i < st.cells.size(); ++i) {
                CHECK(b.map().image(st.cells[i]) == t);
                const DirectedEdge e = st.collapsing_edges[i];
                CHECK(o.successor(e.from) == e.to);
                CHECK(b.map()(e.from) == st.labels[i]);
            }
            const Necklace w = extract_necklace(st);
            for (Letter a = 0; a < 3; ++a) {
                CHECK(w.count(a) == std::size_t(m));
            }
        }
    }

    const CircleBundle b = test::load_fixture_bundle("product_ddelta3_m3.json");
    const FiberOrientation o = propagate_orientation(b, default_seed(b));
    CHECK_THROWS_AS(stalk(b, o, Simplex{2}), WrongDimension);
    CHECK_THROWS_AS(stalk(b, o, Simplex{0, 1, 2, 3}), UnknownSimplex);
    CHECK_THROWS_AS(stalk(b, o, Simplex{0, 9}), UnknownSimplex);
}

TEST_CASE("necklace laws on fixture bundles")
{
    for (const char* name : {"product_ddelta3_m3.json", "product_ddelta3_m5.json", "product_octahedron_m4.json",
                             "hopf_ms.json", "twisted_trivial_12v.json"}) {
        CAPTURE(name);
        const CircleBundle b = test::load_fixture_bundle(name);
        const FiberOrientation o = propagate_orientation(b, default_seed(b));
        for (const Simplex& t : b.base().simplices(2)) {
            const Necklace w = extract_necklace(stalk(b, o, t));
            // One letter per fiber edge.
            for (Letter a = 0; a < 3; ++a) {
                CHECK(w.count(a) == b.fiber_cycle(t[a]).size());
            }
            // Reversing the fibers reverses the necklace.
            CHECK(extract_necklace(stalk(b, o.reversed(), t)) == w.reversed());
            // Each face of the triangle sees the edge necklace.
            for (Letter a = 0; a < 3; ++a) {
                const Necklace face = extract_necklace(stalk(b, o, t.facet_without(a)));
                CHECK(delete_letter(w, a) == face);
            }
        }
    }
}
