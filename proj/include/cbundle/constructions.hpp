#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cbundle/necklace.hpp"
#include "cbundle/rational.hpp"
#include "cbundle/simplicial_complex.hpp"

namespace cbundle {

// -- standard bases ---------------------------------------------------------

/// Boundary of the d-simplex on vertices 0..d.
SimplicialComplex boundary_simplex(int d);
/// 6 vertices, 8 triangles.
SimplicialComplex octahedron_boundary();
/// 12 vertices, 20 triangles.
SimplicialComplex icosahedron_boundary();
/// Minimal 6-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane_6();

// -- product bundles --------------------------------------------------------

struct ProductBundle {
    std::shared_ptr<const SimplicialComplex> total;
    SimplicialMap map;
};

/// Staircase triangulation of |base| x (m-cycle). Vertex (b, j) gets id
/// index(b) * m + j where index(b) is the position of b among the base
/// vertices. Over a k-simplex v0 < ... < vk and fiber edge j -> j+1 (mod m)
/// the prism is cut into the k+1 simplices
/// (v0,j) ... (vt,j) (vt,j+1) ... (vk,j+1).
/// Throws FiberTooSmall for m < 3.
ProductBundle product_bundle(std::shared_ptr<const SimplicialComplex> base, int m);

// -- realizations of necklaces ----------------------------------------------

/// Elementary bundle rebuilt from a necklace: one top cell per letter,
/// consecutive cells glued along surjecting faces, the fiber over letter i
/// a cycle of count(i) vertices. Vertex ids are grouped by fiber: fiber i
/// holds ids offset(i) .. offset(i) + count(i) - 1 in cyclic order.
struct Realization {
    Necklace word;
    DeltaComplex as_delta;
    /// Base letter of every vertex id.
    std::vector<Letter> fiber_of;
    /// Vertex ids per fiber, in fiber order.
    std::vector<std::vector<VertexId>> fibers;
    /// Top cells in necklace order (indices into as_delta's top layer).
    std::vector<std::size_t> top_cells;
    /// Letter of each top cell.
    std::vector<Letter> labels;

    /// is_simplicial(as_delta) and every fiber has at least 3 vertices.
    bool simplicial() const;
    /// Pairs of distinct edges with the same two endpoints.
    std::vector<DeltaComplex::Duplicate> duplicated_edges() const;
};

struct AnnulusRealization : Realization {
    const std::vector<VertexId>& top_vertices() const { return fibers[0]; }
    const std::vector<VertexId>& bottom_vertices() const { return fibers[1]; }
};

struct SolidTorusRealization : Realization {
    /// face_annuli[i] realizes delete_letter(word, i).
    std::array<AnnulusRealization, 3> face_annuli;
};

/// Requires both letters to occur.
AnnulusRealization realize_annulus(const Necklace& w);

/// Requires all three letters to occur. Throws RealizationAmbiguity if two
/// gluing rules assign different vertices to one cell.
SolidTorusRealization realize_over_triangle(const Necklace& w);

/// Cells of the realization lying over the face opposite letter i,
/// renumbered exactly as realize_annulus(delete_letter(w, i)) numbers them.
DeltaComplex restrict_to_face(const SolidTorusRealization& r, Letter i);

/// The realization as a simplicial map onto the base simplex on vertices
/// 0..k (letter i over base vertex i). Throws InvalidSimplex unless the
/// realization is simplicial.
struct RealizedBundle {
    std::shared_ptr<const SimplicialComplex> total;
    SimplicialMap map;
};
RealizedBundle as_bundle(const Realization& r);

// -- screening --------------------------------------------------------------

struct ScreenCensus {
    std::size_t screened = 0;
    std::size_t realizable = 0;
    std::size_t block_words = 0;
};

struct ScreenReport {
    std::size_t max_length = 0;
    std::map<std::size_t, ScreenCensus> by_length;
    std::size_t screened = 0;
    std::size_t realizable = 0;
    std::size_t block_words = 0;
    std::size_t block_words_rejected = 0;
    /// Block words whose realization repeats an edge.
    std::size_t block_words_with_duplicate_edge = 0;
    std::optional<Rational> max_realizable_abs;
    std::optional<Necklace> max_realizable_witness;
    /// |pC1| of the extremal block words, which are all excluded.
    Rational excluded_extremum;
    std::vector<Necklace> realizable_violators;
    std::vector<Necklace> realizable_block_words;
    std::vector<Necklace> ambiguities;

    /// Every realizable necklace is strictly inside (-1/2, 1/2) and every
    /// block word is rejected with a duplicated edge.
    bool bound_holds() const;
};

/// Screens every surjective 3-letter necklace of length <= max_length with
/// all letter counts >= 3. Throws std::invalid_argument for max_length < 9.
ScreenReport screen_realizable(std::size_t max_length);

} // namespace cbundle
