#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "cbundle/necklace.hpp"
#include "cbundle/simplicial_complex.hpp"

namespace cbundle {

struct DirectedEdge {
    VertexId from;
    VertexId to;

    DirectedEdge reversed() const { return {to, from}; }
    bool operator==(const DirectedEdge&) const = default;
};

/// A simplicial map total -> base that passed validate_bundle.
///
/// Over every base vertex the fiber is a simplicial cycle with at least
/// three vertices; over every base edge or triangle the stalk is a cyclic
/// chain of top cells, each with exactly one collapsing edge.
class CircleBundle {
public:
    const SimplicialComplex& total() const { return map_.source(); }
    const SimplicialComplex& base() const { return map_.target(); }
    const SimplicialMap& map() const { return map_; }

    /// Fiber vertices over a base vertex in cyclic order, starting at the
    /// least vertex and continuing to its smaller neighbor.
    const std::vector<VertexId>& fiber_cycle(VertexId base_vertex) const;

private:
    explicit CircleBundle(SimplicialMap map) : map_(std::move(map)) {}
    friend std::variant<CircleBundle, ValidationReport> validate_bundle(const SimplicialMap& map);

    SimplicialMap map_;
    std::map<VertexId, std::vector<VertexId>> fibers_;
};

using BundleValidation = std::variant<CircleBundle, ValidationReport>;

/// Checks, in order: (a) every vertex fiber is one cycle on >= 3 vertices;
/// (b) over every base edge the maximal stalk cells are triangles onto the
/// edge forming one cycle under shared surjecting edges, and every fiber
/// edge at either end is the collapsing edge of exactly one of them;
/// (c) likewise over every base triangle with tetrahedra glued along
/// surjecting triangles, each edge-stalk triangle lying on exactly one
/// tetrahedron. Failures are itemized by base simplex.
///
/// The map must pass validate_map and the base must be pure of dimension 1
/// or 2; violations of either are reported rather than thrown.
BundleValidation validate_bundle(const SimplicialMap& map);
BundleValidation validate_bundle(std::shared_ptr<const SimplicialComplex> total,
                                 std::shared_ptr<const SimplicialComplex> base,
                                 std::map<VertexId, VertexId> vertex_map);

/// Cyclic direction on every vertex fiber.
class FiberOrientation {
public:
    /// Successor of a total-space vertex along its fiber.
    VertexId successor(VertexId v) const;
    const DirectedEdge& seed() const { return seed_; }
    const std::map<VertexId, VertexId>& successors() const { return successor_; }

    FiberOrientation reversed() const;

    bool operator==(const FiberOrientation& other) const { return successor_ == other.successor_; }

private:
    friend FiberOrientation propagate_orientation(const CircleBundle& b, DirectedEdge seed);

    std::map<VertexId, VertexId> successor_;
    DirectedEdge seed_{};
};

/// Least fiber vertex over the least base vertex, pointing to its smaller
/// neighbor.
DirectedEdge default_seed(const CircleBundle& b);

/// Transports the seed direction breadth-first across base edges through
/// the annulus over each edge. Throws InvalidSeed if the seed is not a
/// fiber edge and NonOrientableBundleStructure (naming a base vertex cycle)
/// if transport comes back reversed.
FiberOrientation propagate_orientation(const CircleBundle& b, DirectedEdge seed);

/// Top cells of the bundle over one base edge or triangle, in oriented
/// cyclic order.
struct ElementaryStalk {
    Simplex base_simplex;
    std::vector<Simplex> cells;
    /// Base vertex onto which each cell's collapsing edge collapses.
    std::vector<VertexId> labels;
    /// Collapsing edge of each cell, directed by the fiber orientation.
    std::vector<DirectedEdge> collapsing_edges;
};

/// The cycle starts at the cell collapsing the fiber edge that leaves the
/// least vertex over the least vertex of s, and runs in the direction the
/// fiber orientation dictates.
/// Throws WrongDimension for a vertex, UnknownSimplex if s is not in the
/// base, NonOrientableBundleStructure if the orientation is incoherent on s.
ElementaryStalk stalk(const CircleBundle& b, const FiberOrientation& o, const Simplex& s);

/// Cyclic word of cell labels, letter i standing for the i-th vertex of the
/// base simplex.
Necklace extract_necklace(const ElementaryStalk& st);

} // namespace cbundle
