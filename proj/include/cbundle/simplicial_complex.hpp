#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace cbundle {

using VertexId = std::uint32_t;

/// An ordered simplex: a nonempty, strictly increasing list of vertex ids.
class Simplex {
public:
    Simplex() = default;

    /// Sorts the input. Throws InvalidSimplex on an empty list or a repeated
    /// vertex.
    explicit Simplex(std::vector<VertexId> vertices);
    explicit Simplex(std::initializer_list<VertexId> vertices)
        : Simplex(std::vector<VertexId>(vertices)) {}

    const std::vector<VertexId>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(VertexId v) const;
    /// True iff every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const;

    /// The codimension-one face obtained by dropping the i-th vertex.
    Simplex facet_without(std::size_t i) const;

    /// All nonempty faces, including the simplex itself.
    std::vector<Simplex> faces() const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<VertexId> vertices_;
};

std::string to_string(const Simplex& s);

/// Finite abstract simplicial complex given by its maximal simplices.
///
/// Immutable once built. The full face index is materialized at
/// construction, sorted per dimension, so lookups are binary searches and
/// concurrent readers never race.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }

    /// Highest facet dimension, -1 for the empty complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    bool is_pure() const;

    /// Every simplex of dimension d, sorted lexicographically.
    const std::vector<Simplex>& simplices(int d) const;
    bool contains(const Simplex& s) const;
    bool has_vertex(VertexId v) const;

    /// Number of simplices per dimension.
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    friend SimplicialComplex complex_from_simplices(const std::vector<Simplex>& facets);

    std::vector<VertexId> vertices_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> faces_;
};

/// Builds a complex from a facet list. Facets are sorted and deduplicated,
/// and entries contained in another entry are absorbed.
/// Throws InvalidSimplex if a facet is empty or repeats a vertex.
SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& facets);
/// Same, from already-validated simplices.
SimplicialComplex complex_from_simplices(const std::vector<Simplex>& facets);

/// Semi-simplicial complex. Cells of equal dimension may share a vertex set
/// and a cell may repeat a vertex; both are what the simplicial flag
/// records.
class DeltaComplex {
public:
    struct Cell {
        /// Ordered vertex list, dimension + 1 entries; repeats allowed.
        std::vector<VertexId> vertices;
        /// Index into the (dimension - 1) cell list of the face opposite
        /// vertex i. Empty for 0-cells.
        std::vector<std::size_t> boundary;

        bool operator==(const Cell&) const = default;
    };

    /// A pair of distinct cells of one dimension with equal vertex sets.
    struct Duplicate {
        int dimension;
        std::size_t first;
        std::size_t second;
    };

    DeltaComplex() = default;
    /// cells[d] lists the d-cells. Throws InvalidDeltaComplex if a boundary
    /// index is out of range or a boundary cell's vertices are not the
    /// corresponding face of the cell's vertices.
    explicit DeltaComplex(std::vector<std::vector<Cell>> cells);

    static DeltaComplex from_complex(const SimplicialComplex& complex);

    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    const std::vector<Cell>& cells(int d) const;
    std::vector<std::size_t> f_vector() const;

    bool simplicial_flag() const { return simplicial_; }
    /// Cells with a repeated vertex, as (dimension, index).
    const std::vector<std::pair<int, std::size_t>>& degenerate_cells() const { return degenerate_; }
    const std::vector<Duplicate>& duplicates() const { return duplicates_; }

    bool operator==(const DeltaComplex& other) const { return cells_ == other.cells_; }

private:
    std::vector<std::vector<Cell>> cells_;
    bool simplicial_ = true;
    std::vector<std::pair<int, std::size_t>> degenerate_;
    std::vector<Duplicate> duplicates_;
};

/// True iff every cell has distinct vertices and no two distinct cells of
/// one dimension share a vertex set.
bool is_simplicial(const DeltaComplex& d);

/// Vertex map between two complexes; the induced map on simplices may
/// collapse vertices.
class SimplicialMap {
public:
    SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                  std::shared_ptr<const SimplicialComplex> target,
                  std::map<VertexId, VertexId> vertex_map);

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    const std::shared_ptr<const SimplicialComplex>& source_ptr() const { return source_; }
    const std::shared_ptr<const SimplicialComplex>& target_ptr() const { return target_; }
    const std::map<VertexId, VertexId>& vertex_map() const { return vertex_map_; }

    /// Throws MapDomainError if v is not in the domain.
    VertexId operator()(VertexId v) const;
    /// Image vertex set (sorted, duplicates collapsed).
    Simplex image(const Simplex& s) const;

private:
    std::shared_ptr<const SimplicialComplex> source_;
    std::shared_ptr<const SimplicialComplex> target_;
    std::map<VertexId, VertexId> vertex_map_;
};

struct ValidationIssue {
    std::string where;
    std::string what;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string where, std::string what) { issues.push_back({std::move(where), std::move(what)}); }
};

/// Lists every source simplex whose image is not a target simplex.
/// Throws MapDomainError when a source vertex is unmapped or maps outside
/// the target's vertex set.
ValidationReport validate_map(const SimplicialMap& m);

/// Full subcomplex of the source on the simplices whose image lies in the
/// closed simplex s. Throws UnknownSimplex if s is not in the target.
SimplicialComplex preimage_subcomplex(const SimplicialMap& m, const Simplex& s);

/// Facets of preimage_subcomplex(m, s), sorted, without building its face
/// index. Throws UnknownSimplex if s is not in the target.
std::vector<Simplex> preimage_facets(const SimplicialMap& m, const Simplex& s);

} // namespace cbundle
