#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cbundle/bundle.hpp"
#include "cbundle/simplicial_complex.hpp"

namespace cbundle {

/// On-disk description of a triangulated bundle (JSON):
///
///     {
///       "format_version": "1",
///       "base": {"boundary-simplex": 3}      or   [[0,1,2], ...],
///       "total": [[0,1,4,5], ...],
///       "vertex_map": [[0,0], [1,0], ...],
///       "orientation_seed": [0, 1]            (optional)
///     }
///
/// Unknown fields are rejected.
struct BundleFile {
    static constexpr const char* current_version = "1";

    std::string format_version = current_version;
    /// Set when the base is given by the "boundary-simplex" shortcut.
    std::optional<int> base_boundary_simplex;
    std::vector<std::vector<VertexId>> base_facets;
    std::vector<std::vector<VertexId>> total;
    std::vector<std::pair<VertexId, VertexId>> vertex_map;
    std::optional<DirectedEdge> orientation_seed;

    bool operator==(const BundleFile&) const = default;
};

/// Throws FormatError naming the offending location.
BundleFile parse_bundle_file(std::string_view text);
BundleFile read_bundle_file(const std::filesystem::path& path);

std::string to_json(const BundleFile& file);
void write_bundle_file(const std::filesystem::path& path, const BundleFile& file);

/// Complexes and map built from a file. Throws FormatError (with the
/// facet's location) when a facet is not a simplex.
struct LoadedBundle {
    std::shared_ptr<const SimplicialComplex> base;
    std::shared_ptr<const SimplicialComplex> total;
    std::map<VertexId, VertexId> vertex_map;
    std::optional<DirectedEdge> orientation_seed;

    SimplicialMap map() const { return SimplicialMap(total, base, vertex_map); }
};

LoadedBundle load_bundle(const BundleFile& file);

/// File for a bundle given by a map; the base is written with the
/// boundary-simplex shortcut when it is exactly the boundary of the
/// 3-simplex on vertices 0..3.
BundleFile make_bundle_file(const SimplicialMap& map, std::optional<DirectedEdge> seed = std::nullopt);

} // namespace cbundle
