#include "cbundle/bundle_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "cbundle/constructions.hpp"
#include "cbundle/errors.hpp"

namespace cbundle {

using nlohmann::json;

namespace {

VertexId read_vertex(const json& j, const std::string& where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xffffffffLL) {
        throw FormatError(where + ": expected a non-negative integer vertex id");
    }
    return static_cast<VertexId>(j.get<long long>());
}

std::vector<std::vector<VertexId>> read_facets(const json& j, const std::string& where)
{
    if (!j.is_array() || j.empty()) {
        throw FormatError(where + ": expected a nonempty list of facets");
    }
    std::vector<std::vector<VertexId>> facets;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!j[i].is_array() || j[i].empty()) {
            throw FormatError(at + ": expected a nonempty list of vertex ids");
        }
        std::vector<VertexId> facet;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            facet.push_back(read_vertex(j[i][k], at + "[" + std::to_string(k) + "]"));
        }
        facets.push_back(std::move(facet));
    }
    return facets;
}

std::pair<VertexId, VertexId> read_pair(const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 2) {
        throw FormatError(where + ": expected a pair [a, b]");
    }
    return {read_vertex(j[0], where + "[0]"), read_vertex(j[1], where + "[1]")};
}

SimplicialComplex build_at(const std::vector<std::vector<VertexId>>& facets, const std::string& where)
{
    for (std::size_t i = 0; i < facets.size(); ++i) {
        try {
            Simplex check(facets[i]);
        } catch (const InvalidSimplex& e) {
            throw FormatError(where + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return build_complex(facets);
}

} // namespace

BundleFile parse_bundle_file(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("JSON syntax error at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw FormatError("top level: expected a JSON object");
    }
    static const std::set<std::string> known{"format_version", "base", "total", "vertex_map", "orientation_seed"};
    for (const auto& [key, value] : doc.items()) {
        if (known.count(key) == 0) {
            throw FormatError("unknown field \"" + key + "\"");
        }
    }
    for (const char* required : {"format_version", "base", "total", "vertex_map"}) {
        if (!doc.contains(required)) {
            throw FormatError(std::string("missing field \"") + required + "\"");
        }
    }

    BundleFile file;
    if (!doc["format_version"].is_string() || doc["format_version"].get<std::string>() != BundleFile::current_version) {
        throw FormatError(std::string("format_version: unsupported (expected \"") + BundleFile::current_version + "\")");
    }
    file.format_version = doc["format_version"].get<std::string>();

    const json& base = doc["base"];
    if (base.is_object()) {
        if (base.size() != 1 || !base.contains("boundary-simplex")) {
            throw FormatError("base: expected {\"boundary-simplex\": d} or a facet list");
        }
        const json& d = base["boundary-simplex"];
        if (!d.is_number_integer() || d.get<int>() < 1) {
            throw FormatError("base.boundary-simplex: expected a positive integer");
        }
        file.base_boundary_simplex = d.get<int>();
    } else {
        file.base_facets = read_facets(base, "base");
    }

    file.total = read_facets(doc["total"], "total");

    const json& vm = doc["vertex_map"];
    if (!vm.is_array()) {
        throw FormatError("vertex_map: expected a list of [total, base] pairs");
    }
    std::set<VertexId> mapped;
    for (std::size_t i = 0; i < vm.size(); ++i) {
        const std::string at = "vertex_map[" + std::to_string(i) + "]";
        auto entry = read_pair(vm[i], at);
        if (!mapped.insert(entry.first).second) {
            throw FormatError(at + ": vertex " + std::to_string(entry.first) + " mapped twice");
        }
        file.vertex_map.push_back(entry);
    }

    if (doc.contains("orientation_seed")) {
        const auto [from, to] = read_pair(doc["orientation_seed"], "orientation_seed");
        file.orientation_seed = DirectedEdge{from, to};
    }
    return file;
}

BundleFile read_bundle_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError(path.string() + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_bundle_file(buffer.str());
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

namespace {

// Lists of small arrays, several per line.
template <typename Rows>
void write_rows(std::ostream& os, const Rows& rows, std::size_t per_line)
{
    os << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i == 0 ? "\n    " : i % per_line == 0 ? ",\n    " : ", ") << json(rows[i]).dump();
    }
    os << "\n  ]";
}

} // namespace

std::string to_json(const BundleFile& file)
{
    std::ostringstream os;
    os << "{\n  \"format_version\": " << json(file.format_version).dump() << ",\n  \"base\": ";
    if (file.base_boundary_simplex) {
        os << json{{"boundary-simplex", *file.base_boundary_simplex}}.dump();
    } else {
        write_rows(os, file.base_facets, 6);
    }
    os << ",\n  \"total\": ";
    write_rows(os, file.total, 6);
    os << ",\n  \"vertex_map\": ";
    write_rows(os, file.vertex_map, 8);
    if (file.orientation_seed) {
        os << ",\n  \"orientation_seed\": " << json{file.orientation_seed->from, file.orientation_seed->to}.dump();
    }
    os << "\n}\n";
    return os.str();
}

void write_bundle_file(const std::filesystem::path& path, const BundleFile& file)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError(path.string() + ": cannot write file");
    }
    out << to_json(file);
}

LoadedBundle load_bundle(const BundleFile& file)
{
    LoadedBundle loaded;
    if (file.base_boundary_simplex) {
        loaded.base = std::make_shared<const SimplicialComplex>(boundary_simplex(*file.base_boundary_simplex));
    } else {
        loaded.base = std::make_shared<const SimplicialComplex>(build_at(file.base_facets, "base"));
    }
    loaded.total = std::make_shared<const SimplicialComplex>(build_at(file.total, "total"));
    for (const auto& [t, b] : file.vertex_map) {
        loaded.vertex_map.emplace(t, b);
    }
    loaded.orientation_seed = file.orientation_seed;
    return loaded;
}

BundleFile make_bundle_file(const SimplicialMap& map, std::optional<DirectedEdge> seed)
{
    BundleFile file;
    if (map.target() == boundary_simplex(3)) {
        file.base_boundary_simplex = 3;
    } else {
        for (const Simplex& f : map.target().facets()) {
            file.base_facets.push_back(f.vertices());
        }
    }
    for (const Simplex& f : map.source().facets()) {
        file.total.push_back(f.vertices());
    }
    for (const auto& entry : map.vertex_map()) {
        file.vertex_map.push_back(entry);
    }
    file.orientation_seed = seed;
    return file;
}

} // namespace cbundle
