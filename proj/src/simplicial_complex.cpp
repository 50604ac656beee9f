#include "cbundle/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "cbundle/errors.hpp"

namespace cbundle {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.empty()) {
        throw InvalidSimplex("empty simplex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        std::ostringstream os;
        os << "repeated vertex in simplex [";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            os << (i ? "," : "") << vertices_[i];
        }
        os << "]";
        throw InvalidSimplex(os.str());
    }
}

bool Simplex::contains(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const
{
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Simplex Simplex::facet_without(std::size_t i) const
{
    std::vector<VertexId> rest;
    rest.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
        if (j != i) {
            rest.push_back(vertices_[j]);
        }
    }
    return Simplex(std::move(rest));
}

std::vector<Simplex> Simplex::faces() const
{
    const std::size_t n = vertices_.size();
    std::vector<Simplex> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        // Subsequences of a sorted list are sorted; skip revalidation.
        Simplex face;
        face.vertices_.reserve(static_cast<std::size_t>(std::popcount(mask)));
        for (std::size_t j = 0; j < n; ++j) {
            if (mask & (std::size_t{1} << j)) {
                face.vertices_.push_back(vertices_[j]);
            }
        }
        out.push_back(std::move(face));
    }
    return out;
}

std::string to_string(const Simplex& s)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s[i];
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------

bool SimplicialComplex::is_pure() const
{
    const int d = dimension();
    return std::all_of(facets_.begin(), facets_.end(), [d](const Simplex& f) { return f.dimension() == d; });
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension()) {
        return none;
    }
    return faces_[static_cast<std::size_t>(d)];
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    const auto& layer = simplices(s.dimension());
    return std::binary_search(layer.begin(), layer.end(), s);
}

bool SimplicialComplex::has_vertex(VertexId v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& layer : faces_) {
        f.push_back(layer.size());
    }
    return f;
}

long SimplicialComplex::euler_characteristic() const
{
    long chi = 0;
    long sign = 1;
    for (const auto& layer : faces_) {
        chi += sign * static_cast<long>(layer.size());
        sign = -sign;
    }
    return chi;
}

SimplicialComplex complex_from_simplices(const std::vector<Simplex>& input)
{
    // covered[d]: d-faces of strictly larger inputs; an input found there is
    // absorbed. faces[d]: every d-face of every input.
    std::vector<std::vector<Simplex>> covered;
    std::vector<std::vector<Simplex>> faces;
    for (const Simplex& s : input) {
        const auto top = static_cast<std::size_t>(s.dimension());
        if (faces.size() <= top) {
            faces.resize(top + 1);
            covered.resize(top + 1);
        }
        for (Simplex& face : s.faces()) {
            const auto d = static_cast<std::size_t>(face.dimension());
            if (d < top) {
                covered[d].push_back(face);
            }
            faces[d].push_back(std::move(face));
        }
    }
    auto normalize = [](std::vector<Simplex>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };

    SimplicialComplex complex;
    for (std::size_t d = 0; d < faces.size(); ++d) {
        normalize(faces[d]);
        normalize(covered[d]);
    }
    std::vector<Simplex> inputs = input;
    normalize(inputs);
    for (const Simplex& s : inputs) {
        const auto& c = covered[static_cast<std::size_t>(s.dimension())];
        if (!std::binary_search(c.begin(), c.end(), s)) {
            complex.facets_.push_back(s);
        }
    }
    complex.faces_ = std::move(faces);
    if (!complex.faces_.empty()) {
        for (const Simplex& v : complex.faces_[0]) {
            complex.vertices_.push_back(v[0]);
        }
    }
    return complex;
}

SimplicialComplex build_complex(const std::vector<std::vector<VertexId>>& facets)
{
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
        simplices.emplace_back(f);
    }
    return complex_from_simplices(simplices);
}

// ---------------------------------------------------------------------------

DeltaComplex::DeltaComplex(std::vector<std::vector<Cell>> cells) : cells_(std::move(cells))
{
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        std::map<std::vector<VertexId>, std::size_t> seen;
        for (std::size_t c = 0; c < cells_[d].size(); ++c) {
            const Cell& cell = cells_[d][c];
            if (cell.vertices.size() != d + 1) {
                throw InvalidDeltaComplex("cell " + std::to_string(c) + " of dimension " + std::to_string(d) +
                                          " has " + std::to_string(cell.vertices.size()) + " vertices");
            }
            if (d == 0) {
                if (!cell.boundary.empty()) {
                    throw InvalidDeltaComplex("0-cell with boundary");
                }
            } else {
                if (cell.boundary.size() != d + 1) {
                    throw InvalidDeltaComplex("cell " + std::to_string(c) + " of dimension " + std::to_string(d) +
                                              " has wrong boundary size");
                }
                for (std::size_t i = 0; i <= d; ++i) {
                    const std::size_t b = cell.boundary[i];
                    if (b >= cells_[d - 1].size()) {
                        throw InvalidDeltaComplex("boundary index out of range");
                    }
                    std::vector<VertexId> expected = cell.vertices;
                    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(i));
                    if (cells_[d - 1][b].vertices != expected) {
                        throw InvalidDeltaComplex("face " + std::to_string(i) + " of " + std::to_string(d) +
                                                  "-cell " + std::to_string(c) + " has mismatched vertices");
                    }
                }
            }

            std::vector<VertexId> key = cell.vertices;
            std::sort(key.begin(), key.end());
            if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
                degenerate_.emplace_back(static_cast<int>(d), c);
            }
            auto [it, inserted] = seen.emplace(std::move(key), c);
            if (!inserted) {
                duplicates_.push_back({static_cast<int>(d), it->second, c});
            }
        }
    }
    simplicial_ = degenerate_.empty() && duplicates_.empty();
}

DeltaComplex DeltaComplex::from_complex(const SimplicialComplex& complex)
{
    std::vector<std::vector<Cell>> cells(static_cast<std::size_t>(complex.dimension() + 1));
    for (int d = 0; d <= complex.dimension(); ++d) {
        const auto& layer = complex.simplices(d);
        const auto& lower = complex.simplices(d - 1);
        for (const Simplex& s : layer) {
            Cell cell{s.vertices(), {}};
            if (d > 0) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    const auto it = std::lower_bound(lower.begin(), lower.end(), s.facet_without(i));
                    cell.boundary.push_back(static_cast<std::size_t>(it - lower.begin()));
                }
            }
            cells[static_cast<std::size_t>(d)].push_back(std::move(cell));
        }
    }
    return DeltaComplex(std::move(cells));
}

const std::vector<DeltaComplex::Cell>& DeltaComplex::cells(int d) const
{
    static const std::vector<Cell> none;
    if (d < 0 || d > dimension()) {
        return none;
    }
    return cells_[static_cast<std::size_t>(d)];
}

std::vector<std::size_t> DeltaComplex::f_vector() const
{
    std::vector<std::size_t> f;
    for (const auto& layer : cells_) {
        f.push_back(layer.size());
    }
    return f;
}

bool is_simplicial(const DeltaComplex& d) { return d.simplicial_flag(); }

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target,
                             std::map<VertexId, VertexId> vertex_map)
    : source_(std::move(source)), target_(std::move(target)), vertex_map_(std::move(vertex_map))
{
}

VertexId SimplicialMap::operator()(VertexId v) const
{
    const auto it = vertex_map_.find(v);
    if (it == vertex_map_.end()) {
        throw MapDomainError("vertex " + std::to_string(v) + " has no image");
    }
    return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const
{
    std::vector<VertexId> img;
    img.reserve(s.size());
    for (VertexId v : s.vertices()) {
        img.push_back((*this)(v));
    }
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return Simplex(std::move(img));
}

ValidationReport validate_map(const SimplicialMap& m)
{
    for (VertexId v : m.source().vertices()) {
        const VertexId w = m(v);
        if (!m.target().has_vertex(w)) {
            throw MapDomainError("vertex " + std::to_string(v) + " maps to " + std::to_string(w) +
                                 ", which is not a target vertex");
        }
    }
    ValidationReport report;
    for (int d = 1; d <= m.source().dimension(); ++d) {
        for (const Simplex& s : m.source().simplices(d)) {
            const Simplex img = m.image(s);
            if (!m.target().contains(img)) {
                report.add(to_string(s), "image " + to_string(img) + " is not a target simplex");
            }
        }
    }
    return report;
}

std::vector<Simplex> preimage_facets(const SimplicialMap& m, const Simplex& s)
{
    if (!m.target().contains(s)) {
        throw UnknownSimplex(to_string(s) + " is not a simplex of the target");
    }
    // The full subcomplex on a vertex set W is generated by the traces
    // facet ∩ W of the source facets; its facets are the maximal traces.
    std::vector<VertexId> over;
    for (VertexId v : m.source().vertices()) {
        if (s.contains(m(v))) {
            over.push_back(v);
        }
    }
    std::vector<Simplex> traces;
    for (const Simplex& f : m.source().facets()) {
        std::vector<VertexId> kept;
        kept.reserve(f.size());
        std::set_intersection(f.vertices().begin(), f.vertices().end(), over.begin(), over.end(),
                              std::back_inserter(kept));
        if (!kept.empty()) {
            traces.emplace_back(std::move(kept));
        }
    }
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    std::vector<Simplex> maximal;
    for (const Simplex& t : traces) {
        const bool absorbed = std::any_of(traces.begin(), traces.end(), [&](const Simplex& u) {
            return u.size() > t.size() && t.is_face_of(u);
        });
        if (!absorbed) {
            maximal.push_back(t);
        }
    }
    return maximal;
}

SimplicialComplex preimage_subcomplex(const SimplicialMap& m, const Simplex& s)
{
    return complex_from_simplices(preimage_facets(m, s));
}

} // namespace cbundle
