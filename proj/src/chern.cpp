#include "cbundle/chern.hpp"

#include <deque>

#include "cbundle/errors.hpp"

namespace cbundle {

int SurfaceOrientation::sign(const Simplex& triangle) const
{
    const auto it = signs_.find(triangle);
    if (it == signs_.end()) {
        throw UnknownSimplex(to_string(triangle) + " is not an oriented triangle");
    }
    return it->second;
}

SurfaceOrientation SurfaceOrientation::flipped() const
{
    SurfaceOrientation f = *this;
    for (auto& [t, s] : f.signs_) {
        s = -s;
    }
    return f;
}

namespace {

// Coefficient of the edge opposite vertex i in the boundary of an
// ascending triangle.
int boundary_coefficient(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

int edge_coefficient(const Simplex& triangle, const Simplex& edge)
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (!edge.contains(triangle[i])) {
            return boundary_coefficient(i);
        }
    }
    return 0;
}

} // namespace

SurfaceOrientation orient_closed_surface(const SimplicialComplex& base)
{
    if (base.dimension() != 2 || !base.is_pure()) {
        throw NotClosedSurface("base is not a pure 2-dimensional complex");
    }
    const auto& triangles = base.facets();
    std::map<Simplex, std::vector<std::size_t>> on_edge;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        for (std::size_t i = 0; i < 3; ++i) {
            on_edge[triangles[t].facet_without(i)].push_back(t);
        }
    }
    for (const auto& [edge, owners] : on_edge) {
        if (owners.size() != 2) {
            throw NotClosedSurface("edge " + to_string(edge) + " lies on " + std::to_string(owners.size()) +
                                   " triangles");
        }
    }

    std::vector<int> sign(triangles.size(), 0);
    for (std::size_t root = 0; root < triangles.size(); ++root) {
        if (sign[root] != 0) {
            continue;
        }
        sign[root] = 1; // facets are sorted, so this is the component's least triangle
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t t = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < 3; ++i) {
                const Simplex edge = triangles[t].facet_without(i);
                const auto& owners = on_edge.at(edge);
                const std::size_t u = owners[0] == t ? owners[1] : owners[0];
                const int want = -sign[t] * boundary_coefficient(i) * edge_coefficient(triangles[u], edge);
                if (sign[u] == 0) {
                    sign[u] = want;
                    queue.push_back(u);
                } else if (sign[u] != want) {
                    throw NonOrientable("orientation clash across edge " + to_string(edge));
                }
            }
        }
    }

    SurfaceOrientation so;
    for (std::size_t t = 0; t < triangles.size(); ++t) {
        so.signs_.emplace(triangles[t], sign[t]);
    }
    return so;
}

ChernResult chern_number(const CircleBundle& b, const FiberOrientation& o, const SurfaceOrientation& so)
{
    ChernResult result;
    result.orientation_seed = o.seed();
    for (const Simplex& t : b.base().simplices(2)) {
        Necklace w = extract_necklace(stalk(b, o, t));
        const Rational local = chern_local(w);
        const int sign = so.sign(t);
        result.signed_sum += sign * local;
        result.per_simplex.push_back({t, std::move(w), local, sign});
    }
    if (!is_integer(result.signed_sum)) {
        throw IntegralityViolation("signed sum of local values is " + to_string(result.signed_sum));
    }
    result.integer_value = static_cast<long>(result.signed_sum.numerator());
    result.absolute_value = result.integer_value < 0 ? -result.integer_value : result.integer_value;
    return result;
}

bool strictly_below_half(const Rational& value) { return abs(value) < Rational(1, 2); }

BoundReport verify_bound(const std::vector<std::pair<Simplex, Necklace>>& stalks)
{
    BoundReport report;
    for (const auto& [simplex, necklace] : stalks) {
        const Rational value = chern_local(necklace);
        BoundEntry entry{simplex, necklace, value, strictly_below_half(value)};
        if (!entry.strictly_inside) {
            report.violators.push_back(entry);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

BoundReport verify_bound(const CircleBundle& b, const FiberOrientation& o)
{
    std::vector<std::pair<Simplex, Necklace>> stalks;
    for (const Simplex& t : b.base().simplices(2)) {
        stalks.emplace_back(t, extract_necklace(stalk(b, o, t)));
    }
    return verify_bound(stalks);
}

} // namespace cbundle
