#include "cbundle/bundle.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <sstream>

#include "cbundle/errors.hpp"

namespace cbundle {

namespace {

// The unique base vertex of s with two preimages in `cell`, when `cell`
// has one more vertex than s and maps onto it.
struct Collapse {
    VertexId label;
    VertexId first;
    VertexId second;
};

std::optional<Collapse> collapse_of(const SimplicialMap& m, const Simplex& cell)
{
    std::map<VertexId, std::vector<VertexId>> over;
    for (VertexId v : cell.vertices()) {
        over[m(v)].push_back(v);
    }
    std::optional<Collapse> found;
    for (const auto& [base_vertex, preimages] : over) {
        if (preimages.size() == 2 && !found) {
            found = Collapse{base_vertex, preimages[0], preimages[1]};
        } else if (preimages.size() != 1) {
            return std::nullopt;
        }
    }
    return found;
}

// Checks that the fiber complex is one cycle on at least three vertices and
// returns it in cyclic order.
std::optional<std::vector<VertexId>> fiber_as_cycle(const SimplicialComplex& fiber, std::string& why)
{
    if (fiber.vertices().empty()) {
        why = "fiber is empty";
        return std::nullopt;
    }
    if (fiber.dimension() != 1 || !fiber.is_pure()) {
        why = "fiber is not a 1-dimensional complex";
        return std::nullopt;
    }
    std::map<VertexId, std::vector<VertexId>> adjacent;
    for (const Simplex& e : fiber.facets()) {
        adjacent[e[0]].push_back(e[1]);
        adjacent[e[1]].push_back(e[0]);
    }
    for (const auto& [v, nbrs] : adjacent) {
        if (nbrs.size() != 2) {
            why = "fiber vertex " + std::to_string(v) + " has " + std::to_string(nbrs.size()) + " fiber neighbours";
            return std::nullopt;
        }
    }
    const VertexId start = fiber.vertices().front();
    std::vector<VertexId> cycle{start};
    VertexId prev = start;
    VertexId cur = std::min(adjacent[start][0], adjacent[start][1]);
    while (cur != start) {
        cycle.push_back(cur);
        const auto& n = adjacent[cur];
        const VertexId next = n[0] == prev ? n[1] : n[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != fiber.vertices().size()) {
        why = "fiber is not a single cycle (" + std::to_string(fiber.vertices().size()) + " vertices, cycle through " +
              std::to_string(start) + " has " + std::to_string(cycle.size()) + ")";
        return std::nullopt;
    }
    if (cycle.size() < 3) {
        why = "fiber cycle has fewer than 3 vertices";
        return std::nullopt;
    }
    return cycle;
}

std::string describe(const Simplex& s) { return "base simplex " + to_string(s); }

// Conditions (b) and (c) for one base simplex of dimension 1 or 2.
void check_stalk(const SimplicialMap& m, const Simplex& s, ValidationReport& report)
{
    const int k = s.dimension();
    const std::string where = describe(s);

    std::map<Simplex, std::vector<std::size_t>> cells_on_face;
    const std::vector<Simplex> cells = preimage_facets(m, s);
    bool shape_ok = true;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Simplex& cell = cells[c];
        if (cell.dimension() != k + 1 || m.image(cell) != s) {
            report.add(where, "maximal cell " + to_string(cell) + " does not surject onto the base simplex with one collapsing edge");
            shape_ok = false;
            continue;
        }
        const auto col = collapse_of(m, cell);
        if (!col) {
            report.add(where, "cell " + to_string(cell) + " has no unique collapsing edge");
            shape_ok = false;
            continue;
        }
        for (VertexId v : {col->first, col->second}) {
            std::vector<VertexId> face;
            for (VertexId w : cell.vertices()) {
                if (w != v) {
                    face.push_back(w);
                }
            }
            cells_on_face[Simplex(std::move(face))].push_back(c);
        }
    }
    if (!shape_ok) {
        return;
    }
    if (cells.empty()) {
        report.add(where, "stalk is empty");
        return;
    }
    for (const auto& [face, owners] : cells_on_face) {
        if (owners.size() != 2) {
            report.add(where, "surjecting face " + to_string(face) + " lies on " + std::to_string(owners.size()) +
                                  " cells (expected 2)");
            shape_ok = false;
        }
    }
    if (!shape_ok) {
        return;
    }

    // Every cell has two surjecting faces and every such face two cells, so
    // the adjacency graph is a union of cycles; it must be connected.
    std::vector<std::vector<std::size_t>> adjacent(cells.size());
    for (const auto& [face, owners] : cells_on_face) {
        adjacent[owners[0]].push_back(owners[1]);
        adjacent[owners[1]].push_back(owners[0]);
    }
    std::vector<bool> seen(cells.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t c = queue.front();
        queue.pop_front();
        for (std::size_t d : adjacent[c]) {
            if (!seen[d]) {
                seen[d] = true;
                ++reached;
                queue.push_back(d);
            }
        }
    }
    if (reached != cells.size()) {
        report.add(where, "stalk cells form more than one cycle");
    }

    // Boundary compatibility: every top cell over a codimension-one face of
    // s lies on exactly one cell of this stalk.
    std::map<Simplex, int> incidence;
    for (const Simplex& cell : cells) {
        for (std::size_t i = 0; i < cell.size(); ++i) {
            Simplex face = cell.facet_without(i);
            if (m.image(face).dimension() == k - 1) {
                ++incidence[std::move(face)];
            }
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Simplex side = s.facet_without(i);
        const SimplicialComplex side_pre = preimage_subcomplex(m, side);
        for (const Simplex& t : side_pre.simplices(k)) {
            if (m.image(t) != side) {
                continue;
            }
            const auto it = incidence.find(t);
            const int count = it == incidence.end() ? 0 : it->second;
            if (count != 1) {
                report.add(where, "cell " + to_string(t) + " over face " + to_string(side) + " lies on " +
                                      std::to_string(count) + " stalk cells (expected 1)");
            }
        }
    }
}

} // namespace

const std::vector<VertexId>& CircleBundle::fiber_cycle(VertexId base_vertex) const
{
    const auto it = fibers_.find(base_vertex);
    if (it == fibers_.end()) {
        throw UnknownSimplex("no fiber over base vertex " + std::to_string(base_vertex));
    }
    return it->second;
}

BundleValidation validate_bundle(const SimplicialMap& map)
{
    ValidationReport report = validate_map(map);
    if (!report.ok()) {
        return report;
    }
    const SimplicialComplex& base = map.target();
    if (!base.is_pure() || base.dimension() < 1 || base.dimension() > 2) {
        report.add("base", "base must be a pure complex of dimension 1 or 2");
        return report;
    }

    CircleBundle bundle(map);
    for (VertexId v : base.vertices()) {
        std::string why;
        const auto cycle = fiber_as_cycle(preimage_subcomplex(map, Simplex{v}), why);
        if (cycle) {
            bundle.fibers_.emplace(v, *cycle);
        } else {
            report.add(describe(Simplex{v}), why);
        }
    }
    for (int d = 1; d <= base.dimension(); ++d) {
        for (const Simplex& s : base.simplices(d)) {
            check_stalk(map, s, report);
        }
    }
    if (!report.ok()) {
        return report;
    }
    return bundle;
}

BundleValidation validate_bundle(std::shared_ptr<const SimplicialComplex> total,
                                 std::shared_ptr<const SimplicialComplex> base,
                                 std::map<VertexId, VertexId> vertex_map)
{
    return validate_bundle(SimplicialMap(std::move(total), std::move(base), std::move(vertex_map)));
}

// ---------------------------------------------------------------------------

VertexId FiberOrientation::successor(VertexId v) const
{
    const auto it = successor_.find(v);
    if (it == successor_.end()) {
        throw MapDomainError("vertex " + std::to_string(v) + " is not on an oriented fiber");
    }
    return it->second;
}

FiberOrientation FiberOrientation::reversed() const
{
    FiberOrientation r;
    for (const auto& [v, w] : successor_) {
        r.successor_[w] = v;
    }
    r.seed_ = seed_.reversed();
    return r;
}

DirectedEdge default_seed(const CircleBundle& b)
{
    const auto& cycle = b.fiber_cycle(b.base().vertices().front());
    return {cycle[0], cycle[1]};
}

namespace {

// Cell of a stalk with its collapsing edge directed by a partial
// orientation.
struct OrientedCell {
    Simplex cell;
    VertexId label;
    VertexId tail;
    VertexId head;

    Simplex in_face() const { return without(head); }
    Simplex out_face() const { return without(tail); }

    Simplex without(VertexId x) const
    {
        std::vector<VertexId> vs;
        for (VertexId v : cell.vertices()) {
            if (v != x) {
                vs.push_back(v);
            }
        }
        return Simplex(std::move(vs));
    }
};

struct StalkGraph {
    std::vector<Simplex> cells;
    std::vector<Collapse> collapses;
    std::map<Simplex, std::vector<std::size_t>> cells_on_face;

    std::size_t other_cell(const Simplex& face, std::size_t from) const
    {
        const auto& owners = cells_on_face.at(face);
        return owners[0] == from ? owners[1] : owners[0];
    }
};

StalkGraph stalk_graph(const CircleBundle& b, const Simplex& s)
{
    StalkGraph g;
    g.cells = preimage_facets(b.map(), s);
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
        const Collapse col = *collapse_of(b.map(), g.cells[c]);
        g.collapses.push_back(col);
        for (VertexId v : {col.first, col.second}) {
            std::vector<VertexId> face;
            for (VertexId w : g.cells[c].vertices()) {
                if (w != v) {
                    face.push_back(w);
                }
            }
            g.cells_on_face[Simplex(std::move(face))].push_back(c);
        }
    }
    return g;
}

} // namespace

FiberOrientation propagate_orientation(const CircleBundle& b, DirectedEdge seed)
{
    const SimplicialMap& m = b.map();
    if (!b.total().has_vertex(seed.from) || !b.total().has_vertex(seed.to) || m(seed.from) != m(seed.to) ||
        !b.total().contains(Simplex{seed.from, seed.to})) {
        throw InvalidSeed("seed [" + std::to_string(seed.from) + ", " + std::to_string(seed.to) +
                          "] is not an edge of a vertex fiber");
    }

    FiberOrientation o;
    o.seed_ = seed;

    // succ_of[base vertex] = successor map on that fiber
    std::map<VertexId, std::map<VertexId, VertexId>> succ_of;
    auto orient_from = [&](VertexId base_vertex, VertexId tail, VertexId head) {
        const auto& cycle = b.fiber_cycle(base_vertex);
        const std::size_t n = cycle.size();
        const std::size_t i = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), tail) - cycle.begin());
        const bool forward = cycle[(i + 1) % n] == head;
        std::map<VertexId, VertexId> succ;
        for (std::size_t j = 0; j < n; ++j) {
            if (forward) {
                succ[cycle[j]] = cycle[(j + 1) % n];
            } else {
                succ[cycle[(j + 1) % n]] = cycle[j];
            }
        }
        return succ;
    };

    const VertexId root = m(seed.from);
    succ_of[root] = orient_from(root, seed.from, seed.to);
    std::map<VertexId, VertexId> parent{{root, root}};
    std::deque<VertexId> queue{root};

    auto path_to_root = [&](VertexId v) {
        std::vector<VertexId> path{v};
        while (parent.at(v) != v) {
            v = parent.at(v);
            path.push_back(v);
        }
        return path;
    };

    while (!queue.empty()) {
        const VertexId u = queue.front();
        queue.pop_front();
        for (const Simplex& e : b.base().simplices(1)) {
            if (!e.contains(u)) {
                continue;
            }
            const VertexId v = e[0] == u ? e[1] : e[0];
            const auto& succ_u = succ_of.at(u);

            // Walk the annulus over e, starting at a cell that collapses a
            // fiber-u edge, leaving through its out face.
            const StalkGraph g = stalk_graph(b, e);
            std::size_t start = g.cells.size();
            for (std::size_t c = 0; c < g.cells.size(); ++c) {
                if (g.collapses[c].label == u) {
                    start = c;
                    break;
                }
            }
            auto orient_cell = [&](std::size_t c, const Simplex& entered_by) {
                const Collapse& col = g.collapses[c];
                const bool first_is_tail = entered_by.contains(col.first);
                return OrientedCell{g.cells[c], col.label, first_is_tail ? col.first : col.second,
                                    first_is_tail ? col.second : col.first};
            };
            const Collapse& c0 = g.collapses[start];
            const bool first_is_tail = succ_u.at(c0.first) == c0.second;
            OrientedCell cur{g.cells[start], u, first_is_tail ? c0.first : c0.second,
                             first_is_tail ? c0.second : c0.first};
            std::size_t cur_index = start;
            std::map<VertexId, VertexId> succ_v;
            bool coherent = true;
            do {
                const Simplex out = cur.out_face();
                const std::size_t next_index = g.other_cell(out, cur_index);
                const OrientedCell next = orient_cell(next_index, out);
                if (next.label == u) {
                    coherent = coherent && succ_u.at(next.tail) == next.head;
                } else {
                    const auto [it, inserted] = succ_v.emplace(next.tail, next.head);
                    coherent = coherent && (inserted || it->second == next.head);
                }
                cur = next;
                cur_index = next_index;
            } while (cur_index != start);

            if (!coherent || succ_v.size() != b.fiber_cycle(v).size()) {
                throw NonOrientableBundleStructure("fiber orientation does not transport across base edge " +
                                                   to_string(e));
            }
            const auto known = succ_of.find(v);
            if (known == succ_of.end()) {
                succ_of[v] = std::move(succ_v);
                parent[v] = u;
                queue.push_back(v);
            } else if (known->second != succ_v) {
                // Close the cycle root -> ... -> u -> v -> ... -> root.
                std::vector<VertexId> cycle = path_to_root(u);
                std::reverse(cycle.begin(), cycle.end());
                for (VertexId w : path_to_root(v)) {
                    cycle.push_back(w);
                }
                std::ostringstream os;
                os << "fiber orientation reverses around base cycle";
                for (VertexId w : cycle) {
                    os << ' ' << w;
                }
                throw NonOrientableBundleStructure(os.str());
            }
        }
    }

    for (auto& [base_vertex, succ] : succ_of) {
        o.successor_.insert(succ.begin(), succ.end());
    }
    return o;
}

ElementaryStalk stalk(const CircleBundle& b, const FiberOrientation& o, const Simplex& s)
{
    if (s.dimension() < 1) {
        throw WrongDimension("stalk over a vertex is its fiber; use preimage_subcomplex");
    }
    if (!b.base().contains(s)) {
        throw UnknownSimplex(to_string(s) + " is not a base simplex");
    }
    const StalkGraph g = stalk_graph(b, s);

    auto oriented = [&](std::size_t c) {
        const Collapse& col = g.collapses[c];
        const bool first_is_tail = o.successor(col.first) == col.second;
        if (!first_is_tail && o.successor(col.second) != col.first) {
            throw NonOrientableBundleStructure("collapsing edge of " + to_string(g.cells[c]) +
                                               " is not a fiber edge");
        }
        return OrientedCell{g.cells[c], col.label, first_is_tail ? col.first : col.second,
                            first_is_tail ? col.second : col.first};
    };

    const VertexId anchor_base = s[0];
    const auto& anchor_fiber = b.fiber_cycle(anchor_base);
    const VertexId anchor = *std::min_element(anchor_fiber.begin(), anchor_fiber.end());
    const VertexId anchor_next = o.successor(anchor);
    std::size_t start = g.cells.size();
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
        const Collapse& col = g.collapses[c];
        if (col.label == anchor_base && Simplex{col.first, col.second} == Simplex{anchor, anchor_next}) {
            start = c;
            break;
        }
    }
    if (start == g.cells.size()) {
        throw NonOrientableBundleStructure("no stalk cell collapses fiber edge [" + std::to_string(anchor) + ", " +
                                           std::to_string(anchor_next) + "]");
    }

    ElementaryStalk st;
    st.base_simplex = s;
    std::size_t index = start;
    OrientedCell cur = oriented(index);
    do {
        st.cells.push_back(cur.cell);
        st.labels.push_back(cur.label);
        st.collapsing_edges.push_back({cur.tail, cur.head});
        const Simplex out = cur.out_face();
        index = g.other_cell(out, index);
        cur = oriented(index);
        if (cur.in_face() != out) {
            throw NonOrientableBundleStructure("fiber orientation is incoherent over " + to_string(s));
        }
    } while (index != start);
    if (st.cells.size() != g.cells.size()) {
        throw NonOrientableBundleStructure("stalk over " + to_string(s) + " is not a single oriented cycle");
    }
    return st;
}

Necklace extract_necklace(const ElementaryStalk& st)
{
    std::vector<Letter> letters;
    letters.reserve(st.labels.size());
    for (VertexId label : st.labels) {
        const auto& vs = st.base_simplex.vertices();
        letters.push_back(static_cast<Letter>(std::find(vs.begin(), vs.end(), label) - vs.begin()));
    }
    return Necklace(std::move(letters), static_cast<int>(st.base_simplex.size()));
}

} // namespace cbundle
