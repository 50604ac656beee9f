#include "cbundle/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "cbundle/chern.hpp"
#include "cbundle/errors.hpp"

namespace cbundle {

SimplicialComplex boundary_simplex(int d)
{
    if (d < 1) {
        throw InvalidSimplex("boundary of a simplex needs dimension >= 1");
    }
    std::vector<std::vector<VertexId>> facets;
    for (int skip = d; skip >= 0; --skip) {
        std::vector<VertexId> f;
        for (int v = 0; v <= d; ++v) {
            if (v != skip) {
                f.push_back(static_cast<VertexId>(v));
            }
        }
        facets.push_back(std::move(f));
    }
    return build_complex(facets);
}

SimplicialComplex octahedron_boundary()
{
    // apexes 0 and 5 over the equator 1-2-3-4
    return build_complex(std::vector<std::vector<VertexId>>{
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
}

SimplicialComplex icosahedron_boundary()
{
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    std::vector<std::vector<VertexId>> facets;
    for (VertexId i = 0; i < 5; ++i) {
        const VertexId u = 1 + i;
        const VertexId u_next = 1 + (i + 1) % 5;
        const VertexId l = 6 + i;
        const VertexId l_next = 6 + (i + 1) % 5;
        facets.push_back({0, u, u_next});
        facets.push_back({11, l, l_next});
        facets.push_back({u, u_next, l});
        facets.push_back({l, l_next, u_next});
    }
    return build_complex(facets);
}

SimplicialComplex projective_plane_6()
{
    return build_complex(std::vector<std::vector<VertexId>>{
        {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

// ---------------------------------------------------------------------------

ProductBundle product_bundle(std::shared_ptr<const SimplicialComplex> base, int m)
{
    if (m < 3) {
        throw FiberTooSmall("fiber cycle needs at least 3 vertices, got " + std::to_string(m));
    }
    const auto& base_vertices = base->vertices();
    auto index_of = [&](VertexId b) {
        return static_cast<VertexId>(std::lower_bound(base_vertices.begin(), base_vertices.end(), b) -
                                     base_vertices.begin());
    };
    const auto fiber_size = static_cast<VertexId>(m);
    auto vertex = [&](VertexId b, VertexId j) { return index_of(b) * fiber_size + j % fiber_size; };

    std::vector<std::vector<VertexId>> facets;
    for (const Simplex& f : base->facets()) {
        for (VertexId j = 0; j < fiber_size; ++j) {
            for (std::size_t t = 0; t < f.size(); ++t) {
                std::vector<VertexId> cell;
                for (std::size_t a = 0; a <= t; ++a) {
                    cell.push_back(vertex(f[a], j));
                }
                for (std::size_t a = t; a < f.size(); ++a) {
                    cell.push_back(vertex(f[a], j + 1));
                }
                facets.push_back(std::move(cell));
            }
        }
    }
    std::map<VertexId, VertexId> projection;
    for (VertexId b : base_vertices) {
        for (VertexId j = 0; j < fiber_size; ++j) {
            projection[vertex(b, j)] = b;
        }
    }
    auto total = std::make_shared<const SimplicialComplex>(build_complex(facets));
    return {total, SimplicialMap(total, std::move(base), std::move(projection))};
}

// ---------------------------------------------------------------------------

namespace {

// A cell of a realization is identified by the set of base letters it
// covers, whether it contains a whole collapsing edge, and its position
// along the necklace restricted to those letters: the step index for
// cells containing a collapsing edge, the lattice point index otherwise.
struct CellKey {
    unsigned letters;
    bool vertical;
    std::size_t index;

    auto operator<=>(const CellKey&) const = default;
};

struct KeyedCell {
    std::vector<VertexId> vertices;
    std::vector<CellKey> boundary;
};

using KeyedLayers = std::vector<std::map<CellKey, KeyedCell>>;

unsigned letter_bit(Letter a) { return 1u << a; }

struct RealizationData {
    KeyedLayers layers;
    std::vector<CellKey> top_keys;
};

RealizationData realize_keyed(const Necklace& w)
{
    const int alphabet = w.alphabet_size();
    const auto counts = w.counts();
    const auto& s = w.letters();
    const std::size_t n = s.size();

    std::vector<VertexId> offset(static_cast<std::size_t>(alphabet), 0);
    for (int i = 1; i < alphabet; ++i) {
        offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] +
                                              static_cast<VertexId>(counts[static_cast<std::size_t>(i - 1)]);
    }

    // before[t][i] = occurrences of letter i among s[0..t)
    std::vector<std::array<std::size_t, Necklace::max_alphabet>> before(n + 1);
    for (std::size_t t = 0; t < n; ++t) {
        before[t + 1] = before[t];
        ++before[t + 1][s[t]];
    }
    auto letters_before = [&](std::size_t t, unsigned mask) {
        std::size_t c = 0;
        for (int i = 0; i < alphabet; ++i) {
            if (mask & letter_bit(static_cast<Letter>(i))) {
                c += before[t][static_cast<std::size_t>(i)];
            }
        }
        return c;
    };
    auto mask_total = [&](unsigned mask) {
        std::size_t c = 0;
        for (int i = 0; i < alphabet; ++i) {
            if (mask & letter_bit(static_cast<Letter>(i))) {
                c += counts[static_cast<std::size_t>(i)];
            }
        }
        return c;
    };

    RealizationData data;
    data.layers.resize(static_cast<std::size_t>(alphabet + 1));

    for (std::size_t t = 0; t < n; ++t) {
        const Letter label = s[t];
        // Vertex slots of the top cell, ordered by letter; the collapsing
        // letter contributes its in (entry) and out (exit) vertex.
        struct Slot {
            Letter letter;
            bool out;
            VertexId vertex;
        };
        std::vector<Slot> slots;
        for (int i = 0; i < alphabet; ++i) {
            const auto a = static_cast<Letter>(i);
            const std::size_t ci = counts[a];
            const VertexId in = offset[a] + static_cast<VertexId>(before[t][a] % ci);
            slots.push_back({a, false, in});
            if (a == label) {
                slots.push_back({a, true, offset[a] + static_cast<VertexId>((before[t][a] + 1) % ci)});
            }
        }

        const std::size_t width = slots.size();
        auto key_of = [&](unsigned subset) {
            unsigned mask = 0;
            bool has_in = false;
            bool has_out = false;
            for (std::size_t p = 0; p < width; ++p) {
                if (subset & (1u << p)) {
                    mask |= letter_bit(slots[p].letter);
                    if (slots[p].letter == label) {
                        (slots[p].out ? has_out : has_in) = true;
                    }
                }
            }
            const std::size_t total = mask_total(mask);
            if (has_in && has_out) {
                return CellKey{mask, true, letters_before(t, mask)};
            }
            const std::size_t point = has_out ? letters_before(t + 1, mask) : letters_before(t, mask);
            return CellKey{mask, false, point % total};
        };

        for (unsigned subset = 1; subset < (1u << width); ++subset) {
            KeyedCell cell;
            std::vector<unsigned> members;
            for (std::size_t p = 0; p < width; ++p) {
                if (subset & (1u << p)) {
                    cell.vertices.push_back(slots[p].vertex);
                    members.push_back(static_cast<unsigned>(p));
                }
            }
            if (members.size() > 1) {
                for (unsigned p : members) {
                    cell.boundary.push_back(key_of(subset & ~(1u << p)));
                }
            }
            const CellKey key = key_of(subset);
            auto& layer = data.layers[members.size() - 1];
            const auto [it, inserted] = layer.emplace(key, cell);
            if (!inserted && (it->second.vertices != cell.vertices || it->second.boundary != cell.boundary)) {
                throw RealizationAmbiguity("necklace \"" + w.str() + "\": two gluings disagree on one cell");
            }
            if (subset == (1u << width) - 1) {
                data.top_keys.push_back(key);
            }
        }
    }
    return data;
}

DeltaComplex assemble(const KeyedLayers& layers)
{
    std::vector<std::vector<DeltaComplex::Cell>> cells(layers.size());
    std::vector<std::map<CellKey, std::size_t>> position(layers.size());
    for (std::size_t d = 0; d < layers.size(); ++d) {
        for (const auto& [key, cell] : layers[d]) {
            position[d].emplace(key, cells[d].size());
            DeltaComplex::Cell out{cell.vertices, {}};
            for (const CellKey& b : cell.boundary) {
                out.boundary.push_back(position[d - 1].at(b));
            }
            cells[d].push_back(std::move(out));
        }
    }
    return DeltaComplex(std::move(cells));
}

void fill(Realization& r, const Necklace& w, const RealizationData& data)
{
    r.word = w;
    r.as_delta = assemble(data.layers);
    const auto counts = w.counts();
    VertexId next = 0;
    for (int i = 0; i < w.alphabet_size(); ++i) {
        std::vector<VertexId> fiber;
        for (std::size_t x = 0; x < counts[static_cast<std::size_t>(i)]; ++x) {
            fiber.push_back(next++);
            r.fiber_of.push_back(static_cast<Letter>(i));
        }
        r.fibers.push_back(std::move(fiber));
    }
    const auto& top = data.layers.back();
    for (const CellKey& key : data.top_keys) {
        r.top_cells.push_back(static_cast<std::size_t>(std::distance(top.begin(), top.find(key))));
    }
    r.labels = w.letters();
}

void require_surjective(const Necklace& w, int alphabet)
{
    if (w.alphabet_size() != alphabet || !w.is_surjective()) {
        throw NotSurjective("realization needs every one of the " + std::to_string(alphabet) +
                            " letters to occur; got \"" + w.str() + "\"");
    }
}

} // namespace

bool Realization::simplicial() const
{
    const bool fibers_ok = std::all_of(fibers.begin(), fibers.end(), [](const auto& f) { return f.size() >= 3; });
    return fibers_ok && is_simplicial(as_delta);
}

std::vector<DeltaComplex::Duplicate> Realization::duplicated_edges() const
{
    std::vector<DeltaComplex::Duplicate> out;
    for (const auto& d : as_delta.duplicates()) {
        if (d.dimension == 1) {
            out.push_back(d);
        }
    }
    return out;
}

AnnulusRealization realize_annulus(const Necklace& w)
{
    require_surjective(w, 2);
    AnnulusRealization r;
    fill(r, w, realize_keyed(w));
    return r;
}

SolidTorusRealization realize_over_triangle(const Necklace& w)
{
    require_surjective(w, 3);
    SolidTorusRealization r;
    fill(r, w, realize_keyed(w));
    for (Letter i = 0; i < 3; ++i) {
        r.face_annuli[i] = realize_annulus(delete_letter(w, i));
    }
    return r;
}

DeltaComplex restrict_to_face(const SolidTorusRealization& r, Letter i)
{
    // Rebuild the keyed layers, keep cells avoiding letter i and renumber
    // letters and vertices as in the deleted word.
    const RealizationData data = realize_keyed(r.word);
    const auto counts = r.word.counts();
    const VertexId removed_begin = r.fibers[i].front();
    const auto removed = static_cast<VertexId>(counts[i]);
    const unsigned drop = letter_bit(i);
    auto remap_mask = [&](unsigned mask) {
        unsigned out = 0;
        for (Letter a = 0; a < 3; ++a) {
            if ((mask & letter_bit(a)) && a != i) {
                out |= letter_bit(a > i ? static_cast<Letter>(a - 1) : a);
            }
        }
        return out;
    };
    auto remap_key = [&](CellKey k) { return CellKey{remap_mask(k.letters), k.vertical, k.index}; };

    KeyedLayers layers(3);
    for (std::size_t d = 0; d < 3; ++d) {
        for (const auto& [key, cell] : data.layers[d]) {
            if (key.letters & drop) {
                continue;
            }
            KeyedCell out;
            for (VertexId v : cell.vertices) {
                out.vertices.push_back(v >= removed_begin + removed ? v - removed : v);
            }
            for (const CellKey& b : cell.boundary) {
                out.boundary.push_back(remap_key(b));
            }
            layers[d].emplace(remap_key(key), std::move(out));
        }
    }
    return assemble(layers);
}

RealizedBundle as_bundle(const Realization& r)
{
    if (!r.simplicial()) {
        throw InvalidSimplex("realization of \"" + r.word.str() + "\" is not simplicial");
    }
    std::vector<std::vector<VertexId>> facets;
    const auto& top = r.as_delta.cells(r.as_delta.dimension());
    for (std::size_t c : r.top_cells) {
        facets.push_back(top[c].vertices);
    }
    auto total = std::make_shared<const SimplicialComplex>(build_complex(facets));
    std::vector<VertexId> base_vertices;
    for (int i = 0; i < r.word.alphabet_size(); ++i) {
        base_vertices.push_back(static_cast<VertexId>(i));
    }
    auto base = std::make_shared<const SimplicialComplex>(build_complex({base_vertices}));
    std::map<VertexId, VertexId> projection;
    for (std::size_t v = 0; v < r.fiber_of.size(); ++v) {
        projection[static_cast<VertexId>(v)] = r.fiber_of[v];
    }
    return {total, SimplicialMap(total, base, std::move(projection))};
}

// ---------------------------------------------------------------------------

bool ScreenReport::bound_holds() const
{
    const bool bound = realizable_violators.empty() && max_realizable_abs.has_value() &&
                       *max_realizable_abs < Rational(1, 2);
    const bool blocks = realizable_block_words.empty() && block_words_rejected == block_words &&
                        block_words_with_duplicate_edge == block_words;
    return bound && blocks && ambiguities.empty();
}

ScreenReport screen_realizable(std::size_t max_length)
{
    if (max_length < 9) {
        throw std::invalid_argument("max length must be at least 9 (every fiber needs 3 vertices)");
    }
    ScreenReport report;
    report.max_length = max_length;
    for (std::size_t n = 9; n <= max_length; ++n) {
        ScreenCensus& census = report.by_length[n];
        for_each_necklace(n, 3, true, [&](const Necklace& w) {
            const auto c = w.counts();
            if (c[0] < 3 || c[1] < 3 || c[2] < 3) {
                return;
            }
            ++census.screened;
            const bool block = is_block_word(w);
            census.block_words += block;
            const Rational value = abs(chern_local(w));

            std::optional<SolidTorusRealization> r;
            try {
                r = realize_over_triangle(w);
            } catch (const RealizationAmbiguity&) {
                report.ambiguities.push_back(w);
                return;
            }
            const bool realizable = r->simplicial();
            if (block) {
                if (realizable) {
                    report.realizable_block_words.push_back(w);
                } else {
                    ++report.block_words_rejected;
                    report.excluded_extremum = std::max(report.excluded_extremum, value);
                }
                report.block_words_with_duplicate_edge += !r->duplicated_edges().empty();
            }
            if (!realizable) {
                return;
            }
            ++census.realizable;
            if (!report.max_realizable_abs || value > *report.max_realizable_abs) {
                report.max_realizable_abs = value;
                report.max_realizable_witness = w;
            }
            if (!strictly_below_half(value)) {
                report.realizable_violators.push_back(w);
            }
        });
        report.screened += census.screened;
        report.realizable += census.realizable;
        report.block_words += census.block_words;
    }
    return report;
}

} // namespace cbundle
