#include "cbundle/cli.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>

#include "cbundle/bundle.hpp"
#include "cbundle/bundle_file.hpp"
#include "cbundle/chern.hpp"
#include "cbundle/constructions.hpp"
#include "cbundle/errors.hpp"
#include "cbundle/necklace.hpp"

namespace cbundle::cli {

namespace {

LoadedBundle load_from(const std::filesystem::path& path)
{
    const BundleFile file = read_bundle_file(path);
    try {
        return load_bundle(file);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string edge_text(const DirectedEdge& e)
{
    return "[" + std::to_string(e.from) + ", " + std::to_string(e.to) + "]";
}

std::string f_vector_text(const std::vector<std::size_t>& f)
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? ", " : "") + std::to_string(f[i]);
    }
    return s + ")";
}

void print_issues(const ValidationReport& report, std::ostream& out)
{
    for (const ValidationIssue& issue : report.issues) {
        out << "  - " << issue.where << ": " << issue.what << "\n";
    }
}

} // namespace

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err)
{
    LoadedBundle loaded;
    try {
        loaded = load_from(path);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    std::optional<BundleValidation> result;
    try {
        result.emplace(validate_bundle(loaded.map()));
    } catch (const MapDomainError& e) {
        err << "error: vertex_map: " << e.what() << "\n";
        return exit_input_error;
    }
    if (const auto* report = std::get_if<ValidationReport>(&*result)) {
        out << "invalid: " << report->issues.size() << " problem(s)\n";
        print_issues(*report, out);
        return exit_topology_error;
    }
    const auto& b = std::get<CircleBundle>(*result);
    out << "valid circle bundle\n"
        << "  base f-vector:  " << f_vector_text(b.base().f_vector()) << "\n"
        << "  total f-vector: " << f_vector_text(b.total().f_vector()) << "\n"
        << "  total Euler characteristic: " << b.total().euler_characteristic() << "\n";
    return exit_ok;
}

int cmd_chern(const std::filesystem::path& path, bool show_signed, bool per_simplex, std::ostream& out,
              std::ostream& err)
{
    LoadedBundle loaded;
    try {
        loaded = load_from(path);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        BundleValidation result = validate_bundle(loaded.map());
        if (const auto* report = std::get_if<ValidationReport>(&result)) {
            err << "error: not a valid circle bundle\n";
            print_issues(*report, err);
            return exit_topology_error;
        }
        const auto& b = std::get<CircleBundle>(result);
        const SurfaceOrientation so = orient_closed_surface(b.base());
        const FiberOrientation o = propagate_orientation(b, loaded.orientation_seed.value_or(default_seed(b)));
        const ChernResult c = chern_number(b, o, so);

        out << "c = " << c.absolute_value << "\n";
        if (show_signed) {
            out << "signed = " << to_string(c.signed_sum) << " (orientation seed " << edge_text(c.orientation_seed)
                << ")\n";
        }
        if (per_simplex) {
            for (const LocalContribution& lc : c.per_simplex) {
                out << "  " << to_string(lc.base_simplex) << "  necklace " << lc.necklace.str() << "  pC1 = "
                    << to_string(lc.local_value) << "  sign = " << (lc.sign > 0 ? "+1" : "-1") << "\n";
            }
        }
        return exit_ok;
    } catch (const MapDomainError& e) {
        err << "error: vertex_map: " << e.what() << "\n";
        return exit_input_error;
    } catch (const InvalidSeed& e) {
        err << "error: orientation_seed: " << e.what() << "\n";
        return exit_input_error;
    } catch (const NotClosedSurface& e) {
        err << "error: base is not a closed surface: " << e.what() << "\n";
        return exit_topology_error;
    } catch (const NonOrientable& e) {
        err << "error: base is not orientable: " << e.what() << "\n";
        return exit_topology_error;
    } catch (const NonOrientableBundleStructure& e) {
        err << "error: " << e.what() << "\n";
        return exit_topology_error;
    } catch (const IntegralityViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_topology_error;
    }
}

int cmd_parity(const std::string& word, std::ostream& out, std::ostream& err)
{
    try {
        const Necklace w = Necklace::parse(word, 3);
        const Rational p = parity(w);
        out << "P = " << to_string(p) << ", pC1 = " << to_string(chern_local(w))
            << ", block = " << (is_block_word(w) ? "true" : "false") << "\n";
        return exit_ok;
    } catch (const InvalidNecklace& e) {
        err << "error: " << e.what() << "\n";
    } catch (const NotSurjective& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}

int cmd_screen(std::size_t max_length, std::ostream& out, std::ostream& err)
{
    ScreenReport r;
    try {
        r = screen_realizable(max_length);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    out << "screened " << r.screened << " necklaces of length 9.." << r.max_length
        << " with every letter count >= 3\n";
    for (const auto& [n, census] : r.by_length) {
        out << "  length " << n << ": " << census.screened << " screened, " << census.realizable << " realizable, "
            << census.block_words << " block words\n";
    }
    out << "realizable: " << r.realizable << "\n";
    if (r.max_realizable_abs) {
        out << "max |pC1| over realizable necklaces = " << to_string(*r.max_realizable_abs) << " (e.g. "
            << r.max_realizable_witness->str() << ")\n";
    }
    out << "block words: " << r.block_words << ", rejected as non-simplicial: " << r.block_words_rejected
        << ", with a duplicated edge: " << r.block_words_with_duplicate_edge << "\n";
    out << "excluded extremum |pC1| = " << to_string(r.excluded_extremum) << "\n";
    out << "realization ambiguities: " << r.ambiguities.size() << "\n";
    for (const Necklace& w : r.ambiguities) {
        out << "  " << w.str() << "\n";
    }
    for (const Necklace& w : r.realizable_violators) {
        out << "violator: " << w.str() << "\n";
    }
    for (const Necklace& w : r.realizable_block_words) {
        out << "realizable block word: " << w.str() << "\n";
    }
    if (r.bound_holds()) {
        out << "verdict: max |pC1| over realizable necklaces < 1/2; all block words non-simplicial\n";
        return exit_ok;
    }
    out << "verdict: bound FAILED\n";
    return exit_topology_error;
}

int cmd_generate(const std::string& base_name, int fiber_size, const std::filesystem::path& out_path,
                 std::ostream& out, std::ostream& err)
{
    SimplicialComplex base;
    if (base_name == "ddelta3") {
        base = boundary_simplex(3);
    } else if (base_name == "octahedron") {
        base = octahedron_boundary();
    } else if (base_name == "icosahedron") {
        base = icosahedron_boundary();
    } else {
        err << "error: unknown base \"" << base_name << "\" (expected ddelta3, octahedron or icosahedron)\n";
        return exit_input_error;
    }
    try {
        const ProductBundle p = product_bundle(std::make_shared<const SimplicialComplex>(std::move(base)), fiber_size);
        write_bundle_file(out_path, make_bundle_file(p.map));
        out << "wrote " << out_path.string() << ": product bundle over " << base_name << " with " << fiber_size
            << "-vertex fibers, total f-vector " << f_vector_text(p.total->f_vector()) << "\n";
        return exit_ok;
    } catch (const FiberTooSmall& e) {
        err << "error: " << e.what() << "\n";
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}

} // namespace cbundle::cli
