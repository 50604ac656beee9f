#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cbundle/cli.hpp"

int main(int argc, char** argv)
{
    using namespace cbundle::cli;

    CLI::App app{"Chern-Euler numbers of triangulated circle bundles"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "check that a bundle file describes a triangulated circle bundle");
    validate->add_option("path", path, "bundle file (JSON)")->required();

    bool show_signed = false;
    bool per_simplex = false;
    auto* chern = app.add_subcommand("chern", "compute the Chern-Euler number of a bundle over a closed surface");
    chern->add_option("path", path, "bundle file (JSON)")->required();
    chern->add_flag("--signed", show_signed, "also print the signed sum and the orientation seed");
    chern->add_flag("--per-simplex", per_simplex, "print the necklace, local value and sign of every base triangle");

    std::string word;
    auto* parity = app.add_subcommand("parity", "parity expectation and local Chern value of a necklace over 0,1,2");
    parity->add_option("word", word, "cyclic word, e.g. 012012")->required();

    std::size_t max_length = 0;
    auto* screen = app.add_subcommand("screen", "screen realizable triangle necklaces for the strict 1/2 bound");
    screen->add_option("--max-length", max_length, "largest necklace length to screen")->required();

    std::vector<std::string> product;
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "write a product bundle file");
    generate->add_option("--product", product, "BASE M: base (ddelta3, octahedron, icosahedron) and fiber size")
        ->expected(2)
        ->required();
    generate->add_option("--out", out_path, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input_error;
    }

    if (*validate) {
        return cmd_validate(path, std::cout, std::cerr);
    }
    if (*chern) {
        return cmd_chern(path, show_signed, per_simplex, std::cout, std::cerr);
    }
    if (*parity) {
        return cmd_parity(word, std::cout, std::cerr);
    }
    if (*screen) {
        return cmd_screen(max_length, std::cout, std::cerr);
    }
    int fiber_size = 0;
    try {
        std::size_t used = 0;
        fiber_size = std::stoi(product[1], &used);
        if (used != product[1].size()) {
            throw std::invalid_argument(product[1]);
        }
    } catch (const std::exception&) {
        std::cerr << "error: fiber size must be an integer, got \"" << product[1] << "\"\n";
        return exit_input_error;
    }
    return cmd_generate(product[0], fiber_size, out_path, std::cout, std::cerr);
}
