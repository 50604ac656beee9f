#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>

namespace cbundle::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_topology_error = 3,
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code.

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

int cmd_chern(const std::filesystem::path& path, bool show_signed, bool per_simplex, std::ostream& out,
              std::ostream& err);

int cmd_parity(const std::string& word, std::ostream& out, std::ostream& err);

int cmd_screen(std::size_t max_length, std::ostream& out, std::ostream& err);

/// base_name is one of ddelta3, octahedron, icosahedron.
int cmd_generate(const std::string& base_name, int fiber_size, const std::filesystem::path& out_path,
                 std::ostream& out, std::ostream& err);

} // namespace cbundle::cli
