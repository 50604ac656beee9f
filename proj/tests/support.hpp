#pragma once

#include <algorithm>
#include <filesystem>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cbundle/bundle.hpp"
#include "cbundle/bundle_file.hpp"
#include "cbundle/necklace.hpp"

namespace cbundle::test {

inline std::filesystem::path fixture(const std::string& name)
{
    return std::filesystem::path(CBUNDLE_FIXTURE_DIR) / name;
}

inline CircleBundle expect_bundle(const SimplicialMap& m)
{
    BundleValidation v = validate_bundle(m);
    if (auto* report = std::get_if<ValidationReport>(&v)) {
        std::string msg = "not a bundle:";
        for (const auto& issue : report->issues) {
            msg += " [" + issue.where + ": " + issue.what + "]";
        }
        throw std::runtime_error(msg);
    }
    return std::get<CircleBundle>(std::move(v));
}

inline CircleBundle load_fixture_bundle(const std::string& name)
{
    return expect_bundle(load_bundle(read_bundle_file(fixture(name))).map());
}

/// Uniform random word of length n over three letters, all present.
inline Necklace random_surjective_word(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> letter(0, 2);
    for (;;) {
        std::vector<Letter> w(n);
        for (auto& a : w) {
            a = static_cast<Letter>(letter(rng));
        }
        Necklace candidate(std::move(w), 3);
        if (candidate.is_surjective()) {
            return candidate;
        }
    }
}

inline std::vector<std::vector<Letter>> all_permutations3()
{
    std::vector<Letter> rho{0, 1, 2};
    std::vector<std::vector<Letter>> out;
    do {
        out.push_back(rho);
    } while (std::next_permutation(rho.begin(), rho.end()));
    return out;
}

} // namespace cbundle::test
