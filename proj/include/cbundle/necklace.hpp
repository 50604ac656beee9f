#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cbundle/rational.hpp"

namespace cbundle {

using Letter = std::uint8_t;

/// Cyclic word over the alphabet {0, ..., alphabet_size - 1}.
///
/// The stored rotation is kept as given; equality compares rotation classes
/// (canonical form is the lexicographically least rotation).
class Necklace {
public:
    static constexpr int max_alphabet = 3;

    /// The one-bead word "0" over a one-letter alphabet.
    Necklace() : letters_{0}, alphabet_size_(1) {}

    /// Throws InvalidNecklace for an empty word, an alphabet size outside
    /// [1, 3], or a letter outside the alphabet.
    Necklace(std::vector<Letter> letters, int alphabet_size);

    /// Parses a digit string such as "012012". The alphabet size defaults to
    /// one more than the largest digit, but at least 2.
    static Necklace parse(std::string_view text, int alphabet_size = 0);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int alphabet_size() const { return alphabet_size_; }
    Letter operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

    /// Multiplicity of each letter; entries beyond the alphabet are zero.
    std::array<std::size_t, max_alphabet> counts() const;
    std::size_t count(Letter a) const { return counts()[a]; }
    bool is_surjective() const;

    Necklace rotated(std::size_t shift) const;
    Necklace reversed() const;
    Necklace canonical() const;

    std::string str() const;

    bool operator==(const Necklace& other) const;

private:
    std::vector<Letter> letters_;
    int alphabet_size_;
};

/// Parity expectation over proper subwords: (even - odd) / (n0 n1 n2), where a
/// proper subword picks one position per letter and is read in position
/// order of the stored rotation. Linear time.
/// Throws NotSurjective unless the word is over three letters, all present.
Rational parity(const Necklace& w);

/// Same quantity by enumerating every position triple.
Rational parity_bruteforce(const Necklace& w);

/// Local Chern value -parity(w) / 2.
Rational chern_local(const Necklace& w);

/// Removes every occurrence of `letter` and renumbers the remaining letters
/// order-preservingly. Throws EmptyWord if nothing would remain.
Necklace delete_letter(const Necklace& w, Letter letter);

/// True iff some rotation is one solid run per letter that occurs.
bool is_block_word(const Necklace& w);

/// Letterwise image under the alphabet permutation rho (rho[a] is the
/// image of a). Throws InvalidNecklace if rho is not a bijection.
Necklace relabel(const Necklace& w, const std::vector<Letter>& rho);

/// +1 for an even permutation, -1 for an odd one.
int permutation_sign(const std::vector<Letter>& rho);

/// Calls `visit` once per rotation class of words of length n, with the
/// canonical representative, in lexicographic order.
void for_each_necklace(std::size_t n, int alphabet_size, bool surjective_only,
                       const std::function<void(const Necklace&)>& visit);

std::vector<Necklace> enumerate_necklaces(std::size_t n, int alphabet_size, bool surjective_only);

} // namespace cbundle
