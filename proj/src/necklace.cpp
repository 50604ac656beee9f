#include "cbundle/necklace.hpp"

#include <algorithm>

#include "cbundle/errors.hpp"

namespace cbundle {

Necklace::Necklace(std::vector<Letter> letters, int alphabet_size)
    : letters_(std::move(letters)), alphabet_size_(alphabet_size)
{
    if (letters_.empty()) {
        throw InvalidNecklace("necklace must have at least one bead");
    }
    if (alphabet_size_ < 1 || alphabet_size_ > max_alphabet) {
        throw InvalidNecklace("alphabet size must be 1, 2 or 3");
    }
    for (Letter a : letters_) {
        if (a >= alphabet_size_) {
            throw InvalidNecklace("letter " + std::to_string(int{a}) + " outside alphabet of size " +
                                  std::to_string(alphabet_size_));
        }
    }
}

Necklace Necklace::parse(std::string_view text, int alphabet_size)
{
    std::vector<Letter> letters;
    int largest = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '2') {
            throw InvalidNecklace(std::string("invalid letter '") + ch + "' (expected 0, 1 or 2)");
        }
        letters.push_back(static_cast<Letter>(ch - '0'));
        largest = std::max(largest, ch - '0');
    }
    if (alphabet_size == 0) {
        alphabet_size = std::max(2, largest + 1);
    }
    return Necklace(std::move(letters), alphabet_size);
}

std::array<std::size_t, Necklace::max_alphabet> Necklace::counts() const
{
    std::array<std::size_t, max_alphabet> c{};
    for (Letter a : letters_) {
        ++c[a];
    }
    return c;
}

bool Necklace::is_surjective() const
{
    const auto c = counts();
    return std::all_of(c.begin(), c.begin() + alphabet_size_, [](std::size_t x) { return x > 0; });
}

Necklace Necklace::rotated(std::size_t shift) const
{
    std::vector<Letter> out = letters_;
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
    return Necklace(std::move(out), alphabet_size_);
}

Necklace Necklace::reversed() const
{
    return Necklace(std::vector<Letter>(letters_.rbegin(), letters_.rend()), alphabet_size_);
}

Necklace Necklace::canonical() const
{
    // Words here are short; the quadratic scan is plenty.
    const std::size_t n = letters_.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Letter a = letters_[(s + i) % n];
            const Letter b = letters_[(best + i) % n];
            if (a != b) {
                if (a < b) {
                    best = s;
                }
                break;
            }
        }
    }
    return rotated(best);
}

std::string Necklace::str() const
{
    std::string s;
    s.reserve(letters_.size());
    for (Letter a : letters_) {
        s.push_back(static_cast<char>('0' + a));
    }
    return s;
}

bool Necklace::operator==(const Necklace& other) const
{
    return alphabet_size_ == other.alphabet_size_ && size() == other.size() &&
           canonical().letters_ == other.canonical().letters_;
}

// ---------------------------------------------------------------------------

namespace {

void require_three_letter_surjective(const Necklace& w)
{
    if (w.alphabet_size() != 3 || !w.is_surjective()) {
        throw NotSurjective("parity needs a word using all three letters 0, 1, 2; got \"" + w.str() + "\"");
    }
}

Rational subword_ratio(long long even_minus_odd, const Necklace& w)
{
    const auto c = w.counts();
    const auto total = static_cast<long long>(c[0] * c[1] * c[2]);
    return Rational(even_minus_odd, total);
}

} // namespace

Rational parity(const Necklace& w)
{
    require_three_letter_surjective(w);
    // Even proper subwords are the cyclic shifts of 012: letters
    // (b-1, b, b+1) mod 3 around a middle position of letter b. Odd ones are
    // the mirrored (b+1, b, b-1).
    const auto total = w.counts();
    std::array<long long, 3> left{};
    long long balance = 0;
    for (Letter b : w.letters()) {
        const int prev = (b + 2) % 3;
        const int next = (b + 1) % 3;
        const long long right_next = static_cast<long long>(total[next]) - left[next];
        const long long right_prev = static_cast<long long>(total[prev]) - left[prev];
        balance += left[prev] * right_next - left[next] * right_prev;
        ++left[b];
    }
    return subword_ratio(balance, w);
}

Rational parity_bruteforce(const Necklace& w)
{
    require_three_letter_surjective(w);
    const auto& s = w.letters();
    const std::size_t n = s.size();
    long long even = 0;
    long long odd = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const int a = s[i];
                const int b = s[j];
                const int c = s[k];
                if (a == b || b == c || a == c) {
                    continue;
                }
                const int inversions = (a > b) + (a > c) + (b > c);
                (inversions % 2 == 0 ? even : odd) += 1;
            }
        }
    }
    return Rational(even - odd, even + odd);
}

Rational chern_local(const Necklace& w) { return -parity(w) / 2; }

Necklace delete_letter(const Necklace& w, Letter letter)
{
    if (letter >= w.alphabet_size()) {
        throw InvalidNecklace("letter " + std::to_string(int{letter}) + " outside alphabet");
    }
    std::vector<Letter> out;
    for (Letter a : w.letters()) {
        if (a != letter) {
            out.push_back(a > letter ? static_cast<Letter>(a - 1) : a);
        }
    }
    if (out.empty()) {
        throw EmptyWord("deleting letter " + std::to_string(int{letter}) + " from \"" + w.str() +
                        "\" leaves nothing");
    }
    return Necklace(std::move(out), w.alphabet_size() - 1);
}

bool is_block_word(const Necklace& w)
{
    const auto& s = w.letters();
    const std::size_t n = s.size();
    std::size_t boundaries = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (s[i] != s[(i + 1) % n]) {
            ++boundaries;
        }
    }
    const auto c = w.counts();
    const auto present = static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](std::size_t x) { return x > 0; }));
    // A cyclic word has exactly one run per letter iff the number of run
    // boundaries equals the number of distinct letters (or zero for one).
    return present == 1 ? boundaries == 0 : boundaries == present;
}

Necklace relabel(const Necklace& w, const std::vector<Letter>& rho)
{
    const auto k = static_cast<std::size_t>(w.alphabet_size());
    if (rho.size() != k) {
        throw InvalidNecklace("relabeling must act on the whole alphabet");
    }
    std::vector<bool> hit(k, false);
    for (Letter a : rho) {
        if (a >= k || hit[a]) {
            throw InvalidNecklace("relabeling is not a bijection");
        }
        hit[a] = true;
    }
    std::vector<Letter> out;
    out.reserve(w.size());
    for (Letter a : w.letters()) {
        out.push_back(rho[a]);
    }
    return Necklace(std::move(out), w.alphabet_size());
}

int permutation_sign(const std::vector<Letter>& rho)
{
    int inversions = 0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        for (std::size_t j = i + 1; j < rho.size(); ++j) {
            inversions += rho[i] > rho[j];
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------

namespace {

// Fredricksen-Kessler-Maiorana generation of prenecklaces; a prenecklace of
// period p dividing n is a necklace (least rotation of its class).
struct NecklaceGenerator {
    std::size_t n;
    int k;
    bool surjective_only;
    const std::function<void(const Necklace&)>& visit;
    std::vector<Letter> a;

    void run(std::size_t t, std::size_t p)
    {
        if (t > n) {
            if (n % p == 0) {
                Necklace w(std::vector<Letter>(a.begin() + 1, a.end()), k);
                if (!surjective_only || w.is_surjective()) {
                    visit(w);
                }
            }
            return;
        }
        a[t] = a[t - p];
        run(t + 1, p);
        for (int j = a[t - p] + 1; j < k; ++j) {
            a[t] = static_cast<Letter>(j);
            run(t + 1, t);
        }
    }
};

} // namespace

void for_each_necklace(std::size_t n, int alphabet_size, bool surjective_only,
                       const std::function<void(const Necklace&)>& visit)
{
    if (n == 0) {
        throw InvalidNecklace("necklace length must be at least 1");
    }
    if (alphabet_size < 1 || alphabet_size > Necklace::max_alphabet) {
        throw InvalidNecklace("alphabet size must be 1, 2 or 3");
    }
    NecklaceGenerator gen{n, alphabet_size, surjective_only, visit, std::vector<Letter>(n + 1, 0)};
    gen.run(1, 1);
}

std::vector<Necklace> enumerate_necklaces(std::size_t n, int alphabet_size, bool surjective_only)
{
    std::vector<Necklace> out;
    for_each_necklace(n, alphabet_size, surjective_only, [&](const Necklace& w) { out.push_back(w); });
    return out;
}

} // namespace cbundle
