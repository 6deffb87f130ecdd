#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

/// A word over distinct integers. Used for subwords such as sigma^(j) or the
/// excedance subword, which are not permutations of 1..k in general.
using Word = std::vector<int>;

/// A permutation of {1..n} in one-line notation. Positions and values are 1-based.
///
/// Always valid after construction: the word is a rearrangement of 1..n with n >= 1.
class Permutation {
public:
    /// Throws ValidationError unless `word` is a rearrangement of 1..n, n >= 1.
    explicit Permutation(Word word);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(word_.size()); }

    /// sigma_j for 1 <= j <= n. Unchecked.
    int operator()(int j) const noexcept { return word_[static_cast<std::size_t>(j - 1)]; }

    /// sigma_j for 1 <= j <= n. Throws std::out_of_range.
    int at(int j) const;

    std::span<const int> word() const noexcept { return word_; }

    /// Position of value v, 1-based.
    int position_of(int v) const;

    bool is_identity() const noexcept;

    /// Digit string when n <= 9, comma-separated otherwise.
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    Word word_;
};

/// Parses "354162" (only when n <= 9) or "3,5,4,1,6,2".
Permutation parse_permutation(std::string_view text);

/// Lexicographic rank in S_n, 0-based.
std::size_t lex_rank(const Permutation& p);

/// Inverse of lex_rank.
Permutation lex_unrank(int n, std::size_t rank);

/// n! as size_t; throws CapExceededError on overflow.
std::size_t factorial(int n);

/// Calls f(p) for every p in S_n in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f);

/// Renders a word as a digit string when every entry is a single digit, else comma-separated.
std::string word_to_string(std::span<const int> w);

}  // namespace permstat

#include <algorithm>
#include <numeric>

template <typename F>
void permstat::for_each_permutation(int n, F&& f) {
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        f(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}
