#include "permstat/permutation.hpp"

#include <charconv>
#include <limits>
#include <sstream>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

void validate_rearrangement(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) throw ValidationError("empty permutation");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : w) {
        if (v < 1 || v > n) {
            throw ValidationError("value " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(n) + "; not a rearrangement of 1.." +
                                  std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

Permutation::Permutation(Word word) : word_(std::move(word)) { validate_rearrangement(word_); }

Permutation Permutation::identity(int n) {
    if (n < 1) throw ValidationError("permutation length must be positive");
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

int Permutation::at(int j) const {
    if (j < 1 || j > size()) {
        throw std::out_of_range("position " + std::to_string(j) + " out of range 1.." +
                                std::to_string(size()));
    }
    return (*this)(j);
}

int Permutation::position_of(int v) const {
    const auto it = std::find(word_.begin(), word_.end(), v);
    if (it == word_.end()) throw std::out_of_range("value " + std::to_string(v) + " not present");
    return static_cast<int>(it - word_.begin()) + 1;
}

bool Permutation::is_identity() const noexcept {
    for (int j = 1; j <= size(); ++j) {
        if ((*this)(j) != j) return false;
    }
    return true;
}

std::string Permutation::to_string() const { return word_to_string(word_); }

std::string word_to_string(std::span<const int> w) {
    const bool digits = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ValidationError("empty permutation");

    Word w;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto comma = text.find(',', start);
            const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start));
            int v = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
                throw ValidationError("malformed token '" + std::string(token) + "'");
            }
            w.push_back(v);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw ValidationError(std::string("malformed token '") + c + "'");
            }
            w.push_back(c - '0');
        }
    }
    return Permutation(std::move(w));
}

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(i)) {
            throw CapExceededError("factorial of " + std::to_string(n) + " overflows");
        }
        f *= static_cast<std::size_t>(i);
    }
    return f;
}

std::size_t lex_rank(const Permutation& p) {
    const int n = p.size();
    std::size_t rank = 0;
    for (int j = 1; j <= n; ++j) {
        int smaller_right = 0;
        for (int k = j + 1; k <= n; ++k) {
            if (p(k) < p(j)) ++smaller_right;
        }
        rank = rank * static_cast<std::size_t>(n - j + 1) + static_cast<std::size_t>(smaller_right);
    }
    return rank;
}

Permutation lex_unrank(int n, std::size_t rank) {
    if (n < 1) throw ValidationError("permutation length must be positive");
    if (rank >= factorial(n)) throw std::out_of_range("rank out of range for S_" + std::to_string(n));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        const auto radix = static_cast<std::size_t>(n - j + 1);
        digits[static_cast<std::size_t>(j - 1)] = static_cast<int>(rank % radix);
        rank /= radix;
    }
    Word unused(static_cast<std::size_t>(n));
    std::iota(unused.begin(), unused.end(), 1);
    Word w;
    w.reserve(unused.size());
    for (int d : digits) {
        w.push_back(unused[static_cast<std::size_t>(d)]);
        unused.erase(unused.begin() + d);
    }
    return Permutation(std::move(w));
}

}  // namespace permstat
