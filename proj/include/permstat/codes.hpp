#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// An element (e_1, ..., e_n) of E_n, i.e. 0 <= e_j <= j-1.
class Code {
public:
    /// Throws ValidationError if the tuple is empty or some entry leaves its Lehmer range.
    explicit Code(std::vector<int> entries);

    static Code zeros(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    /// e_j, 1-based. Unchecked.
    int operator()(int j) const noexcept { return entries_[static_cast<std::size_t>(j - 1)]; }
    std::span<const int> entries() const noexcept { return entries_; }

    /// "0,0,1,1,3,5"
    std::string to_string() const;

    friend bool operator==(const Code&, const Code&) = default;
    friend auto operator<=>(const Code&, const Code&) = default;

private:
    std::vector<int> entries_;
};

/// Comma-separated nonnegative integers.
Code parse_code(std::string_view text);

/// Calls f(c) for every c in E_n, in lexicographic order.
template <typename F>
void for_each_code(int n, F&& f);

enum class CodecId { Maj, Inv, Den, Han, Sor, Mak };

inline constexpr std::array<CodecId, 6> kAllCodecs = {CodecId::Maj, CodecId::Inv, CodecId::Den,
                                                      CodecId::Han, CodecId::Sor, CodecId::Mak};

/// Lowercase CLI name: maj, inv, den, han, sor, mak.
std::string_view codec_name(CodecId id);
std::optional<CodecId> codec_from_name(std::string_view name);

int add(const Code& c);
int zer(const Code& c);
/// Longest subsequence whose k-th chosen entry is >= k.
int st(const Code& c);

/// Han's labelling of the entries of a permutation of length m.
struct NuAssignment {
    std::vector<int> nu;       // nu[v] for value v = 1..m (index 0 unused)
    std::vector<int> inverse;  // inverse[t] = value labelled t
    int exc = 0;
};

NuAssignment nu_values(const Permutation& p);

/// Han's insertion map S_{n-1} x {0..n-1} -> S_n. Throws ValidationError unless 0 <= s <= n-1.
Permutation psi(const Permutation& p, int s);

Code encode(const Permutation& p, CodecId codec);

/// Throws ValidationError if the code length doesn't match, and CapExceededError when a
/// table-backed route is needed beyond table_cap().
Permutation decode(const Code& c, CodecId codec);

/// Every permutation whose DEN code is `c`, found by exhaustive backtracking.
/// Exactly one for valid input; used to check uniqueness.
std::vector<Permutation> den_decode_all(const Code& c);

}  // namespace permstat

template <typename F>
void permstat::for_each_code(int n, F&& f) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    while (true) {
        f(Code(e));
        int j = n - 1;
        while (j >= 0 && e[static_cast<std::size_t>(j)] == j) {
            e[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) return;
        ++e[static_cast<std::size_t>(j)];
    }
}
