#include "permstat/bijections.hpp"

#include <set>

#include "permstat/errors.hpp"
#include "permstat/statistics.hpp"
#include "table_cache.hpp"

namespace permstat {

Permutation Biword::to_permutation() const {
    if (top.size() != bottom.size()) throw ValidationError("biword rows differ in length");
    const Permutation top_row(top);
    const Permutation bottom_row(bottom);
    Word w(top.size());
    for (std::size_t i = 0; i < top.size(); ++i) {
        w[static_cast<std::size_t>(top_row.word()[i] - 1)] = bottom_row.word()[i];
    }
    return Permutation(std::move(w));
}

Word PhiConstruction::concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

PhiConstruction phi_construction(const Permutation& p) {
    const int n = p.size();
    const auto rem = rem_values(p);
    const auto rem_of = [&rem](int v) { return rem[static_cast<std::size_t>(v)]; };

    const auto bottoms = descent_bottoms(p);
    const auto tops = descent_tops(p);
    const std::set<int> bottom_set(bottoms.begin(), bottoms.end());
    const std::set<int> top_set(tops.begin(), tops.end());

    PhiConstruction c;
    c.f.assign(bottom_set.begin(), bottom_set.end());
    for (int v = 1; v <= n; ++v) {
        if (!bottom_set.contains(v)) c.g.push_back(v);
    }

    // Descent tops from largest down: every value already placed is larger, so
    // inserting k at index rem(k) gives it exactly rem(k) larger values to its left.
    for (auto it = top_set.rbegin(); it != top_set.rend(); ++it) {
        const int k = *it;
        if (rem_of(k) > static_cast<int>(c.f_prime.size())) {
            throw InternalInconsistency("phi: rem(" + std::to_string(k) + ") too large for f'");
        }
        c.f_prime.insert(c.f_prime.begin() + rem_of(k), k);
    }
    // Non-descent tops from smallest up, leaving rem(l) smaller values to the right.
    for (int l = 1; l <= n; ++l) {
        if (top_set.contains(l)) continue;
        const int size = static_cast<int>(c.g_prime.size());
        if (rem_of(l) > size) {
            throw InternalInconsistency("phi: rem(" + std::to_string(l) + ") too large for g'");
        }
        c.g_prime.insert(c.g_prime.begin() + (size - rem_of(l)), l);
    }

    const auto f_numbers = inversion_numbers(c.f_prime);
    for (int k : c.f_prime) {
        if (f_numbers.bottom.at(k) != rem_of(k)) {
            throw InternalInconsistency("phi: inversion bottom number of " + std::to_string(k) +
                                        " in f' differs from rem");
        }
    }
    const auto g_numbers = inversion_numbers(c.g_prime);
    for (int l : c.g_prime) {
        if (g_numbers.top.at(l) != rem_of(l)) {
            throw InternalInconsistency("phi: inversion top number of " + std::to_string(l) +
                                        " in g' differs from rem");
        }
    }
    return c;
}

Permutation phi(const Permutation& p) { return phi_construction(p).biword().to_permutation(); }

namespace {

detail::TableCache::Table build_phi_inverse(int n) {
    detail::TableCache::Table table(factorial(n), detail::kUnfilled);
    std::size_t rank = 0;
    for_each_permutation(n, [&](const Permutation& sigma) {
        auto& slot = table[lex_rank(phi(sigma))];
        if (slot != detail::kUnfilled) {
            throw InternalInconsistency("phi is not injective on S_" + std::to_string(n));
        }
        slot = static_cast<std::uint32_t>(rank++);
    });
    return table;
}

}  // namespace

Permutation phi_inverse(const Permutation& p) {
    static detail::TableCache cache("phi inverse table");
    const auto& table = cache.get(p.size(), build_phi_inverse);
    return lex_unrank(p.size(), table[lex_rank(p)]);
}

Permutation codemap(const Permutation& p, CodecId codec) {
    return decode(encode(p, CodecId::Maj), codec);
}

}  // namespace permstat
