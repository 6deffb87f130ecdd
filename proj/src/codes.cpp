#include "permstat/codes.hpp"

#include <charconv>

#include "permstat/bijections.hpp"
#include "permstat/errors.hpp"
#include "permstat/statistics.hpp"
#include "table_cache.hpp"

namespace permstat {

Code::Code(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ValidationError("empty code");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const int e = entries_[i];
        const int position = static_cast<int>(i) + 1;
        if (e < 0) {
            throw ValidationError("entry " + std::to_string(e) + " is negative at position " +
                                  std::to_string(position));
        }
        if (e > position - 1) {
            throw ValidationError("entry " + std::to_string(e) + " exceeds Lehmer bound " +
                                  std::to_string(position - 1) + " at position " +
                                  std::to_string(position));
        }
    }
}

Code Code::zeros(int n) {
    if (n < 1) throw ValidationError("code length must be positive");
    return Code(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::string Code::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

Code parse_code(std::string_view text) {
    std::vector<int> entries;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                        : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ValidationError("malformed code token '" + std::string(token) + "'");
        }
        entries.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return Code(std::move(entries));
}

std::string_view codec_name(CodecId id) {
    switch (id) {
        case CodecId::Maj: return "maj";
        case CodecId::Inv: return "inv";
        case CodecId::Den: return "den";
        case CodecId::Han: return "han";
        case CodecId::Sor: return "sor";
        case CodecId::Mak: return "mak";
    }
    return "?";
}

std::optional<CodecId> codec_from_name(std::string_view name) {
    for (CodecId id : kAllCodecs) {
        if (codec_name(id) == name) return id;
    }
    return std::nullopt;
}

int add(const Code& c) {
    int total = 0;
    for (int e : c.entries()) total += e;
    return total;
}

int zer(const Code& c) {
    return static_cast<int>(std::count(c.entries().begin(), c.entries().end(), 0));
}

int st(const Code& c) {
    // Taking every entry that can extend the current run is optimal: an earlier pick
    // never blocks a later one, since the requirement only grows by one per pick.
    int length = 0;
    for (int e : c.entries()) {
        if (e >= length + 1) ++length;
    }
    return length;
}

NuAssignment nu_values(const Permutation& p) {
    const int m = p.size();
    const auto [tops, rest] = excedance_split(p);
    NuAssignment a;
    a.exc = static_cast<int>(tops.size());
    a.nu.assign(static_cast<std::size_t>(m) + 1, 0);
    a.inverse.assign(static_cast<std::size_t>(m) + 1, 0);
    for (int v : tops) {
        a.nu[static_cast<std::size_t>(v)] =
            static_cast<int>(std::count_if(tops.begin(), tops.end(), [v](int w) { return w >= v; }));
    }
    for (int v : rest) {
        a.nu[static_cast<std::size_t>(v)] =
            a.exc +
            static_cast<int>(std::count_if(rest.begin(), rest.end(), [v](int w) { return w <= v; }));
    }
    for (int v = 1; v <= m; ++v) a.inverse[static_cast<std::size_t>(a.nu[static_cast<std::size_t>(v)])] = v;
    return a;
}

Permutation psi(const Permutation& p, int s) {
    const int n = p.size() + 1;
    if (s < 0 || s > n - 1) {
        throw ValidationError("insertion parameter " + std::to_string(s) + " out of range 0.." +
                              std::to_string(n - 1));
    }
    Word w(p.word().begin(), p.word().end());
    if (s == 0) {
        w.push_back(n);
        return Permutation(std::move(w));
    }

    const auto labels = nu_values(p);
    const int target = labels.inverse[static_cast<std::size_t>(s)];

    // Underlined excedance tops >= target, largest first. n bumps the largest, each
    // underlined value bumps the next smaller one, and the last one bumped is inserted.
    auto chain = excedance_tops(p);
    std::erase_if(chain, [target](int v) { return v < target; });
    std::sort(chain.begin(), chain.end(), std::greater<>());

    std::vector<int> replacement(static_cast<std::size_t>(n) + 1, 0);
    int carried = n;
    for (int v : chain) {
        replacement[static_cast<std::size_t>(v)] = carried;
        carried = v;
    }
    for (int& v : w) {
        if (replacement[static_cast<std::size_t>(v)] != 0) v = replacement[static_cast<std::size_t>(v)];
    }
    w.insert(w.begin() + (target - 1), carried);
    return Permutation(std::move(w));
}

namespace {

Code maj_encode(const Permutation& p) {
    std::vector<int> e;
    int previous = 0;
    for (int j = 1; j <= p.size(); ++j) {
        const int current = maj(restrict_to(p, j));
        e.push_back(current - previous);
        previous = current;
    }
    return Code(std::move(e));
}

Permutation maj_decode(const Code& c) {
    Word w{1};
    for (int j = 2; j <= c.size(); ++j) {
        const int base = maj(w);
        int chosen = -1;
        for (int slot = 0; slot < j; ++slot) {
            Word candidate = w;
            candidate.insert(candidate.begin() + slot, j);
            if (maj(candidate) - base == c(j)) {
                if (chosen != -1) {
                    throw InternalInconsistency("maj decode: two slots realize increment " +
                                                std::to_string(c(j)));
                }
                chosen = slot;
            }
        }
        if (chosen == -1) {
            throw InternalInconsistency("maj decode: no slot realizes increment " +
                                        std::to_string(c(j)));
        }
        w.insert(w.begin() + chosen, j);
    }
    return Permutation(std::move(w));
}

// Entry t of the code is the number of smaller values right of position n+1-t.
Code inv_encode(const Permutation& p) {
    const int n = p.size();
    std::vector<int> e;
    for (int j = n; j >= 1; --j) {
        int count = 0;
        for (int k = j + 1; k <= n; ++k) {
            if (p(k) < p(j)) ++count;
        }
        e.push_back(count);
    }
    return Code(std::move(e));
}

Permutation inv_decode(const Code& c) {
    const int n = c.size();
    Word unused(static_cast<std::size_t>(n));
    std::iota(unused.begin(), unused.end(), 1);
    Word w;
    for (int j = 1; j <= n; ++j) {
        const int smaller_right = c(n + 1 - j);
        w.push_back(unused[static_cast<std::size_t>(smaller_right)]);
        unused.erase(unused.begin() + smaller_right);
    }
    return Permutation(std::move(w));
}

// Contribution of position j to den, given the prefix sigma_1..sigma_j.
int den_entry(std::span<const int> prefix, int j) {
    const int v = prefix[static_cast<std::size_t>(j - 1)];
    int count = 0;
    for (int k = 0; k < j - 1; ++k) {
        const int u = prefix[static_cast<std::size_t>(k)];
        if (v <= j) {
            if (v < u && u <= j) ++count;
        } else {
            if (u <= j) ++count;
            if (v < u) ++count;
        }
    }
    return count;
}

Code den_encode(const Permutation& p) {
    std::vector<int> e;
    for (int j = 1; j <= p.size(); ++j) e.push_back(den_entry(p.word(), j));
    return Code(std::move(e));
}

// Depth-first over positions; returns true when `visit` asks to stop.
template <typename Visit>
bool den_search(const Code& c, Word& prefix, std::vector<bool>& used, Visit& visit) {
    const int n = c.size();
    const int j = static_cast<int>(prefix.size()) + 1;
    if (j > n) return visit(prefix);
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        prefix.push_back(v);
        if (den_entry(prefix, j) == c(j)) {
            used[static_cast<std::size_t>(v)] = true;
            const bool stop = den_search(c, prefix, used, visit);
            used[static_cast<std::size_t>(v)] = false;
            if (stop) {
                prefix.pop_back();
                return true;
            }
        }
        prefix.pop_back();
    }
    return false;
}

Permutation den_decode(const Code& c) {
    Word prefix;
    std::vector<bool> used(static_cast<std::size_t>(c.size()) + 1, false);
    std::optional<Permutation> found;
    auto first = [&found](const Word& w) {
        found.emplace(w);
        return true;
    };
    den_search(c, prefix, used, first);
    if (!found) throw InternalInconsistency("den decode: no permutation has code " + c.to_string());
    return *found;
}

Permutation han_decode(const Code& c) {
    Permutation p = Permutation::identity(1);
    for (int j = 2; j <= c.size(); ++j) p = psi(p, c(j));
    return p;
}

// table[rank(psi(pi, s))] = rank(pi) * n + s
detail::TableCache::Table build_psi_inverse(int n) {
    detail::TableCache::Table table(factorial(n), detail::kUnfilled);
    const std::size_t parents = factorial(n - 1);
    for (std::size_t r = 0; r < parents; ++r) {
        const Permutation parent = lex_unrank(n - 1, r);
        for (int s = 0; s < n; ++s) {
            auto& slot = table[lex_rank(psi(parent, s))];
            if (slot != detail::kUnfilled) {
                throw InternalInconsistency("psi is not injective on S_" + std::to_string(n - 1));
            }
            slot = static_cast<std::uint32_t>(r * static_cast<std::size_t>(n) +
                                              static_cast<std::size_t>(s));
        }
    }
    return table;
}

detail::TableCache& psi_inverse_cache() {
    static detail::TableCache cache("han encode table");
    return cache;
}

Code han_encode(const Permutation& p) {
    std::vector<int> e(static_cast<std::size_t>(p.size()), 0);
    Permutation current = p;
    for (int m = p.size(); m >= 2; --m) {
        const auto& table = psi_inverse_cache().get(m, build_psi_inverse);
        const std::uint32_t packed = table[lex_rank(current)];
        e[static_cast<std::size_t>(m - 1)] = static_cast<int>(packed % static_cast<std::uint32_t>(m));
        current = lex_unrank(m - 1, packed / static_cast<std::uint32_t>(m));
    }
    return Code(std::move(e));
}

Code sor_encode(const Permutation& p) {
    const auto c = sor_c_values(p);
    std::vector<int> e;
    for (int j = 1; j <= p.size(); ++j) e.push_back(j - c[static_cast<std::size_t>(j)]);
    return Code(std::move(e));
}

// sigma = (n c_n) o ... o (2 c_2) o (1 c_1): each transposition acts on values.
Permutation sor_decode(const Code& c) {
    const int n = c.size();
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    for (int j = 1; j <= n; ++j) {
        const int partner = j - c(j);
        if (partner == j) continue;
        for (int& v : w) {
            if (v == j) {
                v = partner;
            } else if (v == partner) {
                v = j;
            }
        }
    }
    return Permutation(std::move(w));
}

}  // namespace

Code encode(const Permutation& p, CodecId codec) {
    switch (codec) {
        case CodecId::Maj: return maj_encode(p);
        case CodecId::Inv: return inv_encode(p);
        case CodecId::Den: return den_encode(p);
        case CodecId::Han: return han_encode(p);
        case CodecId::Sor: return sor_encode(p);
        case CodecId::Mak: return han_encode(phi(p));
    }
    throw std::invalid_argument("unknown codec");
}

Permutation decode(const Code& c, CodecId codec) {
    switch (codec) {
        case CodecId::Maj: return maj_decode(c);
        case CodecId::Inv: return inv_decode(c);
        case CodecId::Den: return den_decode(c);
        case CodecId::Han: return han_decode(c);
        case CodecId::Sor: return sor_decode(c);
        case CodecId::Mak: return phi_inverse(han_decode(c));
    }
    throw std::invalid_argument("unknown codec");
}

std::vector<Permutation> den_decode_all(const Code& c) {
    Word prefix;
    std::vector<bool> used(static_cast<std::size_t>(c.size()) + 1, false);
    std::vector<Permutation> found;
    auto collect = [&found](const Word& w) {
        found.emplace_back(w);
        return false;
    };
    den_search(c, prefix, used, collect);
    return found;
}

}  // namespace permstat
