#pragma once

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/codes.hpp"
#include "permstat/permutation.hpp"
#include "permstat/qpoly.hpp"

namespace permstat {

enum class StatId { Inv, Maj, Des, Exc, Rlmin, Cyc, Den, Mak, Sor, Stc, ZerDen, StDen, StSor };

inline constexpr std::array<StatId, 13> kAllStats = {
    StatId::Inv, StatId::Maj, StatId::Des,   StatId::Exc,   StatId::Rlmin, StatId::Cyc,  StatId::Den,
    StatId::Mak, StatId::Sor, StatId::Stc,   StatId::ZerDen, StatId::StDen, StatId::StSor};

/// inv, maj, des, exc, rlmin, cyc, den, mak, sor, stc, zer_den, st_den, st_sor
std::string_view stat_name(StatId id);
std::optional<StatId> stat_from_name(std::string_view name);

int evaluate(StatId stat, const Permutation& p);

/// Which statistic feeds each variable; unset variables are left out.
struct DistributionSpec {
    std::optional<StatId> y;
    std::optional<StatId> x;
    std::optional<StatId> q;
};

/// (Stirling, Eulerian, Mahonian) mapped to (y, x, q).
struct TripleSpec {
    StatId stirling;
    StatId eulerian;
    StatId mahonian;

    DistributionSpec as_distribution() const { return {stirling, eulerian, mahonian}; }
    /// "(rlmin, des, maj)"
    std::string to_string() const;
};

/// (rlmin, des, maj), the reference triple.
TripleSpec reference_triple();

/// Triples by CLI name: inv, den-code, den, mak, sor.
std::optional<TripleSpec> sem_triple_from_name(std::string_view name);
inline constexpr std::array<std::string_view, 5> kSemTripleNames = {"inv", "den-code", "den", "mak",
                                                                    "sor"};

/// Sum over S_n of y^{spec.y} x^{spec.x} q^{spec.q}. Permutations are split by their first
/// entry across `jobs` threads; the merge is exact, so the result does not depend on `jobs`.
/// Throws CapExceededError when n > enumeration_cap().
MultiPoly distribution(int n, const DistributionSpec& spec, int jobs = 1);

struct StageTiming {
    std::string label;
    double seconds = 0.0;
};

struct CheckReport {
    std::string name;
    std::string scope;  // e.g. "n=1..6" or "n=2, k=2, m=2"
    bool passed = true;
    std::optional<std::string> counterexample;
    std::vector<StageTiming> stages;
    double elapsed_seconds = 0.0;
};

enum class Family { Mahonian, Eulerian, Stirling };

std::string_view family_name(Family f);

/// Compares the distribution of `stat` with [n]!_q, the des distribution, or
/// y(y+1)...(y+n-1) for every n = 1..n_max.
CheckReport check_univariate(StatId stat, Family family, int n_max, int jobs = 1);

/// Compares the trivariate distribution of `triple` with that of (rlmin, des, maj).
CheckReport check_sem_triple(const TripleSpec& triple, int n_max, int jobs = 1);

using Encoder = std::function<Code(const Permutation&, CodecId)>;

/// The pointwise identities: zer(majcode)=rlmin, st(majcode)=des, st(hancode)=exc,
/// zer(hancode)=rlmin, zer(sorcode)=cyc, mak=den(phi), rlmin=rlmin(phi), and no excedance
/// top is a right-to-left minimum. `encoder` is injectable for fault-injection tests.
CheckReport check_code_identities(int n_max, const Encoder& encoder = encode);

/// decode(encode(p)) = p on S_n and encode(decode(c)) = c on E_n for all six codecs,
/// plus uniqueness of the DEN backtracking decode.
CheckReport check_roundtrips(int n_max);

/// (rlmin, des, maj)(p) = (zer, st, add)(encode(codemap(p, C), C)) for C in
/// {INV, DEN, HAN, SOR, MAK}, plus the HAN and MAK specializations and injectivity.
CheckReport check_codemap_transport(int n_max);

/// A_{n,k}(y) = sum over des = k-1 of [y]^rlmin q^{(n-rlmin)(y-1)+maj}, computed from the
/// distribution of `triple` (any SEM triple gives the same polynomial).
MultiPoly qy_eulerian(int n, int k, int y, const TripleSpec& triple = reference_triple());

/// The alternating q-binomial sum that equals A_{n,k}(y).
MultiPoly qy_eulerian_closed_form(int n, int k, int y);

/// Right-hand side of the A_{n,k} recurrence, built from A_{n-1,k} and A_{n-1,k-1}.
MultiPoly qy_eulerian_recurrence_rhs(int n, int k, int y);

CheckReport check_symmetry_unimodality(int n, int k, int m);
CheckReport check_identity(int n, int k, int y);
CheckReport check_recurrence(int n, int k, int y);

/// Sweeps the three checks above over every (n, k, param) with n_min <= n <= n_max,
/// 1 <= k <= n and 1 <= param <= param_max; stops at the first failure.
CheckReport sweep_symmetry_unimodality(int n_max, int m_max);
CheckReport sweep_identity(int n_max, int y_max);
CheckReport sweep_recurrence(int n_max, int y_max);

/// Options for run_check. Unset n/k/param means sweep.
struct CheckOptions {
    std::optional<int> max_n;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> param;  // m for s7.symmetry, y for s7.identity and s7.recurrence
    int param_max = 4;
    int jobs = 1;
};

/// Every check id accepted by run_check.
std::vector<std::string> check_ids();

/// Dispatches a check id such as "mahonian.den", "sem.mak", "codes.pointwise" or
/// "s7.identity". Throws ValidationError for unknown ids or bad options.
CheckReport run_check(std::string_view id, const CheckOptions& options);

}  // namespace permstat
