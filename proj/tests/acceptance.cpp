// Acceptance gate: one PASS/FAIL line per criterion, sub-checks indented beneath it.
// Everything is exact; the only tolerances are the wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "permstat/bijections.hpp"
#include "permstat/codes.hpp"
#include "permstat/limits.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/statistics.hpp"
#include "permstat/verify.hpp"

using namespace permstat;

namespace {

constexpr double kWorkedExampleBudget = 1.0;
constexpr double kDistributionBudget = 60.0;
constexpr double kTheoremSweepBudget = 30.0;

constexpr int kDistributionMaxN = 8;
constexpr int kPointwiseMaxN = 7;
constexpr int kSweepMaxN = 6;
constexpr int kSweepParamMax = 4;
constexpr int kStOracleMaxN = 8;
constexpr int kBinomialMaxA = 12;

struct SubCheck {
    std::string what;
    bool passed;
    std::string detail;
};

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {}

    void check(std::string what, bool passed, std::string detail = {}) {
        subs_.push_back({std::move(what), passed, std::move(detail)});
    }

    void report(const CheckReport& r) {
        check(r.name + " (" + r.scope + ")", r.passed, r.counterexample.value_or(""));
    }

    // Runs `body` and adds a sub-check that it finished inside `budget` seconds.
    void timed(double budget, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            check("no exception", false, e.what());
        }
        elapsed_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "runtime %.2f s < %.0f s", elapsed_, budget);
            check(buf, elapsed_ < budget);
        }
    }

    bool print() const {
        bool passed = true;
        int failures = 0;
        for (const auto& s : subs_) {
            passed = passed && s.passed;
            failures += s.passed ? 0 : 1;
        }
        std::printf("criterion %d: %s  %s  [%zu checks, %d failed, %.2f s]\n", number_, passed ? "PASS" : "FAIL",
                    title_.c_str(), subs_.size(), failures, elapsed_);
        for (const auto& s : subs_) {
            const bool show_detail = !s.passed && !s.detail.empty();
            std::printf("    %s %s%s%s\n", s.passed ? "ok  " : "FAIL", s.what.c_str(), show_detail ? ": " : "",
                        show_detail ? s.detail.c_str() : "");
        }
        std::fflush(stdout);
        return passed;
    }

private:
    int number_;
    std::string title_;
    std::vector<SubCheck> subs_;
    double elapsed_ = 0.0;
};

Permutation P(const char* s) { return parse_permutation(s); }
Code C(std::vector<int> e) { return Code(std::move(e)); }

template <class T>
std::string show(const T& v) {
    return v.to_string();
}

template <class T>
void expect(Criterion& c, const std::string& what, const T& got, const T& want) {
    c.check(what, got == want, got == want ? "" : "got " + show(got) + ", expected " + show(want));
}

void expect(Criterion& c, const std::string& what, int got, int want) {
    c.check(what, got == want, got == want ? "" : "got " + std::to_string(got) + ", expected " + std::to_string(want));
}

bool worked_examples() {
    Criterion c(1, "worked-example fidelity");
    c.timed(kWorkedExampleBudget, [&] {
        expect(c, "maj(354162) = 10", maj(P("354162")), 10);
        expect(c, "majcode(354162) = (0,0,1,1,3,5)", encode(P("354162"), CodecId::Maj), C({0, 0, 1, 1, 3, 5}));
        expect(c, "invcode(341625) = (0,0,2,0,2,2)", encode(P("341625"), CodecId::Inv), C({0, 0, 2, 0, 2, 2}));
        expect(c, "den(354162) = 12 via pair sets", den_by_pair_sets(P("354162")), 12);
        expect(c, "den(354162) = 12 via excedance subwords", den_by_excedance_subwords(P("354162")), 12);
        // Asserted as printed. See README: this value has entry sum 6 while den(341625) = 7.
        expect(c, "dencode(341625) = (0,0,0,3,2,1)", encode(P("341625"), CodecId::Den), C({0, 0, 0, 3, 2, 1}));

        const auto nu = nu_values(P("341625"));
        const Permutation sigma = P("341625");
        std::vector<int> by_position;
        for (int j = 1; j <= 6; ++j) by_position.push_back(nu.nu[sigma(j)]);
        c.check("nu-values of 341625 = 3,2,4,1,5,6", by_position == std::vector<int>{3, 2, 4, 1, 5, 6},
                word_to_string(by_position));

        expect(c, "psi(341625, 0) = 3416257", psi(sigma, 0), P("3416257"));
        expect(c, "psi(341625, 2) = 3614725", psi(sigma, 2), P("3614725"));
        expect(c, "psi(341625, 5) = 4361725", psi(sigma, 5), P("4361725"));

        const std::vector<std::pair<const char*, std::vector<int>>> han = {
            {"123", {0, 0, 0}}, {"132", {0, 0, 2}}, {"213", {0, 1, 0}},
            {"231", {0, 1, 2}}, {"312", {0, 0, 1}}, {"321", {0, 1, 1}}};
        for (const auto& [p, code] : han) {
            expect(c, std::string("hancode(") + p + ")", encode(P(p), CodecId::Han), C(code));
        }
        const std::vector<std::pair<const char*, std::vector<int>>> mak = {
            {"123", {0, 0, 0}}, {"132", {0, 0, 2}}, {"213", {0, 1, 0}},
            {"231", {0, 1, 1}}, {"312", {0, 0, 1}}, {"321", {0, 1, 2}}};
        for (const auto& [p, code] : mak) {
            expect(c, std::string("makcode(") + p + ")", encode(P(p), CodecId::Mak), C(code));
        }

        expect(c, "mak(354162) = 11", permstat::mak(P("354162")), 11);
        expect(c, "phi(354162) = 643512", phi(P("354162")), P("643512"));
        expect(c, "sor(354162) = 12", sor(P("354162")), 12);
        expect(c, "sorcode(341625) = (0,0,2,2,3,1)", encode(P("341625"), CodecId::Sor), C({0, 0, 2, 2, 3, 1}));
        expect(c, "st((0,0,1,1,3,5)) = 3", st(C({0, 0, 1, 1, 3, 5})), 3);
    });
    return c.print();
}

bool distribution_identities() {
    Criterion c(2, "distribution identities, n <= 8");
    c.timed(kDistributionBudget, [&] {
        for (StatId s : {StatId::Inv, StatId::Maj, StatId::Den, StatId::Mak, StatId::Sor}) {
            c.report(check_univariate(s, Family::Mahonian, kDistributionMaxN));
        }
        for (StatId s : {StatId::Exc, StatId::Stc, StatId::StDen, StatId::StSor}) {
            c.report(check_univariate(s, Family::Eulerian, kDistributionMaxN));
        }
        for (StatId s : {StatId::Rlmin, StatId::Cyc, StatId::ZerDen}) {
            c.report(check_univariate(s, Family::Stirling, kDistributionMaxN));
        }
    });
    return c.print();
}

bool sem_triples() {
    Criterion c(3, "SEM triples, n <= 8");
    c.timed(0, [&] {
        for (auto name : kSemTripleNames) {
            c.report(check_sem_triple(*sem_triple_from_name(name), kDistributionMaxN));
        }
    });
    return c.print();
}

bool pointwise_identities() {
    Criterion c(4, "pointwise code and bijection identities, n <= 7");
    c.timed(0, [&] {
        c.report(check_code_identities(kPointwiseMaxN));
        c.report(check_roundtrips(kPointwiseMaxN));
        c.report(check_codemap_transport(kPointwiseMaxN));
    });
    return c.print();
}

bool theorem_sweeps() {
    Criterion c(5, "q,y-Eulerian sweeps, n <= 6, m and y <= 4");
    c.timed(kTheoremSweepBudget, [&] {
        c.report(sweep_symmetry_unimodality(kSweepMaxN, kSweepParamMax));
        c.report(sweep_identity(kSweepMaxN, kSweepParamMax));
        c.report(sweep_recurrence(kSweepMaxN, kSweepParamMax));
    });
    return c.print();
}

bool oracle_properties() {
    Criterion c(6, "oracle properties");
    c.timed(0, [&] {
        for (int n = 1; n <= kStOracleMaxN; ++n) {
            std::string mismatch;
            for_each_code(n, [&](const Code& code) {
                if (mismatch.empty() && st(code) != oracle::st_brute_force(code.entries())) {
                    mismatch = code.to_string();
                }
            });
            c.check("greedy st = brute force on E_" + std::to_string(n), mismatch.empty(),
                    mismatch.empty() ? "" : "first mismatch at " + mismatch);
        }
        int compared = 0;
        std::string mismatch;
        for (int a = 0; a <= kBinomialMaxA; ++a) {
            for (int j = 0; j <= a; ++j, ++compared) {
                if (mismatch.empty() && q_binomial(a, j) != q_binomial_by_division(a, j)) {
                    mismatch = "a=" + std::to_string(a) + ", j=" + std::to_string(j);
                }
            }
        }
        c.check("q-binomial Pascal = product/division for a <= 12 (" + std::to_string(compared) + " pairs)",
                mismatch.empty(), mismatch);
    });
    return c.print();
}

bool cli_golden() {
    Criterion c(7, "command-line transcripts and exit codes");
    const auto invoke = [](std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
        std::ostringstream o, e;
        const int status = cli::run(args, o, e);
        if (out) *out = o.str();
        if (err) *err = e.str();
        return status;
    };
    c.timed(0, [&] {
        std::string out, err;
        int status = invoke({"stats", "354162"}, &out);
        c.check("stats 354162", status == 0 && out == "inv=8 des=3 maj=10 exc=4 rlmin=2 cyc=2 den=12 mak=11 sor=12\n",
                out);
        status = invoke({"encode", "--codec", "maj", "354162"}, &out);
        c.check("encode --codec maj 354162", status == 0 && out == "0,0,1,1,3,5\n", out);

        status = invoke({"verify", "sem.den", "--max-n", "6"}, &out);
        bool timed_stages = true;
        for (int n = 1; n <= 6; ++n) {
            timed_stages = timed_stages && out.find("  n=" + std::to_string(n) + "  ") != std::string::npos;
        }
        c.check("verify sem.den --max-n 6", status == 0 && out.starts_with("PASS") && timed_stages, out);

        status = invoke({"decode", "--codec", "den", "0,0,9"}, &out, &err);
        c.check("decode --codec den 0,0,9", status == 2 && out.empty() &&
                                                err == "entry 9 exceeds Lehmer bound 2 at position 3\n",
                err);

        status = invoke({"dist", "rlmin,des,maj", "--n", "2", "--format", "csv"}, &out);
        c.check("dist --n 2 --format csv", status == 0 && out == "y,x,q,coeff\n2,0,0,1\n1,1,1,1\n", out);

        // Injected faults: a failing theorem, bad input, unsupported format, cap breach.
        c.check("failing check exits 1", invoke({"verify", "mahonian.des", "--max-n", "3"}) == 1);
        c.check("failing triple exits 1", invoke({"verify", "stirling.inv", "--max-n", "3"}) == 1);
        c.check("invalid permutation exits 2", invoke({"stats", "3551"}) == 2);
        c.check("unknown codec exits 2", invoke({"encode", "--codec", "foo", "21"}) == 2);
        c.check("unknown check exits 2", invoke({"verify", "sem.nope"}) == 2);
        c.check("csv for stats exits 2", invoke({"stats", "21", "--format", "csv"}) == 2);
        c.check("cap breach exits 2", invoke({"dist", "--n", std::to_string(enumeration_cap() + 1)}) == 2);
        c.check("missing subcommand exits 2", invoke({}) == 2);
        c.check("--help exits 0", invoke({"--help"}) == 0);

        std::string disagreements;
        for (const auto& id : check_ids()) {
            CheckOptions options;
            options.max_n = 4;
            const int want = run_check(id, options).passed ? 0 : 1;
            if (invoke({"verify", id, "--max-n", "4"}) != want) disagreements += id + " ";
        }
        c.check("verify exit status matches the report for every check id", disagreements.empty(), disagreements);
    });
    return c.print();
}

}  // namespace

int main() {
    int failed = 0;
    for (auto criterion : {worked_examples, distribution_identities, sem_triples, pointwise_identities,
                           theorem_sweeps, oracle_properties, cli_golden}) {
        failed += criterion() ? 0 : 1;
    }
    std::printf("acceptance: %d of 7 criteria passed\n", 7 - failed);
    return failed == 0 ? 0 : 1;
}
