#include "permstat/verify.hpp"

#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "permstat/bijections.hpp"
#include "permstat/errors.hpp"
#include "permstat/limits.hpp"
#include "permstat/statistics.hpp"

namespace permstat {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_enumerable(int n) {
    if (n < 1) throw ValidationError("n must be at least 1, got " + std::to_string(n));
    if (n > enumeration_cap()) {
        throw CapExceededError("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                               std::to_string(enumeration_cap()));
    }
}

std::string range_scope(int n_min, int n_max) {
    return "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
}

Exponents exponents_of(const DistributionSpec& spec, const Permutation& p) {
    Exponents e;
    if (spec.y) e.y = evaluate(*spec.y, p);
    if (spec.x) e.x = evaluate(*spec.x, p);
    if (spec.q) e.q = evaluate(*spec.q, p);
    return e;
}

// First monomial, in canonical order, whose coefficients differ. Names a witness
// permutation when the tested side has the monomial at all.
std::optional<std::string> first_difference(int n, const DistributionSpec& spec,
                                            const MultiPoly& got, const MultiPoly& expected) {
    std::set<Exponents, std::greater<>> keys;
    for (const auto& [e, c] : got.terms()) keys.insert(e);
    for (const auto& [e, c] : expected.terms()) keys.insert(e);
    for (const Exponents& e : keys) {
        const auto g = got.coefficient(e);
        const auto x = expected.coefficient(e);
        if (g == x) continue;
        std::string out = "n=" + std::to_string(n) + ": coefficient of " +
                          MultiPoly::monomial(e).to_string() + " is " + std::to_string(g) +
                          ", expected " + std::to_string(x);
        if (g != 0) {
            std::optional<Permutation> witness;
            for_each_permutation(n, [&](const Permutation& p) {
                if (!witness && exponents_of(spec, p) == e) witness = p;
            });
            if (witness) out += " (first permutation with this monomial: " + witness->to_string() + ")";
        }
        return out;
    }
    return std::nullopt;
}

// Runs `body(n)` for n = n_min..n_max, timing each; stops at the first counterexample.
template <typename Body>
CheckReport run_over_n(std::string name, int n_min, int n_max, Body&& body) {
    CheckReport report;
    report.name = std::move(name);
    report.scope = range_scope(n_min, n_max);
    const auto start = Clock::now();
    for (int n = n_min; n <= n_max; ++n) {
        const auto stage_start = Clock::now();
        std::optional<std::string> failure = body(n);
        report.stages.push_back({"n=" + std::to_string(n), seconds_since(stage_start)});
        if (failure) {
            report.passed = false;
            report.counterexample = std::move(failure);
            break;
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

void require_n_max(int n_max) {
    if (n_max < 1) throw ValidationError("max n must be at least 1");
    if (n_max > enumeration_cap()) require_enumerable(n_max);
}

std::string mismatch(const Permutation& p, const std::string& lhs_name, int lhs,
                     const std::string& rhs_name, int rhs) {
    return "n=" + std::to_string(p.size()) + ", sigma=" + p.to_string() + ": " + lhs_name + "=" +
           std::to_string(lhs) + " but " + rhs_name + "=" + std::to_string(rhs);
}

}  // namespace

std::string_view stat_name(StatId id) {
    switch (id) {
        case StatId::Inv: return "inv";
        case StatId::Maj: return "maj";
        case StatId::Des: return "des";
        case StatId::Exc: return "exc";
        case StatId::Rlmin: return "rlmin";
        case StatId::Cyc: return "cyc";
        case StatId::Den: return "den";
        case StatId::Mak: return "mak";
        case StatId::Sor: return "sor";
        case StatId::Stc: return "stc";
        case StatId::ZerDen: return "zer_den";
        case StatId::StDen: return "st_den";
        case StatId::StSor: return "st_sor";
    }
    return "?";
}

std::optional<StatId> stat_from_name(std::string_view name) {
    for (StatId id : kAllStats) {
        if (stat_name(id) == name) return id;
    }
    return std::nullopt;
}

int evaluate(StatId stat, const Permutation& p) {
    switch (stat) {
        case StatId::Inv: return inv(p);
        case StatId::Maj: return maj(p);
        case StatId::Des: return des(p);
        case StatId::Exc: return exc(p);
        case StatId::Rlmin: return rlmin(p);
        case StatId::Cyc: return cyc(p);
        case StatId::Den: return den(p);
        case StatId::Mak: return mak(p);
        case StatId::Sor: return sor(p);
        case StatId::Stc: return st(encode(p, CodecId::Inv));
        case StatId::ZerDen: return zer(encode(p, CodecId::Den));
        case StatId::StDen: return st(encode(p, CodecId::Den));
        case StatId::StSor: return st(encode(p, CodecId::Sor));
    }
    throw std::invalid_argument("unknown statistic");
}

std::string TripleSpec::to_string() const {
    return "(" + std::string(stat_name(stirling)) + ", " + std::string(stat_name(eulerian)) + ", " +
           std::string(stat_name(mahonian)) + ")";
}

TripleSpec reference_triple() { return {StatId::Rlmin, StatId::Des, StatId::Maj}; }

std::optional<TripleSpec> sem_triple_from_name(std::string_view name) {
    if (name == "inv") return TripleSpec{StatId::Rlmin, StatId::Stc, StatId::Inv};
    if (name == "den-code") return TripleSpec{StatId::ZerDen, StatId::StDen, StatId::Den};
    if (name == "den") return TripleSpec{StatId::Rlmin, StatId::Exc, StatId::Den};
    if (name == "mak") return TripleSpec{StatId::Rlmin, StatId::Des, StatId::Mak};
    if (name == "sor") return TripleSpec{StatId::Cyc, StatId::StSor, StatId::Sor};
    return std::nullopt;
}

MultiPoly distribution(int n, const DistributionSpec& spec, int jobs) {
    require_enumerable(n);
    if (jobs < 1) throw ValidationError("jobs must be at least 1");

    // One partial sum per leading entry.
    std::vector<MultiPoly> partial(static_cast<std::size_t>(n));
    const auto sweep_prefix = [&](int first) {
        Word w{first};
        for (int v = 1; v <= n; ++v) {
            if (v != first) w.push_back(v);
        }
        MultiPoly& acc = partial[static_cast<std::size_t>(first - 1)];
        do {
            acc.add_term(exponents_of(spec, Permutation(w)), 1);
        } while (std::next_permutation(w.begin() + 1, w.end()));
    };

    const int workers = std::min(jobs, n);
    if (workers == 1) {
        for (int first = 1; first <= n; ++first) sweep_prefix(first);
    } else {
        std::atomic<int> next{1};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> threads;
        for (int t = 0; t < workers; ++t) {
            threads.emplace_back([&, t] {
                try {
                    for (int first = next++; first <= n; first = next++) sweep_prefix(first);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        }
        for (auto& th : threads) th.join();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    MultiPoly total;
    for (const auto& p : partial) total += p;
    return total;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Mahonian: return "mahonian";
        case Family::Eulerian: return "eulerian";
        case Family::Stirling: return "stirling";
    }
    return "?";
}

CheckReport check_univariate(StatId stat, Family family, int n_max, int jobs) {
    require_n_max(n_max);
    const std::string name = std::string(family_name(family)) + "." + std::string(stat_name(stat));
    return run_over_n(name, 1, n_max, [&](int n) {
        DistributionSpec spec;
        MultiPoly expected;
        switch (family) {
            case Family::Mahonian:
                spec.q = stat;
                expected = q_factorial(n);
                break;
            case Family::Eulerian:
                spec.x = stat;
                expected = distribution(n, DistributionSpec{std::nullopt, StatId::Des, std::nullopt}, jobs);
                break;
            case Family::Stirling:
                spec.y = stat;
                expected = rising_factorial(n);
                break;
        }
        return first_difference(n, spec, distribution(n, spec, jobs), expected);
    });
}

CheckReport check_sem_triple(const TripleSpec& triple, int n_max, int jobs) {
    require_n_max(n_max);
    return run_over_n("sem." + triple.to_string(), 1, n_max, [&](int n) {
        const auto spec = triple.as_distribution();
        return first_difference(n, spec, distribution(n, spec, jobs),
                                distribution(n, reference_triple().as_distribution(), jobs));
    });
}

CheckReport check_code_identities(int n_max, const Encoder& encoder) {
    require_n_max(n_max);
    return run_over_n("codes.pointwise", 1, n_max, [&](int n) {
        std::optional<std::string> failure;
        for_each_permutation(n, [&](const Permutation& p) {
            if (failure) return;
            const Code majcode = encoder(p, CodecId::Maj);
            const Code hancode = encoder(p, CodecId::Han);
            const Code sorcode = encoder(p, CodecId::Sor);
            const Permutation tau = phi(p);
            const int r = rlmin(p);

            if (zer(majcode) != r) {
                failure = mismatch(p, "zer(majcode)", zer(majcode), "rlmin", r);
            } else if (st(majcode) != des(p)) {
                failure = mismatch(p, "st(majcode)", st(majcode), "des", des(p));
            } else if (st(hancode) != exc(p)) {
                failure = mismatch(p, "st(hancode)", st(hancode), "exc", exc(p));
            } else if (zer(hancode) != r) {
                failure = mismatch(p, "zer(hancode)", zer(hancode), "rlmin", r);
            } else if (zer(sorcode) != cyc(p)) {
                failure = mismatch(p, "zer(sorcode)", zer(sorcode), "cyc", cyc(p));
            } else if (mak(p) != den(tau)) {
                failure = mismatch(p, "mak", mak(p), "den(phi)", den(tau));
            } else if (rlmin(tau) != r) {
                failure = mismatch(p, "rlmin", r, "rlmin(phi)", rlmin(tau));
            } else {
                const auto minima = rlmin_values(p);
                for (int top : excedance_tops(p)) {
                    if (std::find(minima.begin(), minima.end(), top) != minima.end()) {
                        failure = "n=" + std::to_string(n) + ", sigma=" + p.to_string() +
                                  ": excedance top " + std::to_string(top) +
                                  " is a right-to-left minimum";
                        break;
                    }
                }
            }
        });
        return failure;
    });
}

CheckReport check_roundtrips(int n_max) {
    require_n_max(n_max);
    return run_over_n("codes.roundtrip", 1, n_max, [&](int n) {
        std::optional<std::string> failure;
        for (CodecId codec : kAllCodecs) {
            const std::string name(codec_name(codec));
            for_each_permutation(n, [&](const Permutation& p) {
                if (failure) return;
                const Code c = encode(p, codec);
                const Permutation back = decode(c, codec);
                if (back != p) {
                    failure = "n=" + std::to_string(n) + ", " + name + ": decode(encode(" +
                              p.to_string() + ")) = " + back.to_string();
                }
            });
            if (failure) return failure;
            for_each_code(n, [&](const Code& c) {
                if (failure) return;
                const Code back = encode(decode(c, codec), codec);
                if (back != c) {
                    failure = "n=" + std::to_string(n) + ", " + name + ": encode(decode(" +
                              c.to_string() + ")) = " + back.to_string();
                }
            });
            if (failure) return failure;
        }
        for_each_code(n, [&](const Code& c) {
            if (failure) return;
            const auto completions = den_decode_all(c);
            if (completions.size() != 1) {
                failure = "n=" + std::to_string(n) + ": den code " + c.to_string() + " has " +
                          std::to_string(completions.size()) + " completions";
            }
        });
        return failure;
    });
}

CheckReport check_codemap_transport(int n_max) {
    require_n_max(n_max);
    return run_over_n("codes.codemap", 1, n_max, [&](int n) {
        std::optional<std::string> failure;
        for (CodecId codec : kAllCodecs) {
            const std::string name(codec_name(codec));
            std::set<Permutation> images;
            for_each_permutation(n, [&](const Permutation& p) {
                if (failure) return;
                const Permutation image = codemap(p, codec);
                images.insert(image);
                const Code c = encode(image, codec);
                const auto where = "n=" + std::to_string(n) + ", " + name + ", sigma=" + p.to_string() + ": ";
                if (zer(c) != rlmin(p) || st(c) != des(p) || add(c) != maj(p)) {
                    failure = where + "(zer, st, add) of the image code differs from (rlmin, des, maj)";
                    return;
                }
                const int target = [&] {
                    switch (codec) {
                        case CodecId::Maj: return maj(image);
                        case CodecId::Inv: return inv(image);
                        case CodecId::Den:
                        case CodecId::Han: return den(image);
                        case CodecId::Sor: return sor(image);
                        case CodecId::Mak: return mak(image);
                    }
                    return -1;
                }();
                if (add(c) != target) {
                    failure = where + "code sum " + std::to_string(add(c)) + " differs from the statistic " +
                              std::to_string(target);
                } else if (codec == CodecId::Maj && image != p) {
                    failure = where + "codemap with maj is not the identity";
                } else if (codec == CodecId::Han &&
                           (rlmin(image) != rlmin(p) || exc(image) != des(p) || den(image) != maj(p))) {
                    failure = where + "(rlmin, exc, den) of the image differs from (rlmin, des, maj)";
                } else if (codec == CodecId::Mak &&
                           (rlmin(image) != rlmin(p) || des(image) != des(p) || mak(image) != maj(p))) {
                    failure = where + "(rlmin, des, mak) of the image differs from (rlmin, des, maj)";
                }
            });
            if (failure) return failure;
            if (images.size() != factorial(n)) {
                return std::optional<std::string>("n=" + std::to_string(n) + ", " + name +
                                                  ": codemap is not injective");
            }
        }
        return failure;
    });
}

namespace {

void require_qy_params(int n, int k, int param, const char* param_name) {
    if (n < 1 || k < 1 || k > n) {
        throw ValidationError("need 1 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    if (param < 1) throw ValidationError(std::string(param_name) + " must be at least 1");
}

std::string qy_scope(int n, int k, const char* param_name, int param) {
    return "n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", " + param_name + "=" +
           std::to_string(param);
}

long binomial2(int a) { return static_cast<long>(a) * (a - 1) / 2; }

}  // namespace

MultiPoly qy_eulerian(int n, int k, int y, const TripleSpec& triple) {
    require_qy_params(n, k, y, "y");
    const MultiPoly dist = distribution(n, triple.as_distribution());
    const MultiPoly bracket = q_int(y);
    MultiPoly out;
    for (const auto& [e, c] : dist.terms()) {
        if (e.x != k - 1) continue;
        if (e.y > n) throw ValidationError("Stirling statistic exceeds n in " + triple.to_string());
        const int shift = (n - e.y) * (y - 1) + e.q;
        out += MultiPoly::constant(c) * bracket.pow(static_cast<unsigned>(e.y)) *
               MultiPoly::variable(Var::Q, shift);
    }
    return out;
}

MultiPoly qy_eulerian_closed_form(int n, int k, int y) {
    require_qy_params(n, k, y, "y");
    MultiPoly out;
    for (int j = 0; j <= k - 1; ++j) {
        const int r = k - j - 1;
        MultiPoly term = q_binomial(y + n, r) * q_binomial(y + j - 1, j) *
                         MultiPoly::variable(Var::Q, static_cast<int>(binomial2(r))) *
                         q_int(y + j).pow(static_cast<unsigned>(n));
        if (r % 2 == 1) {
            out -= term;
        } else {
            out += term;
        }
    }
    return out;
}

MultiPoly qy_eulerian_recurrence_rhs(int n, int k, int y) {
    require_qy_params(n, k, y, "y");
    if (n < 2) throw ValidationError("the recurrence needs n >= 2");
    const MultiPoly same_k = k <= n - 1 ? qy_eulerian(n - 1, k, y) : MultiPoly{};
    const MultiPoly lower_k = k >= 2 ? qy_eulerian(n - 1, k - 1, y) : MultiPoly{};
    return q_int(y + k - 1) * same_k +
           MultiPoly::variable(Var::Q, y + k - 2) * q_int(n - k + 1) * lower_k;
}

namespace {

template <typename Body>
CheckReport single_instance(std::string name, std::string scope, Body&& body) {
    CheckReport report;
    report.name = std::move(name);
    report.scope = std::move(scope);
    const auto start = Clock::now();
    report.counterexample = body();
    report.passed = !report.counterexample;
    report.elapsed_seconds = seconds_since(start);
    report.stages.push_back({report.scope, report.elapsed_seconds});
    return report;
}

}  // namespace

CheckReport check_symmetry_unimodality(int n, int k, int m) {
    require_qy_params(n, k, m, "m");
    return single_instance("s7.symmetry", qy_scope(n, k, "m", m), [&]() -> std::optional<std::string> {
        const MultiPoly poly = qy_eulerian(n, k, m);
        if (poly.is_zero()) return std::nullopt;
        const QShape shape = shape_q(poly);
        const int expected = n * (m + k - 2) + (k - 1) * (m - 1);
        std::string problem;
        if (!shape.symmetric) problem = "not symmetric";
        else if (!shape.unimodal) problem = "not unimodal";
        else if (shape.virtual_degree != expected) {
            problem = "virtual degree " + std::to_string(shape.virtual_degree) + ", expected " +
                      std::to_string(expected);
        }
        if (problem.empty()) return std::nullopt;
        return qy_scope(n, k, "m", m) + ": " + problem + " (" + poly.to_string() + ")";
    });
}

CheckReport check_identity(int n, int k, int y) {
    require_qy_params(n, k, y, "y");
    return single_instance("s7.identity", qy_scope(n, k, "y", y), [&]() -> std::optional<std::string> {
        const MultiPoly lhs = qy_eulerian(n, k, y);
        const MultiPoly rhs = qy_eulerian_closed_form(n, k, y);
        if (lhs == rhs) return std::nullopt;
        return qy_scope(n, k, "y", y) + ": enumeration gives " + lhs.to_string() +
               ", alternating sum gives " + rhs.to_string();
    });
}

CheckReport check_recurrence(int n, int k, int y) {
    require_qy_params(n, k, y, "y");
    if (n < 2) throw ValidationError("the recurrence needs n >= 2");
    return single_instance("s7.recurrence", qy_scope(n, k, "y", y), [&]() -> std::optional<std::string> {
        const MultiPoly lhs = qy_eulerian(n, k, y);
        const MultiPoly rhs = qy_eulerian_recurrence_rhs(n, k, y);
        if (lhs == rhs) return std::nullopt;
        return qy_scope(n, k, "y", y) + ": A_{n,k} = " + lhs.to_string() + ", recurrence gives " +
               rhs.to_string();
    });
}

namespace {

template <typename Single>
CheckReport sweep(std::string name, int n_min, int n_max, int param_max, const char* param_name,
                  Single&& single) {
    require_n_max(n_max);
    if (param_max < 1) throw ValidationError(std::string(param_name) + " bound must be at least 1");
    CheckReport report = run_over_n(std::move(name), n_min, n_max, [&](int n) -> std::optional<std::string> {
        for (int k = 1; k <= n; ++k) {
            for (int param = 1; param <= param_max; ++param) {
                CheckReport r = single(n, k, param);
                if (!r.passed) return r.counterexample;
            }
        }
        return std::nullopt;
    });
    report.scope += ", k=1..n, " + std::string(param_name) + "=1.." + std::to_string(param_max);
    return report;
}

}  // namespace

CheckReport sweep_symmetry_unimodality(int n_max, int m_max) {
    return sweep("s7.symmetry", 1, n_max, m_max, "m", check_symmetry_unimodality);
}

CheckReport sweep_identity(int n_max, int y_max) {
    return sweep("s7.identity", 1, n_max, y_max, "y", check_identity);
}

CheckReport sweep_recurrence(int n_max, int y_max) {
    return sweep("s7.recurrence", 2, n_max, y_max, "y", check_recurrence);
}

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (auto s : {"inv", "maj", "den", "mak", "sor"}) ids.push_back(std::string("mahonian.") + s);
    for (auto s : {"des", "exc", "stc", "st_den", "st_sor"}) ids.push_back(std::string("eulerian.") + s);
    for (auto s : {"rlmin", "cyc", "zer_den"}) ids.push_back(std::string("stirling.") + s);
    for (auto s : kSemTripleNames) ids.push_back("sem." + std::string(s));
    for (auto s : {"codes.pointwise", "codes.roundtrip", "codes.codemap", "s7.symmetry",
                   "s7.identity", "s7.recurrence"}) {
        ids.emplace_back(s);
    }
    return ids;
}

CheckReport run_check(std::string_view id, const CheckOptions& options) {
    if (options.jobs < 1) throw ValidationError("jobs must be at least 1");
    const auto dot = id.find('.');
    if (dot == std::string_view::npos) throw ValidationError("unknown check '" + std::string(id) + "'");
    const auto group = id.substr(0, dot);
    const auto member = id.substr(dot + 1);
    const int default_max = std::min(kDefaultEnumerationCap, enumeration_cap());

    for (Family family : {Family::Mahonian, Family::Eulerian, Family::Stirling}) {
        if (group != family_name(family)) continue;
        const auto stat = stat_from_name(member);
        if (!stat) throw ValidationError("unknown statistic '" + std::string(member) + "'");
        return check_univariate(*stat, family, options.max_n.value_or(default_max), options.jobs);
    }
    if (group == "sem") {
        const auto triple = sem_triple_from_name(member);
        if (!triple) throw ValidationError("unknown triple '" + std::string(member) + "'");
        CheckReport r = check_sem_triple(*triple, options.max_n.value_or(default_max), options.jobs);
        r.name = std::string(id);
        return r;
    }
    if (group == "codes") {
        const int n_max = options.max_n.value_or(7);
        if (member == "pointwise") return check_code_identities(n_max);
        if (member == "roundtrip") return check_roundtrips(n_max);
        if (member == "codemap") return check_codemap_transport(n_max);
    }
    if (group == "s7") {
        const bool any = options.n || options.k || options.param;
        const bool all = options.n && options.k && options.param;
        if (any && !all) throw ValidationError("--n, --k and the m/y parameter must be given together");
        const int n_max = options.max_n.value_or(6);
        if (member == "symmetry") {
            return all ? check_symmetry_unimodality(*options.n, *options.k, *options.param)
                       : sweep_symmetry_unimodality(n_max, options.param_max);
        }
        if (member == "identity") {
            return all ? check_identity(*options.n, *options.k, *options.param)
                       : sweep_identity(n_max, options.param_max);
        }
        if (member == "recurrence") {
            return all ? check_recurrence(*options.n, *options.k, *options.param)
                       : sweep_recurrence(n_max, options.param_max);
        }
    }
    throw ValidationError("unknown check '" + std::string(id) + "'");
}

}  // namespace permstat
