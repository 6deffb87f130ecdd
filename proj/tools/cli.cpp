#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "permstat/bijections.hpp"
#include "permstat/errors.hpp"
#include "permstat/limits.hpp"
#include "render.hpp"

namespace permstat::cli {

namespace {

constexpr const char* kCapVariable = "PERMSTAT_MAX_N";

// Restores the process-wide enumeration cap when an invocation overrides it.
class CapOverride {
public:
    CapOverride() : saved_(enumeration_cap()) {
        const char* value = std::getenv(kCapVariable);
        if (value == nullptr) return;
        const std::string_view text(value);
        int n = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
        if (ec != std::errc{} || ptr != text.data() + text.size() || n < 1 || n > 12) {
            throw UsageError(std::string(kCapVariable) + " must be an integer in 1..12, got '" +
                             std::string(text) + "'");
        }
        set_enumeration_cap(n);
    }
    ~CapOverride() { set_enumeration_cap(saved_); }
    CapOverride(const CapOverride&) = delete;
    CapOverride& operator=(const CapOverride&) = delete;

private:
    int saved_;
};

CodecId parse_codec(const std::string& name) {
    if (auto c = codec_from_name(name)) return *c;
    throw UsageError("unknown codec '" + name + "' (expected maj, inv, den, han, sor or mak)");
}

StatId parse_stat(std::string_view name) {
    if (auto s = stat_from_name(name)) return *s;
    throw UsageError("unknown statistic '" + std::string(name) + "'");
}

// "rlmin,des,maj" assigns y, x, q in order; "q=inv" or "y=cyc,q=sor" assigns by name.
DistributionSpec parse_distribution_spec(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest(text);
    while (true) {
        const auto comma = rest.find(',');
        parts.push_back(rest.substr(0, comma));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    DistributionSpec spec;
    const bool keyed = text.find('=') != std::string::npos;
    if (!keyed) {
        if (parts.size() != 3) {
            throw UsageError("expected three statistics for y,x,q or keyed form like q=inv, got '" + text + "'");
        }
        spec.y = parse_stat(parts[0]);
        spec.x = parse_stat(parts[1]);
        spec.q = parse_stat(parts[2]);
        return spec;
    }
    for (std::string_view part : parts) {
        const auto eq = part.find('=');
        if (eq == std::string_view::npos) throw UsageError("mixed keyed and positional statistics in '" + text + "'");
        const std::string_view var = part.substr(0, eq);
        std::optional<StatId>* slot = var == "y" ? &spec.y : var == "x" ? &spec.x : var == "q" ? &spec.q : nullptr;
        if (slot == nullptr) throw UsageError("unknown variable '" + std::string(var) + "' (expected y, x or q)");
        if (slot->has_value()) throw UsageError("variable '" + std::string(var) + "' assigned twice");
        *slot = parse_stat(part.substr(eq + 1));
    }
    return spec;
}

struct Arguments {
    std::string format = "text";
    std::string codec;
    std::string target;
    std::string input;
    std::optional<int> s, n, k, y, m, max_n;
    int jobs = 1;
};

int execute(CLI::App& app, const Arguments& a, std::ostream& out) {
    const Format f = format_from_name(a.format);
    const std::string cmd = app.get_subcommands().front()->get_name();

    if (cmd == "stats") {
        out << render_stats(parse_permutation(a.input), f);
        return 0;
    }
    if (cmd == "encode") {
        const CodecId codec = parse_codec(a.codec);
        const Permutation p = parse_permutation(a.input);
        out << render_code(p, encode(p, codec), codec, f);
        return 0;
    }
    if (cmd == "decode") {
        const CodecId codec = parse_codec(a.codec);
        const Code c = parse_code(a.input);
        out << render_decoded(c, decode(c, codec), codec, f);
        return 0;
    }
    if (cmd == "map") {
        const Permutation p = parse_permutation(a.input);
        if (a.target == "phi") {
            out << render_map(a.target, p, phi(p), f);
        } else if (a.target == "phi-inv") {
            out << render_map(a.target, p, phi_inverse(p), f);
        } else if (a.target == "psi") {
            if (!a.s) throw UsageError("map psi requires --s");
            out << render_map(a.target, p, psi(p, *a.s), f);
        } else if (a.target == "codemap") {
            if (a.codec.empty()) throw UsageError("map codemap requires --codec");
            out << render_map(a.target, p, codemap(p, parse_codec(a.codec)), f);
        } else {
            throw UsageError("unknown map '" + a.target + "' (expected phi, phi-inv, psi or codemap)");
        }
        return 0;
    }
    if (cmd == "dist") {
        const DistributionSpec spec =
            a.input.empty() ? reference_triple().as_distribution() : parse_distribution_spec(a.input);
        out << render_distribution(*a.n, spec, distribution(*a.n, spec, a.jobs), f);
        return 0;
    }
    if (cmd == "table") {
        const CodecId codec = parse_codec(a.codec);
        if (*a.n < 1) throw ValidationError("n must be at least 1");
        if (*a.n > enumeration_cap()) {
            throw CapExceededError("table for n=" + std::to_string(*a.n) + " exceeds enumeration cap " +
                                   std::to_string(enumeration_cap()));
        }
        out << render_table(*a.n, codec, f);
        return 0;
    }
    // verify
    if (f == Format::Csv) throw UsageError("format csv is not available for verify");
    if (a.m && a.y) throw UsageError("--m and --y are mutually exclusive");
    CheckOptions options;
    options.max_n = a.max_n;
    options.n = a.n;
    options.k = a.k;
    options.jobs = a.jobs;
    const std::optional<int> param = a.m ? a.m : a.y;
    if (a.n || a.k) {
        options.param = param;
    } else if (param) {
        options.param_max = *param;
    }
    const CheckReport report = run_check(a.target, options);
    out << render_report(report, f);
    return report.passed ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Permutation statistics, codes, bijections and equidistribution checks", "permstat"};
    app.require_subcommand(1);
    app.fallthrough();
    Arguments a;
    app.add_option("--format", a.format, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* stats = app.add_subcommand("stats", "Print the statistics of a permutation");
    stats->add_option("permutation", a.input, "One-line notation, e.g. 354162 or 3,5,4,1,6,2")->required();

    auto* enc = app.add_subcommand("encode", "Encode a permutation with a codec");
    enc->add_option("--codec", a.codec, "maj, inv, den, han, sor or mak")->required();
    enc->add_option("permutation", a.input, "One-line notation")->required();

    auto* dec = app.add_subcommand("decode", "Decode a code with a codec");
    dec->add_option("--codec", a.codec, "maj, inv, den, han, sor or mak")->required();
    dec->add_option("code", a.input, "Comma-separated entries, e.g. 0,0,1,1,3,5")->required();

    auto* map = app.add_subcommand("map", "Apply phi, phi-inv, psi or codemap");
    map->add_option("map", a.target, "phi, phi-inv, psi or codemap")->required();
    map->add_option("permutation", a.input, "One-line notation")->required();
    map->add_option("--s", a.s, "Insertion label for psi");
    map->add_option("--codec", a.codec, "Target codec for codemap");

    auto* dist = app.add_subcommand("dist", "Joint distribution over S_n as a polynomial in y, x, q");
    dist->add_option("statistics", a.input, "y,x,q statistics (default rlmin,des,maj) or keyed, e.g. q=inv");
    dist->add_option("--n", a.n, "Size of the symmetric group")->required();
    dist->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run an exhaustive check");
    verify->add_option("check", a.target, "Check id, e.g. sem.den, mahonian.inv, codes.pointwise, s7.identity")
        ->required();
    verify->add_option("--max-n", a.max_n, "Largest n to enumerate");
    verify->add_option("--n", a.n, "n for a single s7 instance");
    verify->add_option("--k", a.k, "k for a single s7 instance");
    verify->add_option("--m", a.m, "m for s7.symmetry (largest m when sweeping)");
    verify->add_option("--y", a.y, "y for s7.identity and s7.recurrence (largest y when sweeping)");
    verify->add_option("--jobs", a.jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "Tabulate a codec over S_n");
    table->add_option("--codec", a.codec, "maj, inv, den, han, sor or mak")->required();
    table->add_option("--n", a.n, "Size of the symmetric group")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? 0 : 2;
    }

    try {
        CapOverride cap;
        return execute(app, a, out);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace permstat::cli
