#include "render.hpp"

#include <cstdio>

#include <json.hpp>

#include "permstat/statistics.hpp"

namespace permstat::cli {

namespace {

using nlohmann::ordered_json;

void reject(Format f, Format unsupported, std::string_view what) {
    if (f == unsupported) {
        throw UsageError("format " + std::string(f == Format::Csv ? "csv" : "json") +
                         " is not available for " + std::string(what));
    }
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json code_array(const Code& c) {
    return ordered_json(std::vector<int>(c.entries().begin(), c.entries().end()));
}

std::string seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    return buf;
}

ordered_json spec_json(const DistributionSpec& spec) {
    ordered_json j = ordered_json::object();
    const auto put = [&](const char* key, const std::optional<StatId>& s) {
        j[key] = s ? ordered_json(std::string(stat_name(*s))) : ordered_json(nullptr);
    };
    put("y", spec.y);
    put("x", spec.x);
    put("q", spec.q);
    return j;
}

}  // namespace

Format format_from_name(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw UsageError("unknown format '" + std::string(name) + "'");
}

std::string render_stats(const Permutation& p, Format f) {
    reject(f, Format::Csv, "stats");
    if (f == Format::Json) {
        ordered_json j = ordered_json::object();
        for (StatId id : kAllStats) j[std::string(stat_name(id))] = evaluate(id, p);
        return dump(j);
    }
    std::string out;
    for (StatId id : {StatId::Inv, StatId::Des, StatId::Maj, StatId::Exc, StatId::Rlmin, StatId::Cyc,
                      StatId::Den, StatId::Mak, StatId::Sor}) {
        if (!out.empty()) out += ' ';
        out += std::string(stat_name(id)) + "=" + std::to_string(evaluate(id, p));
    }
    return out + "\n";
}

std::string render_code(const Permutation& p, const Code& c, CodecId codec, Format f) {
    reject(f, Format::Csv, "encode");
    if (f == Format::Json) {
        return dump({{"codec", codec_name(codec)}, {"permutation", p.to_string()}, {"code", code_array(c)}});
    }
    return c.to_string() + "\n";
}

std::string render_decoded(const Code& c, const Permutation& p, CodecId codec, Format f) {
    reject(f, Format::Csv, "decode");
    if (f == Format::Json) {
        return dump({{"codec", codec_name(codec)}, {"code", code_array(c)}, {"permutation", p.to_string()}});
    }
    return p.to_string() + "\n";
}

std::string render_map(std::string_view map, const Permutation& in, const Permutation& out, Format f) {
    reject(f, Format::Csv, "map");
    if (f == Format::Json) {
        return dump({{"map", map}, {"input", in.to_string()}, {"output", out.to_string()}});
    }
    return out.to_string() + "\n";
}

std::string render_distribution(int n, const DistributionSpec& spec, const MultiPoly& poly, Format f) {
    switch (f) {
        case Format::Text:
            return poly.to_string() + "\n";
        case Format::Csv: {
            std::string out = "y,x,q,coeff\n";
            for (const auto& [e, c] : poly.terms()) {
                out += std::to_string(e.y) + "," + std::to_string(e.x) + "," + std::to_string(e.q) + "," +
                       std::to_string(c) + "\n";
            }
            return out;
        }
        case Format::Json: {
            ordered_json terms = ordered_json::array();
            for (const auto& [e, c] : poly.terms()) {
                terms.push_back({{"y", e.y}, {"x", e.x}, {"q", e.q}, {"coeff", c}});
            }
            return dump({{"n", n}, {"variables", spec_json(spec)}, {"polynomial", poly.to_string()},
                         {"terms", terms}});
        }
    }
    return {};
}

std::string render_table(int n, CodecId codec, Format f) {
    std::vector<std::pair<Permutation, Code>> rows;
    for_each_permutation(n, [&](const Permutation& p) { rows.emplace_back(p, encode(p, codec)); });

    if (f == Format::Json) {
        ordered_json j = ordered_json::array();
        for (const auto& [p, c] : rows) {
            j.push_back({{"permutation", p.to_string()}, {"code", code_array(c)}, {"zer", zer(c)},
                         {"st", st(c)}, {"add", add(c)}});
        }
        return dump({{"codec", codec_name(codec)}, {"n", n}, {"rows", j}});
    }
    if (f == Format::Csv) {
        // Codes contain commas, so they are quoted.
        std::string out = "permutation,code,zer,st,add\n";
        for (const auto& [p, c] : rows) {
            out += p.to_string() + ",\"" + c.to_string() + "\"," + std::to_string(zer(c)) + "," +
                   std::to_string(st(c)) + "," + std::to_string(add(c)) + "\n";
        }
        return out;
    }
    int wp = 11, wc = 4;
    for (const auto& [p, c] : rows) {
        wp = std::max(wp, static_cast<int>(p.to_string().size()));
        wc = std::max(wc, static_cast<int>(c.to_string().size()));
    }
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-*s  %-*s  %3s  %3s  %3s\n", wp, "permutation", wc, "code", "zer", "st",
                  "add");
    out += buf;
    for (const auto& [p, c] : rows) {
        std::snprintf(buf, sizeof buf, "%-*s  %-*s  %3d  %3d  %3d\n", wp, p.to_string().c_str(), wc,
                      c.to_string().c_str(), zer(c), st(c), add(c));
        out += buf;
    }
    return out;
}

std::string render_report(const CheckReport& r, Format f) {
    reject(f, Format::Csv, "verify");
    if (f == Format::Json) {
        ordered_json stages = ordered_json::array();
        for (const auto& s : r.stages) stages.push_back({{"label", s.label}, {"seconds", s.seconds}});
        return dump({{"check", r.name},
                     {"scope", r.scope},
                     {"passed", r.passed},
                     {"counterexample", r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr)},
                     {"stages", stages},
                     {"elapsed_seconds", r.elapsed_seconds}});
    }
    std::string out = std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + r.scope + ")\n";
    for (const auto& s : r.stages) out += "  " + s.label + "  " + seconds(s.seconds) + "\n";
    if (r.counterexample) out += "  counterexample: " + *r.counterexample + "\n";
    out += "  total  " + seconds(r.elapsed_seconds) + "\n";
    return out;
}

}  // namespace permstat::cli
