#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "permstat/codes.hpp"
#include "permstat/permutation.hpp"
#include "permstat/qpoly.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {

enum class Format { Text, Json, Csv };

Format format_from_name(std::string_view name);

// Unsupported format for a result kind, or a malformed command line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string render_stats(const Permutation& p, Format f);
std::string render_code(const Permutation& p, const Code& c, CodecId codec, Format f);
std::string render_decoded(const Code& c, const Permutation& p, CodecId codec, Format f);
std::string render_map(std::string_view map, const Permutation& in, const Permutation& out, Format f);
std::string render_distribution(int n, const DistributionSpec& spec, const MultiPoly& poly, Format f);
std::string render_table(int n, CodecId codec, Format f);
std::string render_report(const CheckReport& r, Format f);

}  // namespace permstat::cli
