#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rhn/analysis.hpp"
#include "rhn/harmonic.hpp"

namespace rhn {

enum class RenderFormat { Plain, Csv, Json, Latex };

std::string_view to_string(RenderFormat f);
/// Accepts "plain", "csv", "json", "latex".
std::optional<RenderFormat> parse_format(std::string_view name);

/// 17 significant digits, enough to round-trip any binary64.
std::string format_float(double x);

std::string render_table(const HarmonicTable& table, RenderFormat format);
std::string render_value(const ExactRational& value, RenderFormat format);

/// Csv or Json only; throws UnsupportedFormat otherwise.
std::string render_reports(std::span<const ErrorReport> reports, RenderFormat format);
std::string render_reports(std::span<const BenchReport> reports, RenderFormat format);

// Incremental Csv pieces, used to stream bench output row by row.
template <class Report>
std::string csv_header();
template <>
std::string csv_header<ErrorReport>();
template <>
std::string csv_header<BenchReport>();
std::string csv_row(const ErrorReport& r);
std::string csv_row(const BenchReport& r);

/// Reads back a Csv or Json table rendering. Throws ParseError on malformed
/// input and UnsupportedFormat for Plain/Latex.
HarmonicTable parse_table(std::string_view text, RenderFormat format);

}  // namespace rhn
