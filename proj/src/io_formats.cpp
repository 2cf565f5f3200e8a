#include "rhn/io_formats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rhn/errors.hpp"

namespace rhn {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_cell(const ExactRational& v) {
  if (v.is_integer()) return v.numerator().get_str(10);
  std::string sign = v.sign() < 0 ? "-" : "";
  BigInt mag = v.sign() < 0 ? BigInt(-v.numerator()) : v.numerator();
  return "$" + sign + "\\frac{" + mag.get_str(10) + "}{" + v.denominator().get_str(10) + "}$";
}

std::string render_plain(const HarmonicTable& t) {
  const int cols = t.m_max() + 2;  // index column + m = 0..m_max
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"n\\m"};
  for (int m = 0; m <= t.m_max(); ++m) header.push_back(std::to_string(m));
  grid.push_back(std::move(header));
  for (int n = 1; n <= t.n_max(); ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (int m = 0; m <= t.m_max(); ++m) row.push_back(t.at(n, m).to_display_string());
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line.append(width[c] - row[c].size(), ' ');
      line += row[c];
    }
    out += line + "\n";
  }
  return out;
}

std::string render_csv(const HarmonicTable& t) {
  std::string out = "n";
  for (int m = 0; m <= t.m_max(); ++m) out += ",m=" + std::to_string(m);
  out += "\n";
  for (int n = 1; n <= t.n_max(); ++n) {
    out += std::to_string(n);
    for (int m = 0; m <= t.m_max(); ++m) out += "," + t.at(n, m).to_string();
    out += "\n";
  }
  return out;
}

std::string render_json(const HarmonicTable& t) {
  ordered_json j;
  j["n_max"] = t.n_max();
  j["m_max"] = t.m_max();
  auto& values = j["values"] = ordered_json::array();
  for (const auto& v : t.values()) values.push_back(v.to_string());
  return j.dump() + "\n";
}

std::string render_latex(const HarmonicTable& t) {
  std::string out = "\\begin{tabular}{c|" + std::string(static_cast<std::size_t>(t.m_max() + 1), 'c') + "}\n";
  out += "$n \\backslash m$";
  for (int m = 0; m <= t.m_max(); ++m) out += " & " + std::to_string(m);
  out += " \\\\\n\\hline\n";
  for (int n = 1; n <= t.n_max(); ++n) {
    out += std::to_string(n);
    for (int m = 0; m <= t.m_max(); ++m) out += " & " + latex_cell(t.at(n, m));
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view s) {
  BigInt v = parse_bigint(s);
  if (!v.fits_sint_p()) throw ParseError("integer out of range: " + std::string(s));
  return static_cast<int>(v.get_si());
}

HarmonicTable parse_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("csv table: empty input");
  auto header = split(lines.front(), ',');
  if (header.size() < 2 || header.front() != "n") throw ParseError("csv table: bad header");
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c] != "m=" + std::to_string(c - 1)) throw ParseError("csv table: bad column " + std::string(header[c]));
  }
  const int n_max = static_cast<int>(lines.size()) - 1;
  const int m_max = static_cast<int>(header.size()) - 2;
  if (n_max < 1) throw ParseError("csv table: no data rows");
  std::vector<ExactRational> values;
  for (int n = 1; n <= n_max; ++n) {
    auto fields = split(lines[static_cast<std::size_t>(n)], ',');
    if (fields.size() != header.size()) throw ParseError("csv table: ragged row " + std::to_string(n));
    if (parse_int(fields.front()) != n) throw ParseError("csv table: rows out of order at " + std::to_string(n));
    for (std::size_t c = 1; c < fields.size(); ++c) values.push_back(ExactRational::parse(fields[c]));
  }
  return HarmonicTable::from_values(n_max, m_max, std::move(values));
}

HarmonicTable parse_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json table: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n_max") || !j.contains("m_max") || !j.contains("values") ||
      !j["n_max"].is_number_integer() || !j["m_max"].is_number_integer() || !j["values"].is_array()) {
    throw ParseError("json table: expected {n_max, m_max, values}");
  }
  std::vector<ExactRational> values;
  for (const auto& cell : j["values"]) {
    if (!cell.is_string()) throw ParseError("json table: cells must be \"p/q\" strings");
    values.push_back(ExactRational::parse(cell.get<std::string>()));
  }
  return HarmonicTable::from_values(j["n_max"].get<int>(), j["m_max"].get<int>(), std::move(values));
}

std::string error_json(const ErrorReport& r) {
  return "{\"n\":" + std::to_string(r.n) + ",\"m\":" + std::to_string(r.m) + ",\"exact\":\"" +
         r.exact.to_string() + "\",\"float_value\":" + format_float(r.float_value) +
         ",\"abs_error\":" + format_float(r.abs_error) + ",\"rel_error\":" + format_float(r.rel_error) +
         ",\"largest_term_magnitude\":" + format_float(r.largest_term_magnitude) + "}";
}

std::string bench_json(const BenchReport& r) {
  return "{\"strategy\":\"" + std::string(to_string(r.strategy)) + "\",\"n\":" + std::to_string(r.n) +
         ",\"m\":" + std::to_string(r.m) + ",\"wall_time_ns\":" + std::to_string(r.wall_time.count()) +
         ",\"peak_live_rationals\":" + std::to_string(r.peak_live_rationals) +
         ",\"max_numerator_bits\":" + std::to_string(r.max_numerator_bits) +
         ",\"max_denominator_bits\":" + std::to_string(r.max_denominator_bits) + ",\"value\":\"" +
         r.value.to_string() + "\"}";
}

template <class Report, class JsonFn>
std::string render_report_list(std::span<const Report> reports, RenderFormat format, JsonFn to_json) {
  switch (format) {
    case RenderFormat::Csv: {
      std::string out = csv_header<Report>();
      for (const auto& r : reports) out += csv_row(r);
      return out;
    }
    case RenderFormat::Json: {
      if (reports.empty()) return "[]\n";
      std::string out = "[\n";
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out += to_json(reports[i]);
        out += i + 1 < reports.size() ? ",\n" : "\n";
      }
      return out + "]\n";
    }
    default:
      throw UnsupportedFormat("reports render only as csv or json, not " + std::string(to_string(format)));
  }
}

}  // namespace

std::string format_float(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string_view to_string(RenderFormat f) {
  switch (f) {
    case RenderFormat::Plain: return "plain";
    case RenderFormat::Csv: return "csv";
    case RenderFormat::Json: return "json";
    case RenderFormat::Latex: return "latex";
  }
  return "unknown";
}

std::optional<RenderFormat> parse_format(std::string_view name) {
  for (RenderFormat f : {RenderFormat::Plain, RenderFormat::Csv, RenderFormat::Json, RenderFormat::Latex}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string render_table(const HarmonicTable& table, RenderFormat format) {
  switch (format) {
    case RenderFormat::Plain: return render_plain(table);
    case RenderFormat::Csv: return render_csv(table);
    case RenderFormat::Json: return render_json(table);
    case RenderFormat::Latex: return render_latex(table);
  }
  throw UnsupportedFormat("unknown format");
}

std::string render_value(const ExactRational& value, RenderFormat format) {
  switch (format) {
    case RenderFormat::Plain: return value.to_display_string();
    case RenderFormat::Csv: return value.to_string();
    case RenderFormat::Json: {
      ordered_json j;
      j["num"] = value.numerator().get_str(10);
      j["den"] = value.denominator().get_str(10);
      return j.dump();
    }
    case RenderFormat::Latex: return latex_cell(value);
  }
  throw UnsupportedFormat("unknown format");
}

template <>
std::string csv_header<ErrorReport>() {
  return "n,m,exact,float_value,abs_error,rel_error,largest_term_magnitude\n";
}

template <>
std::string csv_header<BenchReport>() {
  return "strategy,n,m,wall_time_ns,peak_live_rationals,max_numerator_bits,max_denominator_bits,value\n";
}

std::string csv_row(const ErrorReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.m) + "," + r.exact.to_string() + "," +
         format_float(r.float_value) + "," + format_float(r.abs_error) + "," + format_float(r.rel_error) +
         "," + format_float(r.largest_term_magnitude) + "\n";
}

std::string csv_row(const BenchReport& r) {
  return std::string(to_string(r.strategy)) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
         std::to_string(r.wall_time.count()) + "," + std::to_string(r.peak_live_rationals) + "," +
         std::to_string(r.max_numerator_bits) + "," + std::to_string(r.max_denominator_bits) + "," +
         r.value.to_string() + "\n";
}

std::string render_reports(std::span<const ErrorReport> reports, RenderFormat format) {
  return render_report_list(reports, format, error_json);
}

std::string render_reports(std::span<const BenchReport> reports, RenderFormat format) {
  return render_report_list(reports, format, bench_json);
}

HarmonicTable parse_table(std::string_view text, RenderFormat format) {
  switch (format) {
    case RenderFormat::Csv: return parse_csv(text);
    case RenderFormat::Json: return parse_json(text);
    default:
      throw UnsupportedFormat("tables parse only from csv or json, not " + std::string(to_string(format)));
  }
}

}  // namespace rhn
