#include "csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

namespace gsft::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ParseError("input line " + std::to_string(line_no) + ": " + what);
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    fail(line_no, "'" + std::string(field) + "' is not a finite number");
  }
  return value;
}

long parse_index(std::string_view field, std::size_t line_no) {
  long value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    fail(line_no, "'" + std::string(field) + "' is not an integer index");
  }
  return value;
}

/// Calls row(fields, line_no) for every non-empty line after the header.
template <class Row>
void for_each_row(std::istream& in, std::string_view header, std::size_t columns, Row&& row) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!have_header) {
      if (text != header) {
        fail(line_no, "expected header '" + std::string(header) + "', got '" +
                          std::string(text) + "'");
      }
      have_header = true;
      continue;
    }
    const auto fields = split(text);
    if (fields.size() != columns) {
      fail(line_no, "expected " + std::to_string(columns) + " columns, got " +
                        std::to_string(fields.size()));
    }
    row(fields, line_no);
  }
  if (in.bad()) throw ParseError("read error");
  if (!have_header) throw ParseError("input is empty (missing header '" + std::string(header) + "')");
}

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::complex<double>> read_points_csv(std::istream& in) {
  std::vector<std::complex<double>> points;
  for_each_row(in, kPointsHeader, 2, [&](const auto& f, std::size_t line_no) {
    points.emplace_back(parse_double(f[0], line_no), parse_double(f[1], line_no));
  });
  return points;
}

SampleRows read_samples_csv(std::istream& in) {
  std::map<long, std::complex<double>> rows;
  std::map<long, std::size_t> seen_at;
  for_each_row(in, kSamplesHeader, 3, [&](const auto& f, std::size_t line_no) {
    const long n = parse_index(f[0], line_no);
    const std::complex<double> v{parse_double(f[1], line_no), parse_double(f[2], line_no)};
    if (const auto it = seen_at.find(n); it != seen_at.end()) {
      fail(line_no, "duplicate index n = " + std::to_string(n) + " (first on line " +
                        std::to_string(it->second) + ")");
    }
    seen_at.emplace(n, line_no);
    rows.emplace(n, v);
  });
  if (rows.empty()) throw ParseError("samples file has no rows");

  long n_half = 0;
  for (const auto& [n, v] : rows) n_half = std::max(n_half, std::labs(n));
  if (n_half < 1) throw ParseError("samples must span n = -N..N with N >= 1");
  SampleRows out;
  out.half_count = static_cast<int>(n_half);
  out.values.reserve(2 * static_cast<std::size_t>(n_half) + 1);
  for (long n = -n_half; n <= n_half; ++n) {
    const auto it = rows.find(n);
    if (it == rows.end()) {
      throw ParseError("samples are missing index n = " + std::to_string(n) + " (N = " +
                       std::to_string(n_half) + ")");
    }
    out.values.push_back(it->second);
  }
  return out;
}

void write_w_csv(std::ostream& out, const std::vector<std::complex<double>>& values) {
  out << kWHeader << '\n';
  for (const auto& v : values) {
    out << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum) {
  out << kSpectrumHeader << '\n';
  for (std::size_t k = 0; k < spectrum.grid.size(); ++k) {
    out << format_double(spectrum.grid[k]) << ',' << format_double(spectrum.values[k].real())
        << ',' << format_double(spectrum.values[k].imag()) << '\n';
  }
}

}  // namespace gsft::cli
