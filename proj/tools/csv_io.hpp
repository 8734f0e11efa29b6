#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsft/sampling.hpp"
#include "gsft/transform.hpp"

namespace gsft::cli {

/// Malformed input file; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kPointsHeader = "re,im";
inline constexpr const char* kSamplesHeader = "n,value_re,value_im";
inline constexpr const char* kWHeader = "w_re,w_im";
inline constexpr const char* kSpectrumHeader = "x,re,im";

/// Rows of "re,im" after the header.
std::vector<std::complex<double>> read_points_csv(std::istream& in);

struct SampleRows {
  int half_count = 0;
  /// Values for n = -N..N.
  std::vector<std::complex<double>> values;
};

/// Rows of "n,value_re,value_im". Every index -N..N must appear exactly once,
/// where N = max |n|; row order is free.
SampleRows read_samples_csv(std::istream& in);

void write_w_csv(std::ostream& out, const std::vector<std::complex<double>>& values);
void write_spectrum_csv(std::ostream& out, const Spectrum& spectrum);

/// "{:.17g}".
std::string format_double(double v);

}  // namespace gsft::cli
