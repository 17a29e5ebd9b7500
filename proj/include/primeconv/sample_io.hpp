#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "primeconv/signal.hpp"

namespace primeconv::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contents of a sample file: one sample per line, either "re" or "re im".
/// Blank lines and lines starting with '#' are skipped.
struct SampleFile {
  bool is_complex = false;
  std::vector<Complex> values;

  std::size_t size() const { return values.size(); }
  RealSignal real() const;
  ComplexSignal complex() const;
};

SampleFile parse_samples(std::string_view text, std::string_view source = "<input>");
SampleFile read_samples(const std::string& path);

/// Shortest representation that round-trips, "." decimal point, no locale.
std::string format_number(double x);

void write_samples(std::ostream& out, const RealSignal& s);
void write_samples(std::ostream& out, const ComplexSignal& s);

}  // namespace primeconv::io
