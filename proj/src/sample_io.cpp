#include "primeconv/sample_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace primeconv::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::string_view source, std::size_t line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  // from_chars rejects a leading '+'.
  const char* begin = (!token.empty() && token.front() == '+') ? token.data() + 1 : token.data();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ": cannot parse '" + std::string(token) +
                     "' as a number");
  return value;
}

}  // namespace

RealSignal SampleFile::real() const {
  if (is_complex) throw std::invalid_argument("sample file holds complex values");
  std::vector<double> out;
  out.reserve(values.size());
  for (const Complex& v : values) out.push_back(v.real());
  return RealSignal(std::move(out));
}

ComplexSignal SampleFile::complex() const { return ComplexSignal(values); }

SampleFile parse_samples(std::string_view text, std::string_view source) {
  SampleFile file;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto start = line.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      const auto stop = line.find_first_of(" \t", start);
      tokens.push_back(line.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start));
      pos = stop == std::string_view::npos ? line.size() : stop;
    }
    if (tokens.size() > 2)
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": expected 're' or 're im', got " +
                       std::to_string(tokens.size()) + " fields");
    const double re = parse_number(tokens[0], source, line_no);
    const double im = tokens.size() == 2 ? parse_number(tokens[1], source, line_no) : 0.0;
    if (tokens.size() == 2) file.is_complex = true;
    if (!is_finite(Complex(re, im)))
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": sample is not finite");
    file.values.emplace_back(re, im);
  }
  if (file.values.empty()) throw ParseError(std::string(source) + ": no samples");
  return file;
}

SampleFile read_samples(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_samples(buf.str(), path);
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_samples(std::ostream& out, const RealSignal& s) {
  for (double x : s) out << format_number(x) << '\n';
}

void write_samples(std::ostream& out, const ComplexSignal& s) {
  for (const Complex& x : s) out << format_number(x.real()) << ' ' << format_number(x.imag()) << '\n';
}

}  // namespace primeconv::io
