#include "largecover/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "largecover/errors.hpp"

namespace largecover {
namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty() && line[0] == 'c') continue;
      return true;
    }
    return false;
  }

  // Skips blank and comment lines; true if only those remain.
  bool only_blank_left() {
    std::string line;
    while (next(line))
      if (line.find_first_not_of(" \t") != std::string::npos) return false;
    return true;
  }

  int line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at line " + std::to_string(line_no_));
  }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

template <typename Int>
Int to_int(const std::string& tok, const LineReader& reader) {
  Int value{};
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) reader.fail("expected an integer, got '" + tok + "'");
  return value;
}

std::vector<std::string> header(LineReader& reader, const std::string& kind, std::size_t fields) {
  std::string line;
  if (!reader.next(line)) throw ParseError("missing header line 'p " + kind + "'");
  auto tok = tokens(line);
  if (tok.size() != fields + 2 || tok[0] != "p" || tok[1] != kind)
    reader.fail("malformed header, expected 'p " + kind + "' with " + std::to_string(fields) + " fields");
  return {tok.begin() + 2, tok.end()};
}

Mask parse_bitstring(const std::string& line, int width, const LineReader& reader) {
  const auto first = line.find_first_not_of(" \t");
  const std::string bits =
      first == std::string::npos ? std::string() : line.substr(first, line.find_last_not_of(" \t") - first + 1);
  if (static_cast<int>(bits.size()) != width)
    reader.fail("bitstring of length " + std::to_string(bits.size()) + ", expected " + std::to_string(width));
  Mask m = 0;
  for (int k = 0; k < width; ++k) {
    if (bits[k] == '1')
      m |= Mask{1} << k;
    else if (bits[k] != '0')
      reader.fail("bitstring contains '" + std::string(1, bits[k]) + "'");
  }
  return m;
}

}  // namespace

SetSystemInstance parse_set_system(std::istream& in) {
  LineReader reader(in);
  auto head = header(reader, "setsystem", 3);
  SetSystemInstance inst;
  inst.n = to_int<int>(head[0], reader);
  const long long m = to_int<long long>(head[1], reader);
  inst.s = to_int<int>(head[2], reader);
  if (inst.n < 0 || inst.n > kMaxUniverse) reader.fail("universe size must be in 0..63");
  if (m < 0) reader.fail("negative set count");
  if (inst.s < 0) reader.fail("negative target size");
  inst.sets.reserve(static_cast<std::size_t>(m));
  std::string line;
  for (long long j = 0; j < m; ++j) {
    if (!reader.next(line))
      throw ParseError("set count mismatch: header declares " + std::to_string(m) + " sets, found " +
                       std::to_string(j));
    Mask set = 0;
    for (const auto& tok : tokens(line)) {
      const long long e = to_int<long long>(tok, reader);
      if (e < 0) reader.fail("negative element index " + tok);
      if (e >= inst.n) reader.fail("element index " + tok + " ≥ n=" + std::to_string(inst.n));
      set |= Mask{1} << e;
    }
    inst.sets.push_back(set);
  }
  if (!reader.only_blank_left())
    reader.fail("set count mismatch: more than " + std::to_string(m) + " set lines");
  inst.allows_empty = inst.has_empty_sets();
  return inst;
}

SetSystemInstance parse_set_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_set_system(in);
}

std::string serialize_set_system(const SetSystemInstance& inst) {
  std::ostringstream out;
  out << "p setsystem " << inst.n << ' ' << inst.m() << ' ' << inst.s << '\n';
  for (Mask f : inst.sets) {
    bool first = true;
    for (int e : elements_of(f)) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

SimpleGraph parse_graph(std::istream& in) {
  LineReader reader(in);
  auto head = header(reader, "edge", 2);
  const int n = to_int<int>(head[0], reader);
  const long long m = to_int<long long>(head[1], reader);
  if (n < 0 || n > kMaxUniverse) reader.fail("vertex count must be in 0..63");
  if (m < 0) reader.fail("negative edge count");
  SimpleGraph g(n);
  std::string line;
  for (long long k = 0; k < m; ++k) {
    if (!reader.next(line))
      throw ParseError("edge count mismatch: header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(k));
    auto tok = tokens(line);
    if (tok.size() != 3 || tok[0] != "e") reader.fail("expected 'e <u> <v>'");
    const int u = to_int<int>(tok[1], reader);
    const int v = to_int<int>(tok[2], reader);
    if (u < 1 || u > n || v < 1 || v > n) reader.fail("vertex out of range 1.." + std::to_string(n));
    if (u == v) reader.fail("self-loop on vertex " + std::to_string(u));
    g.add_edge(u - 1, v - 1);
  }
  if (!reader.only_blank_left()) reader.fail("edge count mismatch: trailing lines");
  return g;
}

SimpleGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

std::string serialize_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.n << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v)) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

LinSatInstance parse_linsat(std::istream& in) {
  LineReader reader(in);
  auto head = header(reader, "linsat", 3);
  LinSatInstance inst;
  inst.n_rows = to_int<int>(head[0], reader);
  const int m = to_int<int>(head[1], reader);
  inst.t = to_int<std::int64_t>(head[2], reader);
  if (inst.n_rows < 0 || inst.n_rows > 64) reader.fail("row count must be in 0..64");
  if (m < 0 || m > 61) reader.fail("column count must be in 0..61");
  std::string line;
  for (int j = 0; j < m; ++j) {
    if (!reader.next(line)) throw ParseError("missing column " + std::to_string(j));
    inst.columns.push_back(parse_bitstring(line, inst.n_rows, reader));
  }
  if (!reader.next(line)) throw ParseError("missing target bitstring");
  inst.b = parse_bitstring(line, inst.n_rows, reader);
  if (reader.next(line)) {
    for (const auto& tok : tokens(line)) inst.weights.push_back(to_int<std::int64_t>(tok, reader));
  }
  if (static_cast<int>(inst.weights.size()) != m)
    reader.fail("expected " + std::to_string(m) + " weights, found " + std::to_string(inst.weights.size()));
  for (auto w : inst.weights)
    if (w < 0) reader.fail("negative weight");
  if (!reader.only_blank_left()) reader.fail("trailing lines after weights");
  return inst;
}

LinSatInstance parse_linsat(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_linsat(in);
}

std::string serialize_linsat(const LinSatInstance& inst) {
  std::ostringstream out;
  auto bits = [&](Mask v) {
    for (int k = 0; k < inst.n_rows; ++k) out << (((v >> k) & 1U) ? '1' : '0');
    out << '\n';
  };
  out << "p linsat " << inst.n_rows << ' ' << inst.m_cols() << ' ' << inst.t << '\n';
  for (Mask c : inst.columns) bits(c);
  bits(inst.b);
  for (std::size_t j = 0; j < inst.weights.size(); ++j) out << (j ? " " : "") << inst.weights[j];
  out << '\n';
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace largecover
