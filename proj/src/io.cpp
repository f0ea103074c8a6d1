#include "hspec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace hspec {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

long parse_int(std::string_view tok, std::string_view source, int line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(source, line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

double parse_real(std::string_view tok, std::string_view source, int line) {
  auto plain = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(source, line, "expected a number, got '" + std::string(tok) + "'");
    }
    return v;
  };
  double v;
  if (auto slash = tok.find('/'); slash != std::string_view::npos) {
    double p = plain(tok.substr(0, slash));
    double q = plain(tok.substr(slash + 1));
    if (q == 0.0) fail(source, line, "zero denominator in '" + std::string(tok) + "'");
    v = p / q;
  } else {
    v = plain(tok);
  }
  if (!std::isfinite(v)) fail(source, line, "non-finite value '" + std::string(tok) + "'");
  return v;
}

struct Header {
  std::string kind;
  int k;
  int n;
};

Header parse_header(const std::vector<Line>& lines, std::string_view source) {
  if (lines.empty()) fail(source, 1, "empty input");
  const Line& h = lines.front();
  if (h.tokens.size() != 3) fail(source, h.number, "header must be '<kind> <k> <n>'");
  Header out{std::string(h.tokens[0]), 0, 0};
  if (out.kind != "tensor" && out.kind != "hypergraph") {
    fail(source, h.number, "unknown header '" + out.kind + "'");
  }
  long k = parse_int(h.tokens[1], source, h.number);
  long n = parse_int(h.tokens[2], source, h.number);
  if (k < 2 || n < 1 || k > 64 || n > (1L << 24)) {
    fail(source, h.number, "order must be >= 2 and dimension >= 1");
  }
  out.k = static_cast<int>(k);
  out.n = static_cast<int>(n);
  return out;
}

std::vector<Index> parse_indices(const Line& l, std::size_t count, int n, std::string_view source) {
  std::vector<Index> idx;
  for (std::size_t i = 0; i < count; ++i) {
    long v = parse_int(l.tokens[i], source, l.number);
    if (v < 1 || v > n) {
      fail(source, l.number, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    idx.push_back(static_cast<Index>(v - 1));
  }
  return idx;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SymmetricTensor parse_tensor(std::string_view text, std::string_view source) {
  auto lines = tokenize(text);
  Header h = parse_header(lines, source);
  if (h.kind != "tensor") fail(source, lines.front().number, "expected a 'tensor' header");
  std::vector<TensorEntry> entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens.size() != static_cast<std::size_t>(h.k) + 1) {
      fail(source, l.number, "expected " + std::to_string(h.k) + " indices and a value");
    }
    TensorEntry e{parse_indices(l, h.k, h.n, source), parse_real(l.tokens[h.k], source, l.number)};
    entries.push_back(std::move(e));
  }
  try {
    return SymmetricTensor::build(h.k, h.n, entries);
  } catch (const Error& e) {
    throw Error(e.code(), std::string(source) + ": " + e.what());
  }
}

Hypergraph parse_hypergraph(std::string_view text, std::string_view source) {
  auto lines = tokenize(text);
  Header h = parse_header(lines, source);
  if (h.kind != "hypergraph") fail(source, lines.front().number, "expected a 'hypergraph' header");
  std::vector<Edge> edges;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    if (l.tokens.size() != static_cast<std::size_t>(h.k)) {
      fail(source, l.number, "expected " + std::to_string(h.k) + " vertices");
    }
    Edge e = parse_indices(l, h.k, h.n, source);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(source, l.number, "repeated vertex in edge");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(h.k, h.n, std::move(edges));
}

std::string serialize_tensor(const SymmetricTensor& t) {
  std::string out = "tensor " + std::to_string(t.order()) + " " + std::to_string(t.dim()) + "\n";
  for (const auto& o : t.orbits()) {
    for (Index i : o.index) out += std::to_string(i + 1) + " ";
    out += format_real(o.value) + "\n";
  }
  return out;
}

std::string serialize_hypergraph(const Hypergraph& g) {
  std::string out = "hypergraph " + std::to_string(g.uniformity()) + " " +
                    std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      out += (i ? " " : "") + std::to_string(e[i] + 1);
    }
    out += "\n";
  }
  return out;
}

Instance parse_instance(std::string_view text, std::string_view source) {
  auto lines = tokenize(text);
  Header h = parse_header(lines, source);
  if (h.kind == "tensor") return parse_tensor(text, source);
  return parse_hypergraph(text, source);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), path);
}

}  // namespace hspec
