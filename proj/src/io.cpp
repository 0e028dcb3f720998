#include "borsuk/io.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "borsuk/errors.hpp"

namespace borsuk::io {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  // Next non-blank, non-comment line split into tokens; false at end.
  bool next(std::vector<Token>& tokens) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      tokens.clear();
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        const std::size_t start = i;
        while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
        if (i > start) tokens.push_back({raw.substr(start, i - start), start + 1});
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::size_t column, const std::string& what) const {
    throw ParseError(source_, line_, column, what);
  }

  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

template <class Int>
Int parse_int(const LineReader& r, const Token& t, const char* what) {
  Int value{};
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    r.fail(t.column, std::string("expected ") + what + ", found '" + t.text + "'");
  return value;
}

Rational parse_q(const LineReader& r, const Token& t) {
  try {
    return parse_rational(t.text);
  } catch (const PreconditionError& e) {
    r.fail(t.column, e.what());
  }
}

// Reads "<kind> v1 <fields...>" and returns the header integers.
std::vector<std::int64_t> read_header(LineReader& r, const std::string& kind, std::size_t fields) {
  std::vector<Token> t;
  if (!r.next(t)) r.fail(0, "empty input, expected '" + kind + " v1' header");
  if (t[0].text != kind) r.fail(t[0].column, "expected '" + kind + "', found '" + t[0].text + "'");
  if (t.size() < 2 || t[1].text != "v1")
    r.fail(t.size() < 2 ? 0 : t[1].column, "unsupported or missing format version (want v1)");
  if (t.size() != fields + 2)
    r.fail(0, "header needs " + std::to_string(fields) + " integer fields");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < fields; ++i) {
    const auto v = parse_int<std::int64_t>(r, t[i + 2], "a non-negative integer");
    if (v < 0) r.fail(t[i + 2].column, "header fields must be non-negative");
    out.push_back(v);
  }
  return out;
}

void body_line(LineReader& r, std::vector<Token>& t, std::size_t index, std::size_t total) {
  if (!r.next(t))
    r.fail(0, "unexpected end of input: read " + std::to_string(index) + " of " +
                  std::to_string(total) + " data lines");
}

void expect_end(LineReader& r) {
  std::vector<Token> t;
  if (r.next(t)) r.fail(t[0].column, "unexpected extra data line");
}

void expect_width(const LineReader& r, const std::vector<Token>& t, std::size_t width) {
  if (t.size() != width)
    r.fail(t.size() > width ? t[width].column : 0,
           "expected " + std::to_string(width) + " entries, found " + std::to_string(t.size()));
}

template <class F>
auto wrap(const LineReader& r, F&& build) {
  try {
    return build();
  } catch (const PreconditionError& e) {
    r.fail(0, e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

PointSet read_points(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "points", 2);
  const auto n = static_cast<std::size_t>(h[0]);
  const auto d = static_cast<std::size_t>(h[1]);
  if (d == 0) r.fail(0, "dimension must be positive");
  std::vector<RationalVector> pts;
  std::vector<Token> t;
  for (std::size_t i = 0; i < n; ++i) {
    body_line(r, t, i, n);
    expect_width(r, t, d);
    RationalVector p;
    for (const auto& tok : t) p.push_back(parse_q(r, tok));
    pts.push_back(std::move(p));
  }
  expect_end(r);
  return wrap(r, [&] { return PointSet(d, std::move(pts), source); });
}

Graph read_graph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "graph", 2);
  const auto n = static_cast<std::size_t>(h[0]);
  const auto m = static_cast<std::size_t>(h[1]);
  Graph g(n);
  std::vector<Token> t;
  for (std::size_t i = 0; i < m; ++i) {
    body_line(r, t, i, m);
    expect_width(r, t, 2);
    const auto u = parse_int<std::size_t>(r, t[0], "a vertex index");
    const auto v = parse_int<std::size_t>(r, t[1], "a vertex index");
    if (u >= n) r.fail(t[0].column, "vertex out of range");
    if (v >= n) r.fail(t[1].column, "vertex out of range");
    if (u >= v) r.fail(t[1].column, "edge must be written with u < v");
    if (g.adjacent(u, v)) r.fail(0, "duplicate edge");
    g.add_edge(u, v);
  }
  expect_end(r);
  return g;
}

std::vector<Disc> read_discs(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "discs", 2);
  const auto n = static_cast<std::size_t>(h[0]);
  const auto d = static_cast<std::size_t>(h[1]);
  if (d == 0) r.fail(0, "dimension must be positive");
  std::vector<Disc> discs;
  std::vector<Token> t;
  for (std::size_t i = 0; i < n; ++i) {
    body_line(r, t, i, n);
    expect_width(r, t, d + 1);
    Disc disc;
    for (std::size_t k = 0; k < d; ++k) disc.center.push_back(parse_q(r, t[k]));
    disc.radius = parse_q(r, t[d]);
    if (disc.radius <= 0) r.fail(t[d].column, "radius must be positive");
    discs.push_back(std::move(disc));
  }
  expect_end(r);
  return discs;
}

SetFamily read_family(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "family", 2);
  const int n = static_cast<int>(h[0]);
  const auto m = static_cast<std::size_t>(h[1]);
  if (n > 63) r.fail(0, "ground set larger than 63");
  std::vector<std::uint64_t> masks;
  std::vector<Token> t;
  for (std::size_t i = 0; i < m; ++i) {
    body_line(r, t, i, m);
    std::uint64_t mask = 0;
    if (!(t.size() == 1 && t[0].text == "-")) {
      int prev = 0;
      for (const auto& tok : t) {
        const int e = parse_int<int>(r, tok, "an element");
        if (e < 1 || e > n) r.fail(tok.column, "element out of range 1.." + std::to_string(n));
        if (e <= prev) r.fail(tok.column, "elements must be strictly increasing");
        prev = e;
        mask |= std::uint64_t{1} << (e - 1);
      }
    }
    masks.push_back(mask);
  }
  expect_end(r);
  return wrap(r, [&] { return SetFamily(n, std::move(masks)); });
}

UniformHypergraph read_hypergraph(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "hypergraph", 3);
  const int n = static_cast<int>(h[0]);
  const int k = static_cast<int>(h[1]);
  const auto m = static_cast<std::size_t>(h[2]);
  if (n > 64) r.fail(0, "more than 64 vertices");
  if (k > n) r.fail(0, "uniformity exceeds vertex count");
  std::vector<std::uint64_t> edges;
  std::vector<Token> t;
  for (std::size_t i = 0; i < m; ++i) {
    body_line(r, t, i, m);
    expect_width(r, t, static_cast<std::size_t>(k));
    std::uint64_t mask = 0;
    int prev = -1;
    for (const auto& tok : t) {
      const int v = parse_int<int>(r, tok, "a vertex index");
      if (v < 0 || v >= n) r.fail(tok.column, "vertex out of range");
      if (v <= prev) r.fail(tok.column, "vertices must be strictly increasing");
      prev = v;
      mask |= std::uint64_t{1} << v;
    }
    edges.push_back(mask);
  }
  expect_end(r);
  return wrap(r, [&] { return UniformHypergraph(n, k, std::move(edges)); });
}

PmMatrix read_pmmatrix(std::istream& in, const std::string& source) {
  LineReader r(in, source);
  const auto h = read_header(r, "pmmatrix", 1);
  const int m = static_cast<int>(h[0]);
  if (m < 1) r.fail(0, "matrix size must be positive");
  std::vector<int> entries;
  std::vector<Token> t;
  for (int i = 0; i < m; ++i) {
    body_line(r, t, static_cast<std::size_t>(i), static_cast<std::size_t>(m));
    expect_width(r, t, static_cast<std::size_t>(m));
    for (const auto& tok : t) {
      if (tok.text == "+1" || tok.text == "+" || tok.text == "1")
        entries.push_back(1);
      else if (tok.text == "-1" || tok.text == "-")
        entries.push_back(-1);
      else
        r.fail(tok.column, "entry must be +1 or -1, found '" + tok.text + "'");
    }
  }
  expect_end(r);
  return PmMatrix(m, std::move(entries));
}

std::string write_points(const PointSet& ps) {
  std::ostringstream os;
  if (!ps.label().empty()) os << "# " << ps.label() << '\n';
  os << "points v1 " << ps.size() << ' ' << ps.dim() << '\n';
  for (const auto& p : ps.points()) {
    for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k].get_str();
    os << '\n';
  }
  return os.str();
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  const auto edges = g.edges();
  os << "graph v1 " << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
  return os.str();
}

std::string write_discs(const std::vector<Disc>& discs) {
  std::ostringstream os;
  const std::size_t d = discs.empty() ? 1 : discs.front().center.size();
  os << "discs v1 " << discs.size() << ' ' << d << '\n';
  for (const auto& disc : discs) {
    for (const auto& c : disc.center) os << c.get_str() << ' ';
    os << disc.radius.get_str() << '\n';
  }
  return os.str();
}

std::string write_family(const SetFamily& fam) {
  std::ostringstream os;
  os << "family v1 " << fam.n() << ' ' << fam.size() << '\n';
  for (const auto& s : fam.members()) {
    const auto el = s.elements();
    if (el.empty()) os << '-';
    for (std::size_t i = 0; i < el.size(); ++i) os << (i ? " " : "") << el[i];
    os << '\n';
  }
  return os.str();
}

std::string write_hypergraph(const UniformHypergraph& h) {
  std::ostringstream os;
  os << "hypergraph v1 " << h.n() << ' ' << h.k() << ' ' << h.size() << '\n';
  for (auto e : h.edges()) {
    bool first = true;
    for (std::uint64_t m = e; m; m &= m - 1) {
      os << (first ? "" : " ") << std::countr_zero(m);
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

std::string write_pmmatrix(const PmMatrix& a) {
  std::ostringstream os;
  os << "pmmatrix v1 " << a.m() << '\n';
  for (int r = 0; r < a.m(); ++r) {
    for (int c = 0; c < a.m(); ++c) os << (c ? " " : "") << (a(r, c) > 0 ? "+1" : "-1");
    os << '\n';
  }
  return os.str();
}

PointSet load_points(const std::string& path) {
  auto in = open(path);
  return read_points(in, path);
}

Graph load_graph(const std::string& path) {
  auto in = open(path);
  return read_graph(in, path);
}

}  // namespace borsuk::io
