#include <filesystem>
#include <fstream>
#include <sstream>

#include "borsuk/cocycle.hpp"
#include "borsuk/corpus.hpp"
#include "borsuk/errors.hpp"
#include "borsuk/io.hpp"
#include "borsuk/rng.hpp"
#include "doctest.h"

using namespace borsuk;

namespace {

template <class F>
ParseError parse_error(const std::string& text, F reader) {
  std::istringstream in(text);
  try {
    reader(in);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError for: " << text);
  return ParseError("", 0, 0, "");
}

auto points_reader = [](std::istream& in) { io::read_points(in, "t"); };
auto graph_reader = [](std::istream& in) { io::read_graph(in, "t"); };
auto family_reader = [](std::istream& in) { io::read_family(in, "t"); };
auto hyper_reader = [](std::istream& in) { io::read_hypergraph(in, "t"); };
auto matrix_reader = [](std::istream& in) { io::read_pmmatrix(in, "t"); };
auto disc_reader = [](std::istream& in) { io::read_discs(in, "t"); };

}  // namespace

TEST_CASE("points round trip") {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto ps = corpus::random_lattice_set(rng, 3, 8, 4, 7);
    std::istringstream in(io::write_points(ps));
    CHECK(io::read_points(in).points() == ps.points());
  }
  std::istringstream commented("# header comment\npoints v1 2 2\n\n1/2 -3  # trailing\n+4 0/5\n");
  const auto ps = io::read_points(commented);
  CHECK(ps[0][0] == Rational(1, 2));
  CHECK(ps[1][0] == 4);
  CHECK(ps[1][1] == 0);
}

TEST_CASE("graph, discs, family, hypergraph and matrix round trips") {
  const Graph pet = corpus::petersen_graph();
  std::istringstream g(io::write_graph(pet));
  CHECK(io::read_graph(g) == pet);

  const std::vector<Disc> discs{{{0, 0}, 1}, {{Rational(5, 2), 0}, Rational(3, 2)}};
  std::istringstream d(io::write_discs(discs));
  const auto back = io::read_discs(d);
  REQUIRE(back.size() == 2);
  CHECK(back[1].center == discs[1].center);
  CHECK(back[1].radius == discs[1].radius);

  for (const SetFamily& fam : {all_k_subsets(5, 2), sum_restricted_family(4, 0, 0), SetFamily(3, {0, 1, 7})}) {
    std::istringstream f(io::write_family(fam));
    const auto r = io::read_family(f);
    REQUIRE(r.size() == fam.size());
    for (std::size_t i = 0; i < r.size(); ++i) CHECK(r[i].mask == fam[i].mask);
  }

  Rng rng(2);
  const auto h = corpus::random_hypergraph(rng, 7, 3, 0.5);
  std::istringstream hs(io::write_hypergraph(h));
  CHECK(io::read_hypergraph(hs) == h);

  const auto m = corpus::random_pm_matrix(rng, 5);
  std::istringstream ms(io::write_pmmatrix(m));
  CHECK(io::read_pmmatrix(ms).entries() == m.entries());
  std::istringstream signs("pmmatrix v1 2\n+ -\n-1 +1\n");
  CHECK(io::read_pmmatrix(signs).entries() == std::vector<int>{1, -1, -1, 1});
}

TEST_CASE("parse errors carry line and column") {
  SUBCASE("header") {
    const auto e = parse_error("graph v1 2 0\n", points_reader);
    CHECK(e.line() == 1);
    CHECK(e.column() == 1);
    CHECK(parse_error("points v2 1 1\n0\n", points_reader).column() == 8);
    CHECK(parse_error("", points_reader).line() == 0);
  }
  SUBCASE("bad rational") {
    const auto e = parse_error("points v1 2 2\n0 0\n1 x/2\n", points_reader);
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(e.source() == "t");
    CHECK(std::string(e.what()).rfind("t:3:3:", 0) == 0);
  }
  SUBCASE("wrong arity and counts") {
    CHECK(parse_error("points v1 2 2\n0 0\n1\n", points_reader).line() == 3);
    CHECK(parse_error("points v1 2 2\n0 0\n1 1 1\n", points_reader).column() == 5);
    CHECK(parse_error("points v1 3 1\n0\n1\n", points_reader).line() == 3);
    CHECK(parse_error("points v1 1 1\n0\n1\n", points_reader).line() == 3);
  }
  SUBCASE("duplicate points are reported on the data") {
    CHECK(parse_error("points v1 2 1\n0\n0\n", points_reader).line() >= 2);
  }
  SUBCASE("graph") {
    CHECK(parse_error("graph v1 3 1\n0 3\n", graph_reader).column() == 3);
    const auto e = parse_error("graph v1 3 1\n2 1\n", graph_reader);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(parse_error("graph v1 3 2\n0 1\n0 1\n", graph_reader).line() == 3);
  }
  SUBCASE("family, hypergraph, matrix, discs") {
    CHECK(parse_error("family v1 3 1\n1 4\n", family_reader).column() == 3);
    CHECK(parse_error("family v1 3 1\n2 1\n", family_reader).column() == 3);
    CHECK(parse_error("hypergraph v1 4 2 1\n0 1 2\n", hyper_reader).line() == 2);
    CHECK(parse_error("hypergraph v1 4 2 1\n1 1\n", hyper_reader).column() == 3);
    const auto e = parse_error("pmmatrix v1 2\n1 1\n1 0\n", matrix_reader);
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
    CHECK(parse_error("discs v1 1 2\n0 0 -1\n", disc_reader).column() == 5);
  }
}

TEST_CASE("file loading") {
  CHECK_THROWS_AS(io::load_points("/nonexistent/file.points"), Error);
  const auto path = std::filesystem::temp_directory_path() / "borsuk_io_test.points";
  std::ofstream(path) << io::write_points(corpus::regular_tetrahedron());
  CHECK(io::load_points(path.string()).points() == corpus::regular_tetrahedron().points());
  std::filesystem::remove(path);
}
