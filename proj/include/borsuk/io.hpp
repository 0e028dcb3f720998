#pragma once

#include <istream>
#include <string>
#include <vector>

#include "borsuk/cocycle.hpp"
#include "borsuk/exact_geom.hpp"
#include "borsuk/families.hpp"
#include "borsuk/graph.hpp"

namespace borsuk::io {

// Text formats. Every reader accepts '#' comments and blank lines and
// throws ParseError with a line/column diagnostic. `source` names the input
// in diagnostics.
//
//   points v1 <n> <d>            then n lines of d rationals
//   graph v1 <n> <m>             then m lines "u v", 0-based, u < v
//   discs v1 <n> <d>             then n lines of d+1 rationals (center, radius)
//   family v1 <n> <m>            then m lines of sorted 1-based elements
//   hypergraph v1 <n> <k> <m>    then m lines of k sorted 0-based vertices
//   pmmatrix v1 <m>              then m lines of m entries in {+1,-1,+,-}
//
// In family files a line holding a single "-" is the empty set.

PointSet read_points(std::istream& in, const std::string& source = "<points>");
Graph read_graph(std::istream& in, const std::string& source = "<graph>");
std::vector<Disc> read_discs(std::istream& in, const std::string& source = "<discs>");
SetFamily read_family(std::istream& in, const std::string& source = "<family>");
UniformHypergraph read_hypergraph(std::istream& in, const std::string& source = "<hypergraph>");
PmMatrix read_pmmatrix(std::istream& in, const std::string& source = "<pmmatrix>");

std::string write_points(const PointSet& ps);
std::string write_graph(const Graph& g);
std::string write_discs(const std::vector<Disc>& discs);
std::string write_family(const SetFamily& fam);
std::string write_hypergraph(const UniformHypergraph& h);
std::string write_pmmatrix(const PmMatrix& m);

PointSet load_points(const std::string& path);
Graph load_graph(const std::string& path);

}  // namespace borsuk::io
