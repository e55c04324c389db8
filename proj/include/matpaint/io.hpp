#pragma once

#include <string>

#include "matpaint/graph.hpp"
#include "matpaint/linrep.hpp"
#include "matpaint/matroid.hpp"
#include "matpaint/painting.hpp"

namespace matpaint {

// Text formats. Serialization is canonical; parse(serialize(x)) == x and
// serialize(parse(s)) == s for canonical documents. '#' starts a comment.
//
//   matroid v1                      graph v1
//   elements: a b c d               edge: e1 u v
//   circuit: a b c                  edge: e2 v w
//
//   field: gf3                      painting v1
//   cols: a b c d                   field: gf3
//   1 0 1 1                         circuit a b c: a=1 b=1 c=2
//   0 1 1 2                         cocircuit a c d: a=1 c=2 d=1

Matroid parse_matroid(const std::string& text);
std::string serialize_matroid(const Matroid& m);

Representation parse_matrix(const std::string& text);
std::string serialize_matrix(const Representation& rep);

DirectedGraph parse_graph(const std::string& text);
std::string serialize_graph(const DirectedGraph& g);

Painting parse_painting(const Matroid& m, const std::string& text);
std::string serialize_painting(const Matroid& m, const Painting& p);

// Detects matroid vs matrix documents by their first meaningful line.
bool looks_like_matrix(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace matpaint
