#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "tricurv/domain.hpp"

namespace tricurv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line_number);
  int line;
};

class EdgeNotUnitDistanceError : public ParseError {
 public:
  EdgeNotUnitDistanceError(Coord a, Coord b, int line_number);
};

class UnknownBackgroundError : public ParseError {
 public:
  UnknownBackgroundError(const std::string& word, int line_number);
};

// Domain file format. The first content line is the background, "plane" or
// "torus <m> <n> <t>". Each further line is a vertex "v <k> <l>" or an edge
// "e <k1> <l1> <k2> <l2>". '#' starts a comment, blank lines are skipped,
// duplicate vertex or edge lines are rejected. A file without edge lines
// denotes the subgraph with all induced edges; edge lines make the edge set
// exactly the listed one. (A deliberately edgeless subgraph over adjacent
// vertices therefore cannot be expressed; such graphs are never domains.)
LatticeSubgraph parse_domain(std::istream& in);
LatticeSubgraph parse_domain_text(const std::string& text);
LatticeSubgraph load_domain(const std::string& path);

// Inverse of parse_domain on canonicalized subgraphs: emits edge lines only
// when the edge set is not the induced one.
std::string serialize_domain(const LatticeSubgraph& g);
void save_domain(const LatticeSubgraph& g, const std::string& path);

enum class RenderFormat { Ascii, Svg };
enum class LabelMode { None, Curvature, Dimension, Class };

struct RenderSpec {
  RenderFormat format = RenderFormat::Ascii;
  LabelMode labels = LabelMode::None;
  // Pixels per lattice step in svg output.
  double scale = 40.0;
  SphereSemantics semantics = kDefaultSemantics;
};

// Draws the subgraph in the lattice embedding, vertex (k, l) at
// (k + l/2, l*sqrt(3)/2). Ascii uses two columns per half step and two rows
// per lattice row; interior points draw as '*', boundary as 'o', the rest as
// '.'. Curvature labels go on boundary points only; interior points stay
// unlabeled dots. Torus subgraphs draw on the fundamental domain; wrapping
// edges appear in svg as dashed stubs and are omitted in ascii.
std::string render(const LatticeSubgraph& g, const RenderSpec& spec);

}  // namespace tricurv
