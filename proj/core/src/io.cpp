#include "tricurv/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace tricurv {

namespace {

std::string strip(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::size_t first = body.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  std::size_t last = body.find_last_not_of(" \t\r");
  return body.substr(first, last - first + 1);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int parse_int(const std::string& token, int line_number) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + token + "'", line_number);
  }
  if (used != token.size()) throw ParseError("expected an integer, got '" + token + "'", line_number);
  return value;
}

EdgeC norm_edge(Coord a, Coord b) { return a < b ? EdgeC{a, b} : EdgeC{b, a}; }

}  // namespace

ParseError::ParseError(const std::string& message, int line_number)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

EdgeNotUnitDistanceError::EdgeNotUnitDistanceError(Coord a, Coord b, int line_number)
    : ParseError("edge (" + std::to_string(a.k) + "," + std::to_string(a.l) + ")-(" +
                     std::to_string(b.k) + "," + std::to_string(b.l) +
                     ") does not join points at distance 1",
                 line_number) {}

UnknownBackgroundError::UnknownBackgroundError(const std::string& word, int line_number)
    : ParseError("unknown background '" + word + "'", line_number) {}

LatticeSubgraph parse_domain(std::istream& in) {
  std::string line;
  int line_number = 0;

  std::optional<Background> bg;
  int header_line = 0;
  std::vector<Coord> vertices;
  std::vector<EdgeC> edges;
  std::vector<int> edge_lines;
  bool explicit_edges = false;

  while (std::getline(in, line)) {
    ++line_number;
    std::string body = strip(line);
    if (body.empty()) continue;
    std::vector<std::string> tokens = tokens_of(body);

    if (!bg) {
      header_line = line_number;
      if (tokens[0] == "plane") {
        if (tokens.size() != 1) throw ParseError("'plane' takes no arguments", line_number);
        bg = Background::plane();
      } else if (tokens[0] == "torus") {
        if (tokens.size() != 4) throw ParseError("'torus' needs <m> <n> <t>", line_number);
        int m = parse_int(tokens[1], line_number);
        int n = parse_int(tokens[2], line_number);
        int t = parse_int(tokens[3], line_number);
        try {
          bg = Background::torus(m, n, t);
        } catch (const TorusTooSmallError& err) {
          throw ParseError("torus too small: shortest identification " +
                               std::to_string(err.shortest) + " < 6",
                           line_number);
        } catch (const std::invalid_argument& err) {
          throw ParseError(err.what(), line_number);
        }
      } else {
        throw UnknownBackgroundError(tokens[0], line_number);
      }
      continue;
    }

    if (tokens[0] == "v") {
      if (tokens.size() != 3) throw ParseError("'v' needs <k> <l>", line_number);
      Coord p = bg->canonical(
          Coord{parse_int(tokens[1], line_number), parse_int(tokens[2], line_number)});
      if (std::find(vertices.begin(), vertices.end(), p) != vertices.end())
        throw ParseError("duplicate vertex", line_number);
      vertices.push_back(p);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 5) throw ParseError("'e' needs <k1> <l1> <k2> <l2>", line_number);
      Coord a = bg->canonical(
          Coord{parse_int(tokens[1], line_number), parse_int(tokens[2], line_number)});
      Coord b = bg->canonical(
          Coord{parse_int(tokens[3], line_number), parse_int(tokens[4], line_number)});
      if (bg->x_distance(a, b) != 1) throw EdgeNotUnitDistanceError(a, b, line_number);
      EdgeC edge = norm_edge(a, b);
      if (std::find(edges.begin(), edges.end(), edge) != edges.end())
        throw ParseError("duplicate edge", line_number);
      explicit_edges = true;
      edges.push_back(edge);
      edge_lines.push_back(line_number);
    } else {
      throw ParseError("unrecognized line '" + tokens[0] + "'", line_number);
    }
  }
  if (!bg) throw ParseError("missing background header", line_number + 1);

  // Vertex lines may follow edge lines, so membership is checked at the end
  // but reported against the offending edge line.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Coord endpoint : {edges[i].first, edges[i].second}) {
      if (std::find(vertices.begin(), vertices.end(), endpoint) == vertices.end())
        throw ParseError("edge endpoint (" + std::to_string(endpoint.k) + "," +
                             std::to_string(endpoint.l) + ") is not a listed vertex",
                         edge_lines[i]);
    }
  }
  try {
    return explicit_edges ? LatticeSubgraph::with_edges(*bg, vertices, edges)
                          : LatticeSubgraph::induced(*bg, vertices);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), header_line);
  }
}

LatticeSubgraph parse_domain_text(const std::string& text) {
  std::istringstream in(text);
  return parse_domain(in);
}

LatticeSubgraph load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_domain(in);
}

std::string serialize_domain(const LatticeSubgraph& g) {
  std::ostringstream out;
  const Background& bg = g.background();
  if (bg.is_plane()) {
    out << "plane\n";
  } else {
    out << "torus " << bg.m() << " " << bg.n() << " " << bg.twist() << "\n";
  }
  for (Coord p : g.vertices()) out << "v " << p.k << " " << p.l << "\n";
  if (!g.edges_are_induced()) {
    for (const EdgeC& e : g.edges())
      out << "e " << e.first.k << " " << e.first.l << " " << e.second.k << " " << e.second.l
          << "\n";
  }
  return out.str();
}

void save_domain(const LatticeSubgraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "'");
  out << serialize_domain(g);
}

namespace {

char class_glyph(PointClass c) {
  switch (c) {
    case PointClass::Interior: return '*';
    case PointClass::Boundary: return 'o';
    default: return '.';
  }
}

std::string label_text(const LatticeSubgraph& g, Coord p, PointClass c, const RenderSpec& spec) {
  switch (spec.labels) {
    case LabelMode::Curvature:
      if (c != PointClass::Boundary) return "";
      return std::to_string(curvature_K(g, p, spec.semantics));
    case LabelMode::Dimension: {
      Dimension d = point_dimension(g, p);
      return d.defined() ? std::to_string(d.value()) : std::string("?");
    }
    default:
      return "";
  }
}

// True when the canonical representatives are one unit step apart; false for
// a wrapping torus edge whose endpoints sit apart in the fundamental domain.
bool drawn_adjacent(Coord a, Coord b) {
  Coord d{b.k - a.k, b.l - a.l};
  for (Coord u : kUnitDirections) {
    if (d == u) return true;
  }
  return false;
}

std::string render_ascii(const LatticeSubgraph& g, const RenderSpec& spec) {
  if (g.vertex_count() == 0) return "";
  int col_min = 0, col_max = 0, l_min = 0, l_max = 0;
  bool first = true;
  auto raw_col = [](Coord p) { return 4 * p.k + 2 * p.l; };
  for (Coord p : g.vertices()) {
    if (first) {
      col_min = col_max = raw_col(p);
      l_min = l_max = p.l;
      first = false;
    }
    col_min = std::min(col_min, raw_col(p));
    col_max = std::max(col_max, raw_col(p));
    l_min = std::min(l_min, p.l);
    l_max = std::max(l_max, p.l);
  }
  auto col = [&](Coord p) { return raw_col(p) - col_min; };
  auto row = [&](Coord p) { return 2 * (l_max - p.l); };

  std::vector<std::string> canvas(2 * (l_max - l_min) + 1,
                                  std::string(col_max - col_min + 1, ' '));
  auto put = [&](int r, int c, char ch) {
    if (c >= static_cast<int>(canvas[r].size())) canvas[r].resize(c + 1, ' ');
    canvas[r][c] = ch;
  };

  for (const EdgeC& e : g.edges()) {
    if (!drawn_adjacent(e.first, e.second)) continue;
    int r1 = row(e.first), c1 = col(e.first);
    int r2 = row(e.second), c2 = col(e.second);
    if (r1 == r2) {
      for (int c = std::min(c1, c2) + 1; c < std::max(c1, c2); ++c) put(r1, c, '-');
    } else {
      bool up_right = (c2 - c1) * (r2 - r1) < 0;
      put((r1 + r2) / 2, (c1 + c2) / 2, up_right ? '/' : '\\');
    }
  }
  for (Coord p : g.vertices()) {
    PointClass c = classify_point(g, p);
    char glyph = class_glyph(c);
    if (spec.labels == LabelMode::Class)
      glyph = c == PointClass::Interior ? 'I' : (c == PointClass::Boundary ? 'B' : 'O');
    put(row(p), col(p), glyph);
    std::string label = label_text(g, p, c, spec);
    for (std::size_t i = 0; i < label.size(); ++i)
      put(row(p), col(p) + 1 + static_cast<int>(i), label[i]);
  }

  std::ostringstream out;
  for (const std::string& line : canvas) {
    std::size_t end = line.find_last_not_of(' ');
    out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << "\n";
  }
  return out.str();
}

std::string render_svg(const LatticeSubgraph& g, const RenderSpec& spec) {
  const double s = spec.scale;
  const double root3_half = std::sqrt(3.0) / 2.0;
  auto ex = [&](Coord p) { return (p.k + p.l / 2.0) * s; };
  auto ey = [&](Coord p) { return p.l * root3_half * s; };

  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  bool first = true;
  for (Coord p : g.vertices()) {
    double x = ex(p), y = ey(p);
    if (first) {
      x_min = x_max = x;
      y_min = y_max = y;
      first = false;
    }
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  const double margin = s;
  auto px = [&](double x) { return x - x_min + margin; };
  auto py = [&](double y) { return (y_max - y) + margin; };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x_max - x_min + 2 * margin)
      << "\" height=\"" << (y_max - y_min + 2 * margin) << "\">\n";

  const Background& bg = g.background();
  auto line_tag = [&](Coord a, Coord ab, bool dashed) {
    out << "  <line x1=\"" << px(ex(a)) << "\" y1=\"" << py(ey(a)) << "\" x2=\"" << px(ex(ab))
        << "\" y2=\"" << py(ey(ab)) << "\" stroke=\"#777777\" stroke-width=\"" << (s * 0.05)
        << "\"" << (dashed ? " stroke-dasharray=\"4 4\"" : "") << "/>\n";
  };
  for (const EdgeC& e : g.edges()) {
    if (drawn_adjacent(e.first, e.second)) {
      line_tag(e.first, e.second, false);
    } else if (bg.is_torus()) {
      // Wrapping edge: draw a dashed stub from each endpoint toward the
      // nearest unit translate of the other one.
      for (int swap = 0; swap < 2; ++swap) {
        Coord a = swap ? e.second : e.first;
        Coord b = swap ? e.first : e.second;
        bool found = false;
        for (int i = -2; i <= 2 && !found; ++i) {
          for (int j = -2; j <= 2 && !found; ++j) {
            Coord translate{b.k + i * bg.m() + j * bg.twist(), b.l + j * bg.n()};
            if (drawn_adjacent(a, translate)) {
              line_tag(a, translate, true);
              found = true;
            }
          }
        }
      }
    }
  }
  for (Coord p : g.vertices()) {
    PointClass c = classify_point(g, p);
    const char* fill = c == PointClass::Interior ? "#222222"
                       : c == PointClass::Boundary ? "#ffffff"
                                                   : "#bbbbbb";
    out << "  <circle cx=\"" << px(ex(p)) << "\" cy=\"" << py(ey(p)) << "\" r=\"" << (s * 0.15)
        << "\" fill=\"" << fill << "\" stroke=\"#222222\" stroke-width=\"" << (s * 0.04)
        << "\"/>\n";
    std::string label = label_text(g, p, c, spec);
    if (!label.empty()) {
      out << "  <text x=\"" << (px(ex(p)) + s * 0.2) << "\" y=\"" << (py(ey(p)) - s * 0.2)
          << "\" font-size=\"" << (s * 0.35) << "\" font-family=\"sans-serif\">" << label
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const LatticeSubgraph& g, const RenderSpec& spec) {
  if (spec.format == RenderFormat::Ascii) return render_ascii(g, spec);
  return render_svg(g, spec);
}

}  // namespace tricurv
