#include "sp2/io.hpp"

#include <fstream>
#include <sstream>

namespace sp2::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j) {
  if (!j.is_number()) fail("expected a number, got " + j.dump());
  return j.get<double>();
}

int integer(const Json& j) {
  if (!j.is_number_integer()) fail("expected an integer, got " + j.dump());
  return j.get<int>();
}

// Entry (r, c) as its components, checking the arity for the ground ring.
std::vector<double> entry(const Json& j, AlgebraKind kind) {
  if (kind == AlgebraKind::Real) return {number(j)};
  const std::size_t arity = kind == AlgebraKind::Complex ? 2 : 4;
  if (!j.is_array() || j.size() != arity) fail("expected an entry of " + std::to_string(arity) + " numbers, got " + j.dump());
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number(x));
  return out;
}

}  // namespace

Json to_json(const AlgebraDescriptor& d) {
  return Json{{"kind", std::string(1, kind_letter(d.kind))}, {"n", d.n}};
}

Json to_json(const AlgebraElement& a) {
  const auto& d = a.descriptor();
  const auto [x1, x2] = a.quaternion_parts();
  Json rows = Json::array();
  for (int r = 0; r < d.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < d.n; ++c) {
      const Complex z = x1(r, c);
      switch (d.kind) {
        case AlgebraKind::Real: row.push_back(z.real()); break;
        case AlgebraKind::Complex: row.push_back({z.real(), z.imag()}); break;
        case AlgebraKind::Quaternionic: {
          const Complex w = x2(r, c);
          row.push_back({z.real(), z.imag(), w.real(), w.imag()});
          break;
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Mat2& m) {
  return Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

Json to_json(const SymplecticElement& g) { return to_json(g.matrix()); }

Json to_json(const IsotropicLine& l) {
  return Json{{"x1", to_json(l.representative().x1)}, {"x2", to_json(l.representative().x2)}};
}

Json to_json(const PolygonInput& p) {
  Json triangles = Json::array();
  for (const auto& t : p.triangles) triangles.push_back({t[0], t[1], t[2]});
  Json pairings = Json::array();
  for (const auto& [x, y] : p.pairings) pairings.push_back({{x.triangle, x.side}, {y.triangle, y.side}});
  return Json{{"triangles", triangles}, {"pairings", pairings}};
}

Json to_json(const CoordinateVector& c) {
  Json b = Json::object();
  for (const auto& [id, x] : c.b) b[id] = to_json(x);
  Json u = Json::object();
  for (const auto& [id, x] : c.u) u[id] = to_json(x);
  return Json{{"algebra", to_json(c.algebra)}, {"b", b}, {"u", u}};
}

Json to_json(const FramedRepresentation& fr) {
  Json j{{"algebra", to_json(fr.algebra)}, {"base", fr.base}};
  if (fr.gauge) j["gauge"] = to_json(*fr.gauge);
  Json generators = Json::object();
  for (const auto& [id, g] : fr.generators) generators[id] = to_json(g);
  Json framing = Json::object();
  for (const auto& [corner, line] : fr.framing) framing[std::to_string(corner)] = to_json(line);
  j["generators"] = generators;
  j["framing"] = framing;
  return j;
}

AlgebraDescriptor parse_descriptor(const Json& j, double tol) {
  const auto& kind = field(j, "kind");
  if (!kind.is_string() || kind.get<std::string>().size() != 1) fail("algebra kind must be one of \"R\", \"C\", \"H\"");
  const char letter = kind.get<std::string>()[0];
  if (letter != 'R' && letter != 'C' && letter != 'H') fail("algebra kind must be one of \"R\", \"C\", \"H\"");
  const int n = integer(field(j, "n"));
  if (n < 1) fail("algebra size n must be positive");
  if (!(tol > 0)) fail("tolerance must be positive");
  return AlgebraDescriptor(kind_from_letter(letter), n, tol);
}

AlgebraElement parse_element(const Json& j, const AlgebraDescriptor& d) {
  if (!j.is_array() || static_cast<int>(j.size()) != d.n) fail("expected " + std::to_string(d.n) + " matrix rows");
  CMatrix x1 = CMatrix::Zero(d.n, d.n);
  CMatrix x2 = CMatrix::Zero(d.n, d.n);
  for (int r = 0; r < d.n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d.n) fail("expected " + std::to_string(d.n) + " entries per row");
    for (int c = 0; c < d.n; ++c) {
      const auto e = entry(row[c], d.kind);
      x1(r, c) = Complex(e[0], e.size() > 1 ? e[1] : 0.0);
      if (e.size() == 4) x2(r, c) = Complex(e[2], e[3]);
    }
  }
  if (!x1.allFinite() || !x2.allFinite()) fail("matrix entries must be finite");
  if (d.kind == AlgebraKind::Quaternionic) return AlgebraElement::from_quaternion_parts(d, x1, x2);
  return AlgebraElement::from_complex(d, x1);
}

Mat2 parse_mat2(const Json& j, const AlgebraDescriptor& d) {
  return Mat2{parse_element(field(j, "a"), d), parse_element(field(j, "b"), d), parse_element(field(j, "c"), d),
              parse_element(field(j, "d"), d)};
}

SymplecticElement parse_symplectic(const Json& j, const AlgebraDescriptor& d) { return SymplecticElement(parse_mat2(j, d)); }

IsotropicLine parse_line(const Json& j, const AlgebraDescriptor& d) {
  return IsotropicLine(parse_element(field(j, "x1"), d), parse_element(field(j, "x2"), d));
}

PolygonInput parse_polygon(const Json& j) {
  PolygonInput p;
  const auto& triangles = field(j, "triangles");
  if (!triangles.is_array()) fail("\"triangles\" must be an array");
  for (const auto& t : triangles) {
    if (!t.is_array() || t.size() != 3) fail("each triangle lists three corner ids");
    p.triangles.push_back({integer(t[0]), integer(t[1]), integer(t[2])});
  }
  if (j.contains("pairings")) {
    const auto& pairings = j.at("pairings");
    if (!pairings.is_array()) fail("\"pairings\" must be an array");
    for (const auto& pr : pairings) {
      if (!pr.is_array() || pr.size() != 2) fail("each pairing lists two sides");
      std::array<SideRef, 2> sides;
      for (int k = 0; k < 2; ++k) {
        if (!pr[k].is_array() || pr[k].size() != 2) fail("a side is written [triangle, side]");
        sides[k] = {integer(pr[k][0]), integer(pr[k][1])};
      }
      p.pairings.push_back(sides);
    }
  }
  return p;
}

CoordinateVector parse_coordinates(const Json& j, double tol) {
  CoordinateVector c{parse_descriptor(field(j, "algebra"), tol), {}, {}};
  const auto& b = field(j, "b");
  const auto& u = field(j, "u");
  if (!b.is_object() || !u.is_object()) fail("\"b\" and \"u\" must be objects");
  for (const auto& [id, m] : b.items()) c.b.emplace(id, parse_element(m, c.algebra));
  for (const auto& [id, m] : u.items()) c.u.emplace(id, parse_element(m, c.algebra));
  return c;
}

FramedRepresentation parse_representation(const Json& j, double tol) {
  FramedRepresentation fr;
  fr.algebra = parse_descriptor(field(j, "algebra"), tol);
  fr.base = j.contains("base") ? integer(j.at("base")) : 0;
  if (j.contains("gauge")) fr.gauge = parse_symplectic(j.at("gauge"), fr.algebra);
  const auto& generators = field(j, "generators");
  const auto& framing = field(j, "framing");
  if (!generators.is_object() || !framing.is_object()) fail("\"generators\" and \"framing\" must be objects");
  for (const auto& [id, g] : generators.items()) fr.generators.emplace(id, parse_symplectic(g, fr.algebra));
  for (const auto& [key, l] : framing.items()) {
    int corner = 0;
    std::istringstream in(key);
    if (!(in >> corner) || !in.eof()) fail("framing keys must be integer corner ids, got \"" + key + "\"");
    fr.framing.emplace(corner, parse_line(l, fr.algebra));
  }
  return fr;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sp2::io
