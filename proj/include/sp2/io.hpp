#pragma once

#include <string>

#include <json.hpp>

#include "sp2/parametrization.hpp"

namespace sp2::io {

using Json = nlohmann::ordered_json;

/// Matrices are row-major arrays of entries: numbers for R, [re, im] for C
/// and [w, x, y, z] for w + x i + y j + z k over H.
Json to_json(const AlgebraDescriptor& d);
Json to_json(const AlgebraElement& a);
Json to_json(const Mat2& m);
Json to_json(const SymplecticElement& g);
Json to_json(const IsotropicLine& l);
Json to_json(const PolygonInput& p);
Json to_json(const CoordinateVector& c);
Json to_json(const FramedRepresentation& fr);

/// All parsers throw ParseError on malformed input. The tolerance is not part
/// of the file formats and is supplied by the caller.
AlgebraDescriptor parse_descriptor(const Json& j, double tol = kDefaultTol);
AlgebraElement parse_element(const Json& j, const AlgebraDescriptor& d);
Mat2 parse_mat2(const Json& j, const AlgebraDescriptor& d);
/// Also throws MembershipDrift.
SymplecticElement parse_symplectic(const Json& j, const AlgebraDescriptor& d);
/// Also throws DegenerateLine.
IsotropicLine parse_line(const Json& j, const AlgebraDescriptor& d);
PolygonInput parse_polygon(const Json& j);
CoordinateVector parse_coordinates(const Json& j, double tol = kDefaultTol);
FramedRepresentation parse_representation(const Json& j, double tol = kDefaultTol);

Json read_file(const std::string& path);
/// Two-space indented, trailing newline.
void write_file(const std::string& path, const Json& j);

}  // namespace sp2::io
