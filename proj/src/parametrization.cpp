#include "sp2/parametrization.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace sp2 {

namespace {

AlgebraElement symmetrized(const AlgebraElement& x) {
  return AlgebraElement::from_embedded(x.descriptor(), 0.5 * (x.embedded() + x.embedded().adjoint()));
}

// Closure and equivariance are certified up to this multiple of the tolerance.
constexpr double kClosureFactor = 1e2;

template <typename Map>
std::set<std::string> keys(const Map& m) {
  std::set<std::string> out;
  for (const auto& [k, v] : m) out.insert(k);
  return out;
}

std::set<std::string> edge_ids(const FundamentalPolygon& p) {
  std::set<std::string> out;
  for (const auto& e : p.edges()) out.insert(e.id);
  return out;
}

std::set<std::string> pairing_ids(const FundamentalPolygon& p) {
  std::set<std::string> out;
  for (int i : p.pairing_indices()) out.insert(p.edges()[i].id);
  return out;
}

}  // namespace

void validate(const CoordinateVector& c, const FundamentalPolygon& p) {
  if (keys(c.b) != edge_ids(p)) throw Error(ErrorCode::DomainMismatch, "b coordinates do not match the internal edges");
  if (keys(c.u) != pairing_ids(p)) throw Error(ErrorCode::DomainMismatch, "u coordinates do not match the pairings");
  for (const auto& [id, b] : c.b) {
    if (!b.descriptor().same_algebra(c.algebra)) throw Error(ErrorCode::DescriptorMismatch, "coordinate " + id + " has the wrong algebra");
    if (!is_positive(b)) throw Error(ErrorCode::NotPositive, "coordinate b[" + id + "] is not positive");
  }
  for (const auto& [id, u] : c.u) {
    if (!u.descriptor().same_algebra(c.algebra)) throw Error(ErrorCode::DescriptorMismatch, "coordinate " + id + " has the wrong algebra");
    if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "coordinate u[" + id + "] is not unitary");
  }
}

double max_deviation(const CoordinateVector& x, const CoordinateVector& y) {
  if (keys(x.b) != keys(y.b) || keys(x.u) != keys(y.u)) {
    throw Error(ErrorCode::DomainMismatch, "coordinate vectors have different domains");
  }
  double worst = 0.0;
  for (const auto& [id, b] : x.b) worst = std::max(worst, relative_distance(b, y.b.at(id)));
  for (const auto& [id, u] : x.u) worst = std::max(worst, relative_distance(u, y.u.at(id)));
  return worst;
}

CoordinateVector conjugate(const CoordinateVector& c, const AlgebraElement& w) {
  CoordinateVector out{c.algebra, {}, {}};
  const auto w_inv = sigma(w);
  for (const auto& [id, b] : c.b) out.b.emplace(id, symmetrized(w * b * w_inv));
  for (const auto& [id, u] : c.u) out.u.emplace(id, w * u * w_inv);
  return out;
}

CoordinateVector sample_coordinates(const FundamentalPolygon& p, const AlgebraDescriptor& d, Rng& rng) {
  CoordinateVector c{d, {}, {}};
  for (const auto& e : p.edges()) c.b.emplace(e.id, sample(d, SampleKind::Positive, rng));
  for (int i : p.pairing_indices()) c.u.emplace(p.edges()[i].id, sample(d, SampleKind::Unitary, rng));
  return c;
}

SymplecticElement turn_matrix(const AlgebraDescriptor& d) { return SymplecticElement::turn(d); }

SymplecticElement edge_matrix(const AlgebraElement& a) {
  const auto root = sqrt_positive(a);
  const auto zero = AlgebraElement::zero(a.descriptor());
  return SymplecticElement(Mat2{zero, inverse(root), -root, zero});
}

SymplecticElement pairing_matrix(const AlgebraElement& u, const AlgebraElement& b) {
  if (!is_unitary(u)) throw Error(ErrorCode::NotUnitary, "pairing_matrix: u is not unitary");
  if (!is_positive(b)) throw Error(ErrorCode::NotPositive, "pairing_matrix: b is not positive");
  const auto zero = AlgebraElement::zero(u.descriptor());
  return SymplecticElement(Mat2{zero, u * b, -(u * inverse(b)), zero});
}

LocalSystem::LocalSystem(GammaGraph graph, std::vector<SymplecticElement> vertex_values,
                         std::vector<SymplecticElement> edge_matrices, std::map<int, SymplecticElement> pairing_transitions)
    : graph_(std::move(graph)),
      values_(std::move(vertex_values)),
      edges_(std::move(edge_matrices)),
      pairings_(std::move(pairing_transitions)) {
  if (static_cast<int>(values_.size()) != graph_.vertex_count() || edges_.size() != graph_.edges().size()) {
    throw Error(ErrorCode::DomainMismatch, "local system does not match its graph");
  }
}

const SymplecticElement& LocalSystem::pairing_transition(int polygon_edge) const {
  auto it = pairings_.find(polygon_edge);
  if (it == pairings_.end()) throw Error(ErrorCode::UnknownGenerator, "no transition for this edge");
  return it->second;
}

SymplecticElement LocalSystem::step_matrix(const GammaStep& step) const {
  const auto& m = edges_.at(step.edge);
  return step.forward ? m : inverse(m);
}

SymplecticElement LocalSystem::transport(const std::vector<GammaStep>& path) const {
  auto result = SymplecticElement::identity(values_.front().descriptor());
  for (const auto& step : path) result = step_matrix(step) * result;
  return result;
}

SymplecticElement LocalSystem::transport(GammaVertex from, GammaVertex to) const {
  return values_.at(to) * inverse(values_.at(from));
}

const IsotropicLine& FramedRepresentation::line(int corner_id) const {
  auto it = framing.find(corner_id);
  if (it == framing.end()) throw Error(ErrorCode::DomainMismatch, "framing has no line at corner " + std::to_string(corner_id));
  return it->second;
}

FramedRepresentation conjugate(const FramedRepresentation& fr, const SymplecticElement& g) {
  FramedRepresentation out{fr.algebra, fr.base, std::nullopt, {}, {}};
  const auto g_inv = inverse(g);
  for (const auto& [id, rho] : fr.generators) out.generators.emplace(id, g * rho * g_inv);
  for (const auto& [corner, line] : fr.framing) out.framing.emplace(corner, act(g, line));
  return out;
}

namespace {

struct Propagation {
  std::vector<SymplecticElement> values;
  double closure = 0.0;
};

// Propagates T along a breadth-first tree and measures closure on every edge.
Propagation propagate(const GammaGraph& graph, const std::vector<SymplecticElement>& edge_matrices,
                      const SymplecticElement& start, GammaVertex base) {
  const auto tree = spanning_tree(graph, base);
  if (static_cast<int>(tree.order.size()) != graph.vertex_count()) {
    throw Error(ErrorCode::Unreachable, "graph of the polygon is not connected");
  }
  std::vector<std::optional<SymplecticElement>> values(graph.vertex_count());
  values[base] = start;
  for (GammaVertex v : tree.order) {
    if (v == base) continue;
    const auto& step = *tree.parent_step[v];
    const auto& m = edge_matrices[step.edge];
    values[v] = (step.forward ? m : inverse(m)) * *values[step.from];
  }
  Propagation out;
  for (std::size_t k = 0; k < graph.edges().size(); ++k) {
    const auto& e = graph.edges()[k];
    const auto predicted = edge_matrices[k] * *values[e.from];
    out.closure = std::max(out.closure, relative_distance(predicted.matrix(), values[e.to]->matrix()));
  }
  for (auto& v : values) out.values.push_back(std::move(*v));
  return out;
}

GammaVertex side_vertex(SideRef s) { return gamma_vertex(s.triangle, s.side); }

}  // namespace

Synthesis synthesize(const FundamentalPolygon& p, const CoordinateVector& c, GammaVertex base) {
  validate(c, p);
  const auto& d = c.algebra;
  auto graph = build_gamma(p);
  if (base < 0 || base >= graph.vertex_count()) throw Error(ErrorCode::DomainMismatch, "base vertex out of range");

  std::vector<SymplecticElement> edge_matrices;
  const auto turn = turn_matrix(d);
  for (const auto& e : graph.edges()) {
    if (e.kind == GammaEdge::Kind::Turn) {
      edge_matrices.push_back(turn);
    } else {
      edge_matrices.push_back(edge_matrix(c.b.at(p.edges()[e.internal_edge].id)));
    }
  }

  auto prop = propagate(graph, edge_matrices, SymplecticElement::identity(d), base);
  if (prop.closure > kClosureFactor * d.tol) {
    throw Error(ErrorCode::CycleClosureFailure, "local system does not close: defect " + std::to_string(prop.closure));
  }
  const auto& values = prop.values;

  // Across pairing e the transition has the edge-matrix shape with
  // b' = sqrt(b_e)^{-1}, twisted by u_e.
  std::map<int, SymplecticElement> transitions;
  FramedRepresentation fr{d, base, SymplecticElement::identity(d), {}, {}};
  for (int i : p.pairing_indices()) {
    const auto& e = p.edges()[i];
    const auto transition = pairing_matrix(c.u.at(e.id), inverse(sqrt_positive(c.b.at(e.id))));
    transitions.emplace(i, transition);
    fr.generators.emplace(e.id, inverse(values[side_vertex(e.to)]) * transition * values[side_vertex(e.from)]);
  }

  const auto plus = IsotropicLine::plus(d);
  const auto minus = IsotropicLine::minus(d);
  const auto one = IsotropicLine::one(d);

  // Framing from adaptedness, F^t(v) = T(v)^{-1} l+ and F^b(v) = T(v)^{-1} l-,
  // taking each corner from the first vertex of the tree that sees it.
  SynthesisReport report;
  const auto tree = spanning_tree(graph, base);
  for (GammaVertex v : tree.order) {
    const auto t_inv = inverse(values[v]);
    const std::array<std::pair<int, const IsotropicLine*>, 3> corners{
        {{graph.top(v), &plus}, {graph.bottom(v), &minus}, {graph.right(v), &one}}};
    for (const auto& [corner, normal] : corners) {
      auto line = act(t_inv, *normal);
      auto [it, inserted] = fr.framing.emplace(corner, line);
      if (!inserted) report.corner_consistency = std::max(report.corner_consistency, line_distance(it->second, line));
    }
  }

  for (GammaVertex v = 0; v < graph.vertex_count(); ++v) {
    report.adaptedness = std::max({report.adaptedness, line_distance(act(values[v], fr.line(graph.top(v))), plus),
                                   line_distance(act(values[v], fr.line(graph.bottom(v))), minus)});
  }
  report.cycle_closure = prop.closure;
  report.equivariance = equivariance_defect(fr, p);
  report.all_maximal = verify_maximal(fr, p);
  report.generators_in_sp2 = std::all_of(fr.generators.begin(), fr.generators.end(),
                                         [](const auto& kv) { return is_sp2(kv.second.matrix()); });

  LocalSystem ls(std::move(graph), std::move(prop.values), std::move(edge_matrices), std::move(transitions));
  return {std::move(ls), std::move(fr), report};
}

bool verify_maximal(const FramedRepresentation& fr, const FundamentalPolygon& p) {
  try {
    for (int t = 0; t < p.triangle_count(); ++t) {
      if (!is_maximal_triple(fr.line(p.corner(t, 0)), fr.line(p.corner(t, 1)), fr.line(p.corner(t, 2)))) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

double equivariance_defect(const FramedRepresentation& fr, const FundamentalPolygon& p) {
  double worst = 0.0;
  for (int i : p.pairing_indices()) {
    const auto& e = p.edges()[i];
    auto it = fr.generators.find(e.id);
    if (it == fr.generators.end()) throw Error(ErrorCode::UnknownGenerator, "no generator for pairing " + e.id);
    const auto& rho = it->second;
    // The start of the first side is glued to the end of the second one.
    const int a = p.corner(e.from.triangle, e.from.side);
    const int b = p.corner(e.from.triangle, e.from.side + 1);
    const int a_image = p.corner(e.to.triangle, e.to.side + 1);
    const int b_image = p.corner(e.to.triangle, e.to.side);
    worst = std::max({worst, line_distance(act(rho, fr.line(a)), fr.line(a_image)),
                      line_distance(act(rho, fr.line(b)), fr.line(b_image))});
  }
  return worst;
}

CoordinateVector extract(const FramedRepresentation& fr, const FundamentalPolygon& p) {
  const auto& d = fr.algebra;
  for (int corner : p.corner_ids()) fr.line(corner);
  if (keys(fr.generators) != pairing_ids(p)) throw Error(ErrorCode::DomainMismatch, "generators do not match the pairings");

  for (int t = 0; t < p.triangle_count(); ++t) {
    for (int s = 0; s < 3; ++s) {
      if (!is_transverse(fr.line(p.corner(t, s)), fr.line(p.corner(t, s + 1)))) {
        throw Error(ErrorCode::NotTransverse, "framing is not transverse along a side of triangle " + std::to_string(t));
      }
    }
    if (!is_maximal_triple(fr.line(p.corner(t, 0)), fr.line(p.corner(t, 1)), fr.line(p.corner(t, 2)))) {
      throw Error(ErrorCode::NotMaximal, "triangle " + std::to_string(t) + " carries a non-maximal triple");
    }
  }

  const auto graph = build_gamma(p);
  const GammaVertex base = fr.base;
  if (base < 0 || base >= graph.vertex_count()) throw Error(ErrorCode::DomainMismatch, "base vertex out of range");
  const auto gauge = fr.gauge ? *fr.gauge
                              : normalize_triple(fr.line(graph.top(base)), fr.line(graph.bottom(base)),
                                                 fr.line(graph.right(base)));

  // b_v from T(v) F(v^l) = l(b_v) = (1, -b_v)^T A.
  auto read_b = [&](const SymplecticElement& t, GammaVertex v) {
    const Vec2 z = t * fr.line(*graph.left(v)).representative();
    auto b = symmetrized(-(z.x2 * inverse(z.x1)));
    if (!is_positive(b)) throw Error(ErrorCode::NotMaximal, "quadruple across a diagonal is not positive");
    return b;
  };

  const auto turn = turn_matrix(d);
  const auto tree = spanning_tree(graph, base);
  std::vector<std::optional<SymplecticElement>> values(graph.vertex_count());
  values[base] = gauge;
  for (GammaVertex v : tree.order) {
    if (v == base) continue;
    const auto& step = *tree.parent_step[v];
    const auto& e = graph.edges()[step.edge];
    const auto& from_value = *values[step.from];
    auto m = e.kind == GammaEdge::Kind::Turn ? turn : edge_matrix(read_b(from_value, step.from));
    values[v] = (step.forward ? m : inverse(m)) * from_value;
  }

  CoordinateVector c{d, {}, {}};
  for (int i : p.diagonal_indices()) {
    const GammaVertex v = side_vertex(p.edges()[i].from);
    c.b.emplace(p.edges()[i].id, read_b(*values[v], v));
  }

  const auto omega_inv = inverse(SymplecticElement::omega(d));
  for (int i : p.pairing_indices()) {
    const auto& e = p.edges()[i];
    const auto transition = *values[side_vertex(e.to)] * fr.generators.at(e.id) * inverse(*values[side_vertex(e.from)]);
    // transition = diag(x, sigma(x)^{-1}) Omega with x = u_e sqrt(b_e)^{-1}.
    const Mat2 levi = transition.matrix() * omega_inv.matrix();
    const double off_diagonal = std::hypot(levi.b.norm(), levi.c.norm());
    if (off_diagonal > std::sqrt(d.tol) * levi.norm()) {
      throw Error(ErrorCode::NotTransverse, "framing is not equivariant across pairing " + e.id);
    }
    const auto polar = polar_decompose(levi.a);
    c.u.emplace(e.id, polar.unitary);
    c.b.emplace(e.id, symmetrized(inverse(polar.positive * polar.positive)));
  }
  return c;
}

SymplecticElement holonomy(const FramedRepresentation& fr, const Word& word) {
  // Long words grow and then cancel; accumulating in double loses up to
  // six digits, so the product is formed in extended precision and rounded
  // once.
  using Wide = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
  const auto s = 2 * fr.algebra.embedded_size();
  Wide acc = Wide::Identity(s, s);
  for (const auto& letter : word) {
    auto it = fr.generators.find(letter.generator);
    if (it == fr.generators.end()) throw Error(ErrorCode::UnknownGenerator, "unknown generator " + letter.generator);
    if (letter.power != 1 && letter.power != -1) throw Error(ErrorCode::UnknownGenerator, "letter power must be +1 or -1");
    const auto g = letter.power == 1 ? it->second : inverse(it->second);
    acc = acc * g.matrix().embedded().cast<std::complex<long double>>();
  }
  return SymplecticElement(Mat2::from_embedded(fr.algebra, acc.cast<Complex>()));
}

SymplecticElement holonomy_via(const LocalSystem& ls, const FundamentalPolygon& p, int pairing_edge,
                               GammaVertex start, GammaVertex end) {
  const auto& e = p.edges().at(pairing_edge);
  if (e.kind != InternalEdge::Kind::Pairing) throw Error(ErrorCode::UnknownGenerator, "edge is not a pairing");
  const auto& graph = ls.graph();
  const auto into_side = ls.transport(path_between(graph, start, side_vertex(e.from)));
  const auto out_of_side = ls.transport(path_between(graph, side_vertex(e.to), end));
  const auto lifted = out_of_side * ls.pairing_transition(pairing_edge) * into_side * ls.at(start);
  return inverse(ls.at(end)) * lifted;
}

std::vector<int> component_label(const CoordinateVector& c, const FundamentalPolygon& p) {
  std::vector<int> label;
  for (int i : p.pairing_indices()) {
    auto it = c.u.find(p.edges()[i].id);
    if (it == c.u.end()) throw Error(ErrorCode::DomainMismatch, "missing unitary coordinate " + p.edges()[i].id);
    label.push_back(unitary_component_label(it->second));
  }
  return label;
}

long long count_components(const SurfaceDescriptor& d, const AlgebraDescriptor& alg) {
  const auto stats = surface_stats(d);
  long long count = 1;
  for (int i = 0; i < stats.pairings; ++i) count *= unitary_component_count(alg.kind);
  return count;
}

LabelCensus label_census(const FundamentalPolygon& p, const AlgebraDescriptor& d, int samples, Rng& rng) {
  LabelCensus census{samples, {}, count_components(p.descriptor(), d)};
  for (int k = 0; k < samples; ++k) census.labels.insert(component_label(sample_coordinates(p, d, rng), p));
  return census;
}

RoundTrip round_trip(const FundamentalPolygon& p, const CoordinateVector& c) {
  const auto first = synthesize(p, c);
  const auto extracted = extract(first.representation, p);
  const auto second = synthesize(p, extracted);
  return {max_deviation(extracted, c), max_deviation(extract(second.representation, p), c), first.report};
}

}  // namespace sp2
