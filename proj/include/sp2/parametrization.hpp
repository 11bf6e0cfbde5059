#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sp2/isotropic.hpp"
#include "sp2/surface.hpp"

namespace sp2 {

/// Coordinates of a maximal framed representation: one positive element per
/// internal edge (diagonals "d<k>" and pairings "p<k>") and one unitary per
/// pairing.
struct CoordinateVector {
  AlgebraDescriptor algebra;
  std::map<std::string, AlgebraElement> b;
  std::map<std::string, AlgebraElement> u;
};

/// Throws DomainMismatch, NotPositive or NotUnitary.
void validate(const CoordinateVector& c, const FundamentalPolygon& p);

/// Largest relative entrywise deviation between two coordinate vectors on the
/// same domain.
double max_deviation(const CoordinateVector& x, const CoordinateVector& y);

/// Coordinates with every slot conjugated by the same unitary w.
CoordinateVector conjugate(const CoordinateVector& c, const AlgebraElement& w);

CoordinateVector sample_coordinates(const FundamentalPolygon& p, const AlgebraDescriptor& d, Rng& rng);

/// [[-1, 1], [-1, 0]]
SymplecticElement turn_matrix(const AlgebraDescriptor& d);
/// [[0, sqrt(a)^{-1}], [-sqrt(a), 0]] for positive a.
SymplecticElement edge_matrix(const AlgebraElement& a);
/// diag(u b, u b^{-1}) Omega = [[0, u b], [-u b^{-1}, 0]].
SymplecticElement pairing_matrix(const AlgebraElement& u, const AlgebraElement& b);

/// Trivial local system on Gamma_0: vertex values T(v), the matrices of the
/// oriented edges and the transitions across pairings.
class LocalSystem {
 public:
  LocalSystem(GammaGraph graph, std::vector<SymplecticElement> vertex_values,
              std::vector<SymplecticElement> edge_matrices, std::map<int, SymplecticElement> pairing_transitions);

  const GammaGraph& graph() const { return graph_; }
  const SymplecticElement& at(GammaVertex v) const { return values_.at(v); }
  const SymplecticElement& edge_matrix(int edge) const { return edges_.at(edge); }
  /// T(w <- v) across pairing e, from its first side to the lift of its second.
  const SymplecticElement& pairing_transition(int polygon_edge) const;

  /// Matrix of one step; backward steps use the inverse.
  SymplecticElement step_matrix(const GammaStep& step) const;
  /// Ordered product of step matrices along a path.
  SymplecticElement transport(const std::vector<GammaStep>& path) const;
  /// T(w) T(v)^{-1}.
  SymplecticElement transport(GammaVertex from, GammaVertex to) const;

 private:
  GammaGraph graph_;
  std::vector<SymplecticElement> values_;
  std::vector<SymplecticElement> edges_;
  std::map<int, SymplecticElement> pairings_;
};

/// Framed homomorphism restricted to the fundamental polygon: one generator
/// per pairing and one isotropic line per polygon corner.
struct FramedRepresentation {
  AlgebraDescriptor algebra;
  GammaVertex base = 0;
  /// g with g(F^t, F^b, F^r)(base) = (l+, l-, l1); fixes the unitary gauge.
  std::optional<SymplecticElement> gauge;
  std::map<std::string, SymplecticElement> generators;
  std::map<int, IsotropicLine> framing;

  const IsotropicLine& line(int corner_id) const;
};

/// Global action g . (rho, F) = (g rho g^{-1}, g F); drops the gauge.
FramedRepresentation conjugate(const FramedRepresentation& fr, const SymplecticElement& g);

struct SynthesisReport {
  double cycle_closure = 0;   ///< worst |T(w) - M T(v)| / |T(w)| on non-tree edges
  double adaptedness = 0;     ///< worst line distance of T(v) F^t(v), T(v) F^b(v) from l+, l-
  double corner_consistency = 0;
  double equivariance = 0;    ///< worst line distance across pairings
  bool all_maximal = false;
  bool generators_in_sp2 = false;
};

struct Synthesis {
  LocalSystem local_system;
  FramedRepresentation representation;
  SynthesisReport report;
};

/// Builds the framed local system and representation with T(base) = Id.
/// Throws DomainMismatch and CycleClosureFailure.
Synthesis synthesize(const FundamentalPolygon& p, const CoordinateVector& c, GammaVertex base = 0);

/// Recovers coordinates. Throws NotTransverse, NotMaximal or DomainMismatch.
CoordinateVector extract(const FramedRepresentation& fr, const FundamentalPolygon& p);

/// Corner-line triple of every triangle is maximal.
bool verify_maximal(const FramedRepresentation& fr, const FundamentalPolygon& p);

/// Worst line distance in F(partner corner) = rho(gamma_e) F(corner) over
/// all pairings.
double equivariance_defect(const FramedRepresentation& fr, const FundamentalPolygon& p);

struct Letter {
  std::string generator;
  int power = 1;  ///< +1 or -1
};
using Word = std::vector<Letter>;

/// rho of a word read left to right. Throws UnknownGenerator.
SymplecticElement holonomy(const FramedRepresentation& fr, const Word& word);

/// rho(gamma_e) = T(gamma_e x)^{-1} T(x) for the lift x of vertex `end`
/// in the neighbouring copy of the polygon across pairing e, with T(x)
/// obtained by transporting T(start) along Gamma_0 paths and the pairing
/// transition. Agrees with the stored generator for every choice of start
/// and end.
SymplecticElement holonomy_via(const LocalSystem& ls, const FundamentalPolygon& p, int pairing_edge,
                               GammaVertex start, GammaVertex end);

/// Tuple of unitary component labels, one per pairing in order.
std::vector<int> component_label(const CoordinateVector& c, const FundamentalPolygon& p);

/// k^{1 - chi} with k the number of components of the unitary group.
long long count_components(const SurfaceDescriptor& d, const AlgebraDescriptor& alg);

/// Labels seen over random coordinate vectors, next to the predicted count.
struct LabelCensus {
  int samples = 0;
  std::set<std::vector<int>> labels;
  long long expected = 0;
};
LabelCensus label_census(const FundamentalPolygon& p, const AlgebraDescriptor& d, int samples, Rng& rng);

struct RoundTrip {
  double forward = 0;   ///< max_deviation(extract(synthesize(c)), c)
  double backward = 0;  ///< same after a second synthesize/extract pass
  SynthesisReport report;
};
RoundTrip round_trip(const FundamentalPolygon& p, const CoordinateVector& c);

}  // namespace sp2
