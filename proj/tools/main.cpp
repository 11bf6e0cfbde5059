// sp2frame: run the coordinate pipeline on JSON inputs.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sp2/classical.hpp"
#include "sp2/io.hpp"
#include "sp2/parametrization.hpp"

namespace {

using namespace sp2;

struct Config {
  std::string algebra = "R";
  int n = 1;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string surface;
  std::string coords;
  std::string rep;
  std::string out;
  int samples = 200;
};

class Table {
 public:
  template <typename T>
  Table& row(const std::string& key, const T& value) {
    std::ostringstream s;
    s << std::setprecision(6) << value;
    rows_.emplace_back(key, s.str());
    width_ = std::max(width_, key.size());
    return *this;
  }
  Table& check(const std::string& key, bool ok) {
    all_ok_ = all_ok_ && ok;
    return row(key, ok ? "pass" : "FAIL");
  }
  bool all_ok() const { return all_ok_; }
  void print() const {
    for (const auto& [k, v] : rows_) std::cout << std::left << std::setw(static_cast<int>(width_) + 2) << k << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  std::size_t width_ = 0;
  bool all_ok_ = true;
};

AlgebraDescriptor descriptor(const Config& cfg) {
  if (cfg.algebra.size() != 1) throw Error(ErrorCode::ParseError, "--algebra must be R, C or H");
  io::Json j{{"kind", cfg.algebra}, {"n", cfg.n}};
  return io::parse_descriptor(j, cfg.tol);
}

FundamentalPolygon load_surface(const Config& cfg) {
  if (cfg.surface.empty()) throw Error(ErrorCode::ParseError, "--surface is required");
  return FundamentalPolygon::build(io::parse_polygon(io::read_file(cfg.surface)));
}

CoordinateVector load_or_sample(const Config& cfg, const FundamentalPolygon& p) {
  if (!cfg.coords.empty()) return io::parse_coordinates(io::read_file(cfg.coords), cfg.tol);
  Rng rng(cfg.seed);
  return sample_coordinates(p, descriptor(cfg), rng);
}

void write_if_requested(const Config& cfg, const io::Json& j) {
  if (!cfg.out.empty()) io::write_file(cfg.out, j);
}

std::string label_string(const std::vector<int>& label) {
  std::string s = "(";
  for (std::size_t k = 0; k < label.size(); ++k) s += (k ? "," : "") + std::to_string(label[k]);
  return s + ")";
}

Table& report_rows(Table& t, const SynthesisReport& r, double tol) {
  return t.row("cycle closure", r.cycle_closure)
      .row("adaptedness", r.adaptedness)
      .row("corner consistency", r.corner_consistency)
      .row("equivariance", r.equivariance)
      .check("closure within 1e2 tol", r.cycle_closure <= 1e2 * tol)
      .check("adapted framing", r.adaptedness <= std::sqrt(tol))
      .check("equivariant framing", r.equivariance <= std::sqrt(tol))
      .check("generators in Sp2", r.generators_in_sp2)
      .check("all triples maximal", r.all_maximal);
}

int surface_info(const Config& cfg) {
  const auto p = load_surface(cfg);
  const auto& d = p.descriptor();
  const auto s = p.stats();
  Table t;
  t.row("genus", d.genus)
      .row("internal punctures", d.internal_punctures)
      .row("boundary components", d.boundary_components)
      .row("external punctures", d.external_punctures)
      .row("chi", s.euler_characteristic)
      .row("triangles", s.triangles)
      .row("internal edges", s.internal_edges)
      .row("pairings", s.pairings);
  t.print();
  return 0;
}

int sample_cmd(const Config& cfg) {
  const auto p = load_surface(cfg);
  Rng rng(cfg.seed);
  const auto c = sample_coordinates(p, descriptor(cfg), rng);
  write_if_requested(cfg, io::to_json(c));
  Table t;
  t.row("b slots", c.b.size()).row("u slots", c.u.size()).row("label", label_string(component_label(c, p)));
  t.print();
  return 0;
}

int synthesize_cmd(const Config& cfg) {
  const auto p = load_surface(cfg);
  const auto c = load_or_sample(cfg, p);
  const auto s = synthesize(p, c);
  write_if_requested(cfg, io::to_json(s.representation));
  Table t;
  report_rows(t, s.report, c.algebra.tol);
  t.print();
  return t.all_ok() ? 0 : 1;
}

int extract_cmd(const Config& cfg) {
  const auto p = load_surface(cfg);
  if (cfg.rep.empty()) throw Error(ErrorCode::ParseError, "--rep is required");
  const auto fr = io::parse_representation(io::read_file(cfg.rep), cfg.tol);
  const auto c = extract(fr, p);
  write_if_requested(cfg, io::to_json(c));
  Table t;
  for (const auto& [id, b] : c.b) {
    std::ostringstream s;
    s << canonical_spectrum(b).transpose();
    t.row("spectrum b[" + id + "]", s.str());
  }
  t.row("label", label_string(component_label(c, p)));
  t.print();
  return 0;
}

int roundtrip_cmd(const Config& cfg) {
  const auto p = load_surface(cfg);
  const auto c = load_or_sample(cfg, p);
  const auto r = round_trip(p, c);
  Table t;
  t.row("forward deviation", r.forward).row("backward deviation", r.backward);
  report_rows(t, r.report, c.algebra.tol);
  t.check("deviation within tol", std::max(r.forward, r.backward) <= c.algebra.tol);
  t.print();
  return t.all_ok() ? 0 : 1;
}

int components_cmd(const Config& cfg) {
  const auto p = load_surface(cfg);
  Rng rng(cfg.seed);
  const auto census = label_census(p, descriptor(cfg), cfg.samples, rng);
  Table t;
  t.row("samples", census.samples).row("observed labels", census.labels.size()).row("expected k^(1-chi)", census.expected);
  for (const auto& label : census.labels) t.row("label", label_string(label));
  t.check("census matches", static_cast<long long>(census.labels.size()) == census.expected);
  t.print();
  return t.all_ok() ? 0 : 1;
}

int realize_cmd(const Config& cfg) {
  const auto d = descriptor(cfg);
  Rng rng(cfg.seed);
  const auto census = realization_census(d, cfg.samples, 8, rng);
  const char* names[] = {"Sp(2n,R)", "U(n,n)", "SO*(4n)"};
  Table t;
  t.row("group", names[static_cast<int>(form_kind_for(d.kind))])
      .row("samples", census.samples)
      .row("worst member defect", census.worst_member_defect)
      .row("best non-member defect", census.best_nonmember_defect)
      .check("members preserve form", census.members_preserving == census.samples)
      .check("non-members rejected", census.nonmembers_rejected == census.samples)
      .check("compact elements unitary", census.compact_passing == census.samples);
  t.print();
  return t.all_ok() ? 0 : 1;
}

void print_error(std::string_view code, const std::string& message) {
  std::cerr << io::Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coordinates for maximal framed representations into Sp2(A)"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "ground ring")->check(CLI::IsMember({"R", "C", "H"}));
    sub->add_option("--n", cfg.n, "matrix size")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--surface", cfg.surface, "surface JSON");
    sub->add_option("--coords", cfg.coords, "coordinates JSON");
    sub->add_option("--rep", cfg.rep, "representation JSON");
    sub->add_option("--out", cfg.out, "output JSON");
    sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
  };

  const std::vector<std::pair<std::string, int (*)(const Config&)>> commands{
      {"surface-info", surface_info}, {"sample", sample_cmd},         {"synthesize", synthesize_cmd},
      {"extract", extract_cmd},       {"roundtrip", roundtrip_cmd},   {"components", components_cmd},
      {"realize", realize_cmd}};
  const std::map<std::string, std::string> help{
      {"surface-info", "print chi, #T, internal edges and pairings"},
      {"sample", "write random coordinates"},
      {"synthesize", "coordinates to framed representation"},
      {"extract", "framed representation to coordinates"},
      {"roundtrip", "extract(synthesize(c)) deviation"},
      {"components", "Monte-Carlo census of component labels"},
      {"realize", "classical form preservation report"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, fn] : commands) {
    subs.push_back(app.add_subcommand(name, help.at(name)));
    add_common(subs.back());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("ParseError", e.what());
    return 2;
  }

  try {
    for (std::size_t k = 0; k < commands.size(); ++k) {
      if (subs[k]->parsed()) {
        const int status = commands[k].second(cfg);
        if (status != 0) print_error("VerificationFailed", commands[k].first + ": a verification check failed");
        return status;
      }
    }
  } catch (const Error& e) {
    print_error(to_string(e.code()), e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("InternalError", e.what());
    return 1;
  }
  return 1;
}
