// Command-line front end: spectral radii, graph rewrites, split witnesses,
// verification campaigns, enumeration and named families.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gspec/gspec.hpp"

namespace {

using namespace gspec;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SizeCap:
    case ErrorKind::NoConvergence:
    case ErrorKind::RejectionCap:
      return kExitResource;
    default:
      return kExitUsage;
  }
}

/// Accepts "p/q", integers and plain decimals ("0.001", "1e-9").
mpq_class parse_rational(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
      throw Error(ErrorKind::ParameterOutOfRange, "bad rational '" + text + "'");
    }
    q.canonicalize();
    return q;
  }
  std::string mant = text;
  long exp10 = 0;
  if (auto e = text.find_first_of("eE"); e != std::string::npos) {
    mant = text.substr(0, e);
    try {
      exp10 = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParameterOutOfRange, "bad number '" + text + "'");
    }
  }
  if (auto dot = mant.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num;
  if (mant.empty() || num.set_str(mant, 10) != 0) {
    throw Error(ErrorKind::ParameterOutOfRange, "bad number '" + text + "'");
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  q.canonicalize();
  return q;
}

std::vector<VertexId> parse_vertex_list(const std::string& text) {
  std::vector<VertexId> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<VertexId>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParameterOutOfRange, "bad vertex '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string decimal(const mpq_class& q, int digits = 15) {
  std::ostringstream os;
  os << std::setprecision(digits) << std::fixed << q.get_d();
  return os.str();
}

std::string verdict_line(const RhoOrdering& cmp) {
  return "verdict: rho(result) " + to_string(cmp.relation) + " rho(input) [" +
         to_string(cmp.certificate) + "]";
}

SplitSpec split_spec_from(const Graph& g, VertexId v, const std::vector<std::string>& parts) {
  if (v >= g.order()) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(v));
  if (parts.size() != 1) throw Error(ErrorKind::BadPartition, "give exactly one --part for the x side");
  SplitSpec s{v, parse_vertex_list(parts[0]), {}};
  for (VertexId w : g.neighbors(v)) {
    if (!std::binary_search(s.x_side.begin(), s.x_side.end(), w)) s.y_side.push_back(w);
  }
  return s;
}

struct Args {
  std::string graph6;
  std::string width = "1/1000000000";
  bool exact = false;
  std::string kind;
  VertexId vertex = 0;
  std::string edge;
  std::vector<std::string> parts;
  std::size_t param = 0;
  std::size_t enum_n = 0;
  bool count_only = false;
  // verify
  std::size_t max_n = 6;
  std::string theorems = "all";
  std::size_t samples = 0;
  std::size_t n_min = 7;
  std::size_t n_max = 10;
  std::size_t expand_samples = 0;
  std::size_t expand_partitions = 8;
  std::uint64_t seed = 0;
  std::string exact_mode = "on_overlap";
  std::string out;
  std::size_t jobs = 1;
};

int cmd_rho(const Args& a) {
  const Graph g = parse_graph6(a.graph6);
  SpectralOptions opts;
  opts.enclosure_width = parse_rational(a.width);
  const SpectralResult r = spectral_radius(g, opts);
  std::cout << "graph: " << to_graph6(g) << " (n=" << g.order() << ", m=" << g.edge_count() << ")\n";
  std::cout << "rho: " << std::setprecision(15) << std::fixed << r.rho << "\n";
  std::cout << "enclosure: [" << r.enclosure.lo.get_str() << ", " << r.enclosure.hi.get_str() << "]\n";
  std::cout << "enclosure_decimal: [" << decimal(r.enclosure.lo) << ", " << decimal(r.enclosure.hi)
            << "]\n";
  if (a.exact) {
    const IntPoly p = char_poly(g);
    const RootInterval iv = isolate_largest_root(p, opts.enclosure_width);
    std::cout << "char_poly: " << p.to_string() << "\n";
    std::cout << "root_interval: (" << iv.lo.get_str() << ", " << iv.hi.get_str() << "]\n";
    std::cout << "root_interval_decimal: (" << decimal(iv.lo) << ", " << decimal(iv.hi) << "]\n";
  }
  return kExitOk;
}

int cmd_transform(const Args& a) {
  const Graph g = parse_graph6(a.graph6);
  Graph h;
  if (a.kind == "subdivide") {
    const auto ends = parse_vertex_list(a.edge);
    if (ends.size() != 2) throw Error(ErrorKind::NoSuchEdge, "--edge needs two vertices u,w");
    h = subdivide_edge(g, ends[0], ends[1]);
  } else if (a.kind == "split") {
    h = split_vertex_adjacent(g, split_spec_from(g, a.vertex, a.parts));
  } else if (a.kind == "split-na") {
    h = split_vertex_nonadjacent(g, split_spec_from(g, a.vertex, a.parts));
  } else if (a.kind == "expand") {
    ExpandSpec s{a.vertex, {}};
    for (const auto& p : a.parts) s.partitions.push_back(parse_vertex_list(p));
    h = expand_to_complete(g, s);
  } else {
    std::cerr << "unknown transform '" << a.kind << "'\n";
    return kExitUsage;
  }
  std::cout << to_graph6(h) << "\n";
  std::cout << verdict_line(rho_compare(h, g)) << "\n";
  return kExitOk;
}

int cmd_witness(const Args& a) {
  const Graph g = parse_graph6(a.graph6);
  const SplitSpec spec = split_spec_from(g, a.vertex, a.parts);
  const SpectralResult r = spectral_radius(g);
  const WitnessVector w = construct_split_witness(g, spec, r);
  std::cout << "split: " << describe(spec) << "\n";
  std::cout << "case: " << w.case_id << "\n";
  std::cout << "z_v: " << decimal(w.z_v) << "\n";
  std::cout << "sum_x: " << decimal(w.sum_x) << "\n";
  std::cout << "sum_y: " << decimal(w.sum_y) << "\n";
  std::cout << "rho_bound: " << w.rho_bound.get_str() << "\n";
  std::cout << "values:";
  for (const auto& x : w.values) std::cout << " " << decimal(x, 9);
  std::cout << "\nslack:";
  for (const auto& x : w.row_slack) std::cout << " " << decimal(x, 9);
  std::cout << "\nsound: " << (w.sound() ? "yes" : "no") << " (escalations " << w.escalations << ")\n";
  return w.sound() ? kExitOk : kExitViolation;
}

int cmd_verify(const Args& a) {
  CampaignConfig cfg;
  cfg.max_n = a.max_n;
  if (a.theorems != "all") {
    cfg.theorems.clear();
    std::stringstream ss(a.theorems);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto t = theorem_from_string(item);
      if (!t) {
        std::cerr << "unknown theorem '" << item << "'\n";
        return kExitUsage;
      }
      cfg.theorems.push_back(*t);
    }
  }
  cfg.random_samples = a.samples;
  cfg.random_n_min = a.n_min;
  cfg.random_n_max = a.n_max;
  cfg.expand_samples = a.expand_samples;
  cfg.expand_partitions = a.expand_partitions;
  cfg.seed = a.seed;
  if (a.exact_mode == "always") {
    cfg.exact_mode = ExactMode::Always;
  } else if (a.exact_mode != "on_overlap") {
    std::cerr << "exact mode must be 'always' or 'on_overlap'\n";
    return kExitUsage;
  }
  cfg.spectral.enclosure_width = parse_rational(a.width);
  cfg.jobs = a.jobs;

  const VerificationReport report = run_campaign(cfg);
  if (!a.out.empty()) {
    std::ofstream f(a.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << a.out << "\n";
      return kExitUsage;
    }
    f << report.serialize();
  }
  for (const auto& [t, tally] : report.theorems) {
    std::cout << to_string(t) << ": instances=" << tally.instances << " strict=" << tally.strict
              << " equality_exceptions=" << tally.equality_exceptions
              << " violations=" << tally.violations.size() << " errors=" << tally.errors.size();
    if (t == Theorem::SplitAdjacent) {
      std::cout << " cases=[" << tally.cases[0] << "," << tally.cases[1] << "," << tally.cases[2]
                << "," << tally.cases[3] << "]";
    }
    std::cout << "\n";
  }
  std::cout << "summary: instances=" << report.instances() << " violations=" << report.violations()
            << " equality_exceptions=" << report.equality_exceptions()
            << " errors=" << report.errors() << " wall=" << std::setprecision(2) << std::fixed
            << report.wall_seconds << "s " << (report.verified() ? "VERIFIED" : "VIOLATIONS FOUND")
            << "\n";
  return report.verified() ? kExitOk : kExitViolation;
}

int cmd_enumerate(const Args& a) {
  std::uint64_t count = 0;
  for_each_connected(a.enum_n, [&](const Graph& g, std::uint64_t) {
    ++count;
    if (!a.count_only) std::cout << to_graph6(g) << "\n";
  });
  if (a.count_only) std::cout << count << "\n";
  return kExitOk;
}

int cmd_family(const Args& a) {
  static const std::map<std::string, FamilyKind> kinds = {{"path", FamilyKind::Path},
                                                          {"cycle", FamilyKind::Cycle},
                                                          {"star", FamilyKind::Star},
                                                          {"complete", FamilyKind::Complete},
                                                          {"tilde-d", FamilyKind::TildeD}};
  const auto it = kinds.find(a.kind);
  if (it == kinds.end()) {
    std::cerr << "unknown family '" << a.kind << "'\n";
    return kExitUsage;
  }
  std::cout << to_graph6(make_family({it->second, a.param})) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral radius under graph subdivision, vertex splitting and clique expansion"};
  app.require_subcommand(1, 1);
  Args a;
  if (const char* env = std::getenv("GSPEC_JOBS")) {
    try {
      a.jobs = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }

  auto* rho = app.add_subcommand("rho", "Spectral radius with a certified enclosure");
  rho->add_option("graph6", a.graph6, "Graph in graph6 format")->required();
  rho->add_option("--width", a.width, "Enclosure width (p/q or decimal)");
  rho->add_flag("--exact", a.exact, "Also print the characteristic polynomial and root interval");

  auto* tr = app.add_subcommand("transform", "Apply a rewrite and compare spectral radii");
  tr->add_option("kind", a.kind, "subdivide | split | split-na | expand")->required();
  tr->add_option("graph6", a.graph6, "Graph in graph6 format")->required();
  tr->add_option("--vertex", a.vertex, "Vertex to split or expand");
  tr->add_option("--edge", a.edge, "Edge u,w to subdivide");
  tr->add_option("--part", a.parts,
                 "Neighbour list; once for split (x side), once per clique vertex for expand");

  auto* wit = app.add_subcommand("witness", "Build the test vector for an adjacent split");
  wit->add_option("graph6", a.graph6, "Graph in graph6 format")->required();
  wit->add_option("--vertex", a.vertex, "Vertex to split")->required();
  wit->add_option("--part", a.parts, "Neighbours joined to v1")->required();

  auto* ver = app.add_subcommand("verify", "Run a verification campaign");
  ver->add_option("--max-n", a.max_n, "Exhaustive sweep bound (<= 7)");
  ver->add_option("--theorems", a.theorems,
                  "all, or a comma list of subdivision,split_adjacent,split_nonadjacent,expand,"
                  "lemma_deg4,pf_monotone");
  ver->add_option("--samples", a.samples, "Random connected graphs to add");
  ver->add_option("--n-min", a.n_min, "Smallest random graph");
  ver->add_option("--n-max", a.n_max, "Largest random graph");
  ver->add_option("--expand-samples", a.expand_samples, "Random hub graphs for the K_3 expansion");
  ver->add_option("--expand-partitions", a.expand_partitions, "Partitions sampled per hub vertex");
  ver->add_option("--seed", a.seed, "Random seed");
  ver->add_option("--exact-mode", a.exact_mode, "always | on_overlap");
  ver->add_option("--width", a.width, "Enclosure width (p/q or decimal)");
  ver->add_option("--out", a.out, "Report file");
  ver->add_option("--jobs", a.jobs, "Worker threads (default $GSPEC_JOBS or 1)");

  auto* en = app.add_subcommand("enumerate", "List connected labelled graphs in graph6");
  en->add_option("n", a.enum_n, "Vertex count (1..7)")->required();
  en->add_flag("--count", a.count_only, "Print only the number of graphs");

  auto* fam = app.add_subcommand("family", "Print a named graph in graph6");
  fam->add_option("kind", a.kind, "path | cycle | star | complete | tilde-d")->required();
  fam->add_option("parameter", a.param, "Family parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rho) return cmd_rho(a);
    if (*tr) return cmd_transform(a);
    if (*wit) return cmd_witness(a);
    if (*ver) return cmd_verify(a);
    if (*en) return cmd_enumerate(a);
    if (*fam) return cmd_family(a);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
