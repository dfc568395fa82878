#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "gspec/enumerate.hpp"
#include "gspec/error.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph6.hpp"
#include "gspec/spectral.hpp"
#include "gspec/transforms.hpp"

namespace gspec {

enum class Theorem { Subdivision, SplitAdjacent, SplitNonadjacent, Expand, LemmaDeg4, PfMonotone };

inline constexpr std::array<Theorem, 6> kAllTheorems = {
    Theorem::Subdivision, Theorem::SplitAdjacent, Theorem::SplitNonadjacent,
    Theorem::Expand,      Theorem::LemmaDeg4,     Theorem::PfMonotone};

inline std::string to_string(Theorem t) {
  switch (t) {
    case Theorem::Subdivision: return "subdivision";
    case Theorem::SplitAdjacent: return "split_adjacent";
    case Theorem::SplitNonadjacent: return "split_nonadjacent";
    case Theorem::Expand: return "expand";
    case Theorem::LemmaDeg4: return "lemma_deg4";
    case Theorem::PfMonotone: return "pf_monotone";
  }
  return "?";
}

inline std::optional<Theorem> theorem_from_string(std::string_view s) {
  for (Theorem t : kAllTheorems) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

enum class ExactMode { Always, OnOverlap };

inline std::string to_string(ExactMode m) { return m == ExactMode::Always ? "always" : "on_overlap"; }

struct CampaignConfig {
  /// Exhaustive sweep over connected labelled graphs with 1..max_n vertices
  /// (0 disables it).
  std::size_t max_n = 6;
  std::vector<Theorem> theorems{kAllTheorems.begin(), kAllTheorems.end()};
  /// Extra random connected graphs, checked against every enabled theorem.
  std::size_t random_samples = 0;
  std::size_t random_n_min = 7;
  std::size_t random_n_max = 10;
  EdgeProbability random_edge_prob{1, 2};
  /// Random graphs with a vertex of degree >= 9 for the K_3 expansion.
  std::size_t expand_samples = 0;
  std::size_t expand_n_min = 10;
  std::size_t expand_n_max = 14;
  std::size_t expand_partitions = 8;
  std::uint64_t seed = 0;
  ExactMode exact_mode = ExactMode::OnOverlap;
  std::size_t jobs = 1;
  SpectralOptions spectral;

  bool enabled(Theorem t) const { return std::find(theorems.begin(), theorems.end(), t) != theorems.end(); }

  void validate() const {
    if (max_n > kMaxEnumerationOrder) {
      throw Error(ErrorKind::SizeCap, "max_n=" + std::to_string(max_n) + " exceeds exhaustive cap " +
                                          std::to_string(kMaxEnumerationOrder));
    }
    if (random_samples > 0) {
      if (random_n_min < 2 || random_n_min > random_n_max) {
        throw Error(ErrorKind::ParameterOutOfRange, "bad random n range");
      }
      if (random_n_max > 16) throw Error(ErrorKind::SizeCap, "random graphs capped at n=16");
    }
    if (expand_samples > 0) {
      if (expand_n_min < 10 || expand_n_min > expand_n_max) {
        throw Error(ErrorKind::ParameterOutOfRange, "expansion samples need 10 <= n_min <= n_max");
      }
      if (expand_n_max > 14) throw Error(ErrorKind::SizeCap, "expansion samples capped at n=14");
    }
    if (random_edge_prob.num == 0 || random_edge_prob.num >= random_edge_prob.den) {
      throw Error(ErrorKind::ParameterOutOfRange, "edge probability must lie strictly in (0, 1)");
    }
  }
};

/// Outcome counts and reproduction records for one theorem.
struct TheoremTally {
  std::size_t graphs = 0;
  std::size_t instances = 0;
  std::size_t strict = 0;
  std::size_t equality_exceptions = 0;
  std::map<std::string, std::size_t> exception_families;
  std::vector<nlohmann::json> violations;
  std::vector<nlohmann::json> errors;
  // split_adjacent only
  std::size_t witnesses = 0;
  std::size_t witnesses_sound = 0;
  std::size_t witness_escalations = 0;
  std::array<std::size_t, 4> cases{};
  /// Cases seen on K_{1,4} itself, where rho(G_v) = rho(G) and no strict
  /// slack is expected.
  std::array<std::size_t, 4> boundary_cases{};
  // expand only
  std::size_t equivalence_checks = 0;
  std::vector<nlohmann::json> excluded_outcomes;

  void merge(TheoremTally&& o) {
    graphs += o.graphs;
    instances += o.instances;
    strict += o.strict;
    equality_exceptions += o.equality_exceptions;
    for (const auto& [k, v] : o.exception_families) exception_families[k] += v;
    for (auto& v : o.violations) violations.push_back(std::move(v));
    for (auto& e : o.errors) errors.push_back(std::move(e));
    witnesses += o.witnesses;
    witnesses_sound += o.witnesses_sound;
    witness_escalations += o.witness_escalations;
    for (std::size_t i = 0; i < cases.size(); ++i) {
      cases[i] += o.cases[i];
      boundary_cases[i] += o.boundary_cases[i];
    }
    equivalence_checks += o.equivalence_checks;
    for (auto& e : o.excluded_outcomes) excluded_outcomes.push_back(std::move(e));
  }

  nlohmann::json to_json(Theorem t) const {
    nlohmann::json j;
    j["graphs"] = graphs;
    j["instances"] = instances;
    j["strict_decrease"] = strict;
    j["equality_exceptions"] = equality_exceptions;
    j["exception_families"] = exception_families;
    j["violations"] = violations;
    j["errors"] = errors;
    j["verified"] = violations.empty();
    if (t == Theorem::SplitAdjacent) {
      j["witness"] = {{"checked", witnesses},
                      {"sound", witnesses_sound},
                      {"escalations", witness_escalations},
                      {"cases",
                       {{"1", cases[0]}, {"2", cases[1]}, {"3", cases[2]}, {"4", cases[3]}}},
                      {"boundary_cases",
                       {{"1", boundary_cases[0]},
                        {"2", boundary_cases[1]},
                        {"3", boundary_cases[2]},
                        {"4", boundary_cases[3]}}}};
    }
    if (t == Theorem::Expand) {
      j["equivalence_checks"] = equivalence_checks;
      j["excluded_outcomes"] = excluded_outcomes;
    }
    return j;
  }
};

struct VerificationReport {
  CampaignConfig config;
  std::map<Theorem, TheoremTally> theorems;
  /// Not serialised: the report file must be reproducible byte for byte.
  double wall_seconds = 0.0;

  template <typename F>
  std::size_t sum(F f) const {
    std::size_t s = 0;
    for (const auto& [t, tally] : theorems) s += f(tally);
    return s;
  }
  std::size_t instances() const { return sum([](const TheoremTally& t) { return t.instances; }); }
  std::size_t violations() const { return sum([](const TheoremTally& t) { return t.violations.size(); }); }
  std::size_t errors() const { return sum([](const TheoremTally& t) { return t.errors.size(); }); }
  std::size_t equality_exceptions() const {
    return sum([](const TheoremTally& t) { return t.equality_exceptions; });
  }
  bool verified() const { return violations() == 0; }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "gspec-verification-report";
    j["version"] = 1;
    nlohmann::json cfg;
    cfg["max_n"] = config.max_n;
    std::vector<std::string> names;
    for (Theorem t : config.theorems) names.push_back(to_string(t));
    cfg["theorems"] = names;
    cfg["random_samples"] = config.random_samples;
    cfg["random_n_range"] = {config.random_n_min, config.random_n_max};
    cfg["random_edge_prob"] = std::to_string(config.random_edge_prob.num) + "/" +
                              std::to_string(config.random_edge_prob.den);
    cfg["expand_samples"] = config.expand_samples;
    cfg["expand_n_range"] = {config.expand_n_min, config.expand_n_max};
    cfg["expand_partitions"] = config.expand_partitions;
    cfg["seed"] = config.seed;
    cfg["exact_mode"] = to_string(config.exact_mode);
    cfg["enclosure_width"] = config.spectral.enclosure_width.get_str();
    j["config"] = cfg;
    nlohmann::json th = nlohmann::json::object();
    for (const auto& [t, tally] : theorems) th[to_string(t)] = tally.to_json(t);
    j["theorems"] = th;
    j["summary"] = {{"instances", instances()},
                    {"violations", violations()},
                    {"errors", errors()},
                    {"equality_exceptions", equality_exceptions()},
                    {"verified", verified()}};
    return j;
  }

  std::string serialize() const { return to_json().dump(2) + "\n"; }
};

namespace detail {

inline nlohmann::json enclosure_json(const Enclosure& e) {
  return nlohmann::json::array({e.lo.get_str(), e.hi.get_str()});
}

using TallyMap = std::map<Theorem, TheoremTally>;

/// Applies every enabled theorem to one graph.
class GraphChecker {
 public:
  explicit GraphChecker(const CampaignConfig& cfg)
      : cfg_(cfg), star4_(make_family({FamilyKind::Star, 4})), star4_rho_(spectral_radius(star4_, cfg.spectral)) {
    cmp_.spectral = cfg.spectral;
    cmp_.force_exact = cfg.exact_mode == ExactMode::Always;
  }

  void check(const Graph& g, TallyMap& out) const {
    const std::string g6 = to_graph6(g);
    SpectralResult r;
    try {
      r = spectral_radius(g, cfg_.spectral);
    } catch (const Error& e) {
      for (Theorem t : cfg_.theorems) {
        if (t != Theorem::Expand) out[t].errors.push_back({{"graph", g6}, {"error", e.what()}});
      }
      return;
    }
    const auto family = recognize(g);
    if (cfg_.enabled(Theorem::Subdivision)) subdivision(g, g6, r, family, out[Theorem::Subdivision]);
    if (cfg_.enabled(Theorem::SplitAdjacent) || cfg_.enabled(Theorem::Expand)) {
      split_adjacent(g, g6, r, family, out);
    }
    if (cfg_.enabled(Theorem::SplitNonadjacent)) {
      split_nonadjacent(g, g6, r, out[Theorem::SplitNonadjacent]);
    }
    if (cfg_.enabled(Theorem::LemmaDeg4)) lemma_deg4(g, g6, r, family, out[Theorem::LemmaDeg4]);
    if (cfg_.enabled(Theorem::PfMonotone)) pf_monotone(g, g6, r, out[Theorem::PfMonotone]);
  }

  /// K_3 expansion on a graph with a vertex of degree >= 9.
  void expand_sampled(const Graph& g, Rng& rng, TheoremTally& t) const {
    const std::string g6 = to_graph6(g);
    const auto family = recognize(g);
    const bool excluded = family && family->kind == FamilyKind::Star && family->parameter == 9;
    ++t.graphs;
    SpectralResult r;
    try {
      r = spectral_radius(g, cfg_.spectral);
    } catch (const Error& e) {
      t.errors.push_back({{"graph", g6}, {"error", e.what()}});
      return;
    }
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 9) continue;
      for (std::size_t k = 0; k < cfg_.expand_partitions; ++k) {
        const ExpandSpec spec = random_expand_spec(g, v, 3, 3, rng);
        expand_instance(g, g6, r, spec, excluded, t);
      }
    }
  }

  void expand_instance(const Graph& g, const std::string& g6, const SpectralResult& r,
                       const ExpandSpec& spec, bool excluded, TheoremTally& t) const {
    try {
      const Graph h = expand_to_complete(g, spec);
      const SpectralResult rh = spectral_radius(h, cfg_.spectral);
      const RhoOrdering cmp = rho_compare(h, rh, g, r, cmp_);
      if (excluded) {
        t.excluded_outcomes.push_back({{"graph", g6},
                                       {"spec", describe(spec)},
                                       {"result", to_graph6(h)},
                                       {"relation", to_string(cmp.relation)},
                                       {"certificate", to_string(cmp.certificate)}});
        return;
      }
      ++t.instances;
      if (cmp.relation == Ordering::Less) {
        ++t.strict;
      } else {
        t.violations.push_back(violation(g6, describe(spec), h, r, rh, cmp));
      }
    } catch (const Error& e) {
      t.errors.push_back({{"graph", g6}, {"spec", describe(spec)}, {"error", e.what()}});
    }
  }

 private:
  static nlohmann::json violation(const std::string& g6, const std::string& spec, const Graph& h,
                                  const SpectralResult& r, const SpectralResult& rh,
                                  const RhoOrdering& cmp) {
    return {{"graph", g6},
            {"spec", spec},
            {"result", to_graph6(h)},
            {"relation", to_string(cmp.relation)},
            {"certificate", to_string(cmp.certificate)},
            {"certificate_detail", cmp.detail},
            {"enclosure_input", enclosure_json(r.enclosure)},
            {"enclosure_result", enclosure_json(rh.enclosure)}};
  }

  static bool is_family(const std::optional<NamedFamily>& f, FamilyKind kind) {
    return f && f->kind == kind;
  }

  void subdivision(const Graph& g, const std::string& g6, const SpectralResult& r,
                   const std::optional<NamedFamily>& family, TheoremTally& t) const {
    ++t.graphs;
    for (const auto& [u, w] : internal_path_edges(g)) {
      const std::string spec = "edge=(" + std::to_string(u) + "," + std::to_string(w) + ")";
      try {
        const Graph h = subdivide_edge(g, u, w);
        const SpectralResult rh = spectral_radius(h, cfg_.spectral);
        const RhoOrdering cmp = rho_compare(h, rh, g, r, cmp_);
        ++t.instances;
        if (cmp.relation == Ordering::Less) {
          ++t.strict;
        } else if (cmp.relation == Ordering::Equal && is_family(family, FamilyKind::TildeD)) {
          ++t.equality_exceptions;
          ++t.exception_families[to_string(*family)];
        } else {
          t.violations.push_back(violation(g6, spec, h, r, rh, cmp));
        }
      } catch (const Error& e) {
        t.errors.push_back({{"graph", g6}, {"spec", spec}, {"error", e.what()}});
      }
    }
  }

  void split_adjacent(const Graph& g, const std::string& g6, const SpectralResult& r,
                      const std::optional<NamedFamily>& family, TallyMap& out) const {
    const bool do_split = cfg_.enabled(Theorem::SplitAdjacent);
    const bool do_expand = cfg_.enabled(Theorem::Expand);
    TheoremTally* ts = do_split ? &out[Theorem::SplitAdjacent] : nullptr;
    TheoremTally* te = do_expand ? &out[Theorem::Expand] : nullptr;
    if (ts) ++ts->graphs;
    if (te) ++te->graphs;
    const bool is_k14 = is_family(family, FamilyKind::Star) && family->parameter == 4;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 4) continue;
      for (const SplitSpec& spec : neighbor_bipartitions(g, v, 2)) {
        const std::string text = describe(spec);
        try {
          const Graph h = split_vertex_adjacent(g, spec);
          const SpectralResult rh = spectral_radius(h, cfg_.spectral);
          const RhoOrdering cmp = rho_compare(h, rh, g, r, cmp_);
          const auto hf = recognize(h);
          const bool exception = cmp.relation == Ordering::Equal && is_k14 &&
                                 hf == NamedFamily{FamilyKind::TildeD, 5};
          for (TheoremTally* t : {ts, te}) {
            if (!t) continue;
            if (t == te) {
              ++t->equivalence_checks;
              const Graph e = expand_to_complete(g, ExpandSpec{v, {spec.x_side, spec.y_side}});
              if (!(e == h)) {
                auto rec = violation(g6, text, e, r, rh, cmp);
                rec["reason"] = "K_2 expansion differs from the adjacent split";
                t->violations.push_back(std::move(rec));
                continue;
              }
            }
            ++t->instances;
            if (cmp.relation == Ordering::Less) {
              ++t->strict;
            } else if (exception) {
              ++t->equality_exceptions;
              ++t->exception_families["Star(4)"];
            } else {
              t->violations.push_back(violation(g6, text, h, r, rh, cmp));
            }
          }
          if (ts && is_k14) {
            const WitnessVector w = construct_split_witness(g, spec, r, {cfg_.spectral, 0});
            ++ts->boundary_cases[static_cast<std::size_t>(w.case_id - 1)];
          } else if (ts) {
            const WitnessVector w = construct_split_witness(g, spec, r, {cfg_.spectral});
            ++ts->witnesses;
            ts->witness_escalations += w.escalations;
            ++ts->cases[static_cast<std::size_t>(w.case_id - 1)];
            if (w.sound()) {
              ++ts->witnesses_sound;
            } else {
              auto rec = violation(g6, text, h, r, rh, cmp);
              rec["reason"] = "witness slack check failed";
              rec["case"] = w.case_id;
              ts->violations.push_back(std::move(rec));
            }
          }
        } catch (const Error& e) {
          for (TheoremTally* t : {ts, te}) {
            if (t) t->errors.push_back({{"graph", g6}, {"spec", text}, {"error", e.what()}});
          }
        }
      }
    }
  }

  void split_nonadjacent(const Graph& g, const std::string& g6, const SpectralResult& r,
                         TheoremTally& t) const {
    ++t.graphs;
    for (VertexId v = 0; v < g.order(); ++v) {
      if (g.degree(v) < 2) continue;
      for (const SplitSpec& spec : neighbor_bipartitions(g, v, 1)) {
        const std::string text = describe(spec);
        try {
          const Graph h = split_vertex_nonadjacent(g, spec);
          const SpectralResult rh = spectral_radius(h, cfg_.spectral);
          const RhoOrdering cmp = rho_compare(h, rh, g, r, cmp_);
          ++t.instances;
          if (cmp.relation == Ordering::Less) {
            ++t.strict;
          } else {
            t.violations.push_back(violation(g6, text, h, r, rh, cmp));
          }
        } catch (const Error& e) {
          t.errors.push_back({{"graph", g6}, {"spec", text}, {"error", e.what()}});
        }
      }
    }
  }

  void lemma_deg4(const Graph& g, const std::string& g6, const SpectralResult& r,
                  const std::optional<NamedFamily>& family, TheoremTally& t) const {
    ++t.graphs;
    if (g.max_degree() < 4) return;
    try {
      ++t.instances;
      const RhoOrdering cmp = rho_compare(g, r, star4_, star4_rho_, cmp_);
      const bool is_k14 = is_family(family, FamilyKind::Star) && family->parameter == 4;
      const bool lower_ok = r.enclosure.lo >= 2 - cfg_.spectral.enclosure_width;
      if (is_k14 && cmp.relation == Ordering::Equal && lower_ok) {
        ++t.equality_exceptions;
        ++t.exception_families["Star(4)"];
      } else if (!is_k14 && cmp.relation == Ordering::Greater && lower_ok) {
        ++t.strict;
      } else {
        auto rec = violation(g6, "compare with K_{1,4}", star4_, r, star4_rho_, cmp);
        if (!lower_ok) rec["reason"] = "enclosure lower bound below 2 - width";
        t.violations.push_back(std::move(rec));
      }
    } catch (const Error& e) {
      t.errors.push_back({{"graph", g6}, {"error", e.what()}});
    }
  }

  void pf_monotone(const Graph& g, const std::string& g6, const SpectralResult& r,
                   TheoremTally& t) const {
    ++t.graphs;
    const auto base = g.edges();
    for (VertexId j = 1; j < g.order(); ++j) {
      for (VertexId i = 0; i < j; ++i) {
        if (g.adjacent(i, j)) continue;
        const std::string text = "add=(" + std::to_string(i) + "," + std::to_string(j) + ")";
        try {
          auto e = base;
          e.emplace_back(i, j);
          const Graph h(g.order(), e);
          const SpectralResult rh = spectral_radius(h, cfg_.spectral);
          const RhoOrdering cmp = rho_compare(h, rh, g, r, cmp_);
          ++t.instances;
          if (cmp.relation == Ordering::Greater) {
            ++t.strict;
          } else {
            t.violations.push_back(violation(g6, text, h, r, rh, cmp));
          }
        } catch (const Error& err) {
          t.errors.push_back({{"graph", g6}, {"spec", text}, {"error", err.what()}});
        }
      }
    }
  }

  const CampaignConfig& cfg_;
  CompareOptions cmp_;
  Graph star4_;
  SpectralResult star4_rho_;
};

struct WorkUnit {
  enum class Kind { Exhaustive, Random, ExpandRandom, ExpandExcluded } kind;
  std::size_t n = 0;
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::uint64_t index = 0;
};

inline constexpr std::uint64_t kMasksPerUnit = 512;
inline constexpr std::uint64_t kRandomStream = 1;
inline constexpr std::uint64_t kExpandStream = 2;

}  // namespace detail

/// Runs every enabled theorem over the exhaustive universe and the random
/// samples. Work is split into units processed by cfg.jobs threads; unit
/// results are merged in unit order, so the report does not depend on the
/// thread count.
inline VerificationReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  using detail::WorkUnit;

  std::vector<WorkUnit> units;
  for (std::size_t n = 1; n <= cfg.max_n; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t first = 0; first < total; first += detail::kMasksPerUnit) {
      units.push_back({WorkUnit::Kind::Exhaustive, n, first,
                       std::min(total, first + detail::kMasksPerUnit), 0});
    }
  }
  for (std::uint64_t i = 0; i < cfg.random_samples; ++i) {
    units.push_back({WorkUnit::Kind::Random, 0, 0, 0, i});
  }
  if (cfg.enabled(Theorem::Expand)) {
    for (std::uint64_t i = 0; i < cfg.expand_samples; ++i) {
      units.push_back({WorkUnit::Kind::ExpandRandom, 0, 0, 0, i});
    }
    units.push_back({WorkUnit::Kind::ExpandExcluded, 0, 0, 0, 0});
  }

  const detail::GraphChecker checker(cfg);
  std::vector<detail::TallyMap> results(units.size());

  auto process_unit = [&](std::size_t idx) {
    const WorkUnit& u = units[idx];
    detail::TallyMap& out = results[idx];
    switch (u.kind) {
      case WorkUnit::Kind::Exhaustive:
        for_each_connected(u.n, u.first, u.last,
                           [&](const Graph& g, std::uint64_t) { checker.check(g, out); });
        break;
      case WorkUnit::Kind::Random: {
        Rng rng(mix_seed(cfg.seed, detail::kRandomStream, u.index));
        const auto n = static_cast<std::size_t>(rng.between(cfg.random_n_min, cfg.random_n_max));
        checker.check(random_connected_graph(n, cfg.random_edge_prob, rng), out);
        break;
      }
      case WorkUnit::Kind::ExpandRandom: {
        Rng rng(mix_seed(cfg.seed, detail::kExpandStream, u.index));
        const auto n = static_cast<std::size_t>(rng.between(cfg.expand_n_min, cfg.expand_n_max));
        const EdgeProbability p{rng.between(1, 4), 10};
        const Graph g = random_hub_graph(n, 9, p, rng);
        checker.expand_sampled(g, rng, out[Theorem::Expand]);
        break;
      }
      case WorkUnit::Kind::ExpandExcluded: {
        const Graph star = make_family({FamilyKind::Star, 9});
        const SpectralResult r = spectral_radius(star, cfg.spectral);
        TheoremTally& t = out[Theorem::Expand];
        ++t.graphs;
        checker.expand_instance(star, to_graph6(star), r, ExpandSpec{0, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}},
                                true, t);
        break;
      }
    }
  };

  std::vector<std::exception_ptr> failures(units.size());
  auto process = [&](std::size_t idx) {
    try {
      process_unit(idx);
    } catch (const Error& e) {
      // Sampling failures (RejectionCap and the like) are per-unit errors.
      for (Theorem t : cfg.theorems) {
        results[idx][t].errors.push_back({{"unit", idx}, {"error", e.what()}});
      }
    } catch (...) {
      failures[idx] = std::current_exception();
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, units.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < units.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < units.size(); i = next++) process(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  VerificationReport report;
  report.config = cfg;
  for (Theorem t : cfg.theorems) report.theorems[t];
  for (auto& partial : results) {
    for (auto& [t, tally] : partial) report.theorems[t].merge(std::move(tally));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace gspec
