#include "ddg/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <mutex>
#include <sstream>
#include <thread>

#include "ddg/cayley.hpp"
#include "ddg/constructions.hpp"

namespace ddg {

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0x6a09e667f3bcc909ull * (index + 1)));
  return SplitMix64(mixer.next());
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0)
    throw ArgumentError("empty range");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void SearchConfig::validate() const {
  if (budget < 1)
    throw ArgumentError("search budget must be at least 1");
  if (target_delta < 2)
    throw ArgumentError("target degree must be at least 2");
  if (target_diameter < 1)
    throw ArgumentError("target diameter must be at least 1");
  if (restarts < 1)
    throw ArgumentError("at least one restart is required");
}

std::string SearchLog::text() const {
  std::string out = header;
  out += '\n';
  for (const auto &e : entries) {
    out += std::to_string(e.eval_id);
    out += ' ';
    out += std::to_string(e.restart);
    out += ' ';
    out += std::to_string(e.move);
    out += ' ';
    out += e.objective_text;
    out += ' ';
    out += e.description;
    out += '\n';
  }
  return out;
}

namespace {

template <class Payload>
struct RestartOutcome {
  std::vector<LogEntry> entries;
  Payload best;
  Objective best_objective;
  std::uint32_t best_move = 0;
  bool hit_target = false;
};

bool reaches_target(const Objective &o, const SearchConfig &cfg) {
  return o.feasible && o.diameter <= cfg.target_diameter;
}

std::string config_header(const SearchConfig &cfg, const std::string &kind) {
  std::ostringstream h;
  h << "# ddgraph-search kind=" << kind << " algorithm=" << SplitMix64::kAlgorithmId
    << " seed=" << cfg.seed << " budget=" << cfg.budget
    << " target_delta=" << cfg.target_delta
    << " target_diameter=" << cfg.target_diameter << " restarts=" << cfg.restarts
    << " moves=" << cfg.neighborhood_moves
    << " stop_at_target=" << (cfg.stop_at_target ? 1 : 0);
  return h.str();
}

// Runs restarts (possibly in parallel) and merges them deterministically:
// log in restart order, best by objective then restart then move.
template <class Payload, class RunRestart>
std::pair<std::vector<RestartOutcome<Payload>>, std::size_t>
drive_restarts(const SearchConfig &cfg, RunRestart run) {
  const std::uint64_t per_restart = 1ull + cfg.neighborhood_moves;
  const std::uint64_t needed = (cfg.budget + per_restart - 1) / per_restart;
  const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(cfg.restarts, needed));
  std::vector<RestartOutcome<Payload>> outcomes(count);
  std::vector<char> done(count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{count};

  auto worker = [&] {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= count || (cfg.stop_at_target && r > first_hit.load()))
        return;
      const std::uint64_t allowed = std::min(per_restart, cfg.budget - r * per_restart);
      auto rng = SplitMix64::stream(cfg.seed, r);
      outcomes[r] = run(static_cast<std::uint32_t>(r), rng, allowed);
      done[r] = 1;
      if (outcomes[r].hit_target) {
        std::size_t cur = first_hit.load();
        while (r < cur && !first_hit.compare_exchange_weak(cur, r)) {
        }
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs ? cfg.jobs : std::thread::hardware_concurrency(),
                                                        static_cast<unsigned>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back(worker);
  }
  std::size_t used = count;
  if (cfg.stop_at_target && first_hit.load() < count)
    used = first_hit.load() + 1;
  outcomes.resize(used);
  return {std::move(outcomes), used};
}

template <class Payload, class Candidate>
Candidate merge(std::vector<RestartOutcome<Payload>> &outcomes, SearchLog &log) {
  Candidate best;
  bool have = false;
  std::uint64_t eval_id = 0;
  for (std::uint32_t r = 0; r < outcomes.size(); ++r) {
    auto &o = outcomes[r];
    for (auto &e : o.entries) {
      e.eval_id = eval_id++;
      log.entries.push_back(std::move(e));
    }
    if (!have || o.best_objective.better_than(best.objective)) {
      best.objective = o.best_objective;
      best.restart = r;
      best.move = o.best_move;
      if constexpr (std::is_same_v<Payload, std::vector<SdElement>>)
        best.generators = o.best;
      else
        best.pairs = o.best;
      have = true;
    }
  }
  if (!have || !best.objective.feasible)
    throw NoFeasibleCandidate(log);
  return best;
}

// Generic hill climb: one initial sample, then `allowed - 1` neighbour
// proposals accepted when not worse.
template <class Payload, class Sample, class Mutate, class Evaluate, class Describe>
RestartOutcome<Payload> hill_climb(const SearchConfig &cfg, std::uint32_t restart,
                                   std::uint64_t allowed, Sample sample, Mutate mutate,
                                   Evaluate evaluate, Describe describe) {
  RestartOutcome<Payload> out;
  Payload current = sample();
  Objective current_obj = evaluate(current);
  auto record = [&](std::uint32_t move, const Payload &p, const Objective &obj) {
    auto [text, desc] = describe(p, obj);
    out.entries.push_back({0, restart, move, obj, std::move(text), std::move(desc)});
  };
  record(0, current, current_obj);
  out.best = current;
  out.best_objective = current_obj;
  out.hit_target = reaches_target(current_obj, cfg);
  for (std::uint32_t move = 1; move < allowed; ++move) {
    if (cfg.stop_at_target && out.hit_target)
      break;
    Payload proposal = mutate(current);
    Objective obj = evaluate(proposal);
    record(move, proposal, obj);
    if (!current_obj.better_than(obj)) {
      current = std::move(proposal);
      current_obj = obj;
    }
    if (obj.better_than(out.best_objective)) {
      out.best = current;
      out.best_objective = obj;
      out.best_move = move;
    }
    out.hit_target = out.hit_target || reaches_target(obj, cfg);
  }
  return out;
}

// Tracks the closure of a generator list as a sorted index set.
struct Closure {
  const SemidirectGroup *group;
  std::vector<Element> members;

  bool contains(Element e) const { return std::binary_search(members.begin(), members.end(), e); }
  void insert(Element e) { members.insert(std::upper_bound(members.begin(), members.end(), e), e); }
  void add(Element e) {
    insert(e);
    const Element i = group->inverse(e);
    if (i != e)
      insert(i);
  }
};

} // namespace

// ---------------------------------------------------------------------------

std::string describe_generators(std::span<const SdElement> generators) {
  std::string out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i)
      out += ';';
    out += std::to_string(generators[i].x) + "," + std::to_string(generators[i].y);
  }
  return out;
}

std::vector<SdElement> parse_generator_description(std::string_view text) {
  std::vector<SdElement> out;
  while (!text.empty()) {
    const auto cut = text.find(';');
    out.push_back(parse_sd_element(text.substr(0, cut)));
    if (cut == std::string_view::npos)
      break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

std::string objective_text_generators(const Objective &o) {
  if (o.feasible)
    return "d=" + std::to_string(o.diameter) + ",sum=" + std::to_string(o.tiebreak);
  return "infeasible,reached=" + std::to_string(o.reached);
}

Objective evaluate_generators(const SemidirectGroup &group,
                              std::span<const SdElement> generators,
                              std::uint32_t target_delta) {
  Objective o;
  const auto idx = encode_generators(group, generators);
  const auto conn = close_connection_set(group, idx);
  const auto bfs = cayley_bfs(group, conn);
  o.reached = bfs.reached;
  o.feasible = conn.degree() == target_delta && bfs.reached == group.order();
  if (o.feasible) {
    o.diameter = bfs.diameter;
    o.tiebreak = bfs.distance_sum();
  }
  return o;
}

GeneratorSearchResult search_generators(const SemidirectGroup &group, const SearchConfig &cfg) {
  cfg.validate();
  const std::uint64_t n = group.order();
  if (n < 2)
    throw ArgumentError("group must have at least two elements");

  std::vector<Element> involutions;
  std::uint64_t non_involutions = 0;
  for (Element e = 1; e < n; ++e) {
    if (group.inverse(e) == e)
      involutions.push_back(e);
    else
      ++non_involutions;
  }
  if (cfg.target_delta % 2 == 1 && involutions.empty())
    throw ArgumentError("odd target degree needs an involution; group has none");
  if (cfg.target_delta > involutions.size() + non_involutions)
    throw ArgumentError("target degree exceeds the number of non-identity elements");

  constexpr int kMaxTries = 100000;
  // Random element of the requested kind outside the closure.
  auto draw = [&](SplitMix64 &rng, const Closure &cl, bool want_involution) -> Element {
    for (int t = 0; t < kMaxTries; ++t) {
      Element e = want_involution
                      ? involutions[rng.below(involutions.size())]
                      : static_cast<Element>(1 + rng.below(n - 1));
      if ((group.inverse(e) == e) != want_involution || cl.contains(e))
        continue;
      return e;
    }
    throw ArgumentError("cannot draw a fresh generator; target degree too large for this group");
  };
  // Chooses involution vs pair so that the remaining need stays reachable.
  auto want_involution = [&](SplitMix64 &rng, std::uint32_t need) {
    if (need == 1)
      return true;
    if (involutions.empty() || non_involutions == 0)
      return non_involutions == 0;
    const std::uint64_t pick = rng.below(involutions.size() + non_involutions);
    return pick < involutions.size();
  };

  auto run = [&](std::uint32_t restart, SplitMix64 &rng, std::uint64_t allowed) {
    auto sample = [&] {
      Closure cl{&group, {}};
      std::vector<SdElement> gens;
      while (cl.members.size() < cfg.target_delta) {
        const auto need = static_cast<std::uint32_t>(cfg.target_delta - cl.members.size());
        const Element e = draw(rng, cl, want_involution(rng, need));
        cl.add(e);
        gens.push_back(group.decode(e));
      }
      return gens;
    };
    auto mutate = [&](const std::vector<SdElement> &gens) {
      auto out = gens;
      const std::size_t i = rng.below(out.size());
      const Element old = group.encode(out[i]);
      Closure cl{&group, {}};
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i)
          cl.add(group.encode(out[j]));
      out[i] = group.decode(draw(rng, cl, group.inverse(old) == old));
      return out;
    };
    auto evaluate = [&](const std::vector<SdElement> &gens) {
      return evaluate_generators(group, gens, cfg.target_delta);
    };
    auto describe = [](const std::vector<SdElement> &gens, const Objective &o) {
      return std::pair{objective_text_generators(o), describe_generators(gens)};
    };
    return hill_climb<std::vector<SdElement>>(cfg, restart, allowed, sample, mutate, evaluate,
                                              describe);
  };

  auto [outcomes, used] = drive_restarts<std::vector<SdElement>>(cfg, run);
  (void)used;
  GeneratorSearchResult result;
  const auto &s = group.spec();
  result.log.header = config_header(cfg, "generators") + " spec=" + std::to_string(s.M) + "," +
                      std::to_string(s.A) + "," + std::to_string(s.N);
  result.best = merge<std::vector<SdElement>, GeneratorCandidate>(outcomes, result.log);
  return result;
}

// ---------------------------------------------------------------------------

std::string describe_pairing(const EdgePairs &pairs) {
  std::string out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(pairs[i].first) + "-" + std::to_string(pairs[i].second);
  }
  return out;
}

EdgePairs parse_pairing_description(std::string_view text) {
  EdgePairs out;
  while (!text.empty()) {
    const auto cut = text.find(',');
    const auto item = text.substr(0, cut);
    const auto dash = item.find('-');
    std::uint32_t a = 0, b = 0;
    if (dash == std::string_view::npos ||
        std::from_chars(item.data(), item.data() + dash, a).ec != std::errc() ||
        std::from_chars(item.data() + dash + 1, item.data() + item.size(), b).ec != std::errc())
      throw ParseError("bad pair '" + std::string(item) + "'", 0);
    out.emplace_back(a, b);
    if (cut == std::string_view::npos)
      break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

std::string objective_text_pairing(const Objective &o) {
  if (!o.feasible)
    return "disconnected";
  const std::uint64_t g = Objective::kGirthCeiling - o.tiebreak;
  return "d=" + std::to_string(o.diameter) + ",girth=" + (g ? std::to_string(g) : "inf");
}

Objective evaluate_pairing(const CompactGraph &host, const EdgePairs &pairs) {
  const auto pm = validate_pairing(host, pairs);
  const auto g = edge_pairing_graph(host, pm);
  const MetricOptions single{1};
  Objective o;
  auto first = bfs_eccentricity(g, 0);
  o.reached = first.reached;
  if (first.reached != g.order())
    return o;
  o.feasible = true;
  o.diameter = diameter(g, false, single);
  const auto gi = girth(g, single);
  o.tiebreak = Objective::kGirthCeiling - (gi ? *gi : 0);
  return o;
}

PairingSearchResult search_pairing(const CompactGraph &host, const SearchConfig &cfg) {
  cfg.validate();
  const std::size_t m = host.size();
  if (m % 2 != 0 || m == 0)
    throw ArgumentError("pairing search needs a positive even edge count (host has " +
                        std::to_string(m) + ")");
  if (host.order() > 0 && bfs_eccentricity(host, 0).reached != host.order())
    throw ArgumentError("pairing search needs a connected host");

  auto canonical = [](EdgePairs p) {
    for (auto &[a, b] : p)
      if (a > b)
        std::swap(a, b);
    std::sort(p.begin(), p.end());
    return p;
  };

  auto run = [&](std::uint32_t restart, SplitMix64 &rng, std::uint64_t allowed) {
    auto sample = [&] {
      std::vector<std::uint32_t> ids(m);
      for (std::uint32_t i = 0; i < m; ++i)
        ids[i] = i;
      for (std::size_t i = m - 1; i > 0; --i)
        std::swap(ids[i], ids[rng.below(i + 1)]);
      EdgePairs p;
      for (std::size_t i = 0; i < m; i += 2)
        p.emplace_back(ids[i], ids[i + 1]);
      return canonical(std::move(p));
    };
    auto mutate = [&](const EdgePairs &p) {
      auto out = p;
      if (out.size() < 2)
        return out;
      const std::size_t i = rng.below(out.size());
      std::size_t j = rng.below(out.size() - 1);
      if (j >= i)
        ++j;
      auto [a, b] = out[i];
      auto [c, d] = out[j];
      if (rng.below(2) == 0) {
        out[i] = {a, c};
        out[j] = {b, d};
      } else {
        out[i] = {a, d};
        out[j] = {b, c};
      }
      return canonical(std::move(out));
    };
    auto evaluate = [&](const EdgePairs &p) { return evaluate_pairing(host, p); };
    auto describe = [](const EdgePairs &p, const Objective &o) {
      return std::pair{objective_text_pairing(o), describe_pairing(p)};
    };
    return hill_climb<EdgePairs>(cfg, restart, allowed, sample, mutate, evaluate, describe);
  };

  auto [outcomes, used] = drive_restarts<EdgePairs>(cfg, run);
  (void)used;
  PairingSearchResult result;
  result.log.header = config_header(cfg, "pairing") + " host_order=" +
                      std::to_string(host.order()) + " host_edges=" + std::to_string(m);
  result.best = merge<EdgePairs, PairingCandidate>(outcomes, result.log);
  return result;
}

} // namespace ddg
