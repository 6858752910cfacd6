#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ddg/error.hpp"
#include "ddg/graph.hpp"
#include "ddg/groups.hpp"
#include "ddg/metrics.hpp"

namespace ddg {

/// SplitMix64 generator. Streams for parallel restarts are derived from
/// (seed, index) so results never depend on thread scheduling.
class SplitMix64 {
public:
  static constexpr const char *kAlgorithmId = "splitmix64";

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream number `index` of `seed`.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's method).
  std::uint64_t below(std::uint64_t bound);

private:
  std::uint64_t state_;
};

struct SearchConfig {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;     // total candidate evaluations
  std::uint32_t target_delta = 3;
  std::uint32_t target_diameter = 1;
  std::uint32_t restarts = 1;
  std::uint32_t neighborhood_moves = 100; // local moves per restart
  unsigned jobs = 1;                      // restarts evaluated in parallel
  bool stop_at_target = true;             // end at the first restart reaching the target

  void validate() const;
};

/// Lexicographic objective: feasible first, then smaller diameter, then
/// smaller tiebreak. For generator search the tiebreak is the sum of
/// distances from the identity; for pairing search it is kGirthCeiling - girth.
struct Objective {
  static constexpr std::uint64_t kGirthCeiling = 1u << 20;

  bool feasible = false;
  Distance diameter = kUnreached;
  std::uint64_t tiebreak = ~std::uint64_t{0};
  std::uint64_t reached = 0;

  bool better_than(const Objective &o) const {
    if (feasible != o.feasible)
      return feasible;
    if (diameter != o.diameter)
      return diameter < o.diameter;
    return tiebreak < o.tiebreak;
  }
  friend bool operator==(const Objective &, const Objective &) = default;
};

struct LogEntry {
  std::uint64_t eval_id = 0;
  std::uint32_t restart = 0;
  std::uint32_t move = 0;
  Objective objective;
  std::string objective_text;
  std::string description;
};

struct SearchLog {
  std::string header;
  std::vector<LogEntry> entries;

  /// Header line followed by `eval_id restart move objective description`.
  std::string text() const;
};

/// Raised when the budget ends without a connected candidate.
class NoFeasibleCandidate : public Error {
public:
  explicit NoFeasibleCandidate(SearchLog log)
      : Error("no feasible candidate within budget"), log_(std::move(log)) {}
  const SearchLog &log() const { return log_; }

private:
  SearchLog log_;
};

// --- generator sets over Z_M x|_A Z_N --------------------------------------

struct GeneratorCandidate {
  std::vector<SdElement> generators;
  Objective objective;
  std::uint32_t restart = 0;
  std::uint32_t move = 0;
};

struct GeneratorSearchResult {
  GeneratorCandidate best;
  SearchLog log;
};

/// Evaluates the Cayley graph of the closure of `generators`. Infeasible
/// when the closure size differs from `target_delta` or the set does not
/// generate the group.
Objective evaluate_generators(const SemidirectGroup &group,
                              std::span<const SdElement> generators,
                              std::uint32_t target_delta);

std::string describe_generators(std::span<const SdElement> generators);
std::vector<SdElement> parse_generator_description(std::string_view text);
std::string objective_text_generators(const Objective &o);

/// Random-restart hill climbing over generator lists whose closure has
/// exactly `cfg.target_delta` elements. Each move swaps one generator for a
/// random element of the same kind (involution or not).
GeneratorSearchResult search_generators(const SemidirectGroup &group,
                                        const SearchConfig &cfg);

// --- edge pairings of a host graph -----------------------------------------

using EdgePairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct PairingCandidate {
  EdgePairs pairs;
  Objective objective;
  std::uint32_t restart = 0;
  std::uint32_t move = 0;
};

struct PairingSearchResult {
  PairingCandidate best;
  SearchLog log;
};

/// Objective of the edge-pairing graph: diameter, then larger girth.
Objective evaluate_pairing(const CompactGraph &host, const EdgePairs &pairs);

std::string describe_pairing(const EdgePairs &pairs);
EdgePairs parse_pairing_description(std::string_view text);
std::string objective_text_pairing(const Objective &o);

/// Random perfect matching on edge ids refined by 2-swap moves.
PairingSearchResult search_pairing(const CompactGraph &host, const SearchConfig &cfg);

} // namespace ddg
