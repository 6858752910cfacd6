#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ddg/groups.hpp"

namespace ddg {

// Machine-checkable descriptions attached to some table cells. Generator
// text is kept exactly as published, typos included.
struct SemidirectCheck {
  SemidirectSpec spec;
  std::string generators; // e.g. "[13,77],[6,157],[15,50],[12,7]"
};

struct TwoCoordCheck {
  std::uint32_t m = 1;
  std::vector<TwoCoordElement> generators; // closed under inverses at verification
};

/// Multiplication table and generator indices from user files
/// `<delta>_<d>.table` and `<delta>_<d>.gens` in the data directory.
struct TableGroupCheck {};

/// Adjacency list `<delta>_<d>.adj`, with optional published statistics.
struct AdjacencyCheck {
  std::optional<std::uint32_t> girth;
  std::optional<std::string> average_distance; // 6-decimal rendering
};

/// Pairing file `<delta>_<d>.pairing` over the Foster graph.
struct FosterPairingCheck {
  std::uint32_t girth = 0;
  std::string average_distance;
};

using Checkable = std::variant<std::monostate, SemidirectCheck, TwoCoordCheck,
                               TableGroupCheck, AdjacencyCheck, FosterPairingCheck>;

struct RecordEntry {
  std::uint32_t delta = 0;
  std::uint32_t d = 0;
  std::uint64_t order = 0;
  std::string label; // attribution as printed in the table
  bool recent = false; // highlighted as new in the January 2026 table
  Checkable checkable;

  bool is_cyclic_semidirect() const {
    return std::holds_alternative<SemidirectCheck>(checkable);
  }
};

/// The 126 cells for degree 3..16 and diameter 2..10, ordered by (delta, d).
std::span<const RecordEntry> record_table();

/// Entry for (delta, d); throws ArgumentError when outside the table.
const RecordEntry &record(std::uint32_t delta, std::uint32_t d);

/// FNV-1a over "delta d order label" lines; guards the transcription.
std::uint64_t record_table_checksum();
inline constexpr std::uint64_t kRecordTableChecksum = 0xcc8fdb35ceeea3abull;

/// order / moore_bound(delta, d).
double moore_ratio(const RecordEntry &e);

enum class VerifyStatus { verified, mismatch, inconsistent_spec, external_data_missing };

std::string to_string(VerifyStatus s);

struct VerificationReport {
  std::uint32_t delta = 0;
  std::uint32_t d = 0;
  std::uint64_t claimed_order = 0;
  std::string label;
  std::string method; // what was run, e.g. "semidirect implicit BFS"
  std::optional<std::uint64_t> measured_order;
  std::optional<std::uint64_t> measured_degree;
  std::optional<std::uint32_t> measured_diameter;
  std::optional<std::uint32_t> measured_girth;
  std::optional<std::string> measured_average_distance;
  VerifyStatus status = VerifyStatus::external_data_missing;
  std::vector<std::string> notes;
  double millis = 0;

  /// `delta d claimed measured_order measured_degree measured_diameter status millis`;
  /// millis is "-" when `timing` is off, so the line replays byte for byte.
  std::string machine_line(bool timing = true) const;
};

struct VerifyOptions {
  std::string data_dir;   // where external files are looked up; empty = none
  unsigned jobs = 0;      // parallel entries; 0 = hardware default
  bool probe_multiplier = true; // on semidirect mismatch, try A^k diagnostics
};

VerificationReport verify_entry(const RecordEntry &e, const VerifyOptions &opts = {});

struct VerifyFilter {
  std::uint32_t delta_min = 3, delta_max = 16;
  std::uint32_t d_min = 2, d_max = 10;
  bool cayley_only = false; // only cyclic semidirect rows
};

struct VerifySummary {
  std::vector<VerificationReport> reports; // ordered by (delta, d)
  std::size_t verified = 0;
  std::size_t mismatch = 0;
  std::size_t inconsistent = 0;
  std::size_t missing = 0;

  bool has_failures() const { return mismatch + inconsistent > 0; }
};

VerifySummary verify_all(const VerifyFilter &filter, const VerifyOptions &opts = {});

/// Published generator text into elements. Problems (malformed items,
/// doubled brackets) are appended to `notes`; malformed items are dropped
/// and `ok` is cleared.
std::vector<SdElement> parse_published_generators(const std::string &text,
                                                  std::vector<std::string> &notes, bool &ok);

} // namespace ddg
