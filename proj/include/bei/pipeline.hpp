#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bei/canonical.hpp"
#include "bei/graph.hpp"
#include "bei/initial_complex.hpp"
#include "bei/strong_unmixed.hpp"

namespace bei {

// Largest n for the built-in generator.
inline constexpr int kMaxGeneratedOrder = 9;

// One representative per isomorphism class of connected graphs on n
// vertices, in certificate order. Built by one-vertex extension of the
// (n-1)-vertex classes with every nonempty neighbourhood, deduplicated
// by certificate.
std::vector<Certificate> enumerate_connected_certificates(int n);
std::vector<Graph> enumerate_connected(int n);

struct Witness {
  enum class Kind { Cutset, Face };
  Kind kind = Kind::Cutset;
  VertexSet cutset;
  FaceMask face = 0;

  bool operator==(const Witness&) const = default;
};

struct ClassRecord {
  Certificate certificate;
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  std::optional<bool> indecomposable;
  std::optional<bool> unmixed;
  std::optional<bool> accessible;
  std::optional<bool> strongly_unmixed;
  std::optional<bool> s2;
  std::optional<std::vector<std::int64_t>> f_vector;
  std::optional<std::vector<std::int64_t>> h_vector;
  std::optional<std::int64_t> multiplicity;
  std::optional<Witness> witness;

  bool operator==(const ClassRecord&) const = default;
};

struct ClassifyOptions {
  bool s2 = false;
  bool complex = false;
  // Stop after the first failed filter (decomposable, or not unmixed).
  bool short_circuit = true;
};

// Throws TheoremContradiction if the record breaks
// accessible => unmixed, strongly unmixed => accessible, s2 => accessible.
ClassRecord classify(const Graph& g, const ClassifyOptions& opts, SuMemo& memo);
ClassRecord classify(const Graph& g, const ClassifyOptions& opts = {});

// One JSON object per record, fixed field order, nulls for stages not run.
std::string record_to_json(const ClassRecord& r);
ClassRecord record_from_json(const std::string& line);

struct EquivalenceReport {
  bool verified = true;
  std::vector<std::string> accessible_only;          // accessible, not strongly unmixed
  std::vector<std::string> strongly_unmixed_only;    // strongly unmixed, not accessible
  bool s2_checked = false;
  std::vector<std::string> accessible_not_s2;
  std::vector<std::string> s2_not_accessible;
};

// Symmetric differences of the accessible / strongly unmixed sets and, when
// present, of the s2 / accessible sets. Entries are graph6 strings.
EquivalenceReport verify_equivalence(const std::vector<ClassRecord>& records);
std::string format_report(const EquivalenceReport& report);

struct RunSummary {
  int n = 0;
  std::int64_t generated = 0;
  std::int64_t indecomposable = 0;
  std::int64_t indecomposable_unmixed = 0;
  std::int64_t accessible = 0;
  std::int64_t strongly_unmixed = 0;
  std::optional<std::int64_t> s2;
  bool completed = false;
  bool equivalence_verified = false;
  double wall_time_seconds = 0;
  int workers = 1;
};

struct PipelineOptions {
  int n = 0;
  std::optional<std::filesystem::path> input;  // graph6 file instead of the generator
  ClassifyOptions classify;
  std::optional<std::filesystem::path> out_dir;
  int workers = 1;
  bool resume = false;
  std::int64_t checkpoint_every = 10000;
  // Stop after this many records as if interrupted (checkpoint left behind).
  std::optional<std::int64_t> stop_after;
};

// BEI_WORKERS if set and valid, else the hardware concurrency.
int default_worker_count();

struct RunResult {
  RunSummary summary;
  EquivalenceReport report;
  std::vector<ClassRecord> records;  // in certificate order
};

RunResult run_pipeline(const PipelineOptions& opts);

inline constexpr const char* kRecordsFile = "records.jsonl";
inline constexpr const char* kPartialFile = "records.jsonl.partial";
inline constexpr const char* kCheckpointFile = "checkpoint.json";
inline constexpr const char* kSummaryFile = "summary.csv";

std::vector<ClassRecord> read_records(const std::filesystem::path& jsonl);
std::string summary_csv(const RunSummary& s);

}  // namespace bei
