// Seeded experiment orchestration shared by the dray CLI and the acceptance
// suite: sample documents, verification suites, sweeps and invariance runs.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dray/io.hpp"

namespace dray::runner {

struct ExperimentConfig {
  std::string command;  // sample-tiling, sample-cube, ... , verify
  std::uint64_t seed = 1;
  int radius = 20;
  int margin = 6;
  std::size_t samples = 1;
  std::string out_dir;  // empty: $DRAY_OUT_DIR, then "."
  std::string suite;
  double alpha = 0.01;
  bool verify = false;
  bool svg = true;

  // sample-cube
  std::string graph_path;
  int ends = 1;
  // sample-product / sample-abelian
  int dimension = 3;
  int rank = 1;
  std::vector<std::int64_t> moduli;
  // sweep-cube
  int max_vertices = 7;
  int exhaustive_orders = 5;
  std::size_t random_orders = 10;
  // invariance
  std::string construction = "tiling";
  std::size_t n = 10000;
  // verify
  std::string in_path;

  bool operator==(const ExperimentConfig&) const = default;
};

Json config_json(const ExperimentConfig& c);
/// Fields absent from `j` keep their current values.
void apply_config_json(const Json& j, ExperimentConfig& c);

/// Rejects windows that do not fit the construction and non-positive margins.
void validate(const ExperimentConfig& c);

/// Outcome of a verification suite over one document.
struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> checks;

  bool pass() const;
  Json json() const;
};

// Sample documents. Each carries a provenance header and everything the
// matching suite needs to re-derive and check the sample.
Json tiling_document(int radius, int margin, std::uint64_t seed, std::size_t index = 0);
/// `graph` is a graph document (see graph_from_json); the trunk of a
/// two-ended tree runs along the first coordinate axis.
Json cube_document(const Json& graph, int ends, std::uint64_t seed, std::size_t index = 0);
Json product_document(int dimension, int radius, int margin, std::uint64_t seed, std::size_t index = 0);
Json abelian_document(int rank, const std::vector<std::int64_t>& moduli, int radius, int margin,
                      std::uint64_t seed, std::size_t index = 0);

/// Number of random finite tile subtrees checked per tiling document.
inline constexpr std::size_t kTilingSubtrees = 100;
inline constexpr std::size_t kTilingSubtreeMax = 50;

SuiteResult verify_tiling(const Json& doc);
SuiteResult verify_cube(const Json& doc);
SuiteResult verify_product(const Json& doc);
SuiteResult verify_abelian(const Json& doc);
/// Dispatches on `suite`, or on the document's "kind" when empty.
SuiteResult verify_document(const Json& doc, const std::string& suite = {});

/// The five single-edge events and the eight coset translates of the
/// tiling campaign.
std::vector<std::pair<GroupElement, GroupElement>> invariance_edges();
std::vector<GroupElement> coset_translates();

/// construction: "tiling" (coset-randomized), "tiling-raw" (no
/// randomization) or "bernoulli" (i.i.d. bond percolation, p = 1/2).
Json invariance_document(const std::string& construction, int radius, int margin, std::size_t n, double alpha,
                         std::uint64_t seed);
/// Repeats the bernoulli campaign `campaigns` times.
Json calibration_document(std::size_t campaigns, std::size_t n, double alpha, std::uint64_t seed);

Json sweep_document(int max_vertices, int exhaustive_up_to, std::size_t random_orders, std::uint64_t seed);

/// Executes one experiment, writing artifacts to the output directory and a
/// summary line per suite to `log`. Returns 0 on success, 1 when a suite
/// fails, 2 on invalid configuration.
int run(const ExperimentConfig& config, std::ostream& log);

}  // namespace dray::runner
