// Monte-Carlo comparison of translated cylinder-event frequencies.
//
// Every translate g gets its own independent batch of N samples (sample i of
// batch j is seeded split_seed(split_seed(seed, j), i)), so the per-translate
// frequencies are independent binomials and the pooled two-proportion z-test
// of p_g = p_0 is exact up to the normal approximation. The family of
// comparisons is Bonferroni-corrected over the number of translates.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dray/graph.hpp"
#include "dray/random.hpp"
#include "dray/trusted.hpp"

namespace dray {

/// A cylinder event A, evaluated on a sample at translate g as "g + A holds".
struct TranslatedEvent {
  std::string description;
  /// Vertices the untranslated event looks at.
  std::vector<GroupElement> support;
  std::function<bool(const EdgeSet& sample, const GroupElement& g)> holds;
};

/// The event "edge {a,b} is present".
TranslatedEvent edge_event(const AbelianGroup& group, const GroupElement& a, const GroupElement& b);

using EdgeSampler = std::function<EdgeSet(Rng&)>;

struct InvarianceReport {
  std::string event;
  std::vector<GroupElement> translates;
  std::vector<std::size_t> hits;
  std::vector<double> frequency;
  std::size_t samples_per_translate = 0;
  /// z-score of p_g against p_0 (translates[0] is the reference).
  std::vector<double> z;
  std::vector<bool> reject;
  double alpha = 0.0;
  double critical_z = 0.0;
  std::uint64_t seed = 0;

  std::size_t rejections() const;
  bool invariant_not_rejected() const { return rejections() == 0; }
};

/// Pooled two-proportion z statistic; 0 when the pooled variance vanishes.
double two_proportion_z(std::size_t hits_a, std::size_t n_a, std::size_t hits_b, std::size_t n_b);

/// Two-sided critical value at alpha / comparisons.
double bonferroni_critical_z(double alpha, std::size_t comparisons);

/// Runs one batch of `n` samples per translate and evaluates every event on
/// each sample. Throws StructureError if some translated event support leaves
/// `trusted`, and ConfigError for empty translates, n = 0 or alpha outside (0,1).
std::vector<InvarianceReport> invariance_campaign(const EdgeSampler& sampler,
                                                  const std::vector<TranslatedEvent>& events,
                                                  const std::vector<GroupElement>& translates,
                                                  const AbelianGroup& group, const TrustedRegion& trusted,
                                                  std::size_t n, double alpha, std::uint64_t seed);

/// Single-event form.
InvarianceReport invariance_test(const EdgeSampler& sampler, const TranslatedEvent& event,
                                 const std::vector<GroupElement>& translates, const AbelianGroup& group,
                                 const TrustedRegion& trusted, std::size_t n, double alpha, std::uint64_t seed);

/// Outcome of repeating a campaign on a law that is exactly invariant.
struct CalibrationReport {
  std::size_t campaigns = 0;
  std::size_t rejected = 0;
  double alpha = 0.0;
  /// P(Binomial(campaigns, alpha) >= rejected).
  double upper_tail = 1.0;
  /// Significance used to decide whether the rejection rate exceeds alpha.
  double level = 0.01;

  double rate() const { return campaigns == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(campaigns); }
  bool pass() const { return upper_tail >= level; }
};

/// Upper binomial tail P(X >= k) for X ~ Binomial(n, p).
double binomial_upper_tail(std::size_t n, double p, std::size_t k);

/// Runs `campaigns` independent single-event tests (campaign c seeded
/// split_seed(seed, c)) and counts family-wise rejections.
CalibrationReport calibrate(const EdgeSampler& sampler, const TranslatedEvent& event,
                            const std::vector<GroupElement>& translates, const AbelianGroup& group,
                            const TrustedRegion& trusted, std::size_t n, double alpha, std::size_t campaigns,
                            std::uint64_t seed);

/// I.i.d. Bernoulli(p) bond percolation on a window; its law is invariant
/// under every translation that keeps events inside the window.
EdgeSampler bernoulli_bond_sampler(const FiniteGraph& window, double p);

}  // namespace dray
