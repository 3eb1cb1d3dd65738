#include "dray/invariance.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/normal.hpp>

namespace dray {

TranslatedEvent edge_event(const AbelianGroup& group, const GroupElement& a, const GroupElement& b) {
  TranslatedEvent ev;
  ev.description = "edge " + a.to_string() + "-" + b.to_string() + " present";
  ev.support = {a, b};
  ev.holds = [group, a, b](const EdgeSet& sample, const GroupElement& g) {
    return sample.contains(group.add(a, g), group.add(b, g));
  };
  return ev;
}

std::size_t InvarianceReport::rejections() const {
  return static_cast<std::size_t>(std::count(reject.begin(), reject.end(), true));
}

double two_proportion_z(std::size_t hits_a, std::size_t n_a, std::size_t hits_b, std::size_t n_b) {
  const double na = static_cast<double>(n_a);
  const double nb = static_cast<double>(n_b);
  const double pa = static_cast<double>(hits_a) / na;
  const double pb = static_cast<double>(hits_b) / nb;
  const double pooled = static_cast<double>(hits_a + hits_b) / (na + nb);
  const double var = pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb);
  if (var <= 0.0) return 0.0;
  return (pa - pb) / std::sqrt(var);
}

double bonferroni_critical_z(double alpha, std::size_t comparisons) {
  const boost::math::normal standard;
  return boost::math::quantile(standard, 1.0 - alpha / (2.0 * static_cast<double>(std::max<std::size_t>(1, comparisons))));
}

std::vector<InvarianceReport> invariance_campaign(const EdgeSampler& sampler,
                                                  const std::vector<TranslatedEvent>& events,
                                                  const std::vector<GroupElement>& translates,
                                                  const AbelianGroup& group, const TrustedRegion& trusted,
                                                  std::size_t n, double alpha, std::uint64_t seed) {
  if (translates.empty()) throw ConfigError("invariance test needs at least one translate");
  if (n == 0) throw ConfigError("invariance test needs N > 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must lie in (0, 1)");
  for (const auto& ev : events) {
    for (const auto& g : translates) {
      for (const auto& v : ev.support) {
        const auto moved = group.add(v, g);
        if (!trusted.contains(moved)) {
          throw StructureError("event '" + ev.description + "' at translate " + g.to_string() +
                               " touches untrusted vertex " + moved.to_string());
        }
      }
    }
  }

  const std::size_t t_count = translates.size();
  // hits[j][i][e]: event e held on sample i of translate batch j.
  std::vector<std::vector<std::vector<char>>> outcome(t_count, std::vector<std::vector<char>>(n));
  parallel_for(t_count * n, [&](std::size_t k) {
    const std::size_t j = k / n;
    const std::size_t i = k % n;
    Rng rng = make_rng(split_seed(seed, j), i);
    const EdgeSet sample = sampler(rng);
    auto& row = outcome[j][i];
    row.resize(events.size());
    for (std::size_t e = 0; e < events.size(); ++e) row[e] = events[e].holds(sample, translates[j]) ? 1 : 0;
  });

  const double crit = bonferroni_critical_z(alpha, t_count);
  std::vector<InvarianceReport> reports;
  for (std::size_t e = 0; e < events.size(); ++e) {
    InvarianceReport r;
    r.event = events[e].description;
    r.translates = translates;
    r.samples_per_translate = n;
    r.alpha = alpha;
    r.critical_z = crit;
    r.seed = seed;
    for (std::size_t j = 0; j < t_count; ++j) {
      std::size_t h = 0;
      for (std::size_t i = 0; i < n; ++i) h += static_cast<std::size_t>(outcome[j][i][e]);
      r.hits.push_back(h);
      r.frequency.push_back(static_cast<double>(h) / static_cast<double>(n));
    }
    for (std::size_t j = 0; j < t_count; ++j) {
      const double z = two_proportion_z(r.hits[j], n, r.hits[0], n);
      r.z.push_back(z);
      r.reject.push_back(std::abs(z) > crit);
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

InvarianceReport invariance_test(const EdgeSampler& sampler, const TranslatedEvent& event,
                                 const std::vector<GroupElement>& translates, const AbelianGroup& group,
                                 const TrustedRegion& trusted, std::size_t n, double alpha, std::uint64_t seed) {
  return invariance_campaign(sampler, {event}, translates, group, trusted, n, alpha, seed).front();
}

double binomial_upper_tail(std::size_t n, double p, std::size_t k) {
  if (k == 0) return 1.0;
  if (k > n) return 0.0;
  const boost::math::binomial dist(static_cast<double>(n), p);
  return boost::math::cdf(boost::math::complement(dist, static_cast<double>(k - 1)));
}

CalibrationReport calibrate(const EdgeSampler& sampler, const TranslatedEvent& event,
                            const std::vector<GroupElement>& translates, const AbelianGroup& group,
                            const TrustedRegion& trusted, std::size_t n, double alpha, std::size_t campaigns,
                            std::uint64_t seed) {
  CalibrationReport out;
  out.campaigns = campaigns;
  out.alpha = alpha;
  for (std::size_t c = 0; c < campaigns; ++c) {
    const auto r = invariance_test(sampler, event, translates, group, trusted, n, alpha, split_seed(seed, c));
    if (!r.invariant_not_rejected()) ++out.rejected;
  }
  out.upper_tail = binomial_upper_tail(campaigns, alpha, out.rejected);
  return out;
}

EdgeSampler bernoulli_bond_sampler(const FiniteGraph& window, double p) {
  const EdgeSet edges = window.edges();
  std::vector<Edge> all(edges.begin(), edges.end());
  return [all = std::move(all), p](Rng& rng) {
    std::bernoulli_distribution open(p);
    EdgeSet out;
    for (const auto& e : all) {
      if (open(rng)) out.insert(e);
    }
    return out;
  };
}

}  // namespace dray
