#include "dray/abelian.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace dray {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

std::int64_t determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const std::int64_t term = m[0][col] * determinant(minor);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

/// Rank of the row set via fraction-free elimination.
std::size_t integer_rank(Matrix rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const std::int64_t f = rows[i][c];
      const std::int64_t p = rows[rank][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = rows[i][j] * p - rows[rank][j] * f;
      std::int64_t g = 0;
      for (auto x : rows[i]) g = std::gcd(g, x);
      if (g > 1) {
        for (auto& x : rows[i]) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

MatchingPair matching_split(const EdgeSet& r, CoinFlip heads, const TrustedRegion& trusted) {
  std::unordered_map<GroupElement, std::vector<GroupElement>> adj;
  for (const auto& [a, b] : r) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 2) throw StructureError("vertex " + v.to_string() + " has degree > 2");
  }
  for (const auto& v : trusted.vertices()) {
    const auto it = adj.find(v);
    if (it == adj.end() || it->second.size() != 2) {
      throw StructureError("trusted vertex " + v.to_string() + " does not have degree 2");
    }
  }

  std::map<Edge, int> cls;
  std::unordered_map<GroupElement, bool> done;
  const GroupElement origin(std::vector<std::int64_t>(r.empty() ? 0 : r.begin()->first.free.size(), 0),
                            std::vector<std::int64_t>(r.empty() ? 0 : r.begin()->first.torsion.size(), 0));
  for (const auto& v : r.vertices()) {
    if (done.count(v)) continue;
    // Collect the component, then pick its anchor.
    std::vector<GroupElement> comp{v};
    done[v] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (const auto& w : adj[comp[h]]) {
        if (!done.count(w)) {
          done[w] = true;
          comp.push_back(w);
        }
      }
    }
    GroupElement anchor = *std::min_element(comp.begin(), comp.end());
    if (std::find(comp.begin(), comp.end(), origin) != comp.end()) anchor = origin;

    auto nbrs = adj[anchor];
    std::sort(nbrs.begin(), nbrs.end());
    // Walk away from the anchor in each direction, alternating classes.
    for (std::size_t dir = 0; dir < nbrs.size(); ++dir) {
      int c = (nbrs[dir] == nbrs.back()) ? 0 : 1;
      GroupElement prev = anchor;
      GroupElement cur = nbrs[dir];
      while (true) {
        const Edge e = make_edge(prev, cur);
        const auto [it, fresh] = cls.emplace(e, c);
        if (!fresh) {
          if (it->second != c) throw StructureError("odd cycle through " + anchor.to_string());
          break;
        }
        const auto& nb = adj[cur];
        if (nb.size() < 2) break;
        GroupElement next = nb[0] == prev ? nb[1] : nb[0];
        prev = std::move(cur);
        cur = std::move(next);
        c ^= 1;
      }
    }
  }

  MatchingPair out;
  for (const auto& [e, c] : cls) {
    ((c == 0) == heads ? out.m1 : out.m2).insert(e);
  }
  return out;
}

SubLattice::SubLattice(AbelianGroup group, std::vector<GroupElement> generators)
    : group_(std::move(group)), generators_(std::move(generators)) {
  const std::size_t r = group_.rank();
  if (r == 0) throw ConfigError("the group must have positive rank");
  Matrix rows;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!group_.is_element(generators_[i])) throw ConfigError("generator " + generators_[i].to_string() + " is not a group element");
    const auto& f = generators_[i].free;
    if (std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; })) continue;
    rows.push_back(f);
    if (integer_rank(rows) == rows.size()) {
      basis_.push_back(i);
    } else {
      rows.pop_back();
    }
    if (basis_.size() == r) break;
  }
  if (basis_.size() != r) throw ConfigError("infinite-order generators do not span a full-rank lattice");

  Matrix b(r, std::vector<std::int64_t>(r));
  for (std::size_t col = 0; col < r; ++col) {
    for (std::size_t row = 0; row < r; ++row) b[row][col] = generators_[basis_[col]].free[row];
  }
  det_ = determinant(b);
  adjugate_.assign(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      // adj[i][j] = (-1)^{i+j} det(B without row j and column i)
      Matrix minor;
      for (std::size_t row = 0; row < r; ++row) {
        if (row == j) continue;
        std::vector<std::int64_t> line;
        for (std::size_t col = 0; col < r; ++col) {
          if (col != i) line.push_back(b[row][col]);
        }
        minor.push_back(std::move(line));
      }
      const std::int64_t m = determinant(minor);
      adjugate_[i][j] = ((i + j) % 2 == 0) ? m : -m;
    }
  }
}

GroupElement SubLattice::embed(const std::vector<std::int64_t>& coeffs) const {
  GroupElement x = group_.zero();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    x = group_.add(x, group_.scale(generators_[basis_[i]], coeffs[i]));
  }
  return x;
}

std::vector<std::int64_t> SubLattice::floor_coefficients(const std::vector<std::int64_t>& v) const {
  std::vector<std::int64_t> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::int64_t num = 0;
    for (std::size_t j = 0; j < v.size(); ++j) num += adjugate_[i][j] * v[j];
    out[i] = floor_div(num, det_);
  }
  return out;
}

std::vector<std::int64_t> SubLattice::coefficients(const GroupElement& x) const {
  std::vector<std::int64_t> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::int64_t num = 0;
    for (std::size_t j = 0; j < x.free.size(); ++j) num += adjugate_[i][j] * x.free[j];
    if (num % det_ != 0) return {};
    out[i] = num / det_;
  }
  if (embed(out) != x) return {};
  return out;
}

bool SubLattice::contains(const GroupElement& x) const { return !coefficients(x).empty(); }

GroupElement SubLattice::canonical(const GroupElement& x) const {
  const auto k = floor_coefficients(x.free);
  return group_.sub(x, embed(k));
}

FiniteGraph quotient_graph(const SubLattice& lattice) {
  const auto& group = lattice.group();
  const auto& gens = lattice.generators();
  std::vector<GroupElement> reps{lattice.canonical(group.zero())};
  std::unordered_map<GroupElement, int> index{{reps[0], 0}};
  std::vector<std::tuple<int, int, int>> edges;
  for (std::size_t h = 0; h < reps.size(); ++h) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (int sign = 0; sign < 2; ++sign) {
        const auto step = sign == 0 ? gens[i] : group.negate(gens[i]);
        const auto w = lattice.canonical(group.add(reps[h], step));
        auto [it, fresh] = index.emplace(w, static_cast<int>(reps.size()));
        if (fresh) reps.push_back(w);
        if (it->second != static_cast<int>(h)) {
          edges.emplace_back(static_cast<int>(h), it->second, static_cast<int>(2 * i) + sign);
        }
      }
    }
  }
  FiniteGraph q(group, reps);
  for (const auto& [u, v, label] : edges) q.add_edge(u, v, label);
  return q;
}

std::vector<int> quotient_hamilton_path(const FiniteGraph& q) {
  const std::size_t n = q.size();
  if (n == 0) throw StructureError("empty quotient");
  std::vector<char> used(n, 0);
  std::vector<int> path{0};
  used[0] = 1;
  // Candidate lists per depth, fewest onward options first.
  std::vector<std::vector<int>> options;
  std::vector<std::size_t> next;
  auto candidates = [&](int v) {
    std::vector<std::pair<int, int>> keyed;
    for (int w : q.neighbours(v)) {
      if (used[static_cast<std::size_t>(w)]) continue;
      int free_nb = 0;
      for (int x : q.neighbours(w)) free_nb += used[static_cast<std::size_t>(x)] ? 0 : 1;
      keyed.emplace_back(free_nb, w);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (auto [k, w] : keyed) out.push_back(w);
    return out;
  };
  options.push_back(candidates(0));
  next.push_back(0);
  while (path.size() < n) {
    if (next.back() < options.back().size()) {
      const int w = options.back()[next.back()++];
      used[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      options.push_back(candidates(w));
      next.push_back(0);
    } else {
      options.pop_back();
      next.pop_back();
      if (options.empty()) throw StructureError("quotient has no Hamilton path from the identity");
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
    }
  }
  return path;
}

CosetPath lift_coset_path(const std::vector<int>& path, const FiniteGraph& q, const SubLattice& lattice) {
  const auto& group = lattice.group();
  CosetPath out;
  out.path.push_back(group.zero());
  out.cosets.push_back(q.vertex(path.front()));
  for (std::size_t k = 1; k < path.size(); ++k) {
    const auto& target = q.vertex(path[k]);
    bool found = false;
    for (const auto& s : lattice.generators()) {
      for (const auto& step : {s, group.negate(s)}) {
        const auto cand = group.add(out.path.back(), step);
        if (lattice.canonical(cand) == target) {
          out.path.push_back(cand);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw StructureError("quotient step to " + target.to_string() + " has no generator");
    out.cosets.push_back(target);
  }
  return out;
}

AbelianSample assemble_abelian(const MatchingPair& m, const CosetPath& p, const SubLattice& lattice,
                               const EdgeSet& base_ray, const TrustedRegion& base_trusted) {
  const auto& group = lattice.group();
  AbelianSample out;
  out.base_ray = base_ray;
  out.matching = m;
  out.coset_path = p;

  const auto shift = p.endpoint();
  out.edges = m.m1;
  for (const auto& [a, b] : m.m2) {
    if (!out.edges.insert(group.add(a, shift), group.add(b, shift))) {
      throw StructureError("M1 and the shifted M2 overlap");
    }
  }
  for (const auto& gamma : base_ray.vertices()) {
    std::vector<GroupElement> t;
    t.reserve(p.path.size());
    for (const auto& x : p.path) t.push_back(group.add(gamma, x));
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
      if (!out.edges.insert(t[k], t[k + 1])) throw StructureError("path translate reuses an edge");
    }
    out.translates.push_back(std::move(t));
  }
  for (const auto& [v, d] : out.edges.degrees()) {
    if (d > 2) throw StructureError("vertex " + v.to_string() + " has degree " + std::to_string(d));
  }

  std::vector<GroupElement> trusted;
  for (const auto& gamma : base_trusted.vertices()) {
    for (const auto& x : p.path) trusted.push_back(group.add(gamma, x));
  }
  out.trusted = TrustedRegion(std::move(trusted), "P-translates of the trusted base ray vertices (" +
                                                      base_trusted.description() + ")");
  return out;
}

CoverageReport check_unique_translate(const AbelianSample& s, const SubLattice& lattice) {
  CoverageReport r;
  const auto& group = lattice.group();
  for (const auto& v : s.trusted.vertices()) {
    ++r.checked;
    std::size_t hits = 0;
    for (const auto& x : s.coset_path.path) hits += lattice.contains(group.sub(v, x)) ? 1 : 0;
    if (hits != 1) {
      r.pass = false;
      r.witness = "vertex " + v.to_string() + " lies on " + std::to_string(hits) + " path translates";
      break;
    }
  }
  return r;
}

LatticeSample sample_grid_ray(std::size_t rank, int radius, int margin, Rng& rng) {
  if (rank == 1) {
    if (radius <= margin) throw ConfigError("line window must exceed its margin");
    LatticeSample out;
    out.dimension = 1;
    for (std::int64_t a = -radius; a < radius; ++a) out.edges.insert(GroupElement{a}, GroupElement{a + 1});
    out.trusted = box_interior(1, radius, margin);
    out.construction = "line(radius=" + std::to_string(radius) + ")";
    return out;
  }
  if (rank == 2) return sample_z2_ray(build_tile_window(radius), margin, rng);
  return product_ray_zd(rank, radius, margin, rng).ray;
}

std::vector<GroupElement> standard_generators(const AbelianGroup& group) {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < group.rank(); ++i) out.push_back(group.free_unit(i));
  for (std::size_t j = 0; j < group.moduli().size(); ++j) out.push_back(group.torsion_unit(j));
  return out;
}

AbelianSample sample_abelian(std::size_t rank, const std::vector<std::int64_t>& moduli,
                             const std::vector<GroupElement>& generators, int radius, int margin, Rng& rng) {
  const AbelianGroup group(rank, moduli);
  const SubLattice lattice(group, generators.empty() ? standard_generators(group) : generators);
  const auto q = quotient_graph(lattice);
  const auto coset_path = lift_coset_path(quotient_hamilton_path(q), q, lattice);

  const auto ray = sample_grid_ray(lattice.rank(), radius, margin, rng);
  EdgeSet base;
  for (const auto& [a, b] : ray.edges) base.insert(lattice.embed(a.free), lattice.embed(b.free));
  std::vector<GroupElement> base_trusted;
  for (const auto& v : ray.trusted.vertices()) base_trusted.push_back(lattice.embed(v.free));
  const TrustedRegion trusted(std::move(base_trusted), "S'-image of " + ray.trusted.description());

  const CoinFlip heads = coin_flip(rng);
  const auto m = matching_split(base, heads, trusted);
  auto out = assemble_abelian(m, coset_path, lattice, base, trusted);
  out.construction = "abelian(" + std::string(heads ? "heads" : "tails") + ", |Q|=" + std::to_string(q.size()) +
                     ", ray=" + ray.construction + ")";
  return out;
}

}  // namespace dray
