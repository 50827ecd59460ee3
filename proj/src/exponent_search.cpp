#include "tropfit/exponent_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>

namespace tropfit {

namespace {

constexpr double kTieTol = 1e-12;

PolyMinimum attained_min(const PuiseuxPoly& p) {
  auto m = min_poly(p);
  // Every phi carries the exponent-0 monomial, so the minimum is attained.
  if (!m) throw std::logic_error("merged phi polynomial without a zero exponent");
  return *m;
}

PuiseuxPoly merge_members(std::span<const std::size_t> subset, const PhiFamily& phi) {
  if (subset.empty()) throw std::invalid_argument("merged_min: empty subset");
  for (auto i : subset) {
    if (i >= phi.size()) throw std::invalid_argument("merged_min: index " + std::to_string(i) + " out of range");
  }
  PuiseuxPoly acc = phi.polys[subset[0]];
  for (std::size_t k = 1; k < subset.size(); ++k) acc = PuiseuxPoly::merge(acc, phi.polys[subset[k]]);
  return acc;
}

struct Cluster {
  std::vector<std::size_t> members;
  std::optional<PuiseuxPoly> poly;
  bool alive = true;

  std::size_t key() const { return members.front(); }
};

struct Candidate {
  double score;
  std::size_t key_lo;
  std::size_t key_hi;
  std::size_t a;
  std::size_t b;

  // Min-heap order on (score, key_lo, key_hi).
  bool operator>(const Candidate& o) const {
    if (score != o.score) return score > o.score;
    if (key_lo != o.key_lo) return key_lo > o.key_lo;
    return key_hi > o.key_hi;
  }
  bool key_before(const Candidate& o) const {
    return key_lo != o.key_lo ? key_lo < o.key_lo : key_hi < o.key_hi;
  }
};

}  // namespace

SampleSet::SampleSet(std::vector<Sample> points) {
  if (points.empty()) throw std::invalid_argument("SampleSet: at least one sample required");
  xs_.reserve(points.size());
  ys_.reserve(points.size());
  for (const auto& s : points) {
    if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
      throw std::invalid_argument("SampleSet: sample coordinates must be finite");
    }
    xs_.push_back(s.x);
    ys_.push_back(s.y);
  }
}

SampleSet::SampleSet(std::span<const double> xs, std::span<const double> ys)
    : SampleSet([&] {
        if (xs.size() != ys.size()) throw std::invalid_argument("SampleSet: x/y length mismatch");
        std::vector<Sample> pts;
        for (std::size_t i = 0; i < xs.size(); ++i) pts.push_back({xs[i], ys[i]});
        return pts;
      }()) {}

std::vector<Sample> SampleSet::points() const {
  std::vector<Sample> pts;
  for (std::size_t i = 0; i < size(); ++i) pts.push_back({xs_[i], ys_[i]});
  return pts;
}

SampleSet log_transform(std::span<const Sample> maxtimes_points) {
  std::vector<Sample> pts;
  pts.reserve(maxtimes_points.size());
  for (const auto& s : maxtimes_points) {
    if (!(s.x > 0.0) || !(s.y > 0.0)) {
      throw std::domain_error("log_transform: max-times samples must be positive");
    }
    pts.push_back({std::log(s.x), std::log(s.y)});
  }
  return SampleSet(std::move(pts));
}

PhiFamily build_phi(const SampleSet& samples) { return build_phi(samples.xs(), samples.ys()); }

PhiFamily build_phi(std::span<const double> xs, std::span<const double> target) {
  if (xs.size() != target.size()) throw std::invalid_argument("build_phi: length mismatch");
  PhiFamily phi;
  phi.polys.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<Monomial> terms;
    terms.reserve(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
      terms.push_back({xs[j] - xs[i], target[i] - target[j]});
    }
    phi.polys.emplace_back(std::move(terms));
  }
  return phi;
}

PolyMinimum merged_min(std::span<const std::size_t> subset, const PhiFamily& phi) {
  return attained_min(merge_members(subset, phi));
}

bool Partition::covers(std::size_t m) const {
  std::vector<bool> seen(m, false);
  std::size_t count = 0;
  for (const auto& s : subsets) {
    if (s.empty()) return false;
    for (auto i : s) {
      if (i >= m || seen[i]) return false;
      seen[i] = true;
      ++count;
    }
  }
  return count == m;
}

ExponentResult score_partition(const PhiFamily& phi, Partition partition) {
  for (auto& s : partition.subsets) std::sort(s.begin(), s.end());
  std::sort(partition.subsets.begin(), partition.subsets.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  ExponentResult out;
  out.delta_star = MaxPlus::zero();
  for (const auto& s : partition.subsets) {
    const PolyMinimum m = merged_min(s, phi);
    out.exponents.push_back(m.representative());
    out.subset_minima.push_back(m.mu);
    out.delta_star = oplus(out.delta_star, m.mu);
  }
  out.partition = std::move(partition);
  return out;
}

ExponentResult agglomerate(const PhiFamily& phi, std::size_t n) {
  const std::size_t m = phi.size();
  if (n < 1 || n > m) {
    throw std::invalid_argument("agglomerate: need 1 <= N <= M (N = " + std::to_string(n) +
                                ", M = " + std::to_string(m) + ")");
  }

  std::vector<Cluster> clusters;
  clusters.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) clusters.push_back({{i}, phi.polys[i], true});

  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> heap;
  auto push_pair = [&](std::size_t a, std::size_t b) {
    const PolyMinimum mm = attained_min(PuiseuxPoly::merge(*clusters[a].poly, *clusters[b].poly));
    const auto ka = clusters[a].key();
    const auto kb = clusters[b].key();
    heap.push({mm.mu.value(), std::min(ka, kb), std::max(ka, kb), a, b});
  };
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) push_pair(a, b);
  }

  std::vector<MergeStep> merges;
  std::vector<Candidate> ties;
  for (std::size_t live = m; live > n; --live) {
    auto valid = [&](const Candidate& c) { return clusters[c.a].alive && clusters[c.b].alive; };
    while (!valid(heap.top())) heap.pop();

    // Gather every live pair within the tie tolerance of the best score and
    // take the one with the smallest key pair.
    const double best_score = heap.top().score;
    ties.clear();
    while (!heap.empty() && heap.top().score <= best_score + kTieTol) {
      if (valid(heap.top())) ties.push_back(heap.top());
      heap.pop();
    }
    auto chosen = std::min_element(ties.begin(), ties.end(),
                                   [](const Candidate& x, const Candidate& y) { return x.key_before(y); });
    const Candidate pick = *chosen;
    for (const auto& c : ties) {
      if (&c != &*chosen) heap.push(c);
    }

    Cluster merged;
    std::merge(clusters[pick.a].members.begin(), clusters[pick.a].members.end(),
               clusters[pick.b].members.begin(), clusters[pick.b].members.end(),
               std::back_inserter(merged.members));
    merged.poly = PuiseuxPoly::merge(*clusters[pick.a].poly, *clusters[pick.b].poly);
    clusters[pick.a].alive = false;
    clusters[pick.b].alive = false;
    clusters[pick.a].poly.reset();
    clusters[pick.b].poly.reset();
    merges.push_back({pick.key_lo, pick.key_hi, pick.score});

    clusters.push_back(std::move(merged));
    const std::size_t fresh = clusters.size() - 1;
    for (std::size_t c = 0; c < fresh; ++c) {
      if (clusters[c].alive) push_pair(c, fresh);
    }
  }

  Partition partition;
  for (const auto& c : clusters) {
    if (c.alive) partition.subsets.push_back(c.members);
  }
  ExponentResult out = score_partition(phi, std::move(partition));
  out.merges = std::move(merges);
  return out;
}

double phi_error(const PhiFamily& phi, std::span<const double> exponents) {
  if (exponents.empty()) throw std::invalid_argument("phi_error: no exponents");
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& p : phi.polys) {
    double best = std::numeric_limits<double>::infinity();
    for (double e : exponents) best = std::min(best, p.evaluate(e));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace tropfit
