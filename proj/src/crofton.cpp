#include "snowflake/crofton.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numbers>
#include <string>
#include <thread>

#include "snowflake/error.hpp"
#include "snowflake/hull.hpp"

namespace snowflake {
namespace {

constexpr std::size_t kLeafSegments = 16;
constexpr std::size_t kFanout = 16;

double unit_uniform(LineRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Both counting routes go through this one expression so their signs agree bit for bit.
inline double signed_distance(const LatticePoint& p, double c, double s, double rho) {
  return c * static_cast<double>(p.x) + s * static_cast<double>(p.y) - rho;
}

__extension__ using WideCount = unsigned __int128;

struct BlockTally {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t accepted = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t missed = 0;
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 applied twice, so nearby (seed, stream) pairs decorrelate
  auto splitmix = [](std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(seed) ^ (stream * 0xD1B54A32D192ED03ULL));
}

double CrossingHistogram::probability(std::uint64_t j) const {
  if (total_samples == 0) return 0.0;
  auto it = counts.find(j);
  return it == counts.end() ? 0.0
                            : static_cast<double>(it->second) / static_cast<double>(total_samples);
}

LineParam sample_line(LineRng& rng, RealPoint center, double radius) {
  if (!(radius > 0.0)) throw InvalidInput("sample_line: radius must be positive");
  const double theta = unit_uniform(rng) * std::numbers::pi;
  const double offset = (2.0 * unit_uniform(rng) - 1.0) * radius;
  const double rho = center.x * std::cos(theta) + center.y * std::sin(theta) + offset;
  return {theta, rho};
}

std::optional<std::uint64_t> crossing_count(const LineParam& line, const LatticePath& path,
                                            double tol) {
  if (!(tol > 0.0)) throw InvalidInput("crossing_count: tol must be positive");
  const double c = std::cos(line.theta);
  const double s = std::sin(line.theta);
  const auto& v = path.vertices();
  std::vector<double> d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    d[i] = signed_distance(v[i], c, s, line.rho);
    if (std::abs(d[i]) <= tol) return std::nullopt;
  }
  std::uint64_t crossings = 0;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (d[i - 1] * d[i] < 0.0) ++crossings;
  }
  return crossings;
}

CrossingCounter::CrossingCounter(const LatticePath& path) : path_(&path) {
  const auto& v = path.vertices();
  const std::size_t segments = path.segment_count();
  std::vector<Box> leaves;
  leaves.reserve((segments + kLeafSegments - 1) / kLeafSegments);
  for (std::size_t first = 0; first < segments; first += kLeafSegments) {
    const std::size_t last = std::min(first + kLeafSegments, segments);  // vertex index, inclusive
    Box b{static_cast<double>(v[first].x), static_cast<double>(v[first].y),
          static_cast<double>(v[first].x), static_cast<double>(v[first].y)};
    for (std::size_t i = first + 1; i <= last; ++i) {
      b.min_x = std::min(b.min_x, static_cast<double>(v[i].x));
      b.min_y = std::min(b.min_y, static_cast<double>(v[i].y));
      b.max_x = std::max(b.max_x, static_cast<double>(v[i].x));
      b.max_y = std::max(b.max_y, static_cast<double>(v[i].y));
    }
    leaves.push_back(b);
  }
  levels_.push_back(std::move(leaves));
  while (levels_.back().size() > 1) {
    const auto& below = levels_.back();
    std::vector<Box> above;
    above.reserve((below.size() + kFanout - 1) / kFanout);
    for (std::size_t first = 0; first < below.size(); first += kFanout) {
      Box b = below[first];
      for (std::size_t i = first + 1; i < std::min(first + kFanout, below.size()); ++i) {
        b.min_x = std::min(b.min_x, below[i].min_x);
        b.min_y = std::min(b.min_y, below[i].min_y);
        b.max_x = std::max(b.max_x, below[i].max_x);
        b.max_y = std::max(b.max_y, below[i].max_y);
      }
      above.push_back(b);
    }
    levels_.push_back(std::move(above));
  }
}

bool CrossingCounter::count_node(std::size_t level, std::size_t index, double c, double s,
                                 double rho, double tol, std::uint64_t& crossings) const {
  const Box& b = levels_[level][index];
  const double lo = c * (c >= 0.0 ? b.min_x : b.max_x) + s * (s >= 0.0 ? b.min_y : b.max_y) - rho;
  const double hi = c * (c >= 0.0 ? b.max_x : b.min_x) + s * (s >= 0.0 ? b.max_y : b.min_y) - rho;
  // The 2*tol margin absorbs rounding between the corner bound and the
  // per-vertex distances, so pruning never hides a degenerate vertex.
  if (lo > 2.0 * tol || hi < -2.0 * tol) return true;

  if (level == 0) {
    const auto& v = path_->vertices();
    const std::size_t first = index * kLeafSegments;
    const std::size_t last = std::min(first + kLeafSegments, path_->segment_count());
    double prev = signed_distance(v[first], c, s, rho);
    if (std::abs(prev) <= tol) return false;
    for (std::size_t i = first + 1; i <= last; ++i) {
      const double d = signed_distance(v[i], c, s, rho);
      if (std::abs(d) <= tol) return false;
      if (prev * d < 0.0) ++crossings;
      prev = d;
    }
    return true;
  }
  const std::size_t first = index * kFanout;
  const std::size_t last = std::min(first + kFanout, levels_[level - 1].size());
  for (std::size_t i = first; i < last; ++i) {
    if (!count_node(level - 1, i, c, s, rho, tol, crossings)) return false;
  }
  return true;
}

std::optional<std::uint64_t> CrossingCounter::count(const LineParam& line, double tol) const {
  if (!(tol > 0.0)) throw InvalidInput("CrossingCounter::count: tol must be positive");
  const double c = std::cos(line.theta);
  const double s = std::sin(line.theta);
  std::uint64_t crossings = 0;
  if (!count_node(levels_.size() - 1, 0, c, s, line.rho, tol, crossings)) return std::nullopt;
  return crossings;
}

CroftonResult estimate_crossings(const LatticePath& path, std::uint64_t samples,
                                 std::uint64_t seed, unsigned workers) {
  if (samples < 1000) throw InvalidInput("estimate_crossings: need at least 1000 samples");

  const BoundingBox box = bounding_box(path);
  const RealPoint center{(static_cast<double>(box.min.x) + static_cast<double>(box.max.x)) / 2.0,
                         (static_cast<double>(box.min.y) + static_cast<double>(box.max.y)) / 2.0};
  const double radius =
      0.5 * std::hypot(static_cast<double>(box.width()), static_cast<double>(box.height())) *
      1.001;
  const double tol = kRelativeTolerance * radius;
  const CrossingCounter counter(path);

  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<BlockTally> tallies(blocks);

  auto run_block = [&](std::uint64_t b) {
    LineRng rng(mix_seed(seed, b));
    const std::uint64_t want = std::min<std::uint64_t>(kSamplesPerBlock, samples - b * kSamplesPerBlock);
    BlockTally& t = tallies[b];
    std::uint64_t rejected_in_a_row = 0;
    while (t.accepted < want) {
      const LineParam line = sample_line(rng, center, radius);
      const auto j = counter.count(line, tol);
      if (!j) {
        ++t.degenerate;
      } else if (*j == 0) {
        ++t.missed;
      } else {
        ++t.counts[*j];
        ++t.accepted;
        rejected_in_a_row = 0;
        continue;
      }
      if (++rejected_in_a_row > kMaxConsecutiveRejections) {
        throw PathologicalInput("estimate_crossings: more than " +
                                std::to_string(kMaxConsecutiveRejections) +
                                " consecutive rejected lines");
      }
    }
  };

  unsigned n_workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  n_workers = static_cast<unsigned>(std::min<std::uint64_t>(n_workers, blocks));
  if (n_workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(n_workers);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::uint64_t b = next++; b < blocks; b = next++) run_block(b);
        } catch (...) {
          errors[w] = std::current_exception();
          next = blocks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CroftonResult result;
  CrossingHistogram& hist = result.histogram;
  for (const auto& t : tallies) {
    for (const auto& [j, n] : t.counts) hist.counts[j] += n;
    hist.total_samples += t.accepted;
    hist.degenerate_resamples += t.degenerate;
    hist.missed_lines += t.missed;
  }

  // Integer moments keep the reduction exact and order independent.
  WideCount sum = 0, sum_sq = 0;
  for (const auto& [j, n] : hist.counts) {
    sum += static_cast<WideCount>(j) * n;
    sum_sq += static_cast<WideCount>(j) * j * n;
  }
  const long double count = static_cast<long double>(hist.total_samples);
  const long double mean = static_cast<long double>(sum) / count;
  const long double var =
      (static_cast<long double>(sum_sq) - static_cast<long double>(sum) * mean) / (count - 1);
  result.estimate.mean = static_cast<double>(mean);
  result.estimate.std_error = static_cast<double>(std::sqrt(std::max(var, 0.0L) / count));
  result.estimate.samples = hist.total_samples;
  result.estimate.analytic_mean = analytic_mean(path);
  return result;
}

double analytic_mean(const LatticePath& path) {
  const double hull_perimeter = perimeter(convex_hull(path.vertices()));
  if (hull_perimeter <= 0.0) throw InvalidInput("analytic_mean: path hull is a single point");
  return 2.0 * static_cast<double>(path.segment_count()) / hull_perimeter;
}

double crossing_entropy(const CrossingHistogram& hist) {
  if (hist.total_samples == 0) throw InvalidInput("crossing_entropy: empty histogram");
  const double total = static_cast<double>(hist.total_samples);
  double h = 0.0;
  for (const auto& [j, n] : hist.counts) {
    if (n == 0) continue;
    const double p = static_cast<double>(n) / total;
    h -= p * std::log(p);
  }
  return h;
}

double bootstrap_entropy_sigma(const CrossingHistogram& hist, int resamples, std::uint64_t seed) {
  if (hist.total_samples == 0) throw InvalidInput("bootstrap_entropy_sigma: empty histogram");
  if (resamples < 2) throw InvalidInput("bootstrap_entropy_sigma: need at least 2 resamples");

  std::vector<std::uint64_t> keys;
  std::vector<double> probs;
  for (const auto& [j, n] : hist.counts) {
    keys.push_back(j);
    probs.push_back(static_cast<double>(n) / static_cast<double>(hist.total_samples));
  }

  std::vector<double> entropies;
  entropies.reserve(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    // Multinomial draw as a chain of conditional binomials.
    CrossingHistogram boot;
    boot.total_samples = hist.total_samples;
    std::uint64_t remaining = hist.total_samples;
    double mass_left = 1.0;
    for (std::size_t i = 0; i < keys.size() && remaining > 0; ++i) {
      std::uint64_t n = remaining;
      if (i + 1 < keys.size()) {
        const double p = std::clamp(probs[i] / mass_left, 0.0, 1.0);
        n = std::binomial_distribution<std::uint64_t>(remaining, p)(rng);
      }
      if (n > 0) boot.counts[keys[i]] = n;
      remaining -= n;
      mass_left -= probs[i];
    }
    entropies.push_back(crossing_entropy(boot));
  }
  double mean = 0.0;
  for (double h : entropies) mean += h;
  mean /= static_cast<double>(entropies.size());
  double ss = 0.0;
  for (double h : entropies) ss += (h - mean) * (h - mean);
  return std::sqrt(ss / static_cast<double>(entropies.size() - 1));
}

double entropy_bound(double length, double hull_perimeter) {
  if (!(hull_perimeter > 0.0) || !(length > 0.0)) {
    throw InvalidInput("entropy_bound: length and hull perimeter must be positive");
  }
  const double two_l = 2.0 * length;
  if (hull_perimeter > two_l) {
    throw InvalidInput("entropy_bound: hull perimeter exceeds twice the length");
  }
  const double x = two_l / hull_perimeter;
  if (hull_perimeter == two_l) return 0.0;
  return std::log(x) + (1.0 - 1.0 / x) * std::log(two_l / (two_l - hull_perimeter));
}

double growth_rate() { return (2.0 + std::sqrt(5.0)) / (1.0 + std::sqrt(2.0)); }

double asymptotic_model(int n, double a) { return a * std::pow(growth_rate(), n); }

}  // namespace snowflake
