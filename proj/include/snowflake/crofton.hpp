#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "snowflake/turtle.hpp"

namespace snowflake {

/// The line {(x, y) : x cos(theta) + y sin(theta) - rho = 0}, theta in [0, pi).
struct LineParam {
  double theta = 0.0;
  double rho = 0.0;

  friend bool operator==(const LineParam&, const LineParam&) = default;
};

/// Empirical distribution of crossing counts over accepted lines.
struct CrossingHistogram {
  std::map<std::uint64_t, std::uint64_t> counts;  // j -> number of lines
  std::uint64_t total_samples = 0;                // accepted lines
  std::uint64_t degenerate_resamples = 0;         // lines passing within tol of a vertex
  std::uint64_t missed_lines = 0;                 // proposals that did not meet the path

  std::uint64_t attempts() const noexcept {
    return total_samples + degenerate_resamples + missed_lines;
  }
  double probability(std::uint64_t j) const;

  friend bool operator==(const CrossingHistogram&, const CrossingHistogram&) = default;
};

struct CroftonEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  double analytic_mean = 0.0;

  friend bool operator==(const CroftonEstimate&, const CroftonEstimate&) = default;
};

struct CroftonResult {
  CroftonEstimate estimate;
  CrossingHistogram histogram;
};

using LineRng = std::mt19937_64;

inline constexpr std::size_t kSamplesPerBlock = 4096;
inline constexpr std::uint64_t kMaxConsecutiveRejections = 1'000'000;
inline constexpr double kRelativeTolerance = 1e-9;

/// Uniform under the measure d(rho) d(theta) over lines meeting the disk.
LineParam sample_line(LineRng& rng, RealPoint center, double radius);

/// Number of segments whose endpoints lie strictly on opposite sides of the
/// line, or nullopt when some vertex lies within tol of it.
std::optional<std::uint64_t> crossing_count(const LineParam& line, const LatticePath& path,
                                            double tol);

/// Same result as crossing_count, but skips runs of segments whose bounding
/// boxes stay clear of the line. Holds a reference to the path.
class CrossingCounter {
 public:
  explicit CrossingCounter(const LatticePath& path);

  std::optional<std::uint64_t> count(const LineParam& line, double tol) const;

 private:
  struct Box {
    double min_x, min_y, max_x, max_y;
  };

  bool count_node(std::size_t level, std::size_t index, double c, double s, double rho,
                  double tol, std::uint64_t& crossings) const;

  const LatticePath* path_;
  // levels_[0] covers leaf runs of segments; each higher level groups kFanout children.
  std::vector<std::vector<Box>> levels_;
};

/// Monte Carlo estimate of the mean crossing count conditioned on the line
/// meeting the path. Lines are proposed over the disk circumscribing the
/// bounding box (radius scaled by 1.001); misses and degenerate lines are
/// resampled. Output depends only on (path, samples, seed): blocks of
/// kSamplesPerBlock accepted lines are seeded from (seed, block index), so the
/// worker count (0 = hardware concurrency) has no effect on the result.
CroftonResult estimate_crossings(const LatticePath& path, std::uint64_t samples,
                                 std::uint64_t seed, unsigned workers = 0);

/// 2 |path| / |hull boundary|, the mean crossing count of a random line meeting the path.
double analytic_mean(const LatticePath& path);

/// Plug-in entropy -sum p_j ln p_j, in nats.
double crossing_entropy(const CrossingHistogram& hist);

/// Standard deviation of the plug-in entropy over multinomial resamples of the histogram.
double bootstrap_entropy_sigma(const CrossingHistogram& hist, int resamples = 200,
                               std::uint64_t seed = 0);

/// Upper bound on the crossing entropy, in nats:
///   ln(2L/P) + (1 - P/(2L)) ln(2L / (2L - P)),  P = hull perimeter.
/// Requires 0 < P <= 2L; returns 0 at P = 2L.
double entropy_bound(double length, double hull_perimeter);

/// (2 + sqrt 5) / (1 + sqrt 2)
double growth_rate();

/// a * growth_rate()^n
double asymptotic_model(int n, double a);

/// Deterministic 64-bit mixing of (seed, stream), used for per-block generator seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace snowflake
