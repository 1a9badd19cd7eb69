#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "snowflake/crofton.hpp"
#include "snowflake/fractal.hpp"
#include "snowflake/turtle.hpp"

namespace snowflake {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv };

struct RunConfig {
  int order = 0;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 0;
  int k_min = 2;
  std::optional<int> k_max;  // unset: largest admissible k
  OutputFormat format = OutputFormat::Json;
  std::string output_path;   // empty: stdout
  unsigned workers = 0;      // 0: hardware concurrency
  int bootstrap_resamples = 200;
};

/// Vertices and classification, shared by `trace` and `snowflake`.
Json path_json(const TurnWord& word, const LatticePath& path);

struct VerifyRow {
  int order = 0;
  std::uint64_t segments = 0;
  std::uint64_t expected_segments = 0;  // 4 |q_{3n+1}|
  bool closed = false;
  bool non_intersecting = false;
  std::int64_t box_width = 0;
  std::int64_t box_height = 0;
  std::int64_t expected_side = 0;  // 2 P(n+1) - 1
  bool word_length_law = false;    // |Pi| = |w| + 1

  bool ok() const noexcept {
    return word_length_law && segments == expected_segments && closed && non_intersecting &&
           box_width == expected_side && box_height == expected_side;
  }
};

std::vector<VerifyRow> verify_orders(int max_order);

/// Histogram as CSV: header `j,count,probability`, rows ascending in j.
std::string histogram_csv(const CrossingHistogram& hist);

Json crofton_json(const LatticePath& path, const CroftonResult& result, const RunConfig& config);

/// Box counts and fit for the order-n polygon; k_max defaults to the scale floor.
Json boxdim_json(const LatticePath& path, int order, int k_min, std::optional<int> k_max);

/// Every measurement for one order, with the config embedded.
Json build_report(const RunConfig& config);

/// Polyline rendering with the y-axis flipped to screen coordinates.
std::string render_svg(const LatticePath& path, int size_px = 1024, double stroke_width = 1.0);

}  // namespace snowflake
