#include "snowflake/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "snowflake/error.hpp"
#include "snowflake/hull.hpp"
#include "snowflake/words.hpp"

namespace snowflake {
namespace {

Json quantity(double value, const char* unit) { return Json{{"value", value}, {"unit", unit}}; }

Json histogram_json(const CrossingHistogram& hist) {
  Json rows = Json::array();
  for (const auto& [j, n] : hist.counts) {
    rows.push_back({{"j", j}, {"count", n}, {"probability", hist.probability(j)}});
  }
  return rows;
}

constexpr std::uint64_t kBootstrapStream = 0x5EED'B007'57A9'0001ULL;

}  // namespace

Json path_json(const TurnWord& word, const LatticePath& path) {
  const PathClass cls = classify(path);
  Json vertices = Json::array();
  for (const auto& p : path.vertices()) vertices.push_back({p.x, p.y});
  return Json{{"word_length", word.size()},
              {"segments", path.segment_count()},
              {"closed", cls.closed},
              {"non_intersecting", cls.non_intersecting},
              {"vertices", std::move(vertices)}};
}

std::vector<VerifyRow> verify_orders(int max_order) {
  if (max_order < 0 || max_order > kDefaultOrderCap) {
    throw InvalidInput("verify: max order must lie in [0, " + std::to_string(kDefaultOrderCap) +
                       "]");
  }
  std::vector<VerifyRow> rows;
  for (int n = 0; n <= max_order; ++n) {
    const TurnWord word = snowflake_word(n);
    const LatticePath path = trace(word);
    const PathClass cls = classify(path);
    const BoundingBox box = bounding_box(path);
    VerifyRow row;
    row.order = n;
    row.segments = path.segment_count();
    row.expected_segments = 4 * fib_length(3 * n + 1);
    row.closed = cls.closed;
    row.non_intersecting = cls.non_intersecting;
    row.box_width = box.width();
    row.box_height = box.height();
    row.expected_side = static_cast<std::int64_t>(2 * pell(n + 1) - 1);
    row.word_length_law = path.segment_count() == word.size() + 1;
    rows.push_back(row);
  }
  return rows;
}

std::string histogram_csv(const CrossingHistogram& hist) {
  std::ostringstream out;
  out << "j,count,probability\n";
  char buf[64];
  for (const auto& [j, n] : hist.counts) {
    std::snprintf(buf, sizeof buf, "%.17g", hist.probability(j));
    out << j << ',' << n << ',' << buf << '\n';
  }
  return out.str();
}

Json crofton_json(const LatticePath& path, const CroftonResult& result, const RunConfig& config) {
  const ConvexHull hull = convex_hull(path.vertices());
  const double length = static_cast<double>(path.segment_count());
  const double hull_perimeter = perimeter(hull);
  const double entropy = crossing_entropy(result.histogram);
  const double sigma = bootstrap_entropy_sigma(result.histogram, config.bootstrap_resamples,
                                               mix_seed(config.seed, kBootstrapStream));
  const auto& hist = result.histogram;
  return Json{
      {"samples", result.estimate.samples},
      {"seed", config.seed},
      {"path_length", quantity(length, "lattice units")},
      {"hull_perimeter", quantity(hull_perimeter, "lattice units")},
      {"analytic_mean", quantity(result.estimate.analytic_mean, "crossings per line")},
      {"mc_mean", quantity(result.estimate.mean, "crossings per line")},
      {"mc_std_error", quantity(result.estimate.std_error, "crossings per line")},
      {"degenerate_resamples", hist.degenerate_resamples},
      {"missed_lines", hist.missed_lines},
      {"entropy", quantity(entropy, "nats")},
      {"entropy_bootstrap_sigma", quantity(sigma, "nats")},
      {"entropy_bound", quantity(entropy_bound(length, hull_perimeter), "nats")},
      {"histogram", histogram_json(hist)}};
}

Json boxdim_json(const LatticePath& path, int order, int k_min, std::optional<int> k_max) {
  const RealPath normalized = normalize_snowflake(path, order);
  const int admissible = max_admissible_k(normalized);
  const int hi = k_max.value_or(admissible);
  Json out{{"order", order},
           {"max_admissible_k", admissible},
           {"theoretical_dimension", quantity(theoretical_dimension(), "dimensionless")}};
  if (hi < k_min) {
    out["series"] = Json::array();
    out["fit"] = nullptr;
    out["note"] = "no admissible scale at or above k_min";
    return out;
  }
  const BoxCountSeries series = box_count_series(normalized, k_min, hi);
  Json rows = Json::array();
  for (const auto& e : series) {
    rows.push_back({{"k", e.k}, {"epsilon", e.epsilon}, {"count", e.count}});
  }
  out["series"] = std::move(rows);
  if (series.size() < 3) {
    out["fit"] = nullptr;
    out["note"] = "fewer than 3 admissible scales";
    return out;
  }
  const DimensionFit fit = estimate_dimension(series);
  out["fit"] = Json{{"slope", quantity(fit.slope, "dimensionless")},
                    {"intercept", fit.intercept},
                    {"r_squared", fit.r_squared},
                    {"k_min", fit.k_min},
                    {"k_max", fit.k_max}};
  return out;
}

Json build_report(const RunConfig& config) {
  const int n = config.order;
  if (n < 0 || n > kDefaultOrderCap) {
    throw InvalidInput("report: order must lie in [0, " + std::to_string(kDefaultOrderCap) + "]");
  }
  const TurnWord word = snowflake_word(n);
  const LatticePath path = trace(word);
  const PathClass cls = classify(path);
  const BoundingBox box = bounding_box(path);
  const ConvexHull hull = convex_hull(path.vertices());
  const double hull_perimeter = perimeter(hull);
  const double hull_diameter = diameter(hull);
  const auto expected_side = static_cast<std::int64_t>(2 * pell(n + 1) - 1);
  const std::uint64_t q_len = fib_length(3 * n + 1);
  const double length = static_cast<double>(path.segment_count());

  Json report;
  report["config"] = Json{{"order", n},
                          {"samples", config.samples},
                          {"seed", config.seed},
                          {"k_min", config.k_min},
                          {"k_max", config.k_max ? Json(*config.k_max) : Json("auto")},
                          {"bootstrap_resamples", config.bootstrap_resamples}};
  report["word"] = Json{{"base_word_length", q_len}, {"snowflake_word_length", word.size()}};
  report["path"] = Json{{"length", quantity(length, "lattice units")},
                        {"expected_length", quantity(4.0 * static_cast<double>(q_len), "lattice units")},
                        {"closed", cls.closed},
                        {"non_intersecting", cls.non_intersecting},
                        {"box_width", quantity(static_cast<double>(box.width()), "lattice units")},
                        {"box_height", quantity(static_cast<double>(box.height()), "lattice units")},
                        {"expected_side", quantity(static_cast<double>(expected_side), "lattice units")},
                        {"pell_check", box.width() == expected_side && box.height() == expected_side}};
  report["hull"] = Json{{"vertices", hull.vertices.size()},
                        {"perimeter", quantity(hull_perimeter, "lattice units")},
                        {"diameter", quantity(hull_diameter, "lattice units")},
                        {"perimeter_over_diameter", quantity(hull_perimeter / hull_diameter, "dimensionless")},
                        {"perimeter_prefactor", quantity(hull_perimeter / std::pow(1.0 + std::sqrt(2.0), n), "lattice units")}};

  const CroftonResult mc = estimate_crossings(path, config.samples, config.seed, config.workers);
  Json crofton = crofton_json(path, mc, config);
  const double entropy = crossing_entropy(mc.histogram);
  crofton["entropy_per_order"] = n == 0 ? Json(nullptr) : quantity(entropy / n, "nats");
  crofton["four_q_mean"] =
      quantity(2.0 * 2.0 * static_cast<double>(q_len) / hull_perimeter, "crossings per line");
  report["crofton"] = std::move(crofton);

  // Growth of the exact Crofton mean over orders 0..n.
  Json growth = Json::array();
  double prev = 0.0;
  for (int m = 0; m <= n; ++m) {
    const LatticePath pm = m == n ? path : snowflake_path(m);
    const double hull_m = perimeter(convex_hull(pm.vertices()));
    const double mean_m = analytic_mean(pm);
    Json row{{"order", m},
             {"analytic_mean", quantity(mean_m, "crossings per line")},
             {"prefactor", quantity(mean_m / std::pow(growth_rate(), m), "crossings per line")},
             {"hull_prefactor", quantity(hull_m / std::pow(1.0 + std::sqrt(2.0), m), "lattice units")}};
    row["ratio"] = m == 0 ? Json(nullptr) : Json(quantity(mean_m / prev, "dimensionless"));
    growth.push_back(std::move(row));
    prev = mean_m;
  }
  report["growth"] = Json{{"rate", quantity(growth_rate(), "dimensionless")},
                          {"stated_constant", quantity(1.0 + std::sqrt(5.0), "crossings per line")},
                          {"orders", std::move(growth)}};

  report["dimension"] = boxdim_json(path, n, config.k_min, config.k_max);
  return report;
}

std::string render_svg(const LatticePath& path, int size_px, double stroke_width) {
  if (size_px <= 0) throw InvalidInput("render_svg: size must be positive");
  if (!(stroke_width > 0.0)) throw InvalidInput("render_svg: stroke width must be positive");
  const BoundingBox box = bounding_box(path);
  const double margin = 0.05 * size_px;
  const double extent = static_cast<double>(std::max<std::int64_t>({box.width(), box.height(), 1}));
  const double scale = (size_px - 2.0 * margin) / extent;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
      << size_px << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-linejoin=\"round\" stroke-width=\""
      << stroke_width << "\" points=\"";
  char buf[64];
  bool first = true;
  for (const auto& p : path.vertices()) {
    const double x = margin + static_cast<double>(p.x - box.min.x) * scale;
    const double y = size_px - margin - static_cast<double>(p.y - box.min.y) * scale;
    std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", first ? "" : " ", x, y);
    out << buf;
    first = false;
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

}  // namespace snowflake
