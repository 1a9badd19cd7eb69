#include <doctest.h>

#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "snowflake/error.hpp"
#include "snowflake/report.hpp"

using namespace snowflake;

TEST_CASE("render_svg is well-formed with one polyline per path") {
  for (int n : {0, 1, 3}) {
    const auto path = snowflake_path(n);
    const std::string svg = render_svg(path, 512, 2.0);
    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    REQUIRE_NOTHROW(boost::property_tree::read_xml(in, tree));
    const auto& root = tree.get_child("svg");
    CHECK(root.count("polyline") == 1);
    const std::string points = root.get<std::string>("polyline.<xmlattr>.points");
    std::istringstream ps(points);
    std::size_t count = 0;
    for (std::string tok; ps >> tok;) ++count;
    CHECK(count == path.vertex_count());
  }
}

TEST_CASE("render_svg flips y and keeps a 5% margin") {
  const std::string svg = render_svg(trace(TurnWord::parse("LLL")), 100, 1.0);
  // (0,0) maps to the bottom-left corner inside the margin
  CHECK(svg.find("points=\"5.000,95.000 95.000,95.000 95.000,5.000 5.000,5.000 5.000,95.000\"") !=
        std::string::npos);
  CHECK_THROWS_AS(render_svg(trace(TurnWord{}), 0, 1.0), InvalidInput);
}

TEST_CASE("histogram_csv") {
  CrossingHistogram h;
  h.counts = {{4, 1}, {2, 3}};
  h.total_samples = 4;
  CHECK(histogram_csv(h) == "j,count,probability\n2,3,0.75\n4,1,0.25\n");
}

TEST_CASE("verify_orders") {
  const auto rows = verify_orders(5);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) CHECK(r.ok());
  CHECK(rows[5].segments == 4 * 987);
  CHECK(rows[5].expected_side == 139);
  CHECK_THROWS_AS(verify_orders(13), InvalidInput);
}

TEST_CASE("path_json") {
  const auto w = TurnWord::parse("LLL");
  const Json j = path_json(w, trace(w));
  CHECK(j["word_length"] == 3);
  CHECK(j["segments"] == 4);
  CHECK(j["closed"] == true);
  CHECK(j["non_intersecting"] == true);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["vertices"][2] == Json::array({1, 1}));
}

TEST_CASE("build_report fields and determinism") {
  RunConfig cfg;
  cfg.order = 3;
  cfg.samples = 8192;
  cfg.seed = 7;
  cfg.workers = 1;
  const Json a = build_report(cfg);
  cfg.workers = 3;
  const Json b = build_report(cfg);
  CHECK(a.dump() == b.dump());

  CHECK(a["config"]["seed"] == 7);
  CHECK(a["config"]["samples"] == 8192);
  CHECK(a["path"]["length"]["value"] == 4.0 * 55);
  CHECK(a["path"]["closed"] == true);
  CHECK(a["path"]["pell_check"] == true);
  CHECK(a["hull"]["perimeter"]["unit"] == "lattice units");
  CHECK(a["crofton"]["entropy"]["unit"] == "nats");
  CHECK(a["crofton"]["samples"] == 8192);
  CHECK(a["growth"]["orders"].size() == 4);
  CHECK(a["dimension"]["fit"].is_null());  // order 3 admits k <= 2 only
  CHECK(a["dimension"]["series"].size() == 1);

  cfg.order = 13;
  CHECK_THROWS_AS(build_report(cfg), InvalidInput);
}
