#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "snowflake/error.hpp"
#include "snowflake/report.hpp"
#include "snowflake/turtle.hpp"
#include "snowflake/words.hpp"

namespace {

using snowflake::Json;

// Writes to the file when a path is given, stdout otherwise.
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("failed writing '" + out_path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fibonacci snowflake polygons: construction, verification and complexity measures"};
  app.require_subcommand(1);

  const auto order_check =
      CLI::Range(0, snowflake::kDefaultOrderCap)
          .description("order cap " + std::to_string(snowflake::kDefaultOrderCap));

  // gen
  int gen_order = 0;
  std::string gen_kind = "snowflake";
  auto* gen = app.add_subcommand("gen", "print a turn word and its length");
  gen->add_option("--order", gen_order, "order n")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--word", gen_kind, "qn: the Fibonacci word q_n; snowflake: (q_{3n+1})^4 minus its last letter")
      ->check(CLI::IsMember({"qn", "snowflake"}));

  // trace
  std::optional<std::string> trace_word;
  bool trace_stdin = false;
  auto* trace = app.add_subcommand("trace", "trace a turn word and classify the path (JSON)");
  auto* word_opt = trace->add_option("--word", trace_word, "word over {L,R}");
  auto* stdin_opt = trace->add_flag("--stdin", trace_stdin, "read the word from the first line of stdin");
  word_opt->excludes(stdin_opt);

  // snowflake
  int sf_order = 0;
  auto* sf = app.add_subcommand("snowflake", "print the vertices of the order-n polygon (JSON)");
  sf->add_option("--order", sf_order)->required()->check(order_check);

  // verify
  int verify_max = 0;
  auto* verify = app.add_subcommand("verify", "check length, closure, simplicity and box laws");
  verify->add_option("--max-order", verify_max)->required()->check(order_check);

  // render
  int render_order = 0;
  std::string render_out;
  double stroke_width = 1.0;
  int size_px = 1024;
  auto* render = app.add_subcommand("render", "render the order-n polygon as SVG");
  render->add_option("--order", render_order)->required()->check(order_check);
  render->add_option("--out", render_out, "output .svg file")->required();
  render->add_option("--stroke-width", stroke_width)->check(CLI::PositiveNumber);
  render->add_option("--size", size_px, "canvas size in pixels")->check(CLI::PositiveNumber);

  // crofton, boxdim and report share a RunConfig
  snowflake::RunConfig config;
  std::string format = "json";
  std::optional<int> k_min;
  auto add_mc_options = [&](CLI::App* sub) {
    sub->add_option("--order", config.order)->required()->check(order_check);
    sub->add_option("--samples", config.samples, "accepted random lines")
        ->check(CLI::Range(std::uint64_t{1000}, std::uint64_t{1} << 40));
    sub->add_option("--seed", config.seed);
    sub->add_option("--workers", config.workers, "worker threads, 0 = all cores");
    sub->add_option("--out", config.output_path, "output file (default stdout)");
  };
  auto* crofton = app.add_subcommand("crofton", "random-line crossing statistics");
  add_mc_options(crofton);
  crofton->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* boxdim = app.add_subcommand("boxdim", "box-counting dimension of the normalized polygon");
  boxdim->add_option("--order", config.order)->required()->check(order_check);
  boxdim->add_option("--kmin", k_min)->check(CLI::PositiveNumber);
  boxdim->add_option("--kmax", config.k_max)->check(CLI::PositiveNumber);
  boxdim->add_option("--out", config.output_path);

  auto* report = app.add_subcommand("report", "full report for one order (JSON)");
  add_mc_options(report);
  report->add_option("--kmin", k_min)->check(CLI::PositiveNumber);
  report->add_option("--kmax", config.k_max)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  if (k_min) config.k_min = *k_min;

  try {
    if (*gen) {
      const snowflake::TurnWord w = gen_kind == "qn" ? snowflake::fibonacci_word(gen_order)
                                                     : snowflake::snowflake_word(gen_order);
      std::cout << w.str() << "\nlength " << w.size() << "\n";
    } else if (*trace) {
      std::string text;
      if (trace_stdin) {
        std::getline(std::cin, text);
      } else if (trace_word) {
        text = *trace_word;
      } else {
        throw snowflake::InvalidInput("trace: give --word or --stdin");
      }
      const auto w = snowflake::TurnWord::parse(trim(text));
      std::cout << dump(snowflake::path_json(w, snowflake::trace(w)));
    } else if (*sf) {
      const auto w = snowflake::snowflake_word(sf_order);
      std::cout << dump(snowflake::path_json(w, snowflake::trace(w)));
    } else if (*verify) {
      bool all_ok = true;
      std::cout << "order  segments  expected  closed  simple  box        side  ok\n";
      for (const auto& row : snowflake::verify_orders(verify_max)) {
        char line[160];
        std::snprintf(line, sizeof line, "%5d  %8llu  %8llu  %6s  %6s  %4lldx%-4lld  %5lld  %s\n",
                      row.order, static_cast<unsigned long long>(row.segments),
                      static_cast<unsigned long long>(row.expected_segments),
                      row.closed ? "yes" : "no", row.non_intersecting ? "yes" : "no",
                      static_cast<long long>(row.box_width), static_cast<long long>(row.box_height),
                      static_cast<long long>(row.expected_side), row.ok() ? "PASS" : "FAIL");
        std::cout << line;
        all_ok = all_ok && row.ok();
      }
      return all_ok ? 0 : 1;
    } else if (*render) {
      emit(snowflake::render_svg(snowflake::snowflake_path(render_order), size_px, stroke_width),
           render_out);
    } else if (*crofton) {
      const auto path = snowflake::snowflake_path(config.order);
      const auto result =
          snowflake::estimate_crossings(path, config.samples, config.seed, config.workers);
      if (format == "csv") {
        emit(snowflake::histogram_csv(result.histogram), config.output_path);
      } else {
        Json j{{"order", config.order}};
        j.update(snowflake::crofton_json(path, result, config));
        emit(dump(j), config.output_path);
      }
    } else if (*boxdim) {
      const auto path = snowflake::snowflake_path(config.order);
      emit(dump(snowflake::boxdim_json(path, config.order, config.k_min, config.k_max)),
           config.output_path);
    } else if (*report) {
      emit(dump(snowflake::build_report(config)), config.output_path);
    }
  } catch (const snowflake::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
