#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "amd/amdcheck.hpp"
#include "amd/fixtures.hpp"
#include "amd/io.hpp"
#include "amd/varieties.hpp"

using namespace amd;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kInputError = 2;

struct Common {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::uint32_t prime = kDefaultPrime;
  std::string window;
  bool progress = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--seed", c.seed, "Seed for random choices");
  sub->add_option("--prime", c.prime, "Characteristic for generated inputs (scrolls, fixtures)");
  sub->add_flag("--progress", c.progress, "Per-degree progress on stderr");
}

DegreeWindow parse_window(const std::string& text) {
  DegreeWindow w;
  if (text.empty()) return w;
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error("--window expects lo..hi");
  try {
    w.lo = std::stoi(text.substr(0, dots));
    w.hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw Error("--window expects integers lo..hi");
  }
  if (w.lo > w.hi) throw Error("--window: lo exceeds hi");
  return w;
}

void check_prime(std::uint32_t p) {
  if (p <= 2 || !is_prime(p)) throw Error("--prime must be an odd prime below 2^31");
}

bool is_fixture(const std::string& s) {
  for (const auto& f : fixture_registry())
    if (f.name == s) return true;
  return false;
}

// A fixture name, a scroll spec such as "S(2,2,6)+vertex:0", or an ideal file.
GradedIdeal load_input(const std::string& source, std::uint32_t prime) {
  if (is_fixture(source)) return build_fixture(find_fixture(source), prime).ideal;
  if (source.rfind("S(", 0) == 0) return scroll_ideal(ScrollSpec::parse(source), prime).ideal;
  return read_ideal_file(source);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

int cmd_scroll(const std::string& spec_text, const Common& c) {
  check_prime(c.prime);
  const Scroll s = scroll_ideal(ScrollSpec::parse(spec_text), c.prime);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["spec"] = s.spec.str();
    j["dim"] = s.spec.dim();
    j["degree"] = s.spec.degree();
    j["vertex_vars"] = s.vertex_vars;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < 2; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int col = 0; col < s.matrix.cols(); ++col) row.push_back(s.matrix.entry(r, col).str());
      rows.push_back(row);
    }
    j["matrix"] = rows;
    j["ideal"] = nlohmann::ordered_json::parse(ideal_to_json(s.ideal));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# " << s.spec.str() << ": dim " << s.spec.dim() << ", degree " << s.spec.degree() << "\n";
    std::cout << "# matrix\n";
    std::istringstream m(s.matrix.str());
    for (std::string line; std::getline(m, line);) std::cout << "#   " << line << "\n";
    std::cout << format_ideal(s.ideal);
  }
  return kPass;
}

int cmd_project(const std::string& source, const std::string& point_text, bool random_point,
                std::optional<int> pivot, const std::string& out_path, const Common& c) {
  check_prime(c.prime);
  const GradedIdeal I = load_input(source, c.prime);
  if (random_point == !point_text.empty()) throw Error("give exactly one of --point and --random-point");
  const Point p = random_point ? random_point_off(I, c.seed) : parse_point(point_text, I.nvars(), I.ring()->prime());
  const Projection proj = project_from_point(I, p, pivot);
  if (c.progress) std::cerr << "projected from " << point_str(p, I.ring()->prime()) << "\n";
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["point"] = point_str(p, I.ring()->prime());
    j["pivot"] = proj.coords.pivot;
    j["ideal"] = nlohmann::ordered_json::parse(ideal_to_json(proj.ideal));
    emit(j.dump(2) + "\n", out_path);
  } else {
    emit("# projection from " + point_str(p, I.ring()->prime()) + "\n" + format_ideal(proj.ideal), out_path);
  }
  return kPass;
}

int cmd_analyze(const std::string& source, bool scroll_projection, bool non_normal, bool no_deficiency, bool gin,
                const Common& c) {
  check_prime(c.prime);
  const GradedIdeal I = load_input(source, c.prime);
  AnalysisOptions o;
  o.window = parse_window(c.window);
  o.seed = c.seed;
  o.progress = c.progress;
  o.resolve = !gin;
  o.deficiency = !no_deficiency;
  o.scroll_projection = scroll_projection;
  o.non_normal = non_normal;
  if (is_fixture(source)) {
    const Fixture& fx = find_fixture(source);
    o.scroll_projection |= fx.scroll.has_value() && !fx.point.empty();
    o.non_normal |= fx.non_normal;
  }
  const AnalysisReport rep = analyze(I, o);
  std::cout << (c.format == "json" ? rep.to_json() + "\n" : rep.to_text());
  return rep.all_pass() ? kPass : kCheckFailure;
}

int cmd_betti(const std::string& source, const Common& c) {
  check_prime(c.prime);
  const GradedIdeal I = load_input(source, c.prime);
  ResolutionOptions ro;
  ro.progress = c.progress;
  const MinimalResolution M = minimalize(free_resolution(I, ro));
  std::cout << (c.format == "json" ? M.betti.to_json() + "\n" : M.betti.to_text());
  return kPass;
}

int cmd_verify(std::vector<std::string> names, bool all, int jobs, const std::vector<std::string>& overrides,
               const Common& c) {
  check_prime(c.prime);
  if (all && !names.empty()) throw Error("give fixture names or --all, not both");
  if (all)
    for (const auto& f : fixture_registry())
      if (f.core) names.push_back(f.name);
  if (names.empty()) throw Error("nothing to verify: give fixture names or --all");
  std::vector<Fixture> fixtures;
  for (const auto& n : names) {
    Fixture f = find_fixture(n);
    for (const auto& o : overrides) override_expectation(f.expect, o);
    fixtures.push_back(std::move(f));
  }
  VerifyOptions vo;
  vo.prime = c.prime;
  vo.seed = c.seed;
  vo.window = parse_window(c.window);
  vo.progress = c.progress;

  std::vector<std::optional<VerifyResult>> results(fixtures.size());
  std::vector<std::string> errors(fixtures.size());
  std::atomic<std::size_t> next{0};
  std::mutex log;
  auto worker = [&] {
    for (std::size_t k; (k = next++) < fixtures.size();) {
      {
        std::lock_guard<std::mutex> lock(log);
        std::cerr << "verifying " << fixtures[k].name << " ...\n";
      }
      try {
        results[k] = verify_fixture(fixtures[k], vo);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
      std::lock_guard<std::mutex> lock(log);
      if (results[k]) std::cerr << fixtures[k].name << " done in " << results[k]->seconds << " s\n";
    }
  };
  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(fixtures.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool ok = true;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < fixtures.size(); ++k) {
    if (!results[k]) {
      ok = false;
      if (c.format == "json") j.push_back({{"fixture", fixtures[k].name}, {"pass", false}, {"error", errors[k]}});
      else std::cout << "== " << fixtures[k].name << ": ERROR " << errors[k] << "\n";
      continue;
    }
    ok &= results[k]->pass();
    if (c.format == "json") j.push_back(nlohmann::ordered_json::parse(results[k]->to_json()));
    else std::cout << results[k]->to_text();
  }
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << (ok ? "ALL PASS" : "FAILURES") << " (" << fixtures.size() << " fixtures)\n";
  return ok ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Varieties of almost minimal degree: scrolls, projections, Betti tables and checks"};
  app.require_subcommand(1);
  Common common;

  auto* scroll = app.add_subcommand("scroll", "Print the matrix and ideal of a rational normal scroll");
  std::string spec;
  scroll->add_option("spec", spec, "e.g. S(2,2,6) or S(1,1,2)+vertex:0")->required();
  add_common(scroll, common);

  auto* project = app.add_subcommand("project", "Project a variety from a point");
  std::string project_src, point, out_path;
  bool random_point = false;
  std::optional<int> pivot;
  project->add_option("input", project_src, "Scroll spec, fixture name or ideal file")->required();
  project->add_option("--point", point, "e<k> or comma-separated coordinates");
  project->add_flag("--random-point", random_point, "Seeded random point off the variety");
  project->add_option("--pivot", pivot, "Coordinate eliminated by the projection");
  project->add_option("-o,--output", out_path, "Write the projected ideal here");
  add_common(project, common);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analysis report for an ideal");
  std::string analyze_src;
  bool scroll_projection = false, non_normal = false, no_deficiency = false, gin = false;
  analyze_cmd->add_option("input", analyze_src, "Ideal file, scroll spec or fixture name")->required();
  analyze_cmd->add_option("--window", common.window, "Degree window lo..hi for deficiency modules");
  analyze_cmd->add_flag("--scroll-projection", scroll_projection, "Input is a projection of a scroll");
  analyze_cmd->add_flag("--non-normal", non_normal, "Input is known to be non-normal");
  analyze_cmd->add_flag("--no-deficiency", no_deficiency, "Skip the deficiency modules");
  analyze_cmd->add_flag("--gin", gin, "Depth and regularity from a generic initial ideal, no resolution");
  add_common(analyze_cmd, common);

  auto* betti = app.add_subcommand("betti", "Graded Betti table");
  std::string betti_src;
  betti->add_option("input", betti_src, "Ideal file, scroll spec or fixture name")->required();
  add_common(betti, common);

  auto* verify = app.add_subcommand("verify", "Check fixtures against their expected values");
  std::vector<std::string> names, overrides;
  bool all = false;
  int jobs = 1;
  verify->add_option("fixtures", names, "Fixture names");
  verify->add_flag("--all", all, "All core fixtures");
  verify->add_option("--jobs", jobs, "Fixtures verified in parallel")->check(CLI::PositiveNumber);
  verify->add_option("--window", common.window, "Degree window lo..hi for deficiency modules");
  verify->add_option("--expect", overrides, "Override an expected value, key=value");
  add_common(verify, common);

  auto* list = app.add_subcommand("fixtures", "List the fixture registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*scroll) return cmd_scroll(spec, common);
    if (*project) return cmd_project(project_src, point, random_point, pivot, out_path, common);
    if (*analyze_cmd) return cmd_analyze(analyze_src, scroll_projection, non_normal, no_deficiency, gin, common);
    if (*betti) return cmd_betti(betti_src, common);
    if (*verify) return cmd_verify(names, all, jobs, overrides, common);
    if (*list) {
      for (const auto& f : fixture_registry())
        std::cout << f.name << (f.core ? "  [core]  " : "          ") << f.description << "\n";
      return kPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
