// One line per acceptance criterion: "PASS [n] ..." or "FAIL [n] ... : reason".

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "support/generators.hpp"
#include "support/snf_oracle.hpp"
#include "tribranch/cli.hpp"
#include "tribranch/spec_io.hpp"

using namespace tribranch;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "tribranch_acceptance";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CliRun {
  int code;
  std::string report;
  double seconds;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  args.insert(args.begin(), "--quiet");
  const auto t0 = Clock::now();
  const int code = run_cli(args, out, err);
  const double s = std::chrono::duration<double>(Clock::now() - t0).count();
  return {code, out.str(), s};
}

std::string fmt_seconds(double s) {
  std::ostringstream ss;
  ss.precision(3);
  ss << s << " s";
  return ss.str();
}

// --- criteria ---------------------------------------------------------------

std::string criterion_1() {
  const auto r = cli({"certify", fixture("f05_identity.json")});
  expect(r.code == 0, "exit code " + std::to_string(r.code));
  const auto j = Json::parse(r.report);
  const auto& cert = j["certificate"];
  expect(cert["verdict"] == "Essential", "verdict " + cert["verdict"].dump());
  expect(cert["lower_bound"] == 4, "lower bound " + cert["lower_bound"].dump());
  expect(j["inventory"]["degenerate_convention_used"] == true, "degenerate convention not reported");
  const std::vector<std::string> want{"Pass", "StructuralPass", "StructuralPass", "Pass"};
  for (int i = 0; i < 4; ++i)
    expect(cert["conditions"][i]["status"] == want[i],
           "condition (" + std::to_string(i + 1) + ") " + cert["conditions"][i]["status"].dump());
  expect(r.seconds < 1.0, "runtime " + fmt_seconds(r.seconds));
  return "F(0,5), id: Essential, (1) Pass (2) StructuralPass (3) StructuralPass (4) Pass in " +
         fmt_seconds(r.seconds);
}

std::string criterion_2() {
  const auto r = cli({"certify", fixture("f11_identity.json")});
  expect(r.code == 1, "exit code " + std::to_string(r.code));
  const auto j = Json::parse(r.report);
  const auto& cert = j["certificate"];
  expect(cert["lower_bound"] == 2, "lower bound " + cert["lower_bound"].dump());
  expect(cert["conditions"][3]["status"] == "NotCertified", "condition (4) " + cert["conditions"][3]["status"].dump());
  for (int i = 0; i < 3; ++i)
    expect(cert["conditions"][i]["status"] != "Fail" && cert["conditions"][i]["status"] != "NotCertified",
           "condition (" + std::to_string(i + 1) + ") " + cert["conditions"][i]["status"].dump());
  expect(r.seconds < 1.0, "runtime " + fmt_seconds(r.seconds));
  return "F(1,1), id: exit 1, (4) NotCertified, lower bound 2, nothing else fails, in " + fmt_seconds(r.seconds);
}

std::string criterion_3(testing::Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto page = testing::random_page(rng, 2, 4, 0);
    const auto spec = testing::random_spec(rng, page, false);
    const std::string tag = "F(" + std::to_string(page.genus) + "," + std::to_string(page.n_boundary) + "): ";
    expect(validate_monodromy(page, spec.monodromy).ok(), tag + "generated monodromy invalid");
    const auto tc = construct_naive(spec);
    expect(tc.branches.size() == 3, tag + std::to_string(tc.branches.size()) + " branches");
    for (const auto& b : tc.branches)
      expect(euler_char(b.sig) == euler_char(page), tag + "branch with chi != chi(F)");
    expect(tc.blocks.size() == 3, tag + std::to_string(tc.blocks.size()) + " blocks");
    expect(static_cast<int>(tc.circles.size()) == page.n_boundary, tag + std::to_string(tc.circles.size()) + " circles");
    for (const auto& c : tc.circles) expect(c.germs.size() == 3, tag + "circle without 3 germs");
    expect(check_local_models(tc).ok(), tag + "local models dirty");
  }
  return "20 random pages: 3 branches with chi = chi(F), 3 blocks, b circles, 3 germs each";
}

std::string criterion_4(testing::Rng& rng) {
  int longest = 0;
  int degenerate = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto page = testing::random_page(rng, 2, 4, -1);
    const auto spec = testing::random_spec(rng, page, true, testing::uniform(rng, 0, 3));
    const auto& path = *spec.pants_data;
    const int n = static_cast<int>(path.moves.size());
    const std::string tag = "F(" + std::to_string(page.genus) + "," + std::to_string(page.n_boundary) +
                            ") n=" + std::to_string(n) + ": ";
    expect(n <= 6, tag + "path too long");
    expect(validate_path(page, path, spec.monodromy).ok(), tag + "path invalid");
    longest = std::max(longest, n);

    const auto tc = construct_outer(spec);
    for (const auto& b : tc.branches) {
      const int chi = euler_char(b.sig);
      expect(chi == 0 || chi == -1 || chi == -2, tag + "branch with chi " + std::to_string(chi));
    }
    for (const auto& b : tc.blocks) expect(b.pi1_rank_bound <= 3, tag + "block rank bound > 3");

    // Circle count from the path alone.
    const auto levels = path_levels(path);
    long long sum_d = 0;
    int n_eff = n;
    if (n == 0) {
      n_eff = 1;
      sum_d = static_cast<long long>(levels[0].curves.size());
      ++degenerate;
    } else {
      for (int k = 0; k < n; ++k) sum_d += static_cast<long long>(common_curves(levels[k], levels[k + 1]).size());
    }
    const long long expected = 2 * sum_d + static_cast<long long>(n_eff) * page.n_boundary;
    expect(static_cast<long long>(tc.circles.size()) == expected,
           tag + std::to_string(tc.circles.size()) + " circles, expected " + std::to_string(expected));
    expect(tc.connected(), tag + "complex disconnected");
    expect(check_local_models(tc).ok(), tag + "local models dirty");
  }
  return "50 random specs (longest path " + std::to_string(longest) + ", " + std::to_string(degenerate) +
         " degenerate, all closures identity-compatible): taxonomy, rank bounds, circle count, connectivity, local models";
}

std::string criterion_5(testing::Rng& rng) {
  const auto t0 = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = testing::uniform(rng, 1, 5);
    const int cols = testing::uniform(rng, 1, 5);
    IntMatrix a(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) a(r, c) = testing::uniform(rng, -9, 9);
    const auto s = smith_normal_form(a);
    const std::string tag = "matrix " + std::to_string(trial) + ": ";
    expect(s.U * a * s.V == s.S, tag + "U A V != S");
    expect(testing::is_diagonal(s.S), tag + "S not diagonal");
    expect(testing::unimodular(s.U) && testing::unimodular(s.V), tag + "U or V not unimodular");
    expect(testing::divisibility_chain(s.invariant_factors), tag + "divisibility chain broken");
    expect(s.invariant_factors == testing::invariant_factors_by_minors(a), tag + "oracle disagrees");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  expect(secs < 10.0, "runtime " + fmt_seconds(secs));
  return "200 random matrices agree with the determinantal-divisor oracle in " + fmt_seconds(secs);
}

std::string criterion_6(testing::Rng& rng) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto page = testing::random_page(rng, 2, 4, 0);
    auto spec = testing::random_spec(rng, page, false);
    spec.monodromy.arc_variation = testing::random_arc_variation(rng, page);
    const int site = testing::uniform(rng, 1, page.n_boundary);
    const auto st = stabilize(spec, site);
    const std::string tag = "F(" + std::to_string(page.genus) + "," + std::to_string(page.n_boundary) +
                            ") site " + std::to_string(site) + ": ";
    expect(euler_char(st.spec.page) == euler_char(page) - 1, tag + "chi did not drop by 1");
    expect(validate_monodromy(st.spec.page, st.spec.monodromy).ok(), tag + "stabilized monodromy invalid");
    expect(h1_open_book(st.spec) == h1_open_book(spec),
           tag + to_string(h1_open_book(spec)) + " became " + to_string(h1_open_book(st.spec)));
  }
  return "20 random specs: chi drops by 1, H_1 unchanged";
}

std::string criterion_7() {
  const auto dir = scratch_dir();
  int compared = 0;
  for (const auto& entry : fs::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    const auto spec = entry.path().string();
    const auto stem = entry.path().stem().string();
    const std::vector<std::pair<std::vector<std::string>, std::string>> commands{
        {{"validate", spec}, ""},
        {{"homology", spec}, ""},
        {{"certify", spec, "--out", (dir / (stem + ".certify.json")).string()}, stem + ".certify.json"},
        {{"construct", spec, "--mode", "naive", "--out", (dir / (stem + ".naive.json")).string()}, stem + ".naive.json"},
        {{"construct", spec, "--mode", "outer", "--out", (dir / (stem + ".outer.json")).string()}, stem + ".outer.json"},
        {{"stabilize", spec, "--site", "1", "--out", (dir / (stem + ".stab.json")).string()}, stem + ".stab.json"},
    };
    for (const auto& [args, file] : commands) {
      fs::remove(dir / (file.empty() ? "none" : file));
      const auto first = cli(args);
      const std::string first_file = file.empty() ? "" : slurp(dir / file);
      fs::remove(dir / (file.empty() ? "none" : file));
      const auto second = cli(args);
      const std::string second_file = file.empty() ? "" : slurp(dir / file);
      const std::string what = args[0] + " " + entry.path().filename().string();
      expect(first.code == second.code, what + ": exit codes differ");
      expect(first.code >= 0 && first.code <= 2, what + ": exit code " + std::to_string(first.code));
      expect(first.report == second.report, what + ": reports differ");
      expect(first_file == second_file, what + ": output files differ");
      ++compared;
    }
  }
  expect(compared > 0, "no fixtures found");
  return std::to_string(compared) + " command runs repeated with byte-identical reports and files";
}

}  // namespace

int main() {
  testing::Rng rng(testing::seed());
  const std::vector<std::pair<int, std::function<std::string()>>> criteria{
      {1, criterion_1},
      {2, criterion_2},
      {3, [&] { return criterion_3(rng); }},
      {4, [&] { return criterion_4(rng); }},
      {5, [&] { return criterion_5(rng); }},
      {6, [&] { return criterion_6(rng); }},
      {7, criterion_7},
  };
  int failures = 0;
  for (const auto& [n, check] : criteria) {
    try {
      std::cout << "PASS [" << n << "] " << check() << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL [" << n << "] " << f.why << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL [" << n << "] exception: " << e.what() << "\n";
    }
  }
  std::cout << "seed " << testing::seed() << ", " << (7 - failures) << "/7 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
