// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every tolerance is a constant below.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bbwu/classify.hpp"
#include "bbwu/ulrich.hpp"
#include "cli.hpp"
#include "oracles.hpp"

using namespace bbwu;
using nlohmann::json;

namespace {

constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 1.0;
constexpr double kLimit3 = 1.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit5 = 30.0;
constexpr double kLimit6 = 10.0;
constexpr double kLimit7 = 5.0;
constexpr double kLimit8 = 120.0;
constexpr double kLimit9 = 1.0;

constexpr Entry kMaxDim = 100;           // spaces covered by items 5 and 6
constexpr Entry kMaxDimHilbert = 12;     // spaces covered by item 8(d)
constexpr std::uint64_t kSeed = 20121;

const std::vector<GrassmannSpace> kOracleSuite = {
    {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {2, 7},
};

// Collects failures for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

std::string name(const GrassmannSpace& s) {
  return "Gr(" + std::to_string(s.k()) + "," + std::to_string(s.n()) + ")";
}

HomogeneousBundle bundle(const GrassmannSpace& s, const std::string& beta, const std::string& gamma) {
  return {s, GLWeight(cli::parse_int_list(beta, "beta")), GLWeight(cli::parse_int_list(gamma, "gamma"))};
}

std::vector<GrassmannSpace> spaces_up_to(Entry max_dim) {
  std::vector<GrassmannSpace> out;
  for (Entry q = 1; q <= max_dim; ++q)
    for (Entry p = 1; p * q <= max_dim; ++p)
      out.emplace_back(static_cast<int>(q - 1), static_cast<int>(q - 1 + p));
  return out;
}

// d! / prod of hook lengths over the (k+1) x (n-k) rectangle.
BigInt rectangle_hook_count(const GrassmannSpace& s) {
  const Entry rows = s.quotient_rank(), cols = s.sub_rank();
  BigInt num = 1, den = 1;
  for (Entry m = 2; m <= rows * cols; ++m) num *= m;
  for (Entry i = 0; i < rows; ++i)
    for (Entry j = 0; j < cols; ++j) den *= (rows - 1 - i) + (cols - 1 - j) + 1;
  return num / den;
}

// h^0 of an initialized bundle straight from Borel-Weil: the concatenated
// weight must already be dominant.
BigInt borel_weil_h0(const HomogeneousBundle& b) {
  std::vector<Entry> w(b.beta().entries().begin(), b.beta().entries().end());
  w.insert(w.end(), b.gamma().entries().begin(), b.gamma().entries().end());
  if (!std::is_sorted(w.begin(), w.end(), std::greater<>())) return 0;
  return weyl_dim(GLWeight(w), static_cast<std::size_t>(b.space().ambient_rank()));
}

struct Cli {
  int exit = -1;
  std::string out;
};

Cli run_cli(const std::string& args) {
  Cli r;
  const std::string cmd = "'" BBWU_CLI_PATH "' --json " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json weights_json(const HomogeneousBundle& b) {
  return {{"beta", cli::to_json(b.beta())}, {"gamma", cli::to_json(b.gamma())}};
}

// Bundles handed to item 8(e) by items 4 to 6.
std::vector<HomogeneousBundle> g_touched;

// ---------------------------------------------------------------------------

Check criterion1() {
  Check c;
  const GrassmannSpace s(5, 17);
  const HomogeneousBundle expected = bundle(s, "55,53,33,31,11,9", "9,9,9,6,6,6,3,3,3,0,0,0");
  const HomogeneousBundle built = construct_ulrich(s, {{2, 3}, {3, 4}});
  c.expect(built == expected, "construct_ulrich(Gr(5,17), (2,3), (3,4))");
  const UlrichVerdict v = is_ulrich(built);
  c.expect(v.is_ulrich && v.initialized && !v.witness, "is_ulrich on the Gr(5,17) bundle");
  const auto rows = cohomology_table(built, -72, -1);
  c.expect(rows.size() == 72, "72 window twists");
  for (const auto& row : rows) c.expect(row.report.vanishes(), "twist " + std::to_string(row.twist) + " vanishes");

  const Cli construct = run_cli("ulrich construct --k 5 --n 17 --ks 2,3 --ns 3,4");
  c.expect(construct.exit == 0, "CLI construct exit code");
  if (construct.exit == 0) {
    const json r = json::parse(construct.out)["results"];
    c.expect(r["beta"] == cli::to_json(expected.beta()) && r["gamma"] == cli::to_json(expected.gamma()),
             "CLI construct weights");
  }
  const Cli verify = run_cli("ulrich verify --k 5 --n 17 --beta 55,53,33,31,11,9 --gamma 9^3,6^3,3^3,0^3");
  c.expect(verify.exit == 0 && json::parse(verify.out)["results"]["is_ulrich"] == true, "CLI verify");
  const Cli table = run_cli("table --k 5 --n 17 --beta 55,53,33,31,11,9 --gamma 9^3,6^3,3^3,0^3 --from -72 --to -1");
  c.expect(table.exit == 0, "CLI table exit code");
  if (table.exit == 0) {
    const json t = json::parse(table.out)["results"]["rows"];
    c.expect(t.size() == 72, "CLI table row count");
    for (const auto& row : t) c.expect(row["vanishes"] == true, "CLI table row vanishes");
  }
  return c;
}

Check criterion2() {
  Check c;
  const GrassmannSpace s(1, 21);
  const std::vector<HomogeneousBundle> printed = {
      bundle(s, "19,0", "0^20"),
      bundle(s, "19,10", "10^10,0^10"),
      bundle(s, "19,15", "15^5,10^5,5^5,0^5"),
      bundle(s, "19,16", "16^4,12^4,8^4,4^4,0^4"),
      bundle(s, "19,18", "18^2,16^2,14^2,12^2,10^2,8^2,6^2,4^2,2^2,0^2"),
      bundle(s, "19,19", "19,18,17,16,15,14,13,12,11,10,9,8,7,6,5,4,3,2,1,0"),
  };
  const auto found = enumerate_ulrich(s);
  c.expect(found == printed, "enumerate_ulrich(Gr(1,21)) equals the printed list");
  c.expect(count_ulrich(s) == 6, "count_ulrich == 6");
  std::size_t divisors = 0;
  for (int m = 1; m <= 20; ++m) divisors += (20 % m == 0);
  c.expect(divisors == 6 && divisor_count(20) == 6, "divisor count of 20");
  for (const auto& b : printed) c.expect(is_ulrich(b).is_ulrich, "printed bundle is Ulrich");

  const Cli list = run_cli("ulrich list --k 1 --n 21");
  c.expect(list.exit == 0, "CLI list exit code");
  if (list.exit == 0) {
    const json r = json::parse(list.out)["results"];
    c.expect(r["count"] == 6, "CLI list count");
    json got = json::array(), want = json::array();
    for (const auto& b : r["bundles"]) got.push_back({{"beta", b["beta"]}, {"gamma", b["gamma"]}});
    for (const auto& b : printed) want.push_back(weights_json(b));
    c.expect(got == want, "CLI list bundles");
  }
  return c;
}

Check criterion3() {
  Check c;
  const GrassmannSpace s(11, 29);
  const HomogeneousBundle first = bundle(s, "187,186,177,176,119,118,109,108,51,50,41,40",
                                         "40,40,38,38,36,36,22,22,20,20,18,18,4,4,2,2,0,0");
  const HomogeneousBundle second = bundle(s, "187,186,177,176,167,166,85,84,75,74,65,64",
                                          "64,64,62,62,60,60,34,34,32,32,30,30,4,4,2,2,0,0");
  const auto a = construct_ulrich(s, {{2, 2, 3}, {2, 3, 3}});
  const auto b = construct_ulrich(s, {{2, 3, 2}, {2, 3, 3}});
  c.expect(a == first, "((2,2,3),(2,3,3))");
  c.expect(b == second, "((2,3,2),(2,3,3))");
  c.expect(a != b, "the two bundles differ");
  c.expect(is_ulrich(a).is_ulrich && is_ulrich(b).is_ulrich, "both are Ulrich");
  return c;
}

Check criterion4() {
  Check c;
  for (const auto& s : kOracleSuite) {
    const auto searched = brute_force_classify(s);
    const auto built = enumerate_ulrich(s);
    const std::set<HomogeneousBundle, decltype(&bundle_less)> a(searched.begin(), searched.end(), &bundle_less);
    const std::set<HomogeneousBundle, decltype(&bundle_less)> b(built.begin(), built.end(), &bundle_less);
    c.expect(a.size() == searched.size() && b.size() == built.size(), name(s) + " no duplicates");
    c.expect(std::equal(a.begin(), a.end(), b.begin(), b.end()), name(s) + " search equals construction");

    CandidateStream stream(s);
    std::vector<Entry> merged;
    while (stream.next(merged)) g_touched.push_back(stream.to_bundle(merged));
  }
  return c;
}

Check criterion5() {
  Check c;
  for (const auto& s : spaces_up_to(kMaxDim)) {
    const BigInt deg = rectangle_hook_count(s);
    c.expect(deg == degree(s), name(s) + " degree");
    for (const auto& b : enumerate_ulrich(s)) {
      const HomogeneousBundle init = initialize(b).bundle;
      const BigInt want = deg * rank(b);
      c.expect(borel_weil_h0(init) == want, name(s) + " h0 = degree * rank (Borel-Weil)");
      c.expect(h0(init) == want, name(s) + " h0 = degree * rank (library)");
      g_touched.push_back(b);
    }
  }
  return c;
}

Check criterion6() {
  Check c;
  for (const auto& s : spaces_up_to(kMaxDim)) {
    const ExactRational want = ExactRational(s.k() * (s.n() - s.k() - 1), 2) * rectangle_hook_count(s);
    c.expect(ulrich_slope(s) == want, name(s) + " ulrich_slope");
    for (const auto& b : enumerate_ulrich(s)) {
      c.expect(slope(b) == want, name(s) + " slope");
      g_touched.push_back(b);
    }
  }
  return c;
}

Check criterion7() {
  Check c;
  for (const auto& s : kOracleSuite) {
    BigInt least = -1;
    for (const auto& b : enumerate_ulrich(s)) {
      const BigInt r = rank(b);
      if (least < 0 || r < least) least = r;
    }
    BigInt power = 1;
    for (int i = 0; i < s.k() * (s.k() + 1) / 2; ++i) power *= s.n() - s.k();
    c.expect(least == power, name(s) + " enumerated minimum = (n-k)^(k(k+1)/2)");
    c.expect(min_ulrich_rank_product_form(s) == power, name(s) + " product form");
    c.expect(min_ulrich_rank_power_form(s) == power, name(s) + " power form");
    c.expect(min_ulrich_rank(s) == power, name(s) + " min_ulrich_rank");
  }
  return c;
}

Check criterion8() {
  Check c;
  std::mt19937_64 rng(kSeed);
  auto uniform = [&](Entry lo, Entry hi) { return std::uniform_int_distribution<Entry>(lo, hi)(rng); };

  // (a) hook content against Weyl
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 8));
    const auto parts = oracle::random_non_increasing(rng, static_cast<std::size_t>(uniform(0, static_cast<Entry>(r))), 0, 12);
    const Partition p(parts);
    c.expect(hook_content_dim(p, r) == weyl_dim(p.to_weight(r), r), "(a) hook content == Weyl");
  }
  // (b) shift invariance
  for (int i = 0; i < 1000; ++i) {
    const std::size_t r = static_cast<std::size_t>(uniform(1, 8));
    const GLWeight w(oracle::random_non_increasing(rng, r, -12, 12));
    c.expect(weyl_dim(w, r) == weyl_dim(shift(w, uniform(-50, 50)), r), "(b) shift invariance");
  }
  // (c) Serre duality with canonical bundle O(-n-1)
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(uniform(1, 8));
    const int k = static_cast<int>(uniform(0, std::min(3, n - 1)));
    const GrassmannSpace s(k, n);
    const HomogeneousBundle b(s, GLWeight(oracle::random_non_increasing(rng, s.quotient_rank(), -5, 5)),
                              GLWeight(oracle::random_non_increasing(rng, s.sub_rank(), -5, 5)));
    const Entry t = uniform(-10, 10);
    const CohomologyReport lhs = cohomology(b, t);
    const CohomologyReport rhs = cohomology(dual(b), -t - (n + 1));
    bool ok = lhs.vanishes() == rhs.vanishes();
    if (ok && !lhs.vanishes()) {
      ok = lhs.group->degree + rhs.group->degree == s.dimension() && lhs.group->dimension == rhs.group->dimension;
    }
    c.expect(ok, "(c) Serre duality on " + name(s));
  }
  // (d) Hilbert polynomial of the Pluecker embedding
  for (const auto& s : spaces_up_to(kMaxDimHilbert)) {
    const Entry d = s.dimension();
    std::vector<BigInt> chi;
    for (Entry t = 0; t <= d + 1; ++t) chi.push_back(euler_characteristic(HomogeneousBundle::structure_sheaf(s), t));
    const BigInt syt = oracle::rectangle_syt(static_cast<int>(s.quotient_rank()), static_cast<int>(s.sub_rank()));
    c.expect(oracle::forward_difference(chi, static_cast<std::size_t>(d + 1)) == 0, name(s) + " (d) order d+1");
    c.expect(oracle::forward_difference(chi, static_cast<std::size_t>(d)) == syt, name(s) + " (d) order d");
    c.expect(degree(s) == syt, name(s) + " (d) degree");
  }
  // (e) window criterion, diagonal criterion and a direct collision test agree
  for (const auto& b : g_touched) {
    const bool window = is_ulrich(b).is_ulrich;
    c.expect(window == satisfies_diagonal_criterion(b), name(b.space()) + " (e) diagonal criterion");
    c.expect(window == oracle::window_ulrich(initialize(b).bundle), name(b.space()) + " (e) collision oracle");
  }
  c.expect(!g_touched.empty(), "(e) items 4-6 produced bundles");
  return c;
}

Check criterion9() {
  Check c;
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k < n; ++k)
      c.expect(degree(GrassmannSpace(k, n)) == degree(GrassmannSpace(n - k - 1, n)),
               "degree symmetry " + name(GrassmannSpace(k, n)));
  c.expect(degree(GrassmannSpace(1, 3)) == 2, "degree Gr(1,3)");
  c.expect(degree(GrassmannSpace(1, 4)) == 5, "degree Gr(1,4)");
  c.expect(degree(GrassmannSpace(2, 5)) == 42, "degree Gr(2,5)");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Gr(5,17) construction and vanishing window", kLimit1, criterion1},
      {2, "Gr(1,21) enumeration, six bundles", kLimit2, criterion2},
      {3, "Gr(11,29) pair of distinct bundles", kLimit3, criterion3},
      {4, "exhaustive search equals construction", kLimit4, criterion4},
      {5, "h0 = degree * rank for d <= 100", kLimit5, criterion5},
      {6, "slope law for d <= 100", kLimit6, criterion6},
      {7, "minimal rank closed forms", kLimit7, criterion7},
      {8, "property suites (a)-(e)", kLimit8, criterion8},
      {9, "degree formula symmetry and values", kLimit9, criterion9},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    std::string crash;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.limit;
    const bool pass = crash.empty() && result.ok() && in_time;
    failed += !pass;
    std::ostringstream line;
    line << (pass ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.title << "  (" << result.count << " checks, "
         << std::fixed << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << cr.limit << " s)";
    std::cout << line.str() << "\n";
    if (!crash.empty()) std::cout << "      exception: " << crash << "\n";
    if (!in_time) std::cout << "      over the time limit\n";
    for (const auto& f : result.failures) std::cout << "      failed: " << f << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
