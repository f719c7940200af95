#include "cli.hpp"

#include <chrono>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bbwu/classify.hpp"

namespace bbwu::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parsing and encoding

namespace {

Entry parse_entry(std::string_view token, std::string_view arg) {
  Entry v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw UsageError(std::string(arg) + ": '" + std::string(token) + "' is not an integer");
  }
  return v;
}

}  // namespace

std::vector<Entry> parse_int_list(std::string_view text, std::string_view arg) {
  std::vector<Entry> out;
  if (text.empty()) throw UsageError(std::string(arg) + ": empty list");
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view token = text.substr(start, comma - start);
    if (token.empty()) throw UsageError(std::string(arg) + ": empty entry in '" + std::string(text) + "'");
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      const Entry value = parse_entry(token.substr(0, caret), arg);
      const Entry times = parse_entry(token.substr(caret + 1), arg);
      if (times < 1) throw UsageError(std::string(arg) + ": repetition count must be positive");
      out.insert(out.end(), static_cast<std::size_t>(times), value);
    } else {
      out.push_back(parse_entry(token, arg));
    }
    start = comma + 1;
  }
  return out;
}

json to_json(const BigInt& v) { return v.str(); }

json to_json(const ExactRational& v) {
  return {{"num", numerator(v).str()}, {"den", denominator(v).str()}};
}

json to_json(const GLWeight& w) { return json(std::vector<Entry>(w.entries().begin(), w.entries().end())); }

json to_json(const CohomologyReport& r) {
  if (r.vanishes()) return {{"vanishes", true}};
  return {{"vanishes", false},
          {"degree", r.group->degree},
          {"weight", to_json(r.group->weight)},
          {"dimension", to_json(r.group->dimension)}};
}

json to_json(const UlrichVerdict& v) {
  json out = {{"is_ulrich", v.is_ulrich}, {"initialized", v.initialized}, {"init_shift", v.init_shift}};
  if (v.witness) {
    out["witness"] = {{"twist", -v.witness->twist},
                      {"degree", v.witness->degree},
                      {"dimension", to_json(v.witness->dimension)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json bundle_summary(const HomogeneousBundle& b) {
  return {{"beta", to_json(b.beta())},
          {"gamma", to_json(b.gamma())},
          {"rank", to_json(rank(b))},
          {"slope", to_json(slope(b))}};
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Commands

namespace {

std::string fmt_list(std::span<const Entry> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string fmt_list(const std::vector<int>& v) {
  return fmt_list(std::vector<Entry>(v.begin(), v.end()));
}

std::string fmt_rational(const ExactRational& q) {
  return denominator(q) == 1 ? numerator(q).str() : q.str();
}

std::string fmt_bundle(const HomogeneousBundle& b) {
  return "S^" + fmt_list(b.beta().entries()) + " Q (x) S^" + fmt_list(b.gamma().entries()) + " S*";
}

std::string fmt_report(const CohomologyReport& r) {
  if (r.vanishes()) return "all cohomology vanishes";
  return "H^" + std::to_string(r.group->degree) + " = S^" + fmt_list(r.group->weight.entries()) +
         " V*, dimension " + r.group->dimension.str();
}

// Everything a subcommand produces. `text` is the human rendering.
struct Outcome {
  json inputs = json::object();
  json results = json::object();
  std::string text;
  int exit = kOk;
};

struct SpaceArgs {
  int k = -1;
  int n = -1;

  void add_to(CLI::App* sub) {
    sub->add_option("--k", k, "projective dimension of the planes")->required();
    sub->add_option("--n", n, "dimension of the ambient projective space")->required();
  }
  GrassmannSpace space() const { return {k, n}; }
};

struct WeightArgs {
  std::string beta;
  std::string gamma;

  void add_to(CLI::App* sub) {
    sub->add_option("--beta", beta, "Q-weight, e.g. 3,1,0 or 10^2,0 (default zeros)");
    sub->add_option("--gamma", gamma, "S*-weight (default zeros)");
  }

  HomogeneousBundle bundle(const GrassmannSpace& s) const {
    auto weight = [](const std::string& text, std::size_t len, const char* arg) {
      std::vector<Entry> v = text.empty() ? std::vector<Entry>(len, 0) : parse_int_list(text, arg);
      if (v.size() != len) {
        throw UsageError(std::string(arg) + ": expected " + std::to_string(len) + " entries, got " +
                         std::to_string(v.size()));
      }
      try {
        return GLWeight(std::move(v));
      } catch (const Error& e) {
        throw UsageError(std::string(arg) + ": " + e.what());
      }
    };
    return {s, weight(beta, s.quotient_rank(), "--beta"), weight(gamma, s.sub_rank(), "--gamma")};
  }
};

json space_inputs(const SpaceArgs& a) { return {{"k", a.k}, {"n", a.n}}; }

json bundle_inputs(const HomogeneousBundle& b) {
  return {{"k", b.space().k()}, {"n", b.space().n()}, {"beta", to_json(b.beta())}, {"gamma", to_json(b.gamma())}};
}

Outcome cmd_invariants(const SpaceArgs& a) {
  const GrassmannSpace s = a.space();
  Outcome o;
  o.inputs = space_inputs(a);
  const BigInt deg = degree(s);
  const ExactRational mu = ulrich_slope(s);
  const BigInt minrank = min_ulrich_rank(s);
  const std::size_t count = count_ulrich(s);
  o.results = {{"dimension", variety_dimension(s)},
               {"degree", to_json(deg)},
               {"ulrich_slope", to_json(mu)},
               {"min_ulrich_rank", to_json(minrank)},
               {"ulrich_count", count}};
  std::ostringstream t;
  t << "Gr(" << s.k() << "," << s.n() << ")\n"
    << "  dimension        " << variety_dimension(s) << "\n"
    << "  degree           " << deg << "\n"
    << "  Ulrich slope     " << fmt_rational(mu) << "\n"
    << "  min Ulrich rank  " << minrank << "\n"
    << "  Ulrich bundles   " << count << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_cohom(const SpaceArgs& a, const WeightArgs& w, Entry t) {
  const HomogeneousBundle b = w.bundle(a.space());
  Outcome o;
  o.inputs = bundle_inputs(b);
  o.inputs["twist"] = t;
  const CohomologyReport r = cohomology(b, t);
  o.results = to_json(r);
  o.text = fmt_bundle(b) + " (" + std::to_string(t) + "): " + fmt_report(r) + "\n";
  return o;
}

Outcome cmd_table(const SpaceArgs& a, const WeightArgs& w, Entry from, Entry to) {
  const HomogeneousBundle b = w.bundle(a.space());
  if (from > to) throw UsageError("--from must not exceed --to");
  Outcome o;
  o.inputs = bundle_inputs(b);
  o.inputs["from"] = from;
  o.inputs["to"] = to;
  json rows = json::array();
  std::ostringstream t;
  t << fmt_bundle(b) << "\n" << std::setw(8) << "twist" << std::setw(8) << "degree" << "  "
    << std::left << std::setw(24) << "dimension" << "weight\n" << std::right;
  for (const auto& row : cohomology_table(b, from, to)) {
    json r = to_json(row.report);
    r["twist"] = row.twist;
    rows.push_back(std::move(r));
    t << std::setw(8) << row.twist;
    if (row.report.vanishes()) {
      t << std::setw(8) << "-" << "  0\n";
    } else {
      t << std::setw(8) << row.report.group->degree << "  " << std::left << std::setw(24)
        << row.report.group->dimension.str() << fmt_list(row.report.group->weight.entries()) << "\n"
        << std::right;
    }
  }
  o.results = {{"rows", std::move(rows)}};
  o.text = t.str();
  return o;
}

Outcome cmd_list(const SpaceArgs& a) {
  const GrassmannSpace s = a.space();
  Outcome o;
  o.inputs = space_inputs(a);
  json bundles = json::array();
  std::ostringstream t;
  const auto constructions = enumerate_constructions(s);
  t << constructions.size() << " initialized GL(V)-invariant Ulrich bundles on Gr(" << s.k() << "," << s.n()
    << ")\n";
  for (const auto& c : constructions) {
    json entry = bundle_summary(c.bundle);
    entry["ks"] = c.pair.ks;
    entry["ns"] = c.pair.ns;
    bundles.push_back(std::move(entry));
    t << "  ks=" << fmt_list(c.pair.ks) << " ns=" << fmt_list(c.pair.ns) << "  " << fmt_bundle(c.bundle)
      << "  rank " << rank(c.bundle) << "\n";
  }
  o.results = {{"count", constructions.size()}, {"bundles", std::move(bundles)}, {"ulrich_slope", to_json(ulrich_slope(s))}};
  o.text = t.str();
  return o;
}

Outcome cmd_construct(const SpaceArgs& a, const std::string& ks_text, const std::string& ns_text) {
  const GrassmannSpace s = a.space();
  auto ints = [](const std::string& text, const char* arg) {
    std::vector<int> out;
    for (Entry e : parse_int_list(text, arg)) out.push_back(static_cast<int>(e));
    return out;
  };
  const FactorizationPair p{ints(ks_text, "--ks"), ints(ns_text, "--ns")};
  Outcome o;
  o.inputs = space_inputs(a);
  o.inputs["ks"] = p.ks;
  o.inputs["ns"] = p.ns;
  const BlockGrid g = build_grid(s, p);
  const HomogeneousBundle b = bundle_from_grid(g);
  json grid = json::array();
  for (std::size_t row = 1; row <= g.rows(); ++row) {
    json cells = json::array();
    for (std::size_t col = 1; col <= g.columns(); ++col) cells.push_back(g.at(col, row));
    grid.push_back(std::move(cells));
  }
  o.results = bundle_summary(b);
  o.results["grid_rows_bottom_up"] = std::move(grid);

  std::ostringstream t;
  t << fmt_bundle(b) << "\n  rank " << rank(b) << ", slope " << fmt_rational(slope(b)) << "\n  grid:\n";
  const int width = static_cast<int>(std::to_string(s.dimension()).size()) + 1;
  for (std::size_t row = g.rows(); row >= 1; --row) {
    t << "  ";
    for (std::size_t col = 1; col <= g.columns(); ++col) t << std::setw(width) << g.at(col, row);
    t << "\n";
  }
  o.text = t.str();
  return o;
}

Outcome cmd_verify(const SpaceArgs& a, const WeightArgs& w) {
  const HomogeneousBundle b = w.bundle(a.space());
  Outcome o;
  o.inputs = bundle_inputs(b);
  const UlrichVerdict v = is_ulrich(b);
  const HomogeneousBundle init = initialize(b).bundle;
  o.results = to_json(v);
  o.results["window"] = {-b.space().dimension(), -1};
  o.results["diagonal_criterion"] = satisfies_diagonal_criterion(b);
  o.results["h0_initialized"] = to_json(h0(init));
  o.results["degree_times_rank"] = to_json(degree(b.space()) * rank(b));

  std::ostringstream t;
  t << fmt_bundle(b) << "\n";
  if (!v.initialized) t << "  initialized by twisting with " << v.init_shift << "\n";
  if (v.is_ulrich) {
    t << "  Ulrich: all cohomology of E(t) vanishes for t in [" << -b.space().dimension() << ", -1]\n";
  } else {
    t << "  not Ulrich: H^" << v.witness->degree << "(E(" << -v.witness->twist << ")) has dimension "
      << v.witness->dimension << "\n";
  }
  o.text = t.str();
  return o;
}

json bundle_array(const std::vector<HomogeneousBundle>& v) {
  json out = json::array();
  for (const auto& b : v) out.push_back({{"beta", to_json(b.beta())}, {"gamma", to_json(b.gamma())}});
  return out;
}

Outcome cmd_classify(const SpaceArgs& a, bool brute_force, std::uint64_t cap, int jobs) {
  const GrassmannSpace s = a.space();
  Outcome o;
  o.inputs = space_inputs(a);
  o.inputs["brute_force"] = brute_force;
  const auto enumerated = enumerate_ulrich(s);
  o.results["enumerated"] = bundle_array(enumerated);
  std::ostringstream t;
  t << "construction: " << enumerated.size() << " bundles\n";
  if (brute_force) {
    o.inputs["cap"] = cap;
    const auto found = brute_force_classify(s, {.cap = cap, .jobs = jobs});
    const bool equal = found == enumerated;
    o.results["brute_force"] = bundle_array(found);
    o.results["candidates"] = to_json(candidate_count(s));
    o.results["sets_equal"] = equal;
    o.exit = equal ? kOk : kMismatch;
    t << "exhaustive search over " << candidate_count(s) << " candidates: " << found.size() << " bundles\n"
      << (equal ? "sets agree\n" : "MISMATCH between construction and search\n");
  }
  for (const auto& b : enumerated) t << "  " << fmt_bundle(b) << "\n";
  o.text = t.str();
  return o;
}

Outcome cmd_minrank(const SpaceArgs& a) {
  const GrassmannSpace s = a.space();
  Outcome o;
  o.inputs = space_inputs(a);
  const GrassmannSpace reduced = 2 * s.k() <= s.n() - 1 ? s : s.dual_space();
  BigInt least = -1;
  for (const auto& b : enumerate_ulrich(s)) {
    const BigInt r = rank(b);
    if (least < 0 || r < least) least = r;
  }
  const BigInt product = min_ulrich_rank_product_form(reduced);
  const BigInt power = min_ulrich_rank_power_form(reduced);
  o.results = {{"reduced_k", reduced.k()},
               {"product_form", to_json(product)},
               {"power_form", to_json(power)},
               {"enumerated_min", to_json(least)},
               {"agree", product == power && power == least}};
  o.exit = (product == power && power == least) ? kOk : kMismatch;
  std::ostringstream t;
  t << "minimal Ulrich rank on Gr(" << s.k() << "," << s.n() << "): " << least << "\n"
    << "  closed forms (k=" << reduced.k() << "): " << product << ", " << power << "\n";
  o.text = t.str();
  return o;
}

// --- cache ------------------------------------------------------------------

std::filesystem::path cache_file(const std::string& dir, const SpaceArgs& a) {
  return std::filesystem::path(dir) / ("gr_" + std::to_string(a.k) + "_" + std::to_string(a.n) + ".json");
}

std::optional<json> cache_load(const std::filesystem::path& path, const json& inputs, std::ostream& err) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    json doc = json::parse(in);
    if (doc.at("schema_version") == kSchemaVersion && doc.at("command") == "ulrich classify" &&
        doc.at("inputs").at("k") == inputs.at("k") && doc.at("inputs").at("n") == inputs.at("n") &&
        doc.at("inputs").at("brute_force") == true) {
      return doc;
    }
  } catch (const std::exception& e) {
    err << "warning: ignoring unreadable cache file " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
  err << "warning: ignoring stale cache file " << path << "\n";
  return std::nullopt;
}

void cache_store(const std::filesystem::path& path, const json& doc, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) {
    err << "warning: cannot write cache file " << path << "\n";
    return;
  }
  out << dump(doc);
}

std::string text_from_cached(const json& doc) {
  std::ostringstream t;
  const json& r = doc.at("results");
  t << "construction: " << r.at("enumerated").size() << " bundles (cached)\n"
    << "exhaustive search over " << r.at("candidates").get<std::string>() << " candidates: "
    << r.at("brute_force").size() << " bundles\n"
    << (r.at("sets_equal").get<bool>() ? "sets agree\n" : "MISMATCH between construction and search\n");
  return t.str();
}

int exit_for(const Error& e) {
  return e.kind() == ErrorKind::SearchTooLarge ? kResourceCap : kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_cache) {
  CLI::App app{"Cohomology of homogeneous bundles and GL(V)-invariant Ulrich bundles on Grassmannians",
               "bbw-ulrich"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string output_path;
  std::string cache_dir = env_cache.value_or("");
  app.add_flag("--json", as_json, "emit a JSON document");
  app.add_option("--output", output_path, "write output to FILE instead of stdout")->option_text("FILE");
  app.add_option("--cache", cache_dir, "directory for cached classify results (default: $BBW_ULRICH_CACHE)")
      ->option_text("DIR");
  app.fallthrough();

  SpaceArgs space;
  WeightArgs weights;
  Entry twist_value = 0, from = 0, to = 0;
  std::string ks_text, ns_text;
  bool brute_force = false;
  std::uint64_t cap = ClassifyOptions{}.cap;
  int jobs = 0;

  auto* invariants = app.add_subcommand("invariants", "dimension, degree and Ulrich invariants of Gr(k,n)");
  space.add_to(invariants);

  auto* cohom = app.add_subcommand("cohom", "cohomology of S^beta Q (x) S^gamma S* (twist)");
  space.add_to(cohom);
  weights.add_to(cohom);
  cohom->add_option("--twist", twist_value, "twist by O(t)");

  auto* table = app.add_subcommand("table", "cohomology over a range of twists");
  space.add_to(table);
  weights.add_to(table);
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();

  auto* ulrich = app.add_subcommand("ulrich", "GL(V)-invariant Ulrich bundles");
  ulrich->require_subcommand(1);
  auto* list = ulrich->add_subcommand("list", "all initialized invariant Ulrich bundles");
  space.add_to(list);
  auto* construct = ulrich->add_subcommand("construct", "bundle for a factorization pair");
  space.add_to(construct);
  construct->add_option("--ks", ks_text, "k_1,...,k_s with product k+1")->required();
  construct->add_option("--ns", ns_text, "n_1,...,n_s with product n-k")->required();
  auto* verify = ulrich->add_subcommand("verify", "Ulrich test for a given bundle");
  space.add_to(verify);
  weights.add_to(verify);
  auto* classify = ulrich->add_subcommand("classify", "classification, optionally re-derived by exhaustive search");
  space.add_to(classify);
  classify->add_flag("--brute-force", brute_force, "also search all candidate weights");
  classify->add_option("--cap", cap, "maximum number of candidates");
  classify->add_option("--jobs", jobs, "worker threads (0: all)");
  auto* minrank = ulrich->add_subcommand("minrank", "smallest rank of an invariant Ulrich bundle");
  space.add_to(minrank);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string command;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  std::optional<json> cached;
  std::optional<std::filesystem::path> cache_path;
  try {
    if (*invariants) {
      command = "invariants";
      outcome = cmd_invariants(space);
    } else if (*cohom) {
      command = "cohom";
      outcome = cmd_cohom(space, weights, twist_value);
    } else if (*table) {
      command = "table";
      outcome = cmd_table(space, weights, from, to);
    } else if (*list) {
      command = "ulrich list";
      outcome = cmd_list(space);
    } else if (*construct) {
      command = "ulrich construct";
      outcome = cmd_construct(space, ks_text, ns_text);
    } else if (*verify) {
      command = "ulrich verify";
      outcome = cmd_verify(space, weights);
    } else if (*classify) {
      command = "ulrich classify";
      space.space();  // validates (k, n) before touching the cache
      if (brute_force && !cache_dir.empty()) {
        cache_path = cache_file(cache_dir, space);
        json key = space_inputs(space);
        cached = cache_load(*cache_path, key, err);
      }
      if (!cached) outcome = cmd_classify(space, brute_force, cap, jobs);
    } else if (*minrank) {
      command = "ulrich minrank";
      outcome = cmd_minrank(space);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kMismatch;
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  json doc;
  if (cached) {
    doc = std::move(*cached);
    doc["timing"] = elapsed;
    outcome.exit = doc["results"]["sets_equal"].get<bool>() ? kOk : kMismatch;
    outcome.text = text_from_cached(doc);
  } else {
    doc = {{"schema_version", kSchemaVersion},
           {"command", command},
           {"inputs", outcome.inputs},
           {"results", outcome.results},
           {"timing", elapsed}};
    if (cache_path) cache_store(*cache_path, doc, err);
  }

  const std::string rendered = as_json ? dump(doc) : outcome.text;
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot open " << output_path << " for writing\n";
      return kUsage;
    }
    file << rendered;
  } else {
    out << rendered;
  }
  return outcome.exit;
}

}  // namespace bbwu::cli
