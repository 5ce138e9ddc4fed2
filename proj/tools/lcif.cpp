// lcif: exact enumeration, counting, and goodness classification of maximal
// left-compressed intersecting families of r-sets.
//
// Exit status: 0 success / all claims pass, 1 verification failure (verify
// claims or --oracle mismatch), 2 usage or validation error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcif/lcif.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalConfig {
  std::string output = "human";
  std::string cache_dir;  // flag value; empty = not given
  bool override_guard = false;

  bool structured() const { return output == "structured"; }
};

fs::path resolve_cache_dir(const GlobalConfig& cfg) {
  if (!cfg.cache_dir.empty()) return fs::path(cfg.cache_dir);
  if (const char* env = std::getenv("LCIF_CACHE_DIR"); env && *env)
    return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".cache" / "lcif";
  return fs::temp_directory_path() / "lcif-cache";
}

fs::path catalog_path(const fs::path& dir, int r) {
  return dir / ("mlcif-catalog-v1-r" + std::to_string(r) + ".txt");
}

// Loads the catalog from the cache when present and valid; otherwise
// enumerates and refreshes the cache.  Cache problems degrade to a warning.
lcif::Catalog obtain_catalog(int r, const GlobalConfig& cfg) {
  const fs::path dir = resolve_cache_dir(cfg);
  const fs::path file = catalog_path(dir, r);
  std::error_code ec;
  if (fs::exists(file, ec)) {
    try {
      return lcif::load_catalog(file);
    } catch (const lcif::CatalogError& e) {
      std::cerr << "warning: ignoring corrupt catalog cache " << file.string()
                << " (" << e.what() << ")\n";
    }
  }
  lcif::Catalog cat = lcif::enumerate_mlcif(r, cfg.override_guard);
  fs::create_directories(dir, ec);
  try {
    lcif::save_catalog(cat, file);
  } catch (const std::exception& e) {
    std::cerr << "warning: cannot write catalog cache " << file.string() << " ("
              << e.what() << ")\n";
  }
  return cat;
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    int lo = std::stoi(text.substr(0, pos));
    int hi = std::stoi(text.substr(pos + 2));
    if (lo > hi) throw std::invalid_argument("empty range");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": expected N or A..B, got '" +
                                text + "'");
  }
}

std::string inside_literal(const lcif::XSet& x) {
  return lcif::format_set_literal(x.inside_mask());
}

std::string sign_label(const lcif::SignThreshold& st) {
  using K = lcif::SignThreshold::Kind;
  switch (st.kind) {
    case K::always_nonneg: return "always-nonneg";
    case K::nonneg_from: return "nonneg-from";
    case K::eventually_negative: return "eventually-negative";
  }
  return "?";
}

bool sign_has_n(const lcif::SignThreshold& st) {
  return st.kind != lcif::SignThreshold::Kind::always_nonneg;
}

// ---- commands ----------------------------------------------------------------

int cmd_enumerate(const GlobalConfig& cfg, int r) {
  lcif::Catalog cat = obtain_catalog(r, cfg);
  if (cfg.structured()) {
    std::cout << lcif::format_catalog(cat);
  } else {
    for (const lcif::CatalogEntry& e : cat.entries())
      std::cout << lcif::format_gens_literal(e.gens) << "\n";
  }
  return 0;
}

int cmd_count(const GlobalConfig& cfg, int r, int n, const std::string& gens_text,
              const std::string& x_text, bool oracle) {
  lcif::Params p(n, r);
  lcif::GenAntichain gens = lcif::parse_gens_literal(gens_text, r);
  std::vector<int> raw = lcif::parse_set_literal(x_text);
  lcif::XSet x = lcif::XSet::reduce(raw, p);
  lcif::BigInt count = lcif::eval_count(gens, x, p);

  std::optional<lcif::BigInt> oracle_value;
  if (oracle) oracle_value = lcif::oracle_count(gens, p, lcif::RSet(raw));
  const bool match = !oracle_value || *oracle_value == count;

  if (cfg.structured()) {
    std::cout << "r=" << r << "; n=" << n << "; gens=" << lcif::format_gens_literal(gens)
              << "; x=" << lcif::format_set_literal(raw) << "; inside="
              << inside_literal(x) << "; outside=" << x.outside()
              << "; count=" << count;
    if (oracle_value)
      std::cout << "; oracle=" << *oracle_value << "; match="
                << (match ? "true" : "false");
    std::cout << "\n";
  } else {
    std::cout << "inside: " << inside_literal(x) << "\n";
    std::cout << "outside: " << x.outside() << "\n";
    std::cout << "count: " << count << "\n";
    if (oracle_value)
      std::cout << "oracle: " << *oracle_value << (match ? " (match)" : " (MISMATCH)")
                << "\n";
  }
  if (!match) {
    std::cerr << "error: eval_count " << count << " != oracle_count " << *oracle_value
              << "\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const GlobalConfig& cfg, int r, int n, const std::string& x_text) {
  lcif::Params p(n, r);
  lcif::Catalog cat = obtain_catalog(r, cfg);
  lcif::CountTable table(cat);
  std::vector<int> raw = lcif::parse_set_literal(x_text);
  lcif::XSet x = lcif::XSet::reduce(raw, p);
  lcif::Verdict v = lcif::classify_at(x, p, table);
  const bool shortcut = x.total_size() > r;  // borg(a): always good

  if (cfg.structured()) {
    std::cout << "r=" << r << "; n=" << n << "; x=" << lcif::format_set_literal(raw)
              << "; inside=" << inside_literal(x) << "; outside=" << x.outside()
              << "; verdict=" << (v.good ? "good" : "not-good")
              << "; witnesses=" << v.witnesses.size();
    if (shortcut) std::cout << "; shortcut=borg-a";
    std::cout << "\n";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      const lcif::Witness& w = v.witnesses[i];
      std::cout << "witness=" << (i + 1) << "; gens="
                << lcif::format_gens_literal(cat.entries()[static_cast<std::size_t>(
                       w.entry_index)].gens)
                << "; count=" << w.family_count << "; star=" << w.star_count << "\n";
    }
  } else {
    std::cout << "inside: " << inside_literal(x) << "\n";
    std::cout << "outside: " << x.outside() << "\n";
    std::cout << "verdict: " << (v.good ? "good" : "not-good") << "\n";
    if (shortcut) std::cout << "shortcut: borg-a (|X| > r is always good)\n";
    for (const lcif::Witness& w : v.witnesses)
      std::cout << "witness: gens="
                << lcif::format_gens_literal(cat.entries()[static_cast<std::size_t>(
                       w.entry_index)].gens)
                << " count=" << w.family_count << " star=" << w.star_count << "\n";
  }
  return 0;
}

int cmd_classify_eventual(const GlobalConfig& cfg, int r, const std::string& x_text) {
  std::vector<int> raw = lcif::parse_set_literal(x_text);
  int n_eff = 2 * r;
  for (int e : raw) n_eff = std::max(n_eff, e);
  lcif::XSet x = lcif::XSet::reduce(raw, lcif::Params(n_eff, r));

  lcif::Catalog cat = obtain_catalog(r, cfg);
  lcif::CountTable table(cat);
  lcif::EventualVerdict ev = lcif::classify_eventual(x, table);

  if (cfg.structured()) {
    std::cout << "r=" << r << "; x=" << lcif::format_set_literal(raw) << "; inside="
              << inside_literal(x) << "; outside=" << x.outside() << "; verdict="
              << (ev.eventually_good ? "eventually-good" : "not-eventually-good");
    if (ev.eventually_good) std::cout << "; threshold=" << ev.threshold_n;
    std::cout << "\n";
    for (const lcif::FamilySign& fsgn : ev.per_family) {
      std::cout << "family=" << (fsgn.entry_index + 1) << "; gens="
                << lcif::format_gens_literal(cat.entries()[static_cast<std::size_t>(
                       fsgn.entry_index)].gens)
                << "; sign=" << sign_label(fsgn.sign);
      if (sign_has_n(fsgn.sign)) std::cout << "; n=" << fsgn.sign.n;
      std::cout << "\n";
    }
  } else {
    std::cout << "inside: " << inside_literal(x) << "\n";
    std::cout << "outside: " << x.outside() << "\n";
    std::cout << "verdict: "
              << (ev.eventually_good ? "eventually-good" : "not-eventually-good")
              << "\n";
    if (ev.eventually_good) std::cout << "threshold: " << ev.threshold_n << "\n";
    for (const lcif::FamilySign& fsgn : ev.per_family) {
      std::cout << "family: gens="
                << lcif::format_gens_literal(cat.entries()[static_cast<std::size_t>(
                       fsgn.entry_index)].gens)
                << " sign=" << sign_label(fsgn.sign);
      if (sign_has_n(fsgn.sign)) std::cout << " n=" << fsgn.sign.n;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_minimal_good(const GlobalConfig& cfg, int r, int n, std::optional<int> size) {
  lcif::Params p(n, r);
  lcif::Catalog cat = obtain_catalog(r, cfg);
  lcif::CountTable table(cat);
  std::vector<lcif::RSet> found = lcif::minimal_good(p, table, size);

  if (cfg.structured()) {
    std::cout << "r=" << r << "; n=" << n << "; size="
              << (size ? std::to_string(*size) : std::string("all"))
              << "; order=positionwise-shift; count=" << found.size() << "\n";
    for (const lcif::RSet& x : found)
      std::cout << "minimal=" << lcif::format_set_literal(x.elements()) << "\n";
  } else {
    std::cerr << "note: minimality uses the positionwise shift order on equal-size "
                 "sets\n";
    for (const lcif::RSet& x : found)
      std::cout << lcif::format_set_literal(x.elements()) << "\n";
  }
  return 0;
}

int cmd_verify(const GlobalConfig& cfg, const std::string& suite_text,
               const std::string& r_text, const std::string& n_text) {
  lcif::Suite suite = lcif::parse_suite_name(suite_text);
  lcif::VerifyOptions opt;
  auto [r_lo, r_hi] = parse_range(r_text, "--r");
  opt.r_lo = r_lo;
  opt.r_hi = r_hi;
  if (!n_text.empty()) opt.n_range = parse_range(n_text, "--n");

  std::map<int, lcif::Catalog> memo;
  lcif::CatalogProvider provider = [&](int r) -> const lcif::Catalog& {
    auto it = memo.find(r);
    if (it == memo.end()) it = memo.emplace(r, obtain_catalog(r, cfg)).first;
    return it->second;
  };

  lcif::VerifyReport rep = lcif::verify_suite(suite, opt, provider);
  int failed = 0;
  for (const lcif::VerifyClaim& c : rep.claims)
    if (!c.pass) ++failed;

  if (cfg.structured()) {
    for (const lcif::VerifyClaim& c : rep.claims) {
      std::cout << "claim=" << c.id << "; params=" << c.params << "; status="
                << (c.pass ? "pass" : "fail");
      if (!c.pass)
        std::cout << "; counterexample=" << c.note;
      else if (!c.note.empty())
        std::cout << "; note=" << c.note;
      std::cout << "\n";
    }
    std::cout << "suite=" << lcif::suite_name(suite) << "; r=" << opt.r_lo << ".."
              << opt.r_hi << "; claims=" << rep.claims.size() << "; failed=" << failed
              << "; result=" << (failed == 0 ? "pass" : "fail") << "\n";
  } else {
    for (const lcif::VerifyClaim& c : rep.claims) {
      std::cout << (c.pass ? "[pass] " : "[FAIL] ") << c.id << " (" << c.params << ")";
      if (!c.note.empty()) std::cout << ": " << c.note;
      std::cout << "\n";
    }
    std::cout << "suite " << lcif::suite_name(suite) << ": " << rep.claims.size()
              << " claims, " << failed << " failed -> "
              << (failed == 0 ? "pass" : "fail") << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lcif: maximal left-compressed intersecting families — enumeration, exact "
      "counting, and goodness classification"};
  app.require_subcommand(1);

  GlobalConfig cfg;
  app.add_option("--output", cfg.output, "Output mode")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "Catalog cache directory (default: $LCIF_CACHE_DIR, then "
                 "$HOME/.cache/lcif)");
  app.add_flag("--override-guard", cfg.override_guard,
               "Unlock guarded parameter ranges (large r)");

  int r = 0, n = 0;
  std::string gens_text, x_text, suite_text;
  std::string r_range = "2..3", n_range;
  int size_value = -1;
  bool oracle = false;

  CLI::App* c_enum = app.add_subcommand("enumerate", "Print the catalog for r");
  c_enum->fallthrough();
  c_enum->add_option("--r", r, "Set size r")->required();

  CLI::App* c_count = app.add_subcommand(
      "count", "Exact |A(X)| for the family generated by --gens");
  c_count->fallthrough();
  c_count->add_option("--r", r, "Set size r")->required();
  c_count->add_option("--n", n, "Ground set size n")->required();
  c_count->add_option("--gens", gens_text, "Generators, e.g. \"1,4|2,3,4\"")
      ->required();
  c_count->add_option("--x", x_text, "Hitting set X, e.g. \"2,3,9\"")->required();
  c_count->add_flag("--oracle", oracle,
                    "Cross-check against brute-force materialization");

  CLI::App* c_classify =
      app.add_subcommand("classify", "Is X good at (n, r)? Witnesses if not");
  c_classify->fallthrough();
  c_classify->add_option("--r", r, "Set size r")->required();
  c_classify->add_option("--n", n, "Ground set size n")->required();
  c_classify->add_option("--x", x_text, "Hitting set X")->required();

  CLI::App* c_eventual = app.add_subcommand(
      "classify-eventual", "Is X good for all sufficiently large n?");
  c_eventual->fallthrough();
  c_eventual->add_option("--r", r, "Set size r")->required();
  c_eventual->add_option("--x", x_text, "Hitting set X")->required();

  CLI::App* c_minimal = app.add_subcommand(
      "minimal-good", "Minimal good sets at (n, r) under the shift order");
  c_minimal->fallthrough();
  c_minimal->add_option("--r", r, "Set size r")->required();
  c_minimal->add_option("--n", n, "Ground set size n")->required();
  c_minimal->add_option("--size", size_value, "Restrict to |X| = size");

  CLI::App* c_verify = app.add_subcommand("verify", "Run a verification suite");
  c_verify->fallthrough();
  c_verify->add_option("--suite", suite_text,
                       "Suite: lemmas|ekr|borg|main|thresholds")
      ->required();
  c_verify->add_option("--r", r_range, "r range, e.g. 3 or 2..5")
      ->capture_default_str();
  c_verify->add_option("--n", n_range, "n range, e.g. 6..10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_enum)) return cmd_enumerate(cfg, r);
    if (app.got_subcommand(c_count))
      return cmd_count(cfg, r, n, gens_text, x_text, oracle);
    if (app.got_subcommand(c_classify)) return cmd_classify(cfg, r, n, x_text);
    if (app.got_subcommand(c_eventual)) return cmd_classify_eventual(cfg, r, x_text);
    if (app.got_subcommand(c_minimal))
      return cmd_minimal_good(cfg, r, n,
                              size_value >= 0 ? std::optional<int>(size_value)
                                              : std::nullopt);
    if (app.got_subcommand(c_verify)) return cmd_verify(cfg, suite_text, r_range, n_range);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
