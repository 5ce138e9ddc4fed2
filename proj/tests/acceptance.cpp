// Acceptance harness: exercises the seven headline criteria end to end and
// prints one PASS/FAIL line per criterion with its runtime.  Exits nonzero
// iff any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "lcif/lcif.hpp"
#include "brute_force.hpp"

using namespace lcif;
namespace fs = std::filesystem;

namespace {

// ---- infrastructure --------------------------------------------------------

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& note) {
  if (!cond) throw Failure(note);
}

std::map<int, Catalog>& catalog_memo() {
  static std::map<int, Catalog> memo;
  return memo;
}

const Catalog& catalog(int r) {
  auto& memo = catalog_memo();
  auto it = memo.find(r);
  if (it == memo.end()) it = memo.emplace(r, enumerate_mlcif(r)).first;
  return it->second;
}

const std::string& acceptance_cache_dir() {
  static std::string dir = [] {
    fs::path d = fs::temp_directory_path() / "lcif-acceptance-cache";
    fs::remove_all(d);
    fs::create_directories(d);
    return d.string();
  }();
  return dir;
}

int run_cli(const std::string& args, std::string& out) {
  std::string cmd = std::string(LCIF_CLI_PATH) + " " + args + " --cache-dir " +
                    acceptance_cache_dir() + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "popen failed");
  out.clear();
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criterion 1: catalog reproduction through the CLI ---------------------

void criterion_catalog() {
  std::string out;
  require(run_cli("enumerate --r 3", out) == 0, "enumerate --r 3 exited nonzero");
  const std::string expected3 =
      "1\n"
      "2,3\n"
      "3,4,5\n"
      "1,2|2,4,5\n"
      "1,4|2,3,4\n"
      "1,3|1,4,5|2,3,5\n";
  require(out == expected3, "enumerate --r 3 output differs:\n" + out);

  // Same six families as a set, independently of order.
  std::set<std::string> seen;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) seen.insert(line);
  const std::set<std::string> want = {"1",         "2,3",
                                      "3,4,5",     "1,2|2,4,5",
                                      "1,4|2,3,4", "1,3|1,4,5|2,3,5"};
  require(seen == want, "enumerate --r 3 family set differs");

  require(run_cli("enumerate --r 2", out) == 0, "enumerate --r 2 exited nonzero");
  require(out == "1\n2,3\n", "enumerate --r 2 output differs:\n" + out);
}

// ---- criterion 2: minimal good sets at r=5, n=10 ---------------------------

void criterion_minimal_good() {
  std::string out;
  require(run_cli("minimal-good --r 5 --n 10 --size 2", out) == 0,
          "minimal-good size 2 exited nonzero");
  require(out == "7,10\n", "size-2 minimal good set differs: " + out);
  require(run_cli("minimal-good --r 5 --n 10 --size 3", out) == 0,
          "minimal-good size 3 exited nonzero");
  require(out == "5,8,10\n", "size-3 minimal good set differs: " + out);
}

// ---- criterion 3: threshold classification for r = 2..5 --------------------

void criterion_thresholds() {
  VerifyOptions opt;
  opt.r_lo = 2;
  opt.r_hi = 5;
  VerifyReport rep = verify_suite(
      Suite::thresholds, opt, [](int r) -> const Catalog& { return catalog(r); });
  require(!rep.claims.empty(), "thresholds suite produced no claims");
  for (const VerifyClaim& c : rep.claims)
    require(c.pass, c.id + " [" + c.params + "] failed: " + c.note);
}

// ---- criterion 4: the displayed counterexample formulas --------------------

void criterion_formulas() {
  for (int r : {3, 4, 5}) {
    GenAntichain star = star_antichain(r);
    GenAntichain g23({Generator({2, 3}, r)}, r);
    for (int n = 2 * r; n <= 2 * r + 6; ++n) {
      Params p(n, r);
      auto check_23k = [&](const XSet& x, const std::string& what) {
        BigInt star_c = eval_count(star, x, p);
        BigInt fam_c = eval_count(g23, x, p);
        require(star_c == binom(n - 2, r - 2) + binom(n - 3, r - 2) +
                              binom(n - 4, r - 2),
                what + ": star formula mismatch");
        require(fam_c == binom(n - 2, r - 2) + 2 * binom(n - 3, r - 2),
                what + ": family formula mismatch");
        require(fam_c > star_c, what + ": family does not beat the star");
      };
      auto check_3j = [&](const XSet& x, const std::string& what) {
        BigInt star_c = eval_count(star, x, p);
        BigInt fam_c = eval_count(g23, x, p);
        require(star_c == binom(n - 2, r - 2) + binom(n - 3, r - 2),
                what + ": star formula mismatch");
        require(fam_c == star_c + binom(n - 4, r - 3),
                what + ": family formula mismatch");
        require(fam_c > star_c, what + ": family does not beat the star");
      };
      std::string tag = "r=" + std::to_string(r) + " n=" + std::to_string(n);
      // Inside placements: k (resp. j) in [r+2, 2r].
      for (int k = r + 2; k <= 2 * r; ++k) {
        check_23k(XSet(r, mask_of(std::vector<int>{2, 3, k}), 0),
                  tag + " X=23" + std::to_string(k));
        check_3j(XSet(r, mask_of(std::vector<int>{3, k}), 0),
                 tag + " X=3" + std::to_string(k));
      }
      // Outside placement: k beyond 2r, available once n > 2r.
      if (n > 2 * r) {
        check_23k(XSet(r, mask_of(std::vector<int>{2, 3}), 1), tag + " X=23k-out");
        check_3j(XSet(r, mask_of(std::vector<int>{3}), 1), tag + " X=3j-out");
      }
    }
  }
}

// ---- criterion 5: polynomial counts equal the enumeration oracle -----------

XSet random_xset(int r, int n, lcif::detail::Rng& rng) {
  const Mask avail = full_mask(2 * r) & ~element_bit(1);
  for (;;) {
    Mask inside = rng.next() & avail;
    int mu = n > 2 * r ? static_cast<int>(rng.below(
                             static_cast<std::uint64_t>(n - 2 * r + 1)))
                       : 0;
    if (inside == 0 && mu == 0) continue;
    return XSet(r, inside, mu);
  }
}

RSet realize(const XSet& x, int n, lcif::detail::Rng& rng) {
  std::vector<int> pool;
  for (int e = 2 * x.r() + 1; e <= n; ++e) pool.push_back(e);
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng.below(i)]);
  Mask m = x.inside_mask();
  for (int i = 0; i < x.outside(); ++i)
    m |= element_bit(pool[static_cast<std::size_t>(i)]);
  return RSet::from_mask(m);
}

void criterion_oracle() {
  lcif::detail::Rng rng(0x5eedf00d12345678ULL);
  for (const CatalogEntry& e : catalog(3).entries())
    for (int n = 6; n <= 12; ++n) {
      Params p(n, 3);
      for (int it = 0; it < 200; ++it) {
        XSet x = random_xset(3, n, rng);
        RSet raw = realize(x, n, rng);
        require(eval_count(e.gens, x, p) == oracle_count(e.gens, p, raw),
                "r=3 oracle mismatch: gens=" + format_gens_literal(e.gens) +
                    " n=" + std::to_string(n) +
                    " x=" + format_set_literal(raw.elements()));
      }
    }

  const Catalog& cat4 = catalog(4);
  for (int s = 0; s < 20; ++s) {
    const CatalogEntry& e = cat4[s * cat4.size() / 20];
    for (int it = 0; it < 50; ++it) {
      int n = 8 + static_cast<int>(rng.below(5));
      Params p(n, 4);
      XSet x = random_xset(4, n, rng);
      RSet raw = realize(x, n, rng);
      require(eval_count(e.gens, x, p) == oracle_count(e.gens, p, raw),
              "r=4 oracle mismatch: gens=" + format_gens_literal(e.gens) +
                  " n=" + std::to_string(n) +
                  " x=" + format_set_literal(raw.elements()));
    }
  }
}

// ---- criterion 6: brute-force families equal the materialized catalog ------

void criterion_brute_force() {
  for (int r : {2, 3, 4}) {
    const int n = 2 * r + 2;
    std::vector<std::vector<Mask>> brute = lcif_test::brute_maximal_lcifs(n, r);
    std::vector<std::vector<Mask>> mats;
    for (const CatalogEntry& e : catalog(r).entries()) {
      std::vector<Mask> ms = materialize(e.gens, Params(n, r)).masks();
      std::sort(ms.begin(), ms.end());
      mats.push_back(std::move(ms));
    }
    std::sort(mats.begin(), mats.end());
    std::sort(brute.begin(), brute.end());
    require(brute.size() == mats.size(),
            "r=" + std::to_string(r) + ": brute force found " +
                std::to_string(brute.size()) + " families, catalog has " +
                std::to_string(mats.size()));
    require(brute == mats,
            "r=" + std::to_string(r) + ": families differ in membership");
  }
}

// ---- criterion 7: property batch -------------------------------------------

void criterion_properties() {
  // Compression preserves size and the intersecting property.
  lcif::detail::Rng rng(0xace0fba5eULL);
  for (int it = 0; it < 1000; ++it) {
    int r = 2 + static_cast<int>(rng.below(2));
    int n = 2 * r + static_cast<int>(rng.below(
                        static_cast<std::uint64_t>(std::min(10, 2 * r + 3) - 2 * r + 1)));
    Params p(n, r);
    Family f = lcif::detail::random_intersecting_family(p, rng);
    int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    Family c = compress_family(f, i, j);
    require(c.size() == f.size(), "compression changed the family size");
    require(is_intersecting(c), "compression broke the intersecting property");

    // Full compression reaches a fixed point; the potential strictly drops
    // whenever anything moved.
    Family g = fully_compress(f);
    require(g.size() == f.size(), "fully_compress changed the family size");
    require(is_left_compressed(g), "fully_compress result not left-compressed");
    require(is_intersecting(g), "fully_compress broke intersecting");
    if (g.masks() != f.masks())
      require(family_potential(g) < family_potential(f),
              "potential did not strictly decrease");
  }

  // EKR bound across every catalog entry; equality only at the star for
  // n > 2r.
  for (int r = 2; r <= 5; ++r) {
    for (int n : {2 * r, 2 * r + 2}) {
      Params p(n, r);
      BigInt bound = binom(n - 1, r - 1);
      for (const CatalogEntry& e : catalog(r).entries()) {
        BigInt size = family_size(e.gens, p);
        require(size <= bound, "EKR bound violated at r=" + std::to_string(r));
        if (n > 2 * r && size == bound)
          require(e.gens == star_antichain(r),
                  "non-star family attains the EKR bound at n > 2r");
      }
    }
  }

  // The Hilton-Milner family sits exactly one above the star on every X
  // inside [2, r+1].
  for (int r : {3, 4, 5}) {
    GenAntichain hm = hilton_milner_antichain(r);
    Mask zone = full_mask(r + 1) & ~element_bit(1);
    for (int n : {2 * r, 2 * r + 2}) {
      Params p(n, r);
      for (Mask sub = zone; sub != 0; sub = (sub - 1) & zone) {
        XSet x(r, sub, 0);
        require(eval_count(hm, x, p) == star_count(x, p) + 1,
                "Hilton-Milner count != star + 1 at r=" + std::to_string(r));
      }
    }
  }
}

// ---- driver -----------------------------------------------------------------

struct Criterion {
  const char* label;
  double budget_seconds;
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"catalog reproduction (r=2,3 via CLI)", 1.0, criterion_catalog},
      {"minimal good sets (r=5, n=10 via CLI)", 300.0, criterion_minimal_good},
      {"threshold classification (r=2..5)", 600.0, criterion_thresholds},
      {"counterexample formulas (23k, 3j)", 600.0, criterion_formulas},
      {"oracle equivalence (r=3 full, r=4 sampled)", 600.0, criterion_oracle},
      {"brute-force catalog equality (n=2r+2)", 600.0, criterion_brute_force},
      {"property batch (compression, EKR, Hilton-Milner)", 600.0,
       criterion_properties},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool pass = true;
    try {
      c.body();
    } catch (const std::exception& e) {
      pass = false;
      note = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                      .count();
    if (pass && secs > c.budget_seconds) {
      pass = false;
      note = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    }
    std::printf("criterion %zu: %s (%.2f s) %s%s%s\n", i + 1,
                pass ? "PASS" : "FAIL", secs, c.label, note.empty() ? "" : " — ",
                note.c_str());
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
