#pragma once

// Verification suites: exhaustive and randomized consistency checks tying
// the engine to the theorems it implements.  Failures are report content,
// not errors; each claim carries a counterexample note when it fails.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lcif/family.hpp"
#include "lcif/goodness.hpp"

namespace lcif {

enum class Suite { lemmas, ekr, borg, main, thresholds };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::lemmas: return "lemmas";
    case Suite::ekr: return "ekr";
    case Suite::borg: return "borg";
    case Suite::main: return "main";
    case Suite::thresholds: return "thresholds";
  }
  return "?";
}

inline Suite parse_suite_name(std::string_view name) {
  for (Suite s : {Suite::lemmas, Suite::ekr, Suite::borg, Suite::main, Suite::thresholds})
    if (name == suite_name(s)) return s;
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected lemmas|ekr|borg|main|thresholds)");
}

struct VerifyClaim {
  std::string id;
  std::string params;
  bool pass = true;
  std::string note;  // counterexample on failure, summary info otherwise
};

struct VerifyReport {
  std::vector<VerifyClaim> claims;
  bool all_pass() const {
    for (const VerifyClaim& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  int r_lo = 2;
  int r_hi = 3;
  std::optional<std::pair<int, int>> n_range;
};

using CatalogProvider = std::function<const Catalog&(int)>;

namespace detail {

struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  std::uint64_t below(std::uint64_t k) { return next() % k; }
};

inline Family random_intersecting_family(const Params& p, Rng& rng) {
  std::vector<Mask> universe;
  for_each_rset(p.n, p.r, [&](Mask m) { universe.push_back(m); });
  for (std::size_t i = universe.size(); i > 1; --i)
    std::swap(universe[i - 1], universe[rng.below(i)]);
  std::size_t target = 1 + rng.below(universe.size());
  std::vector<Mask> members;
  for (Mask m : universe) {
    bool ok = true;
    for (Mask a : members)
      if ((a & m) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      members.push_back(m);
      if (members.size() >= target) break;
    }
  }
  return Family(p, std::move(members));
}

inline std::string describe_x(Mask inside, int mu) {
  std::string s = "inside={" + format_set_literal(inside) + "}";
  if (inside == 0) s = "inside={}";
  s += " m=" + std::to_string(mu);
  return s;
}

// All generators over [2r] of size <= r, canonical order.
inline std::vector<Generator> all_generators(int r) {
  std::vector<Generator> out;
  for (int s = 1; s <= r; ++s)
    for_each_rset(2 * r, s, [&](Mask m) {
      out.emplace_back(mask_elements(m), r);
    });
  return out;
}

// Packed (g, h, mu) key for sign-analysis memoization.
struct SignKey {
  std::array<std::uint64_t, 4> v{};
  friend bool operator==(const SignKey&, const SignKey&) = default;
};

struct SignKeyHash {
  std::size_t operator()(const SignKey& k) const {
    std::size_t seed = 0;
    for (std::uint64_t w : k.v)
      seed ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
    return seed;
  }
};

// Key identifying a count-difference polynomial: the family's (g, h) counts
// plus the outside count and |X ∩ [2,2r]| (the star's counts depend on the
// latter two, the family's on the former).  Counts fit in 16 bits for r <= 5.
inline SignKey make_sign_key(const std::int64_t* g, const std::int64_t* h, int r,
                             int mu, int inside_size) {
  SignKey key;
  for (int i = 0; i < r; ++i) {
    std::uint64_t packed =
        (static_cast<std::uint64_t>(g[i]) << 16) | static_cast<std::uint64_t>(h[i]);
    key.v[static_cast<std::size_t>(i / 2)] |= packed << (32 * (i % 2));
  }
  key.v[3] = (static_cast<std::uint64_t>(inside_size) << 8) |
             static_cast<std::uint64_t>(mu);
  return key;
}

}  // namespace detail

// ---- lemmas ---------------------------------------------------------------

namespace detail {

inline void suite_lemmas(const VerifyOptions& opt, const CatalogProvider& catalogs,
                         VerifyReport& rep) {
  for (int r = std::max(2, opt.r_lo); r <= std::min(4, opt.r_hi); ++r) {
    Rng rng(0xabcdef12u + static_cast<std::uint64_t>(r));
    const int n_hi = std::min(10, 2 * r + 3);

    VerifyClaim comp{"lemmas.compression.random", "r=" + std::to_string(r), true, ""};
    for (int it = 0; it < 350 && comp.pass; ++it) {
      Params p(2 * r + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - 2 * r + 1))), r);
      Family f = random_intersecting_family(p, rng);
      int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n - 1)));
      int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(p.n - i)));
      Family c = compress_family(f, i, j);
      if (c.size() != f.size() || !is_intersecting(c)) {
        comp.pass = false;
        comp.note = "C_" + std::to_string(i) + std::to_string(j) +
                    " broke size or intersecting at n=" + std::to_string(p.n);
      }
    }
    rep.claims.push_back(std::move(comp));

    VerifyClaim pot{"lemmas.potential.decrease", "r=" + std::to_string(r), true, ""};
    for (int it = 0; it < 60 && pot.pass; ++it) {
      Params p(2 * r + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - 2 * r + 1))), r);
      Family f = random_intersecting_family(p, rng);
      try {
        Family g = fully_compress(f);
        if (g.size() != f.size() || !is_left_compressed(g) || !is_intersecting(g) ||
            family_potential(g) > family_potential(f)) {
          pot.pass = false;
          pot.note = "fixed point violated invariants at n=" + std::to_string(p.n);
        }
      } catch (const std::logic_error& e) {
        pot.pass = false;
        pot.note = e.what();
      }
    }
    rep.claims.push_back(std::move(pot));
  }

  for (int r = std::max(2, opt.r_lo); r <= std::min(3, opt.r_hi); ++r) {
    VerifyClaim old_gen{"lemmas.old_generators.pairs", "r=" + std::to_string(r), true, ""};
    std::vector<Generator> gens = all_generators(r);
    for (std::size_t a = 0; a < gens.size() && old_gen.pass; ++a)
      for (std::size_t b = a; b < gens.size() && old_gen.pass; ++b) {
        bool predicted = (gens[a].mask() & gens[b].mask()) != 0;
        for (int n : {2 * r, 2 * r + 2}) {
          std::vector<Generator> pair{gens[a], gens[b]};
          bool actual = is_intersecting(materialize_superset(pair, Params(n, r)));
          if (actual != predicted) {
            old_gen.pass = false;
            old_gen.note = "G1={" + format_set_literal(gens[a].elements()) +
                           "} G2={" + format_set_literal(gens[b].elements()) +
                           "} n=" + std::to_string(n);
            break;
          }
        }
      }
    rep.claims.push_back(std::move(old_gen));
  }

  for (int r = std::max(2, opt.r_lo); r <= std::min(4, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    VerifyClaim new_gen{"lemmas.new_generators.catalog", "r=" + std::to_string(r), true, ""};
    for (const CatalogEntry& e : cat.entries()) {
      if (!is_intersecting(materialize(e.gens, Params(2 * r, r)))) {
        new_gen.pass = false;
        new_gen.note = "entry " + format_gens_literal(e.gens) + " not intersecting at 2r";
        break;
      }
      for (int n = 2 * r + 1; n <= 2 * r + 4; ++n)
        if (!is_intersecting(materialize(e.gens, Params(n, r)))) {
          new_gen.pass = false;
          new_gen.note =
              "entry " + format_gens_literal(e.gens) + " n=" + std::to_string(n);
          break;
        }
      if (!new_gen.pass) break;
    }
    rep.claims.push_back(std::move(new_gen));

    VerifyClaim extract{"lemmas.description.extract", "r=" + std::to_string(r), true, ""};
    for (const CatalogEntry& e : cat.entries()) {
      GenAntichain back = extract_generators(materialize(e.gens, Params(2 * r, r)));
      if (!(back == e.gens)) {
        extract.pass = false;
        extract.note = "entry " + format_gens_literal(e.gens) + " round-tripped to " +
                       format_gens_literal(back);
        break;
      }
    }
    rep.claims.push_back(std::move(extract));

    VerifyClaim uniq{"lemmas.description.unique_extension", "r=" + std::to_string(r),
                     true, ""};
    const int ext_hi = r <= 3 ? 2 * r + 2 : 2 * r + 1;
    for (const CatalogEntry& e : cat.entries()) {
      for (int n = 2 * r + 1; n <= ext_hi; ++n)
        if (!unique_extension_check(e.gens, n)) {
          uniq.pass = false;
          uniq.note = "entry " + format_gens_literal(e.gens) + " n=" + std::to_string(n);
          break;
        }
      if (!uniq.pass) break;
    }
    rep.claims.push_back(std::move(uniq));
  }

  for (int r = std::max(2, opt.r_lo); r <= std::min(3, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    VerifyClaim poly{"lemmas.polynomial.m0", "r=" + std::to_string(r), true, ""};
    for (const CatalogEntry& e : cat.entries()) {
      for (Mask inside = 1; inside < (Mask{1} << (2 * r - 1)) && poly.pass; ++inside) {
        Mask xm = inside << 1;  // subsets of [2, 2r]
        XSet x(r, xm, 0);
        CountVector cv = count_vector(e.gens, x);
        for (int n = 2 * r; n <= 2 * r + 2; ++n) {
          Params p(n, r);
          BigInt lemma_form = 0;
          for (int i = 1; i <= r; ++i)
            lemma_form += cv.h[static_cast<std::size_t>(i - 1)] * binom(n - 2 * r, r - i);
          BigInt direct = eval_count(cv, 0, p);
          BigInt oracle = oracle_count(e.gens, p, RSet::from_mask(xm));
          if (direct != lemma_form || direct != oracle) {
            poly.pass = false;
            poly.note = "entry " + format_gens_literal(e.gens) + " X={" +
                        format_set_literal(xm) + "} n=" + std::to_string(n);
            break;
          }
        }
      }
      if (!poly.pass) break;
    }
    rep.claims.push_back(std::move(poly));
  }
}

// ---- ekr -------------------------------------------------------------------

inline void suite_ekr(const VerifyOptions& opt, const CatalogProvider& catalogs,
                      VerifyReport& rep) {
  for (int r = std::max(2, opt.r_lo); r <= std::min(5, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    std::vector<int> ns;
    if (opt.n_range) {
      for (int n = std::max(2 * r, opt.n_range->first); n <= opt.n_range->second; ++n)
        ns.push_back(n);
    } else {
      ns = {2 * r, 2 * r + 2};
    }
    VerifyClaim bound{"ekr.bound", "r=" + std::to_string(r), true, ""};
    const GenAntichain star = star_antichain(r);
    const BigInt half = binom(2 * r, r) / 2;
    for (int n : ns) {
      if (!bound.pass) break;
      Params p(n, r);
      const BigInt ekr_bound = binom(n - 1, r - 1);
      for (const CatalogEntry& e : cat.entries()) {
        BigInt size = family_size(e.gens, p);
        bool is_star = e.gens == star;
        if (n == 2 * r && size != half) {
          bound.pass = false;
          bound.note = "entry " + format_gens_literal(e.gens) + " size " +
                       size.str() + " != C(2r,r)/2 at n=2r";
          break;
        }
        if (size > ekr_bound || (n > 2 * r && !is_star && size == ekr_bound)) {
          bound.pass = false;
          bound.note = "entry " + format_gens_literal(e.gens) + " n=" +
                       std::to_string(n) + " size " + size.str();
          break;
        }
      }
    }
    rep.claims.push_back(std::move(bound));

    if (r <= 3) {
      VerifyClaim agree{"ekr.materialize", "r=" + std::to_string(r), true, ""};
      for (int n : {2 * r, 2 * r + 2}) {
        Params p(n, r);
        for (const CatalogEntry& e : cat.entries()) {
          if (BigInt(materialize(e.gens, p).size()) != family_size(e.gens, p)) {
            agree.pass = false;
            agree.note = "entry " + format_gens_literal(e.gens) + " n=" + std::to_string(n);
            break;
          }
        }
        if (!agree.pass) break;
      }
      rep.claims.push_back(std::move(agree));
    }
  }
}

// ---- borg -------------------------------------------------------------------

inline void suite_borg(const VerifyOptions& opt, const CatalogProvider& catalogs,
                       VerifyReport& rep) {
  for (int r = std::max(2, opt.r_lo); r <= std::min(5, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    CountTable table(cat);
    int n_lo = opt.n_range ? std::max(2 * r, opt.n_range->first) : 2 * r;
    int n_hi = opt.n_range ? opt.n_range->second : std::min(2 * r + 4, 10);
    n_hi = std::max(n_hi, n_lo);
    const std::string rparams =
        "r=" + std::to_string(r) + " n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi);

    // (c): {2k, 2k+2, ..., 2r} is good for every k <= r.
    VerifyClaim c_claim{"borg.c", rparams, true, ""};
    for (int n = n_lo; n <= n_hi && c_claim.pass; ++n) {
      Params p(n, r);
      for (int k = 1; k <= r; ++k) {
        std::vector<int> elems;
        for (int e = 2 * k; e <= 2 * r; e += 2) elems.push_back(e);
        XSet x = XSet::reduce(elems, p);
        if (!classify_at(x, p, table).good) {
          c_claim.pass = false;
          c_claim.note = "k=" + std::to_string(k) + " n=" + std::to_string(n);
          break;
        }
      }
    }
    rep.claims.push_back(std::move(c_claim));

    // (a), (b): exhaustive over X subsets of [2, n], r <= 3, n <= 10.
    if (r <= 3) {
      VerifyClaim a_claim{"borg.a", rparams, true, ""};
      VerifyClaim b_claim{"borg.b", rparams, true, ""};
      for (int n = n_lo; n <= std::min(n_hi, 10); ++n) {
        Params p(n, r);
        const std::uint32_t limit = 1u << (n - 1);
        std::vector<std::vector<std::pair<Mask, bool>>> by_size(
            static_cast<std::size_t>(n));
        for (std::uint32_t bits = 1; bits < limit; ++bits) {
          Mask xm = static_cast<Mask>(bits) << 1;
          XSet x = XSet::reduce(mask_elements(xm), p);
          bool good = classify_at(x, p, table).good;
          int k = std::popcount(bits);
          by_size[static_cast<std::size_t>(k)].push_back({xm, good});
          if (k > r && !good && a_claim.pass) {
            a_claim.pass = false;
            a_claim.note = "X={" + format_set_literal(xm) + "} n=" + std::to_string(n);
          }
        }
        for (const auto& size_class : by_size)
          for (const auto& [xa, ga] : size_class) {
            if (!b_claim.pass) break;
            if (!ga) continue;
            for (const auto& [xb, gb] : size_class)
              if (leq_masks(xa, xb) && !gb) {
                b_claim.pass = false;
                b_claim.note = "good {" + format_set_literal(xa) + "} <= bad {" +
                               format_set_literal(xb) + "} n=" + std::to_string(n);
                break;
              }
          }
      }
      rep.claims.push_back(std::move(a_claim));
      rep.claims.push_back(std::move(b_claim));
    }

    // (d): at n = 2r, size-r X good iff {2,4,...,2r} <= X.
    if (r <= 4 && n_lo <= 2 * r) {
      VerifyClaim d_claim{"borg.d", "r=" + std::to_string(r) + " n=" + std::to_string(2 * r),
                          true, ""};
      Params p(2 * r, r);
      Mask evens = 0;
      for (int e = 2; e <= 2 * r; e += 2) evens |= element_bit(e);
      for_each_rset(2 * r, r, [&](Mask xm) {
        if (!d_claim.pass || (xm & element_bit(1))) return;
        XSet x(r, xm, 0);
        bool good = classify_at(x, p, table).good;
        bool expected = leq_masks(evens, xm);
        if (good != expected) {
          d_claim.pass = false;
          d_claim.note = "X={" + format_set_literal(xm) + "}";
        }
      });
      rep.claims.push_back(std::move(d_claim));
    }

    // (e): for n > 2r, size-r X good iff the stated size-r condition.
    if (r <= 4) {
      VerifyClaim e_claim{"borg.e", rparams, true, ""};
      Mask hm_zone = full_mask(r + 1) & ~element_bit(1);
      for (int n = std::max(n_lo, 2 * r + 1); n <= n_hi && e_claim.pass; ++n) {
        Params p(n, r);
        for_each_rset(n, r, [&](Mask xm) {
          if (!e_claim.pass || (xm & element_bit(1))) return;
          XSet x = XSet::reduce(mask_elements(xm), p);
          bool good = classify_at(x, p, table).good;
          bool expected;
          if (r >= 4)
            expected = xm != hm_zone;
          else if (r == 3)
            expected = (xm & element_bit(2)) == 0 || (xm & element_bit(3)) == 0;
          else
            expected = xm != (element_bit(2) | element_bit(3));
          if (good != expected) {
            e_claim.pass = false;
            e_claim.note = "X={" + format_set_literal(xm) + "} n=" + std::to_string(n);
          }
        });
      }
      rep.claims.push_back(std::move(e_claim));
    }
  }
}

// ---- main -------------------------------------------------------------------

inline void suite_main(const VerifyOptions& opt, const CatalogProvider& catalogs,
                       VerifyReport& rep) {
  for (int r = std::max(3, opt.r_lo); r <= std::min(4, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    CountTable table(cat);

    VerifyClaim ev{"main.eventual", "r=" + std::to_string(r), true, ""};
    VerifyClaim ev_out{"main.eventual_outside", "r=" + std::to_string(r) + " m=1..2",
                       true, ""};
    const Mask inside_limit = Mask{1} << (2 * r - 1);
    for (Mask inside = 0; inside < inside_limit; ++inside) {
      Mask xm = inside << 1;
      for (int mu = 0; mu <= 2; ++mu) {
        if (xm == 0 && mu == 0) continue;
        int size = popcount(xm) + mu;
        if (size > r) continue;
        XSet x(r, xm, mu);
        bool expected = theorem_main_predicate(x);
        bool actual = classify_eventual(x, table).eventually_good;
        VerifyClaim& target = mu == 0 ? ev : ev_out;
        if (actual != expected && target.pass) {
          target.pass = false;
          target.note = describe_x(xm, mu);
        }
      }
    }
    rep.claims.push_back(std::move(ev));
    rep.claims.push_back(std::move(ev_out));

    int n_lo = opt.n_range ? std::max(opt.n_range->first, 2 * r + 2) : 2 * r + 2;
    int n_hi = opt.n_range ? std::max(opt.n_range->second, n_lo) : 2 * r + 8;
    VerifyClaim direct{"main.direct",
                       "r=" + std::to_string(r) + " n=" + std::to_string(n_lo) + ".." +
                           std::to_string(n_hi),
                       true, ""};
    for (Mask inside = 1; inside < inside_limit && direct.pass; ++inside) {
      Mask xm = inside << 1;
      if (popcount(xm) > r) continue;
      XSet x(r, xm, 0);
      bool expected = theorem_main_predicate(x);
      for (int n = n_lo; n <= n_hi; ++n) {
        if (classify_at(x, Params(n, r), table).good != expected) {
          direct.pass = false;
          direct.note = describe_x(xm, 0) + " n=" + std::to_string(n);
          break;
        }
      }
    }
    rep.claims.push_back(std::move(direct));
  }
}

// ---- thresholds --------------------------------------------------------------

// The desk-scale content of "n >= 2r+2 is large enough": for every X built
// from inside <= [2,2r] and up to 4 outside elements, the goodness of X at
// every n >= max(2r+2, 2r+m) matches theorem_main_predicate (borg(a) for
// |X| > r).  Checked directly for n up to 2r+8 and by exact polynomial sign
// certificates beyond.
//
// Count evaluation is a nonnegative-weighted linear functional of the
// concatenated (g, h) vector, so a family whose vector is componentwise
// dominated can never beat the star when the dominating family does not.
// Both the direct scans and the certificates therefore only need the Pareto
// frontier of distinct count vectors, computed once per inside set.
inline void suite_thresholds(const VerifyOptions& opt, const CatalogProvider& catalogs,
                             VerifyReport& rep) {
  constexpr int mu_max = 4;
  for (int r = std::max(2, opt.r_lo); r <= std::min(5, opt.r_hi); ++r) {
    const Catalog& cat = catalogs(r);
    CountTable table(cat);
    const int entry_count = cat.size();
    const int direct_hi = std::max(2 * r + 8, opt.n_range ? opt.n_range->second : 0);

    VerifyClaim claim{"thresholds.characterisation",
                      "r=" + std::to_string(r) + " n=" + std::to_string(2 * r + 2) +
                          "..inf m<=" + std::to_string(mu_max),
                      true, ""};

    std::unordered_map<SignKey, SignThreshold, SignKeyHash> sign_memo;
    std::unordered_map<SignKey, bool, SignKeyHash> neg_memo;
    long long checked = 0;

    std::vector<std::int64_t> frontier;  // concatenated (g, h) rows, 2r apiece
    std::vector<std::int64_t> row(static_cast<std::size_t>(2 * r));
    const auto dominates = [r](const std::int64_t* a, const std::int64_t* b) {
      for (int i = 0; i < 2 * r; ++i)
        if (a[i] < b[i]) return false;
      return true;
    };

    const Mask inside_limit = Mask{1} << (2 * r - 1);
    for (Mask inside_bits = 0; inside_bits < inside_limit && claim.pass; ++inside_bits) {
      const Mask inside = inside_bits << 1;
      const int inside_size = popcount(inside);
      CountTable::XProfile prof = table.profile(inside);

      // Pareto frontier of count vectors across the catalog for this inside.
      frontier.clear();
      std::unordered_set<SignKey, SignKeyHash> seen;
      for (int e = 0; e < entry_count; ++e) {
        table.counts(e, prof, row.data(), row.data() + r);
        if (!seen.insert(make_sign_key(row.data(), row.data() + r, r, 0, 0)).second)
          continue;
        bool dominated = false;
        std::size_t kept = 0;
        for (std::size_t f = 0; f < frontier.size(); f += static_cast<std::size_t>(2 * r)) {
          const std::int64_t* fr = frontier.data() + f;
          if (!dominated && dominates(fr, row.data())) {
            dominated = true;
          }
          if (dominated || !dominates(row.data(), fr)) {
            if (kept != f)
              std::copy(fr, fr + 2 * r, frontier.begin() + static_cast<std::ptrdiff_t>(kept));
            kept += static_cast<std::size_t>(2 * r);
          }
        }
        frontier.resize(kept);
        if (!dominated) frontier.insert(frontier.end(), row.begin(), row.end());
      }
      const int front_count = static_cast<int>(frontier.size()) / (2 * r);

      // The star's count vector against this inside (h depends only on its size).
      CountVector star_cv;
      {
        XSet probe(r, inside, inside == 0 ? 1 : 0);
        star_cv = count_vector(star_antichain(r), probe);
      }

      for (int mu = 0; mu <= mu_max && claim.pass; ++mu) {
        if (inside == 0 && mu == 0) continue;
        const int size = inside_size + mu;
        XSet x(r, inside, mu);
        const bool expected = size > r ? true : theorem_main_predicate(x);
        const int direct_lo = std::max(2 * r + 2, 2 * r + mu);
        ++checked;

        // Direct checks on the finite window.
        for (int n = direct_lo; n <= direct_hi && claim.pass; ++n) {
          Params p(n, r);
          EvalBasis basis(p, mu);
          BigInt star = star_count(x, p);
          bool good = true;
          for (int d = 0; d < front_count; ++d) {
            const std::int64_t* dr = frontier.data() + static_cast<std::size_t>(d) * 2 * r;
            if (basis.eval(dr, dr + r, r) > star) {
              good = false;
              break;
            }
          }
          if (good != expected) {
            claim.pass = false;
            claim.note = describe_x(inside, mu) + " n=" + std::to_string(n) +
                         ": expected " + (expected ? "good" : "not good");
          }
        }
        if (!claim.pass) break;

        // Beyond the window: exact sign certificates on the frontier.
        auto cv_at = [&](int d) {
          const std::int64_t* dr = frontier.data() + static_cast<std::size_t>(d) * 2 * r;
          CountVector cv;
          cv.r = r;
          cv.g.assign(dr, dr + r);
          cv.h.assign(dr + r, dr + 2 * r);
          return cv;
        };
        if (expected) {
          for (int d = 0; d < front_count && claim.pass; ++d) {
            const std::int64_t* dr = frontier.data() + static_cast<std::size_t>(d) * 2 * r;
            SignKey key = make_sign_key(dr, dr + r, r, mu, inside_size);
            auto it = sign_memo.find(key);
            if (it == sign_memo.end())
              it = sign_memo
                       .emplace(key, sign_threshold(diff_poly(star_cv, cv_at(d), mu, r)))
                       .first;
            const SignThreshold& st = it->second;
            if (st.kind == SignThreshold::Kind::eventually_negative ||
                (st.kind == SignThreshold::Kind::nonneg_from && st.n > direct_hi + 1)) {
              claim.pass = false;
              claim.note = describe_x(inside, mu) + ": family exceeds star at n=" +
                           std::to_string(st.n) + " beyond the direct window";
            }
          }
        } else {
          bool certified = false;
          for (int d = 0; d < front_count && !certified; ++d) {
            const std::int64_t* dr = frontier.data() + static_cast<std::size_t>(d) * 2 * r;
            SignKey key = make_sign_key(dr, dr + r, r, mu, inside_size);
            auto it = neg_memo.find(key);
            if (it == neg_memo.end())
              it = neg_memo
                       .emplace(key, poly_negative_from(diff_poly(star_cv, cv_at(d), mu, r),
                                                        direct_hi + 1 - 2 * r))
                       .first;
            certified = it->second;
          }
          if (!certified) {
            claim.pass = false;
            claim.note = describe_x(inside, mu) +
                         ": no family certifies badness beyond the direct window";
          }
        }
      }
    }
    if (claim.pass)
      claim.note = "checked " + std::to_string(checked) + " X classes, direct n<=" +
                   std::to_string(direct_hi) + ", certificates beyond";
    rep.claims.push_back(std::move(claim));
  }
}

}  // namespace detail

inline VerifyReport verify_suite(Suite suite, const VerifyOptions& opt,
                                 const CatalogProvider& catalogs) {
  if (opt.r_lo < 2 || opt.r_hi < opt.r_lo)
    throw std::invalid_argument("verify_suite: bad r range");
  if (opt.n_range && (opt.n_range->first > opt.n_range->second))
    throw std::invalid_argument("verify_suite: bad n range");
  VerifyReport rep;
  switch (suite) {
    case Suite::lemmas: detail::suite_lemmas(opt, catalogs, rep); break;
    case Suite::ekr: detail::suite_ekr(opt, catalogs, rep); break;
    case Suite::borg: detail::suite_borg(opt, catalogs, rep); break;
    case Suite::main: detail::suite_main(opt, catalogs, rep); break;
    case Suite::thresholds: detail::suite_thresholds(opt, catalogs, rep); break;
  }
  return rep;
}

}  // namespace lcif
