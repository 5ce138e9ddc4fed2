#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lcif/antichain.hpp"
#include "lcif/bigint.hpp"
#include "lcif/family.hpp"
#include "support.hpp"

using namespace lcif;

namespace {

Family fam(std::string_view literal, int n, int r) {
  std::vector<Mask> members;
  if (!literal.empty())
    for (const std::vector<int>& s : parse_family_literal(literal))
      members.push_back(mask_of(s));
  return Family(Params(n, r), std::move(members));
}

struct Rng {
  std::uint64_t s = 0x1234abcd9876ef01ULL;
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  std::uint64_t below(std::uint64_t k) { return next() % k; }
};

Family random_intersecting(const Params& p, Rng& rng) {
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

}  // namespace

TEST_CASE("is_intersecting", "[family]") {
  CHECK(is_intersecting(fam("1,2;1,3;2,3", 4, 2)));
  CHECK_FALSE(is_intersecting(fam("1,2;3,4", 4, 2)));
  CHECK(is_intersecting(fam("", 4, 2)));
  CHECK(is_intersecting(fam("1,3", 4, 2)));
}

TEST_CASE("is_left_compressed", "[family]") {
  // Star at 1 over [5]^(2).
  CHECK(is_left_compressed(fam("1,2;1,3;1,4;1,5", 5, 2)));
  // {13} alone: C_23 would give 12, absent.  (The documented n=3 instance
  // violates n >= 2r, so the same content is checked at n = 4.)
  CHECK_FALSE(is_left_compressed(fam("1,3", 4, 2)));
  CHECK(is_left_compressed(fam("1,2;1,3;2,3", 4, 2)));
}

TEST_CASE("compress_family keeps cardinality and applies C_ij", "[family]") {
  CHECK(compress_family(fam("1,3;2,3", 4, 2), 1, 2) == fam("1,3;2,3", 4, 2));
  CHECK(compress_family(fam("2,3", 4, 2), 1, 2) == fam("1,3", 4, 2));
  CHECK(compress_family(fam("1,2;3,4", 4, 2), 2, 3) == fam("1,2;2,4", 4, 2));
}

TEST_CASE("fully_compress reaches a left-compressed fixed point", "[family]") {
  // Star at 2 over [5]^(2) compresses to the star at 1.
  CHECK(fully_compress(fam("1,2;2,3;2,4;2,5", 5, 2)) ==
        fam("1,2;1,3;1,4;1,5", 5, 2));
  Family already = fam("1,2;1,3;2,3", 4, 2);
  CHECK(fully_compress(already) == already);
  CHECK(fully_compress(fam("2,3", 4, 2)) == fam("1,2", 4, 2));
}

TEST_CASE("is_maximal_intersecting", "[family]") {
  CHECK(is_maximal_intersecting(fam("1,2;1,3;2,3", 4, 2)));
  CHECK_FALSE(is_maximal_intersecting(fam("1,2;1,3", 4, 2)));
  CHECK(is_maximal_intersecting(materialize(star_antichain(3), Params(6, 3))));
  CHECK_THROWS_AS(is_maximal_intersecting(fam("1,2;3,4", 4, 2)),
                  std::invalid_argument);
}

TEST_CASE("materialize generated families", "[family]") {
  CHECK(materialize(star_antichain(2), Params(5, 2)) ==
        fam("1,2;1,3;1,4;1,5", 5, 2));
  CHECK(materialize(GenAntichain({Generator({2, 3}, 2)}, 2), Params(4, 2)) ==
        fam("1,2;1,3;2,3", 4, 2));

  GenAntichain g14_234({Generator({1, 4}, 3), Generator({2, 3, 4}, 3)}, 3);
  CHECK(materialize(g14_234, Params(6, 3)).size() == 10);
  CHECK(materialize(g14_234, Params(8, 3)).size() == 16);
  CHECK_THROWS_AS(materialize(g14_234, Params(6, 2)), std::invalid_argument);
}

TEST_CASE("oracle_count by full enumeration", "[family]") {
  CHECK(oracle_count(star_antichain(3), Params(6, 3), RSet({2})) == 4);
  CHECK(oracle_count(GenAntichain({Generator({2, 3}, 2)}, 2), Params(4, 2),
                     RSet({4})) == 0);
  CHECK(oracle_count(star_antichain(3), Params(6, 3),
                     RSet({2, 3, 4, 5, 6})) == 10);
  CHECK_THROWS_AS(oracle_count(star_antichain(3), Params(6, 3), RSet({1, 2})),
                  std::invalid_argument);
  // Guard: binom(64, 30) is far beyond the 10^7 enumeration cap.
  CHECK_THROWS_AS(oracle_count(star_antichain(30), Params(64, 30), RSet({2})),
                  std::invalid_argument);
}

TEST_CASE("compression preserves intersecting and cardinality", "[family]") {
  Rng rng;
  for (int it = 0; it < 300; ++it) {
    const int r = 2 + static_cast<int>(rng.below(3));
    const int n = 2 * r + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(10 - 2 * r + 1)));
    Params p(n, r);
    Family f = random_intersecting(p, rng);
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const int j =
        i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    Family c = compress_family(f, i, j);
    REQUIRE(c.size() == f.size());
    REQUIRE(is_intersecting(c));
  }
}

TEST_CASE("fully_compress: invariants of the fixed point", "[family]") {
  Rng rng;
  rng.s = 0xfeedface12345678ULL;
  for (int it = 0; it < 100; ++it) {
    const int r = 2 + static_cast<int>(rng.below(3));
    const int n = 2 * r + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(10 - 2 * r + 1)));
    Params p(n, r);
    Family f = random_intersecting(p, rng);
    Family g = fully_compress(f);  // asserts strict potential decrease inside
    REQUIRE(g.size() == f.size());
    REQUIRE(is_left_compressed(g));
    REQUIRE(is_intersecting(g));
    REQUIRE(family_potential(g) <= family_potential(f));
    REQUIRE(fully_compress(g) == g);
  }
}

TEST_CASE("superset-generation intersecting iff generators pairwise intersect",
          "[family]") {
  // (The prec-generation analogue is false: <{3,4}> covers both 12 and 34.)
  const int r = 2;
  std::vector<Generator> gens;
  for (int s = 1; s <= r; ++s)
    for_each_rset(2 * r, s,
                  [&](Mask m) { gens.emplace_back(mask_elements(m), r); });
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      bool predicted = (gens[a].mask() & gens[b].mask()) != 0;
      for (int n : {4, 6}) {
        std::vector<Generator> pair{gens[a], gens[b]};
        REQUIRE(is_intersecting(materialize_superset(pair, Params(n, 2))) ==
                predicted);
      }
    }
  // The prec-version counterexample, pinned.
  std::vector<Generator> single{Generator({3, 4}, 2)};
  CHECK_FALSE(is_intersecting(materialize_raw(single, Params(4, 2))));
}

TEST_CASE("catalog entries stay intersecting at larger n", "[family]") {
  for (int r : {2, 3}) {
    const Catalog& cat = lcif_test::cached_catalog(r);
    for (const CatalogEntry& e : cat.entries())
      for (int n = 2 * r; n <= 2 * r + 4; ++n)
        REQUIRE(is_intersecting(materialize(e.gens, Params(n, r))));
  }
}

TEST_CASE("EKR bound over the catalog", "[family]") {
  for (int r : {2, 3}) {
    const Catalog& cat = lcif_test::cached_catalog(r);
    for (int n : {2 * r, 2 * r + 2}) {
      Params p(n, r);
      const BigInt bound = binom(n - 1, r - 1);
      for (const CatalogEntry& e : cat.entries()) {
        const BigInt size = materialize(e.gens, p).size();
        REQUIRE(size <= bound);
        if (n > 2 * r && size == bound)
          REQUIRE(e.gens == star_antichain(r));
        if (n == 2 * r) REQUIRE(size == binom(2 * r, r) / 2);
      }
    }
  }
}
