#pragma once

// Goodness decisions: is X star-dominated at (n, r), eventually, and from
// which threshold; minimal good sets; the closed-form predicate of the
// characterisation theorems.
//
// The CountTable turns a catalog into packed per-entry bitsets over the
// subsets of [2r] (one block per subset size), so the count vector of any
// entry against any X is a handful of AND+popcount passes.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lcif/census.hpp"
#include "lcif/mlcif.hpp"

namespace lcif {

class CountTable {
 public:
  explicit CountTable(const Catalog& cat) : cat_(&cat), r_(cat.r()) {
    const int n2 = 2 * r_;
    blocks_.resize(static_cast<std::size_t>(r_));
    int off = 0;
    for (int i = 1; i <= r_; ++i) {
      Block& b = blocks_[static_cast<std::size_t>(i - 1)];
      for_each_rset(n2, i, [&](Mask m) { b.sets.push_back(m); });
      b.offset = off;
      b.words = (static_cast<int>(b.sets.size()) + 63) / 64;
      off += b.words;
    }
    entry_words_ = off;

    // Shared rows for the distinct generators across the catalog.
    std::unordered_map<std::uint64_t, int> row_of;
    std::vector<std::vector<std::uint64_t>> rows;
    auto generator_row = [&](const Generator& g) -> const std::vector<std::uint64_t>& {
      std::uint64_t key = (g.mask() << 6) | static_cast<std::uint64_t>(g.size());
      auto [it, fresh] = row_of.try_emplace(key, static_cast<int>(rows.size()));
      if (fresh) {
        std::vector<std::uint64_t> row(static_cast<std::size_t>(entry_words_), 0);
        for (int i = 1; i <= r_; ++i) {
          const Block& b = blocks_[static_cast<std::size_t>(i - 1)];
          for (std::size_t t = 0; t < b.sets.size(); ++t)
            if (generates_mask(g.elements(), b.sets[t]))
              row[static_cast<std::size_t>(b.offset) + (t >> 6)] |= 1ULL << (t & 63);
        }
        rows.push_back(std::move(row));
      }
      return rows[static_cast<std::size_t>(it->second)];
    };

    const int k = cat.size();
    bits_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(entry_words_), 0);
    g_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(r_), 0);
    for (int e = 0; e < k; ++e) {
      std::uint64_t* slot = entry_bits(e);
      for (const Generator& g : cat[e].gens.generators()) {
        const std::vector<std::uint64_t>& row = generator_row(g);
        for (int w = 0; w < entry_words_; ++w) slot[w] |= row[w];
      }
      for (int i = 1; i <= r_; ++i) {
        const Block& b = blocks_[static_cast<std::size_t>(i - 1)];
        std::int64_t c = 0;
        for (int w = 0; w < b.words; ++w)
          c += std::popcount(slot[b.offset + w]);
        g_[static_cast<std::size_t>(e) * r_ + static_cast<std::size_t>(i - 1)] = c;
      }
    }
  }

  const Catalog& catalog() const { return *cat_; }
  int r() const { return r_; }

  // Per-X bitset marking, for every tracked subset of [2r], whether it meets
  // X.inside; aligned with the entry layout.
  struct XProfile {
    std::vector<std::uint64_t> meets;
  };

  XProfile profile(Mask inside) const {
    XProfile xp;
    xp.meets.assign(static_cast<std::size_t>(entry_words_), 0);
    for (int i = 1; i <= r_; ++i) {
      const Block& b = blocks_[static_cast<std::size_t>(i - 1)];
      for (std::size_t t = 0; t < b.sets.size(); ++t)
        if (b.sets[t] & inside)
          xp.meets[static_cast<std::size_t>(b.offset) + (t >> 6)] |= 1ULL << (t & 63);
    }
    return xp;
  }

  // Fills g[0..r-1], h[0..r-1] for one entry against a profile.
  void counts(int entry, const XProfile& xp, std::int64_t* g, std::int64_t* h) const {
    const std::uint64_t* slot = entry_bits(entry);
    const std::int64_t* gs = g_.data() + static_cast<std::size_t>(entry) * r_;
    for (int i = 0; i < r_; ++i) {
      g[i] = gs[i];
      const Block& b = blocks_[static_cast<std::size_t>(i)];
      std::int64_t c = 0;
      for (int w = 0; w < b.words; ++w)
        c += std::popcount(slot[b.offset + w] & xp.meets[static_cast<std::size_t>(b.offset + w)]);
      h[i] = c;
    }
  }

  CountVector vector_for(int entry, const XProfile& xp) const {
    CountVector cv;
    cv.r = r_;
    cv.g.resize(static_cast<std::size_t>(r_));
    cv.h.resize(static_cast<std::size_t>(r_));
    counts(entry, xp, cv.g.data(), cv.h.data());
    return cv;
  }

  CountVector vector_for(int entry, const XSet& x) const {
    return vector_for(entry, profile(x.inside_mask()));
  }

 private:
  struct Block {
    int offset = 0;
    int words = 0;
    std::vector<Mask> sets;
  };

  std::uint64_t* entry_bits(int e) {
    return bits_.data() + static_cast<std::size_t>(e) * entry_words_;
  }
  const std::uint64_t* entry_bits(int e) const {
    return bits_.data() + static_cast<std::size_t>(e) * entry_words_;
  }

  const Catalog* cat_;
  int r_;
  std::vector<Block> blocks_;
  int entry_words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::int64_t> g_;
};

struct Witness {
  int entry_index;
  BigInt family_count;
  BigInt star_count;
};

struct Verdict {
  bool good = true;
  std::vector<Witness> witnesses;  // every violating family, catalog order
};

namespace detail {

// binom(n-2r, r-i) and binom(n-2r-mu, r-i) for i = 1..r.
struct EvalBasis {
  std::vector<BigInt> all, miss;
  EvalBasis(const Params& p, int mu) {
    const int m = p.n - 2 * p.r;
    for (int i = 1; i <= p.r; ++i) {
      all.push_back(binom(m, p.r - i));
      miss.push_back(binom(m - mu, p.r - i));
    }
  }
  BigInt eval(const std::int64_t* g, const std::int64_t* h, int r) const {
    BigInt total = 0;
    for (int i = 0; i < r; ++i)
      total += h[i] * all[static_cast<std::size_t>(i)] +
               (g[i] - h[i]) * (all[static_cast<std::size_t>(i)] -
                                miss[static_cast<std::size_t>(i)]);
    return total;
  }
};

}  // namespace detail

inline Verdict classify_at(const XSet& x, const Params& p, const CountTable& table) {
  if (table.r() != x.r()) throw std::invalid_argument("classify_at: r mismatch");
  x.validate_at(p);
  const int r = p.r;
  CountTable::XProfile prof = table.profile(x.inside_mask());
  detail::EvalBasis basis(p, x.outside());
  BigInt star = star_count(x, p);
  Verdict v;
  std::int64_t g[max_ground], h[max_ground];
  for (int e = 0; e < table.catalog().size(); ++e) {
    table.counts(e, prof, g, h);
    BigInt count = basis.eval(g, h, r);
    if (count > star) v.witnesses.push_back(Witness{e, std::move(count), star});
  }
  v.good = v.witnesses.empty();
  return v;
}

inline Verdict classify_at(const XSet& x, const Params& p, const Catalog& cat) {
  return classify_at(x, p, CountTable(cat));
}

struct FamilySign {
  int entry_index;
  SignThreshold sign;
};

struct EventualVerdict {
  bool eventually_good = false;
  int threshold_n = 0;  // N0; meaningful iff eventually_good
  std::vector<FamilySign> per_family;
};

// Sign-classifies star - entry for every catalog entry; X is eventually good
// iff no entry is eventually negative.  N0 comes from the polynomial
// thresholds and is confirmed by scanning downward with exact classify_at.
inline EventualVerdict classify_eventual(const XSet& x, const CountTable& table) {
  if (table.r() != x.r()) throw std::invalid_argument("classify_eventual: r mismatch");
  const int r = x.r();
  CountTable::XProfile prof = table.profile(x.inside_mask());
  CountVector star_cv = count_vector(star_antichain(r), x);

  EventualVerdict ev;
  std::unordered_map<CountVector, SignThreshold, CountVectorHash> memo;
  int poly_n0 = 2 * r;
  bool bad = false;
  for (int e = 0; e < table.catalog().size(); ++e) {
    CountVector cv = table.vector_for(e, prof);
    auto it = memo.find(cv);
    if (it == memo.end()) {
      SignThreshold st = sign_threshold(diff_poly(star_cv, cv, x.outside(), r));
      it = memo.emplace(std::move(cv), st).first;
    }
    const SignThreshold& st = it->second;
    ev.per_family.push_back(FamilySign{e, st});
    if (st.kind == SignThreshold::Kind::eventually_negative) bad = true;
    if (st.kind == SignThreshold::Kind::nonneg_from) poly_n0 = std::max(poly_n0, st.n);
  }
  ev.eventually_good = !bad;
  if (ev.eventually_good) {
    const int floor_n = 2 * r + x.outside();
    int n0 = std::max(poly_n0, floor_n);
    while (n0 > floor_n && classify_at(x, Params(n0 - 1, r), table).good) --n0;
    ev.threshold_n = n0;
  }
  return ev;
}

// The characterisation: X (|X| <= r) is good for all sufficiently large n iff
// X is not a subset of [2, r+1] and its size class passes.  For r = 2 the
// size-2 condition becomes X != {2,3}, which the [2, r+1] test already
// captures.
inline bool theorem_main_predicate(const XSet& x) {
  const int r = x.r();
  const int size = x.total_size();
  if (size > r)
    throw std::invalid_argument(
        "theorem_main_predicate: |X| > r is always good (borg(a))");
  const Mask hm_zone = full_mask(r + 1) & ~element_bit(1);  // [2, r+1]
  if (x.outside() == 0 && (x.inside_mask() & ~hm_zone) == 0) return false;
  if (r == 2) return true;
  if (size >= 4) return true;
  if (size == 3) return !(x.inside_contains(2) && x.inside_contains(3));
  if (size == 2) return !x.inside_contains(2) && !x.inside_contains(3);
  return true;  // size == 1
}

// All good X of each size (or one given size) that are minimal in the
// positionwise shift order among good sets of that size.  Results in
// canonical order: size ascending, then lexicographic.
inline std::vector<RSet> minimal_good(const Params& p, const CountTable& table,
                                      std::optional<int> size = std::nullopt) {
  if (p.n - 1 > 20)
    throw std::invalid_argument("minimal_good: search space exceeds 2^20 (n > 21)");
  if (size && (*size < 1 || *size > p.n - 1))
    throw std::invalid_argument("minimal_good: size out of range");

  // goods[k]: masks of good X of size k (elements of [2, n]).
  std::vector<std::vector<Mask>> goods(static_cast<std::size_t>(p.n));
  const std::uint32_t limit = 1u << (p.n - 1);
  for (std::uint32_t bits = 1; bits < limit; ++bits) {
    int k = std::popcount(bits);
    if (size && k != *size) continue;
    Mask xm = static_cast<Mask>(bits) << 1;  // bit t -> element t+2
    std::vector<int> elems = mask_elements(xm);
    XSet x = XSet::reduce(elems, p);
    if (classify_at(x, p, table).good) goods[static_cast<std::size_t>(k)].push_back(xm);
  }

  std::vector<RSet> out;
  for (std::size_t k = 1; k < goods.size(); ++k) {
    std::vector<Mask>& same = goods[k];
    std::sort(same.begin(), same.end(), lex_less);
    for (Mask m : same) {
      bool minimal = true;
      for (Mask other : same)
        if (other != m && leq_masks(other, m)) {
          minimal = false;
          break;
        }
      if (minimal) out.push_back(RSet::from_mask(m));
    }
  }
  return out;
}

}  // namespace lcif
