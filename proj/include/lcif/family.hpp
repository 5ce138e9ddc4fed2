#pragma once

// Whole-family predicates and transformations: intersecting, left-compressed,
// maximality, the compression operator C_ij lifted to families, family
// materialization from generating collections, and the brute-force counting
// oracle that validates the closed-form census.

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcif/antichain.hpp"
#include "lcif/bigint.hpp"
#include "lcif/setcore.hpp"

namespace lcif {

inline constexpr std::uint64_t oracle_guard = 10'000'000;

namespace detail {

inline void check_universe_guard(const Params& p, const char* what) {
  if (binom_capped(p.n, p.r, oracle_guard) > oracle_guard)
    throw std::invalid_argument(std::string(what) +
                                ": binom(n,r) exceeds the 10^7 oracle guard");
}

}  // namespace detail

// A finite collection of r-subsets of [n], duplicate-free.  Members are held
// as bitmasks in ascending numeric order.
class Family {
 public:
  Family(Params p, std::vector<Mask> members) : p_(p), masks_(std::move(members)) {
    std::sort(masks_.begin(), masks_.end());
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if (popcount(masks_[i]) != p_.r)
        throw std::invalid_argument("Family: member size differs from r");
      if (masks_[i] & ~full_mask(p_.n))
        throw std::invalid_argument("Family: member not within [n]");
      if (i && masks_[i] == masks_[i - 1])
        throw std::invalid_argument("Family: duplicate member");
    }
  }

  static Family from_sets(Params p, std::span<const RSet> sets) {
    std::vector<Mask> ms;
    ms.reserve(sets.size());
    for (const RSet& s : sets) ms.push_back(s.mask());
    return Family(p, std::move(ms));
  }

  const Params& params() const { return p_; }
  std::size_t size() const { return masks_.size(); }
  const std::vector<Mask>& masks() const { return masks_; }
  bool contains(Mask m) const {
    return std::binary_search(masks_.begin(), masks_.end(), m);
  }

  friend bool operator==(const Family&, const Family&) = default;

 private:
  Params p_;
  std::vector<Mask> masks_;
};

inline bool is_intersecting(const Family& f) {
  const auto& ms = f.masks();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if ((ms[i] & ms[j]) == 0) return false;
  return true;
}

inline bool is_left_compressed(const Family& f) {
  const int n = f.params().n;
  for (Mask m : f.masks())
    for (int j = 2; j <= n; ++j) {
      if (!(m & element_bit(j))) continue;
      for (int i = 1; i < j; ++i) {
        Mask c = compress_mask(m, element_bit(i), element_bit(j));
        if (c != m && !f.contains(c)) return false;
      }
    }
  return true;
}

// C_ij(F): members are compressed unless the compression is already present.
inline Family compress_family(const Family& f, int i, int j) {
  const int n = f.params().n;
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("compress_family: require 1 <= i < j <= n");
  Mask ib = element_bit(i), jb = element_bit(j);
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f.masks()) {
    Mask c = compress_mask(m, ib, jb);
    out.push_back(c != m && f.contains(c) ? m : c);
  }
  return Family(f.params(), std::move(out));
}

// Sum over members of the sum of elements; strictly decreases with every
// effective compression, which bounds the fully_compress loop.
inline long long family_potential(const Family& f) {
  long long total = 0;
  for (Mask m : f.masks()) {
    int e[max_ground];
    int k = unpack_mask(m, e);
    for (int t = 0; t < k; ++t) total += e[t];
  }
  return total;
}

// Applies C_ij over all pairs i < j until a fixed point.  The fixed point is
// left-compressed, has the same cardinality, and is intersecting whenever the
// input is.
inline Family fully_compress(Family f) {
  const int n = f.params().n;
  long long pot = family_potential(f);
  for (;;) {
    bool changed = false;
    for (int i = 1; i < n && !changed; ++i)
      for (int j = i + 1; j <= n && !changed; ++j) {
        Family g = compress_family(f, i, j);
        if (!(g == f)) {
          f = std::move(g);
          changed = true;
        }
      }
    if (!changed) return f;
    long long next = family_potential(f);
    if (next >= pot)
      throw std::logic_error("fully_compress: potential failed to decrease");
    pot = next;
  }
}

// Requires an intersecting family; true iff no r-set can be added while
// keeping the family intersecting.
inline bool is_maximal_intersecting(const Family& f) {
  if (!is_intersecting(f))
    throw std::invalid_argument("is_maximal_intersecting: family not intersecting");
  detail::check_universe_guard(f.params(), "is_maximal_intersecting");
  bool maximal = true;
  for_each_rset(f.params().n, f.params().r, [&](Mask m) {
    if (!maximal || f.contains(m)) return;
    for (Mask a : f.masks())
      if ((a & m) == 0) return;
    maximal = false;
  });
  return maximal;
}

namespace detail {

template <typename Pred>
Family materialize_if(const Params& p, Pred&& member) {
  check_universe_guard(p, "materialize");
  std::vector<Mask> out;
  for_each_rset(p.n, p.r, [&](Mask m) {
    if (member(m)) out.push_back(m);
  });
  return Family(p, std::move(out));
}

}  // namespace detail

// <G>_r^n = {A in [n]^(r) : A prec G for some G in the collection}.
inline Family materialize(const GenAntichain& gc, const Params& p) {
  if (gc.r() > p.r)
    throw std::invalid_argument("materialize: generators exceed [2r]");
  return detail::materialize_if(p, [&](Mask m) { return generated_by(gc, m); });
}

// Same expansion for an arbitrary generator list (no antichain or
// intersecting requirement); test harness for the generating-set lemmas.
inline Family materialize_raw(std::span<const Generator> gens, const Params& p) {
  return detail::materialize_if(p, [&](Mask m) {
    for (const Generator& g : gens)
      if (generates_mask(g.elements(), m)) return true;
    return false;
  });
}

// Superset-generation {A : A contains some G}, the form in which the
// original generating-set lemma is stated.
inline Family materialize_superset(std::span<const Generator> gens, const Params& p) {
  return detail::materialize_if(p, [&](Mask m) {
    for (const Generator& g : gens)
      if ((m & g.mask()) == g.mask()) return true;
    return false;
  });
}

// |<G>(X)| by full enumeration of [n]^(r); ground truth for the census
// module.  X must be a nonempty subset of [2, n].
inline BigInt oracle_count(const GenAntichain& gc, const Params& p, const RSet& x) {
  if (x.contains(1))
    throw std::invalid_argument("oracle_count: X must not contain 1");
  if (x.mask() & ~full_mask(p.n))
    throw std::invalid_argument("oracle_count: X not within [n]");
  if (gc.r() > p.r)
    throw std::invalid_argument("oracle_count: generators exceed [2r]");
  detail::check_universe_guard(p, "oracle_count");
  long long count = 0;
  Mask xm = x.mask();
  for_each_rset(p.n, p.r, [&](Mask m) {
    if ((m & xm) && generated_by(gc, m)) ++count;
  });
  return count;
}

}  // namespace lcif
