#pragma once

// Exact counting of |<G>(X)| without materialization.  For generators over
// [2r], a member's elements beyond 2r are interchangeable, so |<G>(X)|
// depends on X only through inside = X intersect [2, 2r] and the count
// m = |X \ [2, 2r]|.  Counts become binomial sums in n - 2r; differences
// against the star become integer polynomials whose sign is classified
// exactly.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lcif/antichain.hpp"
#include "lcif/bigint.hpp"
#include "lcif/setcore.hpp"

namespace lcif {

// A hitting set in reduced form: a subset of [2, 2r] plus a count of
// elements beyond 2r.  1 never belongs to X.
class XSet {
 public:
  XSet(int r, std::span<const int> inside_elems, int outside_count)
      : r_(r), outside_(outside_count) {
    if (r_ < 2) throw std::invalid_argument("XSet: require r >= 2");
    if (outside_ < 0) throw std::invalid_argument("XSet: negative outside count");
    detail::check_increasing_in_range(inside_elems, 2 * r_, "XSet");
    for (int e : inside_elems)
      if (e == 1) throw std::invalid_argument("XSet: 1 cannot belong to X");
    inside_ = mask_of(inside_elems);
    if (inside_ == 0 && outside_ == 0)
      throw std::invalid_argument("XSet: X must be nonempty");
  }

  XSet(int r, Mask inside, int outside_count)
      : XSet(r, mask_elements(inside), outside_count) {}

  // Splits raw elements of [2, n] at 2r.
  static XSet reduce(std::span<const int> raw, const Params& p) {
    detail::check_increasing_in_range(raw, p.n, "XSet");
    std::vector<int> inside;
    int outside = 0;
    for (int e : raw) {
      if (e <= 2 * p.r)
        inside.push_back(e);
      else
        ++outside;
    }
    return XSet(p.r, inside, outside);
  }

  int r() const { return r_; }
  Mask inside_mask() const { return inside_; }
  std::vector<int> inside_elements() const { return mask_elements(inside_); }
  int inside_size() const { return popcount(inside_); }
  int outside() const { return outside_; }
  int total_size() const { return inside_size() + outside_; }
  bool inside_contains(int e) const { return inside_ & element_bit(e); }

  void validate_at(const Params& p) const {
    if (p.r != r_) throw std::invalid_argument("XSet: r mismatch");
    if (outside_ > p.n - 2 * r_)
      throw std::invalid_argument("XSet: outside count exceeds n - 2r");
  }

  friend bool operator==(const XSet&, const XSet&) = default;

 private:
  int r_;
  Mask inside_;
  int outside_;
};

// g_i = #(i-subsets of [2r] generated by the collection), h_i = those that
// additionally meet X.inside; indices 1..r stored at [i-1].
struct CountVector {
  int r = 0;
  std::vector<std::int64_t> g, h;

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

struct CountVectorHash {
  std::size_t operator()(const CountVector& cv) const {
    std::size_t seed = std::hash<int>{}(cv.r);
    auto mix = [&seed](std::int64_t v) {
      seed ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
              (seed >> 2);
    };
    for (auto v : cv.g) mix(v);
    for (auto v : cv.h) mix(v);
    return seed;
  }
};

inline CountVector count_vector(const GenAntichain& gc, const XSet& x) {
  if (gc.r() != x.r()) throw std::invalid_argument("count_vector: r mismatch");
  const int r = gc.r();
  CountVector cv;
  cv.r = r;
  cv.g.assign(static_cast<std::size_t>(r), 0);
  cv.h.assign(static_cast<std::size_t>(r), 0);
  for (int i = 1; i <= r; ++i)
    for_each_rset(2 * r, i, [&](Mask m) {
      if (!generated_by(gc, m)) return;
      ++cv.g[static_cast<std::size_t>(i - 1)];
      if (m & x.inside_mask()) ++cv.h[static_cast<std::size_t>(i - 1)];
    });
  return cv;
}

// |<G>_r^n(X)| from a count vector: completions of an i-subset of [2r] pick
// r-i elements beyond 2r; those whose [2r]-part misses X.inside must hit one
// of the m outside elements of X.
inline BigInt eval_count(const CountVector& cv, int x_outside, const Params& p) {
  const int r = cv.r;
  if (p.r != r) throw std::invalid_argument("eval_count: r mismatch");
  const int m = p.n - 2 * r;
  if (x_outside > m)
    throw std::invalid_argument("eval_count: outside count exceeds n - 2r");
  BigInt total = 0;
  for (int i = 1; i <= r; ++i) {
    BigInt all = binom(m, r - i);
    BigInt miss = binom(m - x_outside, r - i);
    const auto gi = cv.g[static_cast<std::size_t>(i - 1)];
    const auto hi = cv.h[static_cast<std::size_t>(i - 1)];
    total += hi * all + (gi - hi) * (all - miss);
  }
  return total;
}

inline BigInt eval_count(const GenAntichain& gc, const XSet& x, const Params& p) {
  x.validate_at(p);
  return eval_count(count_vector(gc, x), x.outside(), p);
}

// |<G>_r^n| with no hitting restriction.
inline BigInt family_size(const CountVector& cv, const Params& p) {
  if (p.r != cv.r) throw std::invalid_argument("family_size: r mismatch");
  BigInt total = 0;
  for (int i = 1; i <= cv.r; ++i)
    total += cv.g[static_cast<std::size_t>(i - 1)] * binom(p.n - 2 * cv.r, cv.r - i);
  return total;
}

inline BigInt family_size(const GenAntichain& gc, const Params& p) {
  XSet x(gc.r(), Mask{element_bit(2)}, 0);  // any X; g does not depend on it
  return family_size(count_vector(gc, x), p);
}

// |S(X)|, with the closed form binom(n-1, r-1) - binom(n-1-|X|, r-1).
inline BigInt star_count(const XSet& x, const Params& p) {
  x.validate_at(p);
  return binom(p.n - 1, p.r - 1) - binom(p.n - 1 - x.total_size(), p.r - 1);
}

// Integer polynomial in m = n - 2r with an explicit positive scale: the true
// value is eval_scaled(m) / scale.  Valid for integers m >= valid_from (the
// outside count of the X it was built from).
struct CountPoly {
  int r = 0;
  int valid_from = 0;
  BigInt scale = 1;
  std::vector<BigInt> coeffs;  // coeffs[k] multiplies m^k

  int degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
      if (coeffs[static_cast<std::size_t>(k)] != 0) return k;
    return -1;
  }
  bool is_zero() const { return degree() < 0; }

  BigInt eval_scaled(long long m) const {
    BigInt v = 0;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
      v *= m;
      v += coeffs[static_cast<std::size_t>(k)];
    }
    return v;
  }
};

namespace detail {

// Coefficients of (r-1)! * binom(m - shift, k) as a polynomial in m.
inline std::vector<BigInt> scaled_binom_poly(int k, int shift, int r) {
  std::vector<BigInt> c{1};
  for (int t = 0; t < k; ++t) {
    // multiply by (m - (shift + t))
    c.push_back(0);
    for (int i = static_cast<int>(c.size()) - 1; i > 0; --i) {
      c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i - 1)] -
                                       (shift + t) * c[static_cast<std::size_t>(i)];
    }
    c[0] *= -(shift + t);
  }
  BigInt unit = factorial(r - 1) / factorial(k);
  for (BigInt& v : c) v *= unit;
  return c;
}

}  // namespace detail

// star_count - eval_count as an exact polynomial in m = n - 2r, scaled by
// (r-1)!.
inline CountPoly diff_poly(const CountVector& star_cv, const CountVector& fam_cv,
                           int x_outside, int r) {
  if (star_cv.r != r || fam_cv.r != r)
    throw std::invalid_argument("diff_poly: r mismatch");
  CountPoly poly;
  poly.r = r;
  poly.valid_from = x_outside;
  poly.scale = factorial(r - 1);
  poly.coeffs.assign(static_cast<std::size_t>(r), 0);
  for (int i = 1; i <= r; ++i) {
    const std::size_t ix = static_cast<std::size_t>(i - 1);
    BigInt d_hit = star_cv.h[ix] - fam_cv.h[ix];
    BigInt d_rest = (star_cv.g[ix] - star_cv.h[ix]) - (fam_cv.g[ix] - fam_cv.h[ix]);
    // d_hit * B(m, r-i) + d_rest * (B(m, r-i) - B(m - x_outside, r-i))
    std::vector<BigInt> base = detail::scaled_binom_poly(r - i, 0, r);
    std::vector<BigInt> shifted = detail::scaled_binom_poly(r - i, x_outside, r);
    for (std::size_t k = 0; k < base.size(); ++k) {
      poly.coeffs[k] += (d_hit + d_rest) * base[k];
      poly.coeffs[k] -= d_rest * shifted[k];
    }
  }
  return poly;
}

inline CountPoly diff_poly(const GenAntichain& gc, const XSet& x) {
  if (gc.r() != x.r()) throw std::invalid_argument("diff_poly: r mismatch");
  CountVector star_cv = count_vector(star_antichain(gc.r()), x);
  CountVector fam_cv = count_vector(gc, x);
  return diff_poly(star_cv, fam_cv, x.outside(), gc.r());
}

// Exact sign classification of a CountPoly over its valid domain
// m >= valid_from (i.e. n >= 2r + valid_from).
struct SignThreshold {
  enum class Kind { always_nonneg, nonneg_from, eventually_negative };
  Kind kind = Kind::always_nonneg;
  int n = 0;  // NonnegFrom threshold n, or EventuallyNegative witness n

  friend bool operator==(const SignThreshold&, const SignThreshold&) = default;
};

// Walks integer points upward from valid_from, stopping either at the first
// negative value (negative leading coefficient) or at a Newton certificate:
// once p and all its forward differences at a point are nonnegative, p stays
// nonnegative forever after.  Exact; terminates within the Cauchy root bound.
inline SignThreshold sign_threshold(const CountPoly& poly) {
  const int d = poly.degree();
  if (d < 0) return {SignThreshold::Kind::always_nonneg, 0};
  const bool lead_neg = poly.coeffs[static_cast<std::size_t>(d)] < 0;

  long long m = poly.valid_from;
  bool seen_negative = false;
  long long last_negative = 0;
  const long long hard_cap = poly.valid_from + 100'000'000LL;
  std::vector<BigInt> window(static_cast<std::size_t>(d) + 1);
  for (;;) {
    if (m > hard_cap) throw std::logic_error("sign_threshold: walk failed to terminate");
    BigInt v = poly.eval_scaled(m);
    if (v < 0) {
      if (lead_neg)
        return {SignThreshold::Kind::eventually_negative,
                static_cast<int>(2 * poly.r + m)};
      seen_negative = true;
      last_negative = m;
      ++m;
      continue;
    }
    if (!lead_neg) {
      // Newton certificate at m: all forward differences nonnegative.
      bool certified = true;
      for (int k = 0; k <= d; ++k)
        window[static_cast<std::size_t>(k)] = poly.eval_scaled(m + k);
      for (int row = 0; row <= d && certified; ++row) {
        for (int k = 0; k + row <= d; ++k)
          if (window[static_cast<std::size_t>(k)] < 0) {
            certified = false;
            break;
          }
        for (int k = 0; k + row + 1 <= d; ++k)
          window[static_cast<std::size_t>(k)] =
              window[static_cast<std::size_t>(k + 1)] - window[static_cast<std::size_t>(k)];
      }
      if (certified) {
        if (!seen_negative) return {SignThreshold::Kind::always_nonneg, 0};
        return {SignThreshold::Kind::nonneg_from,
                static_cast<int>(2 * poly.r + last_negative + 1)};
      }
    }
    ++m;
  }
}

// Exact check that p(m) < 0 for every integer m >= m_lo: walks upward until
// either a nonnegative value (false) or a mirrored Newton certificate (all
// values in a window negative, all forward differences nonpositive).
inline bool poly_negative_from(const CountPoly& poly, long long m_lo) {
  const int d = poly.degree();
  if (d < 0) return false;
  const long long hard_cap = m_lo + 100'000'000LL;
  std::vector<BigInt> window(static_cast<std::size_t>(d) + 1);
  for (long long m = std::max<long long>(m_lo, poly.valid_from);; ++m) {
    if (m > hard_cap)
      throw std::logic_error("poly_negative_from: walk failed to terminate");
    if (poly.eval_scaled(m) >= 0) return false;
    bool certified = true;
    for (int k = 0; k <= d; ++k)
      window[static_cast<std::size_t>(k)] = poly.eval_scaled(m + k);
    for (int row = 0; row <= d && certified; ++row) {
      for (int k = 0; k + row <= d; ++k) {
        const BigInt& v = window[static_cast<std::size_t>(k)];
        if (row == 0 ? v >= 0 : v > 0) {
          certified = false;
          break;
        }
      }
      for (int k = 0; k + row + 1 <= d; ++k)
        window[static_cast<std::size_t>(k)] =
            window[static_cast<std::size_t>(k + 1)] - window[static_cast<std::size_t>(k)];
    }
    if (certified) return true;
  }
}

}  // namespace lcif
