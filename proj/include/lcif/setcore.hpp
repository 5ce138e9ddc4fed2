#pragma once

// Ground-level combinatorics: r-sets of [n] as bitmasks, the compression
// order <=, the compression operator C_ij, and the generation relation
// (A prec G).  Element k of [1,64] lives at bit k-1; indexing is 1-based
// throughout.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcif {

using Mask = std::uint64_t;

inline constexpr int max_ground = 64;

inline constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }

// Bitmask of [1, n].
inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcount(Mask m) { return std::popcount(m); }

// Smallest element of a nonempty mask.
inline int min_element(Mask m) { return std::countr_zero(m) + 1; }

// Writes the elements of m into out (ascending); returns the count.
inline int unpack_mask(Mask m, int* out) {
  int k = 0;
  while (m) {
    out[k++] = std::countr_zero(m) + 1;
    m &= m - 1;
  }
  return k;
}

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out(static_cast<std::size_t>(popcount(m)));
  unpack_mask(m, out.data());
  return out;
}

inline Mask mask_of(std::span<const int> elems) {
  Mask m = 0;
  for (int e : elems) m |= element_bit(e);
  return m;
}

// Lexicographic order on the increasing element sequences of two equal-size
// sets: the smallest element where they differ decides.
inline bool lex_less(Mask a, Mask b) {
  Mask d = a ^ b;
  if (d == 0) return false;
  return ((d & -d) & a) != 0;
}

struct Params {
  int n;
  int r;
  Params(int n_, int r_) : n(n_), r(r_) {
    if (r < 2) throw std::invalid_argument("Params: require r >= 2");
    if (n < 2 * r) throw std::invalid_argument("Params: require n >= 2r");
    if (n > max_ground) throw std::invalid_argument("Params: require n <= 64");
  }
  friend bool operator==(const Params&, const Params&) = default;
};

namespace detail {

inline void check_increasing_in_range(std::span<const int> elems, int hi,
                                      const char* what) {
  int prev = 0;
  for (int e : elems) {
    if (e <= prev)
      throw std::invalid_argument(std::string(what) +
                                  ": elements must be strictly increasing");
    if (e > hi)
      throw std::invalid_argument(std::string(what) + ": element " +
                                  std::to_string(e) + " exceeds " +
                                  std::to_string(hi));
    prev = e;
  }
}

}  // namespace detail

// A nonempty subset of [1, 64], viewed as an increasing sequence.
class RSet {
 public:
  explicit RSet(std::span<const int> elems) {
    if (elems.empty()) throw std::invalid_argument("RSet: empty set");
    detail::check_increasing_in_range(elems, max_ground, "RSet");
    bits_ = mask_of(elems);
  }
  RSet(std::initializer_list<int> elems)
      : RSet(std::span<const int>(elems.begin(), elems.size())) {}

  static RSet from_mask(Mask bits) {
    if (bits == 0) throw std::invalid_argument("RSet: empty set");
    RSet s;
    s.bits_ = bits;
    return s;
  }

  Mask mask() const { return bits_; }
  int size() const { return popcount(bits_); }
  bool contains(int e) const { return bits_ & element_bit(e); }
  int max_element() const { return 64 - std::countl_zero(bits_); }
  std::vector<int> elements() const { return mask_elements(bits_); }

  friend bool operator==(const RSet&, const RSet&) = default;

 private:
  RSet() : bits_(0) {}
  Mask bits_;
};

// A generating set: a subset of [1, 2r] of size in [1, r].  Members A with
// a_i <= g_i for i <= |G| (missing positions read as +infinity) are the sets
// it generates.
class Generator {
 public:
  Generator(std::span<const int> elems, int r) {
    if (r < 2) throw std::invalid_argument("Generator: require r >= 2");
    if (elems.empty()) throw std::invalid_argument("Generator: empty");
    if (static_cast<int>(elems.size()) > r)
      throw std::invalid_argument("Generator: size exceeds r");
    detail::check_increasing_in_range(elems, 2 * r, "Generator");
    elems_.assign(elems.begin(), elems.end());
    bits_ = mask_of(elems);
  }
  Generator(std::initializer_list<int> elems, int r)
      : Generator(std::span<const int>(elems.begin(), elems.size()), r) {}

  Mask mask() const { return bits_; }
  int size() const { return static_cast<int>(elems_.size()); }
  std::span<const int> elements() const { return elems_; }

  friend bool operator==(const Generator&, const Generator&) = default;

 private:
  std::vector<int> elems_;
  Mask bits_;
};

// Canonical generator order: by length, then lexicographically.
inline bool generator_less(const Generator& a, const Generator& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a.mask(), b.mask());
}

// C_ij(A): replace j by i if j is present and i is absent.
inline RSet compress_set(const RSet& a, int i, int j, int n) {
  if (i < 1 || j > n || i >= j)
    throw std::invalid_argument("compress_set: require 1 <= i < j <= n");
  if (n > max_ground) throw std::invalid_argument("compress_set: n > 64");
  if (a.mask() & ~full_mask(n))
    throw std::invalid_argument("compress_set: set not within [n]");
  Mask jb = element_bit(j), ib = element_bit(i);
  Mask m = a.mask();
  if ((m & jb) && !(m & ib)) m = (m & ~jb) | ib;
  return RSet::from_mask(m);
}

// Unchecked mask form of C_ij for hot loops.
inline Mask compress_mask(Mask m, Mask ib, Mask jb) {
  return ((m & jb) && !(m & ib)) ? ((m & ~jb) | ib) : m;
}

// Positionwise comparison of equal-size sets: a_i <= b_i for all i.
inline bool leq(const RSet& a, const RSet& b) {
  if (a.size() != b.size()) throw std::invalid_argument("leq: size mismatch");
  int ea[max_ground], eb[max_ground];
  int k = unpack_mask(a.mask(), ea);
  unpack_mask(b.mask(), eb);
  for (int t = 0; t < k; ++t)
    if (ea[t] > eb[t]) return false;
  return true;
}

// Unchecked positionwise comparison of two equal-size masks.
inline bool leq_masks(Mask a, Mask b) {
  int ea[max_ground], eb[max_ground];
  int k = unpack_mask(a, ea);
  unpack_mask(b, eb);
  for (int t = 0; t < k; ++t)
    if (ea[t] > eb[t]) return false;
  return true;
}

namespace detail {

// A prec G on raw sequences: |G| <= |A| and a_i <= g_i for i <= |G|.
inline bool prec_seq(std::span<const int> g, std::span<const int> a) {
  if (g.size() > a.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (a[i] > g[i]) return false;
  return true;
}

}  // namespace detail

// A prec G: G generates A.
inline bool generates(const Generator& g, const RSet& a) {
  int ea[max_ground];
  int k = unpack_mask(a.mask(), ea);
  return detail::prec_seq(g.elements(), std::span<const int>(ea, ea + k));
}

// Mask form used by enumeration and counting loops.
inline bool generates_mask(std::span<const int> g, Mask a) {
  int ea[max_ground];
  int k = unpack_mask(a, ea);
  return detail::prec_seq(g, std::span<const int>(ea, ea + k));
}

// H prec G for generators: G makes H redundant in a generating collection.
inline bool generator_absorbs(const Generator& g, const Generator& h) {
  return detail::prec_seq(g.elements(), h.elements());
}

inline RSet complement(const RSet& a, int within) {
  if (within > max_ground) throw std::invalid_argument("complement: within > 64");
  if (a.mask() & ~full_mask(within))
    throw std::invalid_argument("complement: set not within range");
  Mask m = full_mask(within) & ~a.mask();
  if (m == 0) throw std::invalid_argument("complement: result empty");
  return RSet::from_mask(m);
}

// binom(n, r) as uint64, saturating at cap (guard computations only).
inline std::uint64_t binom_capped(int n, int r, std::uint64_t cap) {
  if (r < 0 || n < r) return 0;
  r = std::min(r, n - r);
  std::uint64_t v = 1;
  for (int i = 1; i <= r; ++i) {
    if (v > cap) return cap + 1;
    v = v * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return std::min(v, cap + 1);
}

// Visits every r-subset of [n] as a mask, in lexicographic order of the
// increasing element sequences.
template <typename Fn>
void for_each_rset(int n, int r, Fn&& fn) {
  if (r < 1 || n < r || n > max_ground) return;
  int idx[max_ground];
  for (int i = 0; i < r; ++i) idx[i] = i + 1;
  for (;;) {
    Mask m = 0;
    for (int i = 0; i < r; ++i) m |= element_bit(idx[i]);
    fn(m);
    int p = r - 1;
    while (p >= 0 && idx[p] == n - (r - 1 - p)) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < r; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// ---- literals ----------------------------------------------------------
//
// Set literal: comma-separated increasing integers, e.g. "2,5,8".
// Family literal: semicolon-separated set literals.
// Generator-list literal: '|'-separated set literals.

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline int parse_int(const std::string& tok, const char* what) {
  if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty token");
  std::size_t pos = 0;
  int v;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
  }
  if (pos != tok.size())
    throw std::invalid_argument(std::string(what) + ": bad integer '" + tok + "'");
  return v;
}

}  // namespace detail

// "2,5,8" -> {2,5,8}; validates strictly increasing positive elements.
inline std::vector<int> parse_set_literal(std::string_view text) {
  std::string body = detail::trim(text);
  if (body.empty()) throw std::invalid_argument("set literal: empty");
  std::vector<int> out;
  for (const std::string& tok : detail::split(body, ',')) {
    int v = detail::parse_int(tok, "set literal");
    if (v < 1) throw std::invalid_argument("set literal: elements must be positive");
    out.push_back(v);
  }
  detail::check_increasing_in_range(out, max_ground, "set literal");
  return out;
}

inline std::string format_set_literal(std::span<const int> elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  return out;
}

inline std::string format_set_literal(Mask m) {
  int e[max_ground];
  int k = unpack_mask(m, e);
  return format_set_literal(std::span<const int>(e, e + k));
}

// "1,2;2,4,5" -> list of element vectors.
inline std::vector<std::vector<int>> parse_family_literal(std::string_view text) {
  std::vector<std::vector<int>> out;
  for (const std::string& part : detail::split(text, ';'))
    out.push_back(parse_set_literal(part));
  return out;
}

}  // namespace lcif
