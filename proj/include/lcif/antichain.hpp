#pragma once

// Canonical generating collections.  A GenAntichain is the compact
// description of one maximal left-compressed intersecting family: a
// nonempty collection of generators over [2r], pairwise intersecting,
// none generating another, kept sorted by (length, lex).

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcif/setcore.hpp"

namespace lcif {

class GenAntichain {
 public:
  GenAntichain(std::vector<Generator> gens, int r) : r_(r), gens_(std::move(gens)) {
    if (r_ < 2) throw std::invalid_argument("GenAntichain: require r >= 2");
    if (gens_.empty()) throw std::invalid_argument("GenAntichain: empty");
    for (const Generator& g : gens_)
      if (g.size() > r_ || g.mask() & ~full_mask(2 * r_))
        throw std::invalid_argument("GenAntichain: generator outside [2r]^(<=r)");
    std::sort(gens_.begin(), gens_.end(), generator_less);
    for (std::size_t i = 0; i + 1 < gens_.size(); ++i)
      if (gens_[i] == gens_[i + 1])
        throw std::invalid_argument("GenAntichain: duplicate generator");
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        if (i == j) continue;
        if (generator_absorbs(gens_[i], gens_[j]))
          throw std::invalid_argument("GenAntichain: generator generates another");
      }
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if ((gens_[i].mask() & gens_[j].mask()) == 0)
          throw std::invalid_argument("GenAntichain: generators not pairwise intersecting");
  }

  int r() const { return r_; }
  int size() const { return static_cast<int>(gens_.size()); }
  std::span<const Generator> generators() const { return gens_; }
  const Generator& operator[](int i) const { return gens_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const GenAntichain&, const GenAntichain&) = default;

 private:
  int r_;
  std::vector<Generator> gens_;
};

// Some generator in the collection generates a (the membership test of the
// generated family).
inline bool generated_by(const GenAntichain& gc, Mask a) {
  for (const Generator& g : gc.generators())
    if (generates_mask(g.elements(), a)) return true;
  return false;
}

// Canonical catalog order: fewer generators first, then generator-by-
// generator comparison in the canonical generator order.
inline bool antichain_less(const GenAntichain& a, const GenAntichain& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return generator_less(a[i], b[i]);
  }
  return false;
}

// {1}: the star.
inline GenAntichain star_antichain(int r) {
  return GenAntichain({Generator({1}, r)}, r);
}

// {1(r+1), [2,r+1]}: the Hilton-Milner family.  At r = 2 the pair collapses
// ({1,3} is generated by {2,3}), so the canonical form is {{2,3}} alone.
inline GenAntichain hilton_milner_antichain(int r) {
  if (r == 2) return GenAntichain({Generator({2, 3}, 2)}, 2);
  std::vector<int> seg;
  for (int e = 2; e <= r + 1; ++e) seg.push_back(e);
  return GenAntichain({Generator({1, r + 1}, r), Generator(seg, r)}, r);
}

// "1,2|2,4,5" -> GenAntichain (canonicalized, validated).
inline GenAntichain parse_gens_literal(std::string_view text, int r) {
  std::vector<Generator> gens;
  for (const std::string& part : detail::split(text, '|'))
    gens.emplace_back(parse_set_literal(part), r);
  return GenAntichain(std::move(gens), r);
}

inline std::string format_gens_literal(const GenAntichain& gc) {
  std::string out;
  for (int i = 0; i < gc.size(); ++i) {
    if (i) out += '|';
    out += format_set_literal(gc[i].elements());
  }
  return out;
}

}  // namespace lcif
