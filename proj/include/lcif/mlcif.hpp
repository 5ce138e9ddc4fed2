#pragma once

// Enumeration of all maximal left-compressed intersecting families of
// [2r]^(r) and their canonical generator antichains.
//
// At n = 2r, disjoint r-sets are exactly complementary pairs, so the maximal
// left-compressed intersecting families are precisely the down-sets of
// ([2r]^(r), <=) containing exactly one set of each complementary pair.  The
// search walks complementary pairs in lexicographic order, propagating
// down-closure and the one-per-pair rule as bitset operations.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcif/bigint.hpp"
#include "lcif/family.hpp"

namespace lcif {

struct CatalogError : std::runtime_error {
  explicit CatalogError(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogEntry {
  GenAntichain gens;
  BigInt size_2r;  // |materialize(gens, n=2r)|

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// The complete list of maximal left-compressed intersecting families for one
// r, in canonical order (fewer generators first, then lexicographic).
class Catalog {
 public:
  Catalog(int r, std::vector<CatalogEntry> entries)
      : r_(r), entries_(std::move(entries)) {
    if (r_ < 2) throw CatalogError("catalog: r must be at least 2");
    if (entries_.empty()) throw CatalogError("catalog: no entries");
    bool star_seen = false, hm_seen = false;
    const GenAntichain star = star_antichain(r_);
    const GenAntichain hm = hilton_milner_antichain(r_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const CatalogEntry& e = entries_[i];
      if (e.gens.r() != r_) throw CatalogError("catalog: entry r mismatch");
      if (e.size_2r <= 0) throw CatalogError("catalog: nonpositive entry size");
      if (i && !antichain_less(entries_[i - 1].gens, e.gens))
        throw CatalogError(entries_[i - 1].gens == e.gens
                               ? "catalog: duplicate entry"
                               : "catalog: entries not in canonical order");
      if (e.gens == star) star_seen = true;
      if (e.gens == hm) hm_seen = true;
    }
    if (!star_seen) throw CatalogError("catalog: star entry missing");
    if (!hm_seen) throw CatalogError("catalog: Hilton-Milner entry missing");
  }

  int r() const { return r_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry& operator[](int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }

  // Index of an antichain in the catalog, or -1.
  int index_of(const GenAntichain& gc) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), gc,
        [](const CatalogEntry& e, const GenAntichain& g) {
          return antichain_less(e.gens, g);
        });
    if (it == entries_.end() || !(it->gens == gc)) return -1;
    return static_cast<int>(it - entries_.begin());
  }

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  int r_;
  std::vector<CatalogEntry> entries_;
};

namespace detail {

// Fixed-width bitset over the r-sets of [2r], flat uint64 words.
struct BitRows {
  int words = 0;
  std::vector<std::uint64_t> data;

  void init(int rows, int w) {
    words = w;
    data.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(w), 0);
  }
  std::uint64_t* row(int i) { return data.data() + static_cast<std::size_t>(i) * words; }
  const std::uint64_t* row(int i) const {
    return data.data() + static_cast<std::size_t>(i) * words;
  }
};

inline void bits_set(std::uint64_t* row, int i) { row[i >> 6] |= 1ULL << (i & 63); }
inline bool bits_test(const std::uint64_t* row, int i) {
  return row[i >> 6] & (1ULL << (i & 63));
}

// The poset ([2r]^(r), <=) with complement pairing.
struct PairPoset {
  int r = 0, count = 0, words = 0;
  std::vector<Mask> sets;  // lexicographic order of element sequences
  std::vector<int> comp;   // complement index
  BitRows below;           // below.row(i): j with sets[j] <= sets[i] (incl. i)
  BitRows above;
  std::vector<int> pair_reps;  // lex-first member of each pair

  explicit PairPoset(int r_) : r(r_) {
    const int n2 = 2 * r;
    for_each_rset(n2, r, [&](Mask m) { sets.push_back(m); });
    count = static_cast<int>(sets.size());
    words = (count + 63) / 64;
    std::unordered_map<Mask, int> index;
    index.reserve(static_cast<std::size_t>(count) * 2);
    for (int i = 0; i < count; ++i) index[sets[i]] = i;
    comp.resize(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      comp[static_cast<std::size_t>(i)] = index.at(full_mask(n2) & ~sets[i]);
    below.init(count, words);
    above.init(count, words);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < count; ++j)
        if (leq_masks(sets[j], sets[i])) {
          bits_set(below.row(i), j);
          bits_set(above.row(j), i);
        }
    for (int i = 0; i < count; ++i)
      if (i < comp[static_cast<std::size_t>(i)]) pair_reps.push_back(i);
  }
};

// One DFS state: members chosen in / forced out, as bitsets.
struct SearchFrame {
  std::vector<std::uint64_t> in, out;
};

class PairSearch {
 public:
  explicit PairSearch(const PairPoset& ps) : ps_(ps) {
    frames_.resize(ps_.pair_reps.size() + 2);
    for (SearchFrame& f : frames_) {
      f.in.assign(static_cast<std::size_t>(ps_.words), 0);
      f.out.assign(static_cast<std::size_t>(ps_.words), 0);
    }
  }

  // Calls fn(in_row) for every one-per-pair down-set.
  template <typename Fn>
  void run(Fn&& fn) {
    SearchFrame& root = frames_[0];
    // [1..r] lies below everything; every nonempty down-set contains it.
    queue_.assign(1, {0, true});
    if (!propagate(root)) return;
    dfs(0, fn);
  }

 private:
  bool propagate(SearchFrame& f) {
    while (!queue_.empty()) {
      auto [s, make_in] = queue_.back();
      queue_.pop_back();
      if (make_in) {
        if (bits_test(f.out.data(), s)) return false;
        if (bits_test(f.in.data(), s)) continue;
        // down-closure: everything below s joins; complements leave.
        const std::uint64_t* bel = ps_.below.row(s);
        for (int w = 0; w < ps_.words; ++w) {
          std::uint64_t fresh = bel[w] & ~f.in[w];
          if (fresh & f.out[w]) return false;
          f.in[w] |= fresh;
          while (fresh) {
            int b = (w << 6) + std::countr_zero(fresh);
            fresh &= fresh - 1;
            queue_.push_back({ps_.comp[static_cast<std::size_t>(b)], false});
          }
        }
      } else {
        if (bits_test(f.in.data(), s)) return false;
        if (bits_test(f.out.data(), s)) continue;
        // up-closure of the exclusion; complements join.
        const std::uint64_t* abv = ps_.above.row(s);
        for (int w = 0; w < ps_.words; ++w) {
          std::uint64_t fresh = abv[w] & ~f.out[w];
          if (fresh & f.in[w]) return false;
          f.out[w] |= fresh;
          while (fresh) {
            int b = (w << 6) + std::countr_zero(fresh);
            fresh &= fresh - 1;
            queue_.push_back({ps_.comp[static_cast<std::size_t>(b)], true});
          }
        }
      }
    }
    return true;
  }

  template <typename Fn>
  void dfs(int depth, Fn&& fn) {
    const SearchFrame& cur = frames_[static_cast<std::size_t>(depth)];
    int pick = -1;
    for (int rep : ps_.pair_reps)
      if (!bits_test(cur.in.data(), rep) && !bits_test(cur.out.data(), rep)) {
        pick = rep;
        break;
      }
    if (pick < 0) {
      fn(cur.in.data());
      return;
    }
    SearchFrame& next = frames_[static_cast<std::size_t>(depth) + 1];
    for (bool make_in : {true, false}) {
      next = cur;
      queue_.assign(1, {pick, make_in});
      if (propagate(next)) dfs(depth + 1, fn);
    }
  }

  const PairPoset& ps_;
  std::vector<SearchFrame> frames_;
  std::vector<std::pair<int, bool>> queue_;
};

// Truncate a <=-maximal member to its generator: keep a_1..a_s for the
// greatest s with a_s < r + s.
inline Generator truncate_to_generator(Mask member, int r) {
  int e[max_ground];
  int k = unpack_mask(member, e);
  for (int s = k; s >= 1; --s)
    if (e[s - 1] < r + s)
      return Generator(std::span<const int>(e, e + s), r);
  throw std::logic_error("extract_generators: member has no truncation point");
}

}  // namespace detail

// Enumerates all maximal left-compressed intersecting families of [2r]^(r).
inline Catalog enumerate_mlcif(int r, bool override_guard = false) {
  if (r < 2) throw std::invalid_argument("enumerate_mlcif: require r >= 2");
  if (r > 6 && !override_guard)
    throw std::invalid_argument(
        "enumerate_mlcif: r > 6 requires the guard override (--override-guard)");
  if (2 * r > max_ground)
    throw std::invalid_argument("enumerate_mlcif: 2r exceeds 64");

  const detail::PairPoset ps(r);
  std::vector<CatalogEntry> entries;
  detail::PairSearch search(ps);
  search.run([&](const std::uint64_t* in) {
    // <=-maximal members: nothing above them inside the down-set.
    std::vector<Generator> gens;
    long long members = 0;
    for (int i = 0; i < ps.count; ++i) {
      if (!detail::bits_test(in, i)) continue;
      ++members;
      const std::uint64_t* abv = ps.above.row(i);
      bool maximal = true;
      for (int w = 0; w < ps.words; ++w) {
        std::uint64_t up = abv[w] & in[w];
        if (w == (i >> 6)) up &= ~(1ULL << (i & 63));
        if (up) {
          maximal = false;
          break;
        }
      }
      if (maximal) gens.push_back(detail::truncate_to_generator(ps.sets[i], r));
    }
    entries.push_back(CatalogEntry{GenAntichain(std::move(gens), r), members});
  });
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return antichain_less(a.gens, b.gens);
            });
  return Catalog(r, std::move(entries));
}

// Canonical generating antichain of a maximal left-compressed intersecting
// subfamily of [2r]^(r).
inline GenAntichain extract_generators(const Family& f) {
  const Params& p = f.params();
  if (p.n != 2 * p.r)
    throw std::invalid_argument("extract_generators: requires n = 2r");
  if (!is_left_compressed(f))
    throw std::invalid_argument("extract_generators: family not left-compressed");
  if (!is_maximal_intersecting(f))
    throw std::invalid_argument("extract_generators: family not maximal intersecting");

  const auto& ms = f.masks();
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < ms.size() && maximal; ++j)
      if (j != i && leq_masks(ms[i], ms[j])) maximal = false;
    if (maximal) gens.push_back(detail::truncate_to_generator(ms[i], p.r));
  }
  return GenAntichain(std::move(gens), p.r);
}

// True iff the antichain's expansion at n is a maximal left-compressed
// intersecting family whose restriction to [2r]^(r) is its expansion at 2r.
inline bool unique_extension_check(const GenAntichain& gc, int n) {
  const int r = gc.r();
  Family at_n = materialize(gc, Params(n, r));
  if (!is_intersecting(at_n)) return false;
  if (!is_left_compressed(at_n)) return false;
  if (!is_maximal_intersecting(at_n)) return false;
  Family at_2r = materialize(gc, Params(2 * r, r));
  std::vector<Mask> restriction;
  for (Mask m : at_n.masks())
    if (!(m & ~full_mask(2 * r))) restriction.push_back(m);
  return restriction == at_2r.masks();
}

// ---- catalog file format -------------------------------------------------
//
//   mlcif-catalog v1 r=<r> count=<K>
//   r=<r>; gens=<set literal>|<set literal>|...; size2r=<integer>
//
// Canonical entry order, bit-exact.

inline std::string format_catalog(const Catalog& c) {
  std::ostringstream out;
  out << "mlcif-catalog v1 r=" << c.r() << " count=" << c.size() << "\n";
  for (const CatalogEntry& e : c.entries())
    out << "r=" << c.r() << "; gens=" << format_gens_literal(e.gens)
        << "; size2r=" << e.size_2r << "\n";
  return out.str();
}

namespace detail {

inline std::string expect_prefix(std::string_view line, std::string_view prefix,
                                 const char* what) {
  if (line.substr(0, prefix.size()) != prefix)
    throw CatalogError(std::string("catalog parse: malformed ") + what);
  return std::string(line.substr(prefix.size()));
}

}  // namespace detail

inline Catalog parse_catalog(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
      if (i == text.size() || text[i] == '\n') {
        lines.emplace_back(text.substr(start, i - start));
        start = i + 1;
      }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw CatalogError("catalog parse: empty file");

  int r = 0;
  long long declared = 0;
  {
    std::istringstream head(
        detail::expect_prefix(lines[0], "mlcif-catalog v1 ", "header"));
    std::string r_field, count_field;
    head >> r_field >> count_field;
    if (r_field.substr(0, 2) != "r=" || count_field.substr(0, 6) != "count=" ||
        !head.eof())
      throw CatalogError("catalog parse: malformed header");
    try {
      r = detail::parse_int(r_field.substr(2), "catalog header r");
      declared = detail::parse_int(count_field.substr(6), "catalog header count");
    } catch (const std::invalid_argument& e) {
      throw CatalogError(std::string("catalog parse: ") + e.what());
    }
  }

  std::vector<CatalogEntry> entries;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::string& line = lines[li];
    if (line.empty()) throw CatalogError("catalog parse: blank record line");
    std::vector<std::string> fields = detail::split(line, ';');
    if (fields.size() != 3)
      throw CatalogError("catalog parse: record must have r, gens, size2r");
    try {
      int er = detail::parse_int(
          detail::expect_prefix(fields[0], "r=", "record r"), "record r");
      if (er != r) throw CatalogError("catalog parse: record r differs from header");
      std::string gens = detail::expect_prefix(fields[1], "gens=", "record gens");
      std::string size_text =
          detail::expect_prefix(fields[2], "size2r=", "record size2r");
      BigInt size;
      try {
        size = BigInt(size_text);
      } catch (const std::exception&) {
        throw CatalogError("catalog parse: bad size2r '" + size_text + "'");
      }
      entries.push_back(CatalogEntry{parse_gens_literal(gens, r), size});
    } catch (const std::invalid_argument& e) {
      // Generator/antichain invariant failures surface with their own message.
      throw CatalogError(std::string("catalog parse: ") + e.what());
    }
  }
  if (declared != static_cast<long long>(entries.size()))
    throw CatalogError("catalog parse: header count mismatch");
  return Catalog(r, std::move(entries));
}

inline void save_catalog(const Catalog& c, const std::filesystem::path& path) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("save_catalog: cannot open " + tmp.string());
    out << format_catalog(c);
    if (!out) throw std::runtime_error("save_catalog: write failed");
  }
  std::filesystem::rename(tmp, path);
}

inline Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("load_catalog: cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace lcif
