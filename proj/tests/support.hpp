#pragma once

// Shared helpers for the test binaries: a process-wide catalog memo (so every
// test file can grab catalogs without re-enumerating) and small conveniences.

#include <map>
#include <span>
#include <vector>

#include "lcif/lcif.hpp"

namespace lcif_test {

inline const lcif::Catalog& cached_catalog(int r) {
  static std::map<int, lcif::Catalog> memo;
  auto it = memo.find(r);
  if (it == memo.end()) it = memo.emplace(r, lcif::enumerate_mlcif(r)).first;
  return it->second;
}

inline lcif::CatalogProvider catalog_provider() {
  return [](int r) -> const lcif::Catalog& { return cached_catalog(r); };
}

inline lcif::GenAntichain gens(std::string_view literal, int r) {
  return lcif::parse_gens_literal(literal, r);
}

inline lcif::XSet xset(std::string_view inside_literal, int outside, int r) {
  if (inside_literal.empty()) return lcif::XSet(r, lcif::Mask{0}, outside);
  std::vector<int> elems = lcif::parse_set_literal(inside_literal);
  return lcif::XSet(r, std::span<const int>(elems), outside);
}

}  // namespace lcif_test
