#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyq/element.hpp"

namespace polyq {

// Fixed panel of sample points used as a cheap semantic fingerprint:
// elements disagreeing at a panel point are distinct, equal fingerprints are
// settled by equal().
const std::vector<Point>& sample_panel();

// Semantic dedup store for closure enumeration and search.  Canonical text is
// the fast path; the panel fingerprint buckets candidates and equal() is the
// authoritative tie-breaker.
class ElementIndex {
 public:
  // Returns (index, inserted).
  std::pair<size_t, bool> insert(const Element& e);
  std::optional<size_t> find(const Element& e) const;

  const Element& at(size_t i) const { return items_[i]; }
  size_t size() const { return items_.size(); }

 private:
  uint64_t fingerprint(const Element& e) const;

  std::vector<Element> items_;
  std::unordered_map<std::string, size_t> by_text_;
  std::unordered_map<uint64_t, std::vector<size_t>> buckets_;
};

}  // namespace polyq
