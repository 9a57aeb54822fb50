#include "polyq/dedup.hpp"

#include "polyq/qe.hpp"

namespace polyq {

const std::vector<Point>& sample_panel() {
  static const std::vector<Point> panel = [] {
    std::vector<Point> out;
    auto pt = [&](std::map<Coord, Rat> m) { out.push_back(make_point(std::move(m))); };
    pt({});
    for (Coord i = 0; i < 10; ++i) pt({{i, Rat{1, 1}}});
    for (Coord i = 0; i < 10; ++i) pt({{i, Rat{-1, 1}}});
    for (Coord i = 0; i < 8; ++i) pt({{i, Rat{1, 2}}});
    for (Coord i = 0; i < 7; ++i) pt({{i, Rat{1, 1}}, {i + 1, Rat{-1, 1}}});
    for (Coord i = 0; i < 7; ++i) pt({{i, Rat{2, 1}}, {i + 1, Rat{3, 1}}});
    for (Coord i = 0; i < 6; ++i) pt({{i, Rat{1, 3}}, {i + 2, Rat{-1, 3}}});
    pt({{0, Rat{1, 1}}, {1, Rat{1, 1}}, {2, Rat{-2, 1}}});
    pt({{0, Rat{5, 1}}, {7, Rat{-5, 1}}});
    pt({{9, Rat{4, 1}}});
    pt({{11, Rat{-1, 2}}});
    pt({{0, Rat{1, 1}}, {1, Rat{2, 1}}, {2, Rat{3, 1}}, {3, Rat{-6, 1}}});
    return out;
  }();
  return panel;
}

uint64_t ElementIndex::fingerprint(const Element& e) const {
  const auto& panel = sample_panel();
  uint64_t h = 1469598103934665603ull;
  for (size_t k = 0; k < panel.size(); ++k) {
    h ^= element_contains(e, panel[k]) ? (k * 2 + 1) : (k * 2);
    h *= 1099511628211ull;
  }
  return h;
}

std::pair<size_t, bool> ElementIndex::insert(const Element& e) {
  if (auto it = by_text_.find(e.text()); it != by_text_.end()) return {it->second, false};
  uint64_t fp = fingerprint(e);
  auto& bucket = buckets_[fp];
  for (size_t idx : bucket)
    if (equal(items_[idx], e)) {
      by_text_.emplace(e.text(), idx);
      return {idx, false};
    }
  size_t idx = items_.size();
  items_.push_back(e);
  by_text_.emplace(e.text(), idx);
  bucket.push_back(idx);
  return {idx, true};
}

std::optional<size_t> ElementIndex::find(const Element& e) const {
  if (auto it = by_text_.find(e.text()); it != by_text_.end()) return it->second;
  uint64_t fp = fingerprint(e);
  auto it = buckets_.find(fp);
  if (it == buckets_.end()) return std::nullopt;
  for (size_t idx : it->second)
    if (equal(items_[idx], e)) return idx;
  return std::nullopt;
}

}  // namespace polyq
