#include "fgl/wobbling.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace fgl {
namespace detail {
namespace {

std::int64_t table_bound(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& entries) {
  std::int64_t b = 0;
  for (const auto& [k, v] : entries) b = std::max(b, std::abs(v - k));
  return b;
}

}  // namespace

TableNode::TableNode(std::vector<std::pair<std::int64_t, std::int64_t>> entries,
                     bool validate)
    : MapNode(table_bound(entries)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].first == entries_[i - 1].first) {
      throw construction_error("table lists key " +
                               std::to_string(entries_[i].first) + " twice");
    }
  }
  if (!validate) return;
  std::vector<std::int64_t> keys, values;
  keys.reserve(entries_.size());
  values.reserve(entries_.size());
  for (const auto& [k, v] : entries_) {
    keys.push_back(k);
    values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  if (keys != values) {
    throw bijectivity_error("table images do not permute the table domain");
  }
}

std::int64_t TableNode::apply(std::int64_t j) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), j,
      [](const auto& e, std::int64_t x) { return e.first < x; });
  if (it != entries_.end() && it->first == j) return it->second;
  return j;
}

ShiftNode::ShiftNode(std::int64_t by) : MapNode(std::abs(by)), by_(by) {}

ComposeNode::ComposeNode(std::shared_ptr<const MapNode> outer,
                         std::shared_ptr<const MapNode> inner)
    : MapNode(outer->bound() + inner->bound()),
      outer_(std::move(outer)),
      inner_(std::move(inner)) {}

InverseNode::InverseNode(std::shared_ptr<const MapNode> child)
    : MapNode(child->bound()), child_(std::move(child)) {}

std::int64_t InverseNode::apply(std::int64_t j) const {
  const std::int64_t b = bound();
  bool found = false;
  std::int64_t preimage = 0;
  for (std::int64_t x = j - b; x <= j + b; ++x) {
    if (child_->apply(x) == j) {
      if (found) {
        throw bijectivity_error("several preimages of " + std::to_string(j) +
                                " in [" + std::to_string(j - b) + ", " +
                                std::to_string(j + b) + "]");
      }
      found = true;
      preimage = x;
    }
  }
  if (!found) {
    throw bijectivity_error("no preimage of " + std::to_string(j) + " in [" +
                            std::to_string(j - b) + ", " +
                            std::to_string(j + b) + "]");
  }
  return preimage;
}

}  // namespace detail

WobblingMap::WobblingMap()
    : node_(std::make_shared<detail::ShiftNode>(0)) {}

WobblingMap WobblingMap::identity() { return WobblingMap(); }

WobblingMap WobblingMap::shift(std::int64_t by) {
  return WobblingMap(std::make_shared<detail::ShiftNode>(by));
}

WobblingMap WobblingMap::table(
    std::vector<std::pair<std::int64_t, std::int64_t>> entries) {
  return WobblingMap(
      std::make_shared<detail::TableNode>(std::move(entries), true));
}

WobblingMap WobblingMap::table_unchecked(
    std::vector<std::pair<std::int64_t, std::int64_t>> entries) {
  return WobblingMap(
      std::make_shared<detail::TableNode>(std::move(entries), false));
}

WobblingMap WobblingMap::swap_pair(std::int64_t x, std::int64_t y) {
  if (x == y) return identity();
  return table({{x, y}, {y, x}});
}

WobblingMap WobblingMap::from_node(
    std::shared_ptr<const detail::MapNode> node) {
  return WobblingMap(std::move(node));
}

std::int64_t evaluate(const WobblingMap& g, std::int64_t j) { return g(j); }

WobblingMap compose(const WobblingMap& g, const WobblingMap& h) {
  using detail::NodeKind;
  // identity absorption keeps composite trees shallow
  if (g.node().kind() == NodeKind::Shift && g.bound() == 0) return h;
  if (h.node().kind() == NodeKind::Shift && h.bound() == 0) return g;
  return WobblingMap::from_node(
      std::make_shared<detail::ComposeNode>(g.node_ptr(), h.node_ptr()));
}

WobblingMap invert(const WobblingMap& g) {
  using namespace detail;
  switch (g.node().kind()) {
    case NodeKind::Shift: {
      const auto& s = static_cast<const ShiftNode&>(g.node());
      return WobblingMap::shift(-s.by());
    }
    case NodeKind::Table: {
      const auto& t = static_cast<const TableNode&>(g.node());
      std::vector<std::pair<std::int64_t, std::int64_t>> inv;
      inv.reserve(t.entries().size());
      for (const auto& [k, v] : t.entries()) inv.emplace_back(v, k);
      std::sort(inv.begin(), inv.end());
      for (std::size_t i = 1; i < inv.size(); ++i) {
        if (inv[i].first == inv[i - 1].first) {
          throw bijectivity_error("table images collide; map not injective");
        }
      }
      return WobblingMap::table(std::move(inv));
    }
    case NodeKind::Inverse: {
      const auto& i = static_cast<const InverseNode&>(g.node());
      return WobblingMap::from_node(i.child());
    }
    case NodeKind::Compose: {
      const auto& c = static_cast<const ComposeNode&>(g.node());
      return compose(invert(WobblingMap::from_node(c.inner())),
                     invert(WobblingMap::from_node(c.outer())));
    }
    default:
      return WobblingMap::from_node(
          std::make_shared<InverseNode>(g.node_ptr()));
  }
}

DisplacementPattern displacement_pattern(const WobblingMap& g,
                                         std::int64_t center,
                                         std::int64_t radius) {
  if (radius < 0) throw construction_error("pattern radius must be >= 0");
  DisplacementPattern p;
  p.center = center;
  p.radius = radius;
  p.displacements.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t j = center - radius; j <= center + radius; ++j) {
    p.displacements.push_back(g(j) - j);
  }
  return p;
}

bool verify_bijectivity_window(const WobblingMap& g, std::int64_t lo,
                               std::int64_t hi) {
  if (lo > hi) throw construction_error("verify window has lo > hi");
  const std::int64_t b = g.bound();
  std::unordered_set<std::int64_t> images;
  images.reserve(static_cast<std::size_t>(hi - lo + 2 * b + 1));
  for (std::int64_t j = lo - b; j <= hi + b; ++j) {
    if (!images.insert(g(j)).second) return false;
  }
  // any preimage of k lies in [k - b, k + b], which the scan covered
  for (std::int64_t k = lo; k <= hi; ++k) {
    if (images.find(k) == images.end()) return false;
  }
  return true;
}

std::int64_t observed_bound(const WobblingMap& g, std::int64_t window) {
  std::int64_t b = 0;
  for (std::int64_t j = -window; j <= window; ++j) {
    b = std::max(b, std::abs(g(j) - j));
  }
  return b;
}

}  // namespace fgl
