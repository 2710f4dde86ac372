#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "fgl/errors.hpp"

namespace fgl {

// Displacement data around a center: entry i is g(c-r+i) - (c-r+i).
struct DisplacementPattern {
  std::int64_t center = 0;
  std::int64_t radius = 0;
  std::vector<std::int64_t> displacements;
  bool operator==(const DisplacementPattern&) const = default;
};

namespace detail {

enum class NodeKind { Table, Shift, Compose, Inverse, LocalRule };

// Backend of a WobblingMap. Immutable after construction. bound() is a
// certified sup of |apply(j) - j| over all of Z, never an estimate.
class MapNode {
 public:
  virtual ~MapNode() = default;
  virtual std::int64_t apply(std::int64_t j) const = 0;
  virtual NodeKind kind() const = 0;
  std::int64_t bound() const { return bound_; }

 protected:
  explicit MapNode(std::int64_t bound) : bound_(bound) {}

 private:
  std::int64_t bound_;
};

class TableNode final : public MapNode {
 public:
  // entries sorted by key; identity off the listed domain
  TableNode(std::vector<std::pair<std::int64_t, std::int64_t>> entries,
            bool validate);
  std::int64_t apply(std::int64_t j) const override;
  NodeKind kind() const override { return NodeKind::Table; }
  const std::vector<std::pair<std::int64_t, std::int64_t>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::int64_t, std::int64_t>> entries_;
};

class ShiftNode final : public MapNode {
 public:
  explicit ShiftNode(std::int64_t by);
  std::int64_t apply(std::int64_t j) const override { return j + by_; }
  NodeKind kind() const override { return NodeKind::Shift; }
  std::int64_t by() const { return by_; }

 private:
  std::int64_t by_;
};

class ComposeNode final : public MapNode {
 public:
  ComposeNode(std::shared_ptr<const MapNode> outer,
              std::shared_ptr<const MapNode> inner);
  std::int64_t apply(std::int64_t j) const override {
    return outer_->apply(inner_->apply(j));
  }
  NodeKind kind() const override { return NodeKind::Compose; }
  const std::shared_ptr<const MapNode>& outer() const { return outer_; }
  const std::shared_ptr<const MapNode>& inner() const { return inner_; }

 private:
  std::shared_ptr<const MapNode> outer_;
  std::shared_ptr<const MapNode> inner_;
};

// Inverse evaluated by searching [j - bound, j + bound] for the unique
// preimage; throws bijectivity_error when none or several exist.
class InverseNode final : public MapNode {
 public:
  explicit InverseNode(std::shared_ptr<const MapNode> child);
  std::int64_t apply(std::int64_t j) const override;
  NodeKind kind() const override { return NodeKind::Inverse; }
  const std::shared_ptr<const MapNode>& child() const { return child_; }

 private:
  std::shared_ptr<const MapNode> child_;
};

}  // namespace detail

// An element of the group of bounded-displacement bijections of Z.
// Value type, cheap to copy, immutable after construction.
class WobblingMap {
 public:
  WobblingMap();  // identity
  static WobblingMap identity();
  static WobblingMap shift(std::int64_t by = 1);
  // Identity outside the listed domain; listed images must permute the domain.
  static WobblingMap table(
      std::vector<std::pair<std::int64_t, std::int64_t>> entries);
  // Same backend without the permutation validation, so that deliberately
  // broken candidates can be fed to verify_bijectivity_window.
  static WobblingMap table_unchecked(
      std::vector<std::pair<std::int64_t, std::int64_t>> entries);
  static WobblingMap swap_pair(std::int64_t x, std::int64_t y);
  static WobblingMap from_node(std::shared_ptr<const detail::MapNode> node);

  std::int64_t operator()(std::int64_t j) const { return node_->apply(j); }
  std::int64_t bound() const { return node_->bound(); }
  const detail::MapNode& node() const { return *node_; }
  const std::shared_ptr<const detail::MapNode>& node_ptr() const {
    return node_;
  }

 private:
  explicit WobblingMap(std::shared_ptr<const detail::MapNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::MapNode> node_;
};

std::int64_t evaluate(const WobblingMap& g, std::int64_t j);

// compose(g, h)(j) = g(h(j)); certified bound is the sum of the bounds.
WobblingMap compose(const WobblingMap& g, const WobblingMap& h);

// Table and shift backends invert directly; everything else inverts by
// windowed preimage search at evaluation time.
WobblingMap invert(const WobblingMap& g);

DisplacementPattern displacement_pattern(const WobblingMap& g,
                                         std::int64_t center,
                                         std::int64_t radius);

// Sound partial check of the bijection axiom: injective on the padded window
// and every point of [lo, hi] is reached.
bool verify_bijectivity_window(const WobblingMap& g, std::int64_t lo,
                               std::int64_t hi);

// Observed sup of |g(j) - j| over [-window, window]. Reporting aid only; the
// certified bound stays bound().
std::int64_t observed_bound(const WobblingMap& g, std::int64_t window);

}  // namespace fgl
