#include "fgl/stabilizer.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace fgl {

namespace {

std::int64_t mark_radius(const std::set<std::int64_t>& marks) {
  std::int64_t c = 0;
  for (const std::int64_t e : marks) c = std::max(c, std::abs(e));
  return c;
}

std::int64_t family_bound(const std::vector<WobblingMap>& family) {
  std::int64_t m = 0;
  for (const auto& g : family) m = std::max(m, g.bound());
  return m;
}

// Displacements of one map over a contiguous range, indexed from lo.
struct DisplacementTable {
  std::int64_t lo = 0;
  std::vector<std::int64_t> data;

  std::int64_t at(std::int64_t j) const {
    return data[static_cast<std::size_t>(j - lo)];
  }
};

DisplacementTable tabulate(const WobblingMap& g, std::int64_t lo,
                           std::int64_t hi) {
  DisplacementTable table;
  table.lo = lo;
  table.data.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t j = lo; j <= hi; ++j) table.data.push_back(g(j) - j);
  return table;
}

// Least k <= horizon such that every |j| <= horizon has a translate t with
// |t - j| <= k - radius whose displacements at t + offsets match those at
// offsets, for every family member.  The scan widens geometrically until
// every nearest match is certified or the horizon rules a match out.
std::int64_t least_pattern_constant(const std::vector<WobblingMap>& family,
                                    const std::vector<std::int64_t>& offsets,
                                    std::int64_t radius,
                                    std::int64_t horizon) {
  if (radius < 0) throw construction_error("pattern radius must be >= 0");
  if (horizon < radius) {
    throw construction_error("pattern horizon smaller than the radius");
  }
  std::vector<std::vector<std::int64_t>> base;
  for (const auto& g : family) {
    std::vector<std::int64_t> row;
    row.reserve(offsets.size());
    for (const std::int64_t o : offsets) row.push_back(g(o) - o);
    base.push_back(std::move(row));
  }

  const std::int64_t pad_cap = std::max<std::int64_t>(horizon - radius, 1);
  std::int64_t pad = std::min<std::int64_t>(64, pad_cap);
  for (;;) {
    const std::int64_t scan_lo = -horizon - pad;
    const std::int64_t scan_hi = horizon + pad;
    std::vector<DisplacementTable> tables;
    for (const auto& g : family) {
      tables.push_back(tabulate(g, scan_lo - radius, scan_hi + radius));
    }
    const std::size_t span = static_cast<std::size_t>(scan_hi - scan_lo + 1);
    std::vector<char> match(span, 1);
    for (std::size_t t = 0; t < span; ++t) {
      const std::int64_t at = scan_lo + static_cast<std::int64_t>(t);
      for (std::size_t gi = 0; gi < family.size() && match[t]; ++gi) {
        for (std::size_t oi = 0; oi < offsets.size(); ++oi) {
          if (tables[gi].at(at + offsets[oi]) != base[gi][oi]) {
            match[t] = 0;
            break;
          }
        }
      }
    }

    // nearest matched translate for every j, via two sweeps
    const std::int64_t none = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> nearest(span, none);
    std::int64_t last = none;
    for (std::size_t t = 0; t < span; ++t) {
      const std::int64_t at = scan_lo + static_cast<std::int64_t>(t);
      if (match[t]) last = at;
      if (last != none) nearest[t] = at - last;
    }
    std::int64_t next = none;
    for (std::size_t t = span; t-- > 0;) {
      const std::int64_t at = scan_lo + static_cast<std::int64_t>(t);
      if (match[t]) next = at;
      if (next != none) nearest[t] = std::min(nearest[t], next - at);
    }
    std::int64_t worst = 0;
    for (std::int64_t j = -horizon; j <= horizon; ++j) {
      worst = std::max(worst, nearest[static_cast<std::size_t>(j - scan_lo)]);
    }

    if (worst <= pad) {
      const std::int64_t k = radius + worst;
      if (k <= horizon) return k;
      throw witness_error("pattern not witnessed within the horizon");
    }
    if (pad >= pad_cap) {
      throw witness_error("pattern not witnessed within the horizon");
    }
    pad = std::min(pad * 2, pad_cap);
  }
}

bool translate_matches(const std::vector<WobblingMap>& family,
                       const std::vector<std::int64_t>& offsets,
                       std::int64_t t) {
  for (const auto& g : family) {
    for (const std::int64_t o : offsets) {
      if (g(t + o) - (t + o) != g(o) - o) return false;
    }
  }
  return true;
}

std::vector<std::int64_t> full_offsets(std::int64_t radius) {
  std::vector<std::int64_t> offsets;
  offsets.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (std::int64_t o = -radius; o <= radius; ++o) offsets.push_back(o);
  return offsets;
}

}  // namespace

bool stabilizes(const WobblingMap& g, const std::set<std::int64_t>& marks) {
  const std::int64_t reach = mark_radius(marks) + g.bound();
  const auto inside = [&marks](std::int64_t j) {
    return (j >= 0) != (marks.count(j) > 0);
  };
  for (std::int64_t j = -reach; j <= reach; ++j) {
    if (inside(j) != inside(g(j))) return false;
  }
  return true;
}

PatternConstant pattern_constant(std::vector<WobblingMap> family,
                                 std::int64_t radius, std::int64_t horizon) {
  const std::int64_t k =
      least_pattern_constant(family, full_offsets(radius), radius, horizon);
  PatternConstant result;
  result.family = std::move(family);
  result.radius = radius;
  result.k = k;
  result.horizon = horizon;
  return result;
}

bool verify_pattern(const PatternConstant& pattern, std::int64_t j) {
  const auto offsets = full_offsets(pattern.radius);
  const std::int64_t slack = pattern.k - pattern.radius;
  for (std::int64_t t = j - slack; t <= j + slack; ++t) {
    if (translate_matches(pattern.family, offsets, t)) return true;
  }
  return false;
}

BlockDecomposition block_decomposition(const std::vector<WobblingMap>& family,
                                       const std::set<std::int64_t>& marks,
                                       std::int64_t window) {
  for (std::size_t gi = 0; gi < family.size(); ++gi) {
    if (!stabilizes(family[gi], marks)) {
      throw construction_error("family member " + std::to_string(gi) +
                               " does not stabilize the marked set");
    }
  }
  const std::int64_t c = mark_radius(marks);
  const std::int64_t m = family_bound(family);
  // radius c+2m transplants the boundary behaviour with a full margin; the
  // c+1 floor keeps the boundary region nonempty when the family is trivial
  const std::int64_t radius = std::max(c + 2 * m, c + 1);
  const auto inside = [&marks](std::int64_t j) {
    return (j >= 0) != (marks.count(j) > 0);
  };
  std::vector<std::int64_t> region;  // boundary region offsets, ascending
  for (std::int64_t o = -radius; o <= radius; ++o) {
    if (inside(o)) region.push_back(o);
  }

  // full-window copies carry the proof; the region-only criterion is the
  // fallback for families whose displacement data never recurs
  std::vector<std::int64_t> offsets = full_offsets(radius);
  std::int64_t k;
  try {
    k = least_pattern_constant(family, offsets, radius, window);
  } catch (const witness_error&) {
    offsets = region;
    k = least_pattern_constant(family, offsets, radius, window);
  }

  const std::int64_t step = 2 * k + 1;
  const std::int64_t count = (window - k) / step;  // largest grid index
  if (count < 1) {
    throw construction_error("window holds fewer than three intervals");
  }

  std::vector<std::int64_t> translates;
  for (std::int64_t i = -count; i <= count; ++i) {
    const std::int64_t center = i * step;
    if (i == 0) {
      translates.push_back(0);
      continue;
    }
    bool found = false;
    for (std::int64_t t = center - (k - radius); t <= center + (k - radius);
         ++t) {
      if (translate_matches(family, offsets, t)) {
        translates.push_back(t);
        found = true;
        break;
      }
    }
    if (!found) {
      throw witness_error("no pattern copy inside interval " +
                          std::to_string(i));
    }
  }

  BlockDecomposition dec;
  dec.marks = marks;
  dec.window = window;
  dec.k = k;
  dec.pattern_radius = radius;

  const std::size_t copies = translates.size();
  for (std::size_t ci = 0; ci + 1 < copies; ++ci) {
    const std::int64_t t_here = translates[ci];
    const std::int64_t t_next = translates[ci + 1];
    std::unordered_set<std::int64_t> next_copy;
    for (const std::int64_t o : region) next_copy.insert(t_next + o);
    std::vector<std::int64_t> block;
    for (const std::int64_t o : region) block.push_back(t_here + o);
    const std::int64_t gap_lo = t_here + region.back() + 1;
    const std::int64_t gap_hi = t_next + region.back();
    for (std::int64_t j = gap_lo; j <= gap_hi; ++j) {
      if (!next_copy.count(j)) block.push_back(j);
    }
    if (static_cast<std::int64_t>(block.size()) > 4 * k + 2) {
      throw witness_error("block size exceeds 4k+2");
    }
    dec.blocks.push_back(std::move(block));
  }

  dec.covered_lo = translates.front() + region.back() + 1;
  dec.covered_hi = translates.back() + region.front() - 1;

  // partition check: disjoint union, gap-free on the covered range
  std::unordered_set<std::int64_t> seen;
  for (const auto& block : dec.blocks) {
    for (const std::int64_t j : block) {
      if (!seen.insert(j).second) {
        throw witness_error("blocks overlap at " + std::to_string(j));
      }
    }
  }
  for (std::int64_t j = dec.covered_lo; j <= dec.covered_hi; ++j) {
    if (!seen.count(j)) {
      throw witness_error("coverage gap at " + std::to_string(j));
    }
  }

  // pointwise invariance of every block under every family member
  for (std::size_t gi = 0; gi < family.size(); ++gi) {
    for (std::size_t bi = 0; bi < dec.blocks.size(); ++bi) {
      std::unordered_set<std::int64_t> members(dec.blocks[bi].begin(),
                                               dec.blocks[bi].end());
      for (const std::int64_t j : dec.blocks[bi]) {
        if (!members.count(family[gi](j))) {
          throw witness_error(
              "block " + std::to_string(bi) + " not invariant: generator " +
              std::to_string(gi) + " moves " + std::to_string(j) +
              " outside");
        }
      }
    }
  }
  return dec;
}

std::uint64_t finite_order(const std::vector<WobblingMap>& family,
                           const BlockDecomposition& dec, std::uint64_t cap) {
  using IndexPerm = std::vector<std::int32_t>;

  // one action type per distinct tuple of index-level generator actions
  std::map<std::vector<IndexPerm>, bool> types;
  for (const auto& block : dec.blocks) {
    std::unordered_map<std::int64_t, std::int32_t> position;
    for (std::size_t u = 0; u < block.size(); ++u) {
      position[block[u]] = static_cast<std::int32_t>(u);
    }
    std::vector<IndexPerm> action;
    for (const auto& g : family) {
      IndexPerm perm(block.size());
      for (std::size_t u = 0; u < block.size(); ++u) {
        const auto hit = position.find(g(block[u]));
        if (hit == position.end()) {
          throw witness_error("family does not permute a block of the"
                              " decomposition");
        }
        perm[u] = hit->second;
      }
      action.push_back(std::move(perm));
    }
    types.emplace(std::move(action), true);
  }

  // concatenated domain over one representative block per type
  std::size_t domain = 0;
  for (const auto& [action, unused] : types) {
    (void)unused;
    domain += action.empty() ? 0 : action.front().size();
  }
  std::vector<IndexPerm> generators(family.size(),
                                    IndexPerm(domain));
  std::size_t base = 0;
  for (const auto& [action, unused] : types) {
    (void)unused;
    const std::size_t size = action.empty() ? 0 : action.front().size();
    for (std::size_t gi = 0; gi < family.size(); ++gi) {
      for (std::size_t u = 0; u < size; ++u) {
        generators[gi][base + u] =
            static_cast<std::int32_t>(base) + action[gi][u];
      }
    }
    base += size;
  }

  const auto key = [](const IndexPerm& perm) {
    return std::string(reinterpret_cast<const char*>(perm.data()),
                       perm.size() * sizeof(std::int32_t));
  };
  IndexPerm identity(domain);
  for (std::size_t u = 0; u < domain; ++u) {
    identity[u] = static_cast<std::int32_t>(u);
  }
  std::unordered_set<std::string> seen;
  std::queue<IndexPerm> frontier;
  seen.insert(key(identity));
  frontier.push(std::move(identity));
  while (!frontier.empty()) {
    const IndexPerm current = std::move(frontier.front());
    frontier.pop();
    for (const auto& gen : generators) {
      IndexPerm next(domain);
      for (std::size_t u = 0; u < domain; ++u) {
        next[u] = current[static_cast<std::size_t>(gen[u])];
      }
      if (seen.insert(key(next)).second) {
        if (seen.size() > cap) {
          throw cap_error("group closure exceeded the element cap");
        }
        frontier.push(std::move(next));
      }
    }
  }
  return seen.size();
}

bool order_divides_block_factorials(std::uint64_t order,
                                    const BlockDecomposition& dec) {
  if (order == 0) return false;
  const auto valuation = [](std::uint64_t n, std::uint64_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
      total += n / q;
      if (q > n / p) break;  // next power would overflow past n anyway
    }
    return total;
  };
  std::uint64_t rest = order;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    std::uint64_t a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    std::uint64_t available = 0;
    for (const auto& block : dec.blocks) {
      available += valuation(block.size(), p);
    }
    if (available < a) return false;
  }
  if (rest > 1) {
    std::uint64_t available = 0;
    for (const auto& block : dec.blocks) {
      available += valuation(block.size(), rest);
    }
    if (available < 1) return false;
  }
  return true;
}

}  // namespace fgl
