#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "fgl/errors.hpp"
#include "fgl/wobbling.hpp"

namespace fgl {

// True iff g maps marks(triangle)N onto itself, where N = {0,1,2,...} and the
// symmetric difference toggles membership at each marked integer.  Decided by
// a finite scan of [-c-m, c+m] with c = max|mark| and m = bound(g); outside
// that range g cannot change the sign of its argument.
bool stabilizes(const WobblingMap& g, const std::set<std::int64_t>& marks);

// Witness that translated copies of the displacement data of a family on
// [-radius, radius] appear in every length-(2k+1) interval of
// [-horizon, horizon].
struct PatternConstant {
  std::vector<WobblingMap> family;
  std::int64_t radius = 0;
  std::int64_t k = 0;
  std::int64_t horizon = 0;
};

// Least k <= horizon such that every j in [-horizon, horizon] admits a t with
// [t-radius, t+radius] inside [j-k, j+k] and g(t+i)-(t+i) = g(i)-i for every
// family member and every |i| <= radius.  Throws witness_error when no such
// k exists within the horizon (typical for maps whose displacement data
// never recurs).
PatternConstant pattern_constant(std::vector<WobblingMap> family,
                                 std::int64_t radius, std::int64_t horizon);

// Re-checks the PatternConstant invariant at a single j by direct scan.
bool verify_pattern(const PatternConstant& pattern, std::int64_t j);

// A finite family of disjoint blocks, each invariant under a map family,
// covering [covered_lo, covered_hi] without gaps (blocks may additionally
// reach a little beyond on both sides).
struct BlockDecomposition {
  std::vector<std::vector<std::int64_t>> blocks;  // each sorted ascending
  std::set<std::int64_t> marks;
  std::int64_t window = 0;
  std::int64_t k = 0;
  std::int64_t pattern_radius = 0;
  std::int64_t covered_lo = 0;
  std::int64_t covered_hi = 0;
};

// Splits [-window, window] into consecutive intervals of length 2k+1, finds
// in each one a translated copy of the boundary region of marks(triangle)N,
// and cuts blocks between consecutive copies.  Every block is checked
// pointwise for invariance under every family member, and block sizes are
// checked against the 4k+2 bound.
BlockDecomposition block_decomposition(const std::vector<WobblingMap>& family,
                                       const std::set<std::int64_t>& marks,
                                       std::int64_t window);

// Order of the permutation group the family generates on the blocks of dec,
// computed by breadth-first closure over products.  Blocks with identical
// index-level actions are merged first, so the closure runs on one
// representative per action type.  Throws cap_error when the closure
// exceeds cap elements.
std::uint64_t finite_order(const std::vector<WobblingMap>& family,
                           const BlockDecomposition& dec,
                           std::uint64_t cap = 1000000);

// True iff order divides the product of |B|! over the blocks of dec,
// decided prime-by-prime via Legendre's factorial valuations.
bool order_divides_block_factorials(std::uint64_t order,
                                    const BlockDecomposition& dec);

}  // namespace fgl
