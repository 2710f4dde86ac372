#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgl {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An evaluation needed orbit symbols beyond the configured horizon.
// Carries the window that would have been required.
struct horizon_error : error {
  horizon_error(const std::string& msg, std::int64_t lo, std::int64_t hi)
      : error(msg), lo(lo), hi(hi) {}
  std::int64_t lo;
  std::int64_t hi;
};

// A backend failed to define a bijection of Z.
struct bijectivity_error : error {
  using error::error;
};

// Invalid construction parameters (bad seed, overlapping cylinders, ...).
struct construction_error : error {
  using error::error;
};

// A scan failed to witness a property within its horizon.
struct witness_error : error {
  using error::error;
};

// Requested numeric target is unreachable at double precision.
struct precision_error : error {
  using error::error;
};

// A group-closure size cap was hit.
struct cap_error : error {
  using error::error;
};

}  // namespace fgl
