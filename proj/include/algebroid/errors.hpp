#ifndef ALGEBROID_ERRORS_HPP
#define ALGEBROID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace algebroid {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched polynomial rings (different variable counts).
struct ring_mismatch_error : error {
  using error::error;
};

/// Malformed tensors: wrong array sizes, bad indices, arity mismatches.
struct shape_error : error {
  using error::error;
};

/// Input that cannot be parsed into a library value.
struct parse_error : error {
  using error::error;
};

/// A graded slice is not closed under the coboundary.
struct slice_error : error {
  using error::error;
};

}  // namespace algebroid

#endif
