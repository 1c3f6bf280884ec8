#pragma once

#include <cstdint>
#include <vector>

namespace dgp {

/// Determinant of a dense row-major n x n integer matrix by fraction-free
/// (Bareiss) elimination with row pivoting. Every intermediate is a minor of
/// the input; throws ResourceError if one leaves the 64-bit range.
long long det_bareiss(std::vector<long long> a, int n);

/// Same, for matrices whose entries are already int64.
long long det_bareiss_inplace(long long* a, int n);

}  // namespace dgp
