#include "dgp/matrix.hpp"

#include <limits>
#include <utility>

#include "dgp/error.hpp"

namespace dgp {

long long det_bareiss_inplace(long long* a, int n) {
  if (n == 0) return 1;
  int sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = k; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
      sign = -sign;
    }
    const long long pivot = a[k * n + k];
    for (int i = k + 1; i < n; ++i) {
      const long long lead = a[i * n + k];
      for (int j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(a[i * n + j]) * pivot -
                           static_cast<__int128>(a[k * n + j]) * lead;
        const __int128 q = v / prev;
        if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
          throw ResourceError("integer determinant overflowed 64 bits");
        a[i * n + j] = static_cast<long long>(q);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

long long det_bareiss(std::vector<long long> a, int n) { return det_bareiss_inplace(a.data(), n); }

}  // namespace dgp
