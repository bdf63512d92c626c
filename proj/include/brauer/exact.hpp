#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brauer {

// All counting is done in exact arbitrary-precision integers: (n!)^2 already
// overflows 64 bits at n = 13.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);  // exact: r is a binomial prefix
  }
  return r;
}

inline Int ipow(Int base, int e) {
  Int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Division that must be exact; used where a theorem guarantees divisibility.
inline Int exact_div(const Int& a, const Int& b) {
  assert(b != 0 && a % b == 0);
  return a / b;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline Int stirling2(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  std::vector<Int> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[j] = j * row[j] + row[j - 1];
    row[0] = 0;  // S(i,0) = 0 once i >= 1
  }
  return row[k];
}

inline Int bell(int n) {
  Int total = 0;
  for (int k = 0; k <= n; ++k) total += stirling2(n, k);
  return total;
}

// All partitions of n as weakly decreasing tuples, in reverse lexicographic
// order starting from (n).
inline std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace brauer
