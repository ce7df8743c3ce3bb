#include "seaweed/rank.hpp"

#include <gmpxx.h>

#include <utility>

namespace seaweed {

namespace {

struct Overflow {};

// int64 with trap-on-overflow semantics, so the Bareiss loop below can be
// written once for both scalar types.
struct CheckedI64 {
  std::int64_t v = 0;

  CheckedI64() = default;
  CheckedI64(std::int64_t x) : v(x) {}

  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
    return r;
  }
  friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) { return a.v / b.v; }
  friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
};

template <class Int>
int bareiss_rank(std::vector<std::vector<Int>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  Int prev = Int(1);
  for (int col = 0; col < cols && r < rows; ++col) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!(m[i][col] == Int(0))) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
      m[i][col] = Int(0);
    }
    prev = m[r][col];
    ++r;
  }
  return r;
}

}  // namespace

int rank_exact(IntMatrix m) {
  try {
    std::vector<std::vector<CheckedI64>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      a[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank(std::move(a));
  } catch (const Overflow&) {
    std::vector<std::vector<mpz_class>> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[i].reserve(m[i].size());
      for (std::int64_t x : m[i]) a[i].emplace_back(static_cast<long>(x));
    }
    return bareiss_rank(std::move(a));
  }
}

}  // namespace seaweed
