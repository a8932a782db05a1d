#include "plab/kernels/window_scan.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace plab::kernels {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Decode a flat index in [0, base^dim) into coordinates.
void decode(long long flat, long long base, int dim, std::vector<long long>& out) {
  for (int i = dim - 1; i >= 0; --i) {
    out[i] = flat % base;
    flat /= base;
  }
}

void check(const WindowGrid& grid, long long n) {
  if (grid.dim < 1) throw std::invalid_argument("window scan needs dim >= 1");
  if (n < 1 || n > grid.side) throw std::invalid_argument("window side must lie in [1, grid side]");
  if (static_cast<long long>(grid.cells.size()) != ipow(grid.side, grid.dim))
    throw std::invalid_argument("window grid has the wrong number of cells");
}

}  // namespace

WindowCounts window_scan_serial(const WindowGrid& grid, long long n) {
  check(grid, n);
  const int d = grid.dim;
  const long long offsets = grid.side - n + 1;
  const long long cubes = ipow(offsets, d);
  const long long inner = ipow(n, d);
  WindowCounts out{std::numeric_limits<long long>::min(), std::numeric_limits<long long>::max(), cubes};
  std::vector<long long> origin(d), step(d);
  for (long long c = 0; c < cubes; ++c) {
    decode(c, offsets, d, origin);
    long long count = 0;
    for (long long s = 0; s < inner; ++s) {
      decode(s, n, d, step);
      long long flat = 0;
      for (int i = 0; i < d; ++i) flat = flat * grid.side + origin[i] + step[i];
      count += grid.cells[flat];
    }
    out.max_count = std::max(out.max_count, count);
    out.min_count = std::min(out.min_count, count);
  }
  return out;
}

WindowCounts window_scan_parallel(const WindowGrid& grid, long long n) {
  check(grid, n);
  const int d = grid.dim;
  const long long s1 = grid.side + 1;
  const long long total = ipow(s1, d);

  // prefix[x] = number of occupied cells in the box [0, x) per axis.
  std::vector<long long> prefix(total, 0);
  std::vector<long long> x(d);
  for (long long f = 0; f < total; ++f) {
    decode(f, s1, d, x);
    bool interior = true;
    for (int i = 0; i < d; ++i) interior = interior && x[i] > 0;
    if (!interior) continue;
    long long flat = 0;
    for (int i = 0; i < d; ++i) flat = flat * grid.side + (x[i] - 1);
    prefix[f] = grid.cells[flat];
  }
  long long stride = 1;
  for (int axis = d - 1; axis >= 0; --axis) {
    for (long long f = 0; f < total; ++f) {
      long long coord = (f / stride) % s1;
      if (coord > 0) prefix[f] += prefix[f - stride];
    }
    stride *= s1;
  }

  const long long offsets = grid.side - n + 1;
  const long long cubes = ipow(offsets, d);
  long long best_max = std::numeric_limits<long long>::min();
  long long best_min = std::numeric_limits<long long>::max();
  const int corners = 1 << d;

#pragma omp parallel
  {
    std::vector<long long> origin(d);
    long long local_max = std::numeric_limits<long long>::min();
    long long local_min = std::numeric_limits<long long>::max();
#pragma omp for schedule(static)
    for (long long c = 0; c < cubes; ++c) {
      decode(c, offsets, d, origin);
      long long count = 0;
      for (int mask = 0; mask < corners; ++mask) {
        long long flat = 0;
        int low = 0;
        for (int i = 0; i < d; ++i) {
          bool hi = (mask >> (d - 1 - i)) & 1;
          flat = flat * s1 + origin[i] + (hi ? n : 0);
          low += hi ? 0 : 1;
        }
        count += (low % 2 == 0) ? prefix[flat] : -prefix[flat];
      }
      local_max = std::max(local_max, count);
      local_min = std::min(local_min, count);
    }
#pragma omp critical
    {
      best_max = std::max(best_max, local_max);
      best_min = std::min(best_min, local_min);
    }
  }
  return {best_max, best_min, cubes};
}

}  // namespace plab::kernels
