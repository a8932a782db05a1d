#pragma once

#include <cstdint>
#include <vector>

namespace plab::kernels {

// Occupancy grid of side `side` in `dim` dimensions, first axis most
// significant. Cubes of side n are placed at every offset that fits.
struct WindowGrid {
  int dim = 1;
  long long side = 0;
  std::vector<std::uint8_t> cells;
};

struct WindowCounts {
  long long max_count = 0;
  long long min_count = 0;
  long long cubes = 0;
};

// Direct count of every cube. O(cubes * n^dim), for testing.
WindowCounts window_scan_serial(const WindowGrid& grid, long long n);
// Summed-area table, cube offsets split across OpenMP threads.
WindowCounts window_scan_parallel(const WindowGrid& grid, long long n);

}  // namespace plab::kernels
