#include "plab/kernels/subset_scan.hpp"

#include <omp.h>

#include <bit>
#include <stdexcept>

#include "plab/errors.hpp"

namespace plab::kernels {

namespace {

using Wide64 = __int128;

struct Narrow {
  using Int = std::int64_t;
  using Wide = Wide64;
  static Int convert(const BigInt& v) { return static_cast<Int>(v); }
  static BigInt widen(Int v) { return BigInt(v); }
};

struct Big {
  using Int = BigInt;
  using Wide = BigInt;
  static const Int& convert(const BigInt& v) { return v; }
  static const BigInt& widen(const Int& v) { return v; }
};

template <class T>
struct Prepared {
  std::vector<typename T::Int> left, right;
  typename T::Int floor_num, floor_den;
};

template <class T>
Prepared<T> prepare(const ScanInput& in) {
  Prepared<T> p;
  for (const auto& v : in.left) p.left.push_back(T::convert(v));
  for (const auto& v : in.right) p.right.push_back(T::convert(v));
  p.floor_num = T::convert(in.floor_num);
  p.floor_den = T::convert(in.floor_den);
  return p;
}

template <class T>
struct Best {
  bool found = false;
  typename T::Int num{}, den{};
  std::uint64_t mask = 0;

  void offer(const typename T::Int& n, const typename T::Int& d, std::uint64_t m) {
    if (!found) {
      found = true;
      num = n;
      den = d;
      mask = m;
      return;
    }
    typename T::Wide lhs = typename T::Wide(n) * typename T::Wide(den);
    typename T::Wide rhs = typename T::Wide(num) * typename T::Wide(d);
    if (lhs < rhs || (lhs == rhs && mask_lex_less(m, mask))) {
      num = n;
      den = d;
      mask = m;
    }
  }
  void merge(const Best& o) {
    if (o.found) offer(o.num, o.den, o.mask);
  }
};

template <class T>
bool admitted(const Prepared<T>& p, const typename T::Int& left_sum) {
  return typename T::Wide(left_sum) * typename T::Wide(p.floor_den) >= typename T::Wide(p.floor_num);
}

bool fits_narrow(const ScanInput& in) {
  const BigInt limit = BigInt(1) << 62;
  BigInt l = 0, r = 0;
  for (const auto& v : in.left) l += v;
  for (const auto& v : in.right) r += v;
  return l < limit && r < limit && in.floor_num < limit && in.floor_den < limit && in.floor_num >= 0;
}

void check_width(const ScanInput& in) {
  if (in.left.size() > static_cast<std::size_t>(kMaxScanWidth))
    throw InputError("subset scan over more than 62 elements");
  if (in.targets.size() != in.left.size()) throw InputError("subset scan: targets/left size mismatch");
  if (in.floor_den <= 0) throw InputError("subset scan: non-positive floor denominator");
}

template <class T>
ScanResult to_result(const Best<T>& b) {
  ScanResult r;
  r.found = b.found;
  if (b.found) {
    r.num = T::widen(b.num);
    r.den = T::widen(b.den);
    r.mask = b.mask;
  }
  return r;
}

template <class T>
ScanResult serial_impl(const ScanInput& in) {
  auto p = prepare<T>(in);
  const int n = static_cast<int>(p.left.size());
  Best<T> best;
  std::vector<char> covered(p.right.size());
  const std::uint64_t end = std::uint64_t(1) << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    std::fill(covered.begin(), covered.end(), 0);
    typename T::Int l{0}, r{0};
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      l += p.left[i];
      for (int t : in.targets[i]) covered[t] = 1;
    }
    if (!admitted(p, l)) continue;
    for (std::size_t t = 0; t < covered.size(); ++t)
      if (covered[t]) r += p.right[t];
    best.offer(r, l, mask);
  }
  return to_result(best);
}

template <class T>
ScanResult parallel_impl(const ScanInput& in) {
  auto p = prepare<T>(in);
  const int n = static_cast<int>(p.left.size());
  const std::uint64_t end = std::uint64_t(1) << n;
  const int threads = omp_get_max_threads();
  std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(end / 256, 16ull * threads));
  const std::uint64_t span = (end + chunks - 1) / chunks;
  chunks = (end + span - 1) / span;
  std::vector<Best<T>> partial(chunks);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    std::uint64_t lo = std::max<std::uint64_t>(1, c * span);
    std::uint64_t hi = std::min<std::uint64_t>(end, (c + 1) * span);
    if (lo >= hi) continue;
    Best<T> best;
    std::vector<int> cover(p.right.size(), 0);
    typename T::Int l{0}, r{0};
    std::uint64_t mask = lo ^ (lo >> 1);
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      l += p.left[i];
      for (int t : in.targets[i])
        if (cover[t]++ == 0) r += p.right[t];
    }
    if (admitted(p, l)) best.offer(r, l, mask);
    for (std::uint64_t g = lo + 1; g < hi; ++g) {
      int bit = std::countr_zero(g);
      mask ^= std::uint64_t(1) << bit;
      if (mask >> bit & 1) {
        l += p.left[bit];
        for (int t : in.targets[bit])
          if (cover[t]++ == 0) r += p.right[t];
      } else {
        l -= p.left[bit];
        for (int t : in.targets[bit])
          if (--cover[t] == 0) r -= p.right[t];
      }
      if (admitted(p, l)) best.offer(r, l, mask);
    }
    partial[c] = std::move(best);
  }

  Best<T> best;
  for (const auto& b : partial) best.merge(b);
  return to_result(best);
}

}  // namespace

ScanResult scan_serial(const ScanInput& input) {
  check_width(input);
  return fits_narrow(input) ? serial_impl<Narrow>(input) : serial_impl<Big>(input);
}

ScanResult scan_parallel(const ScanInput& input) {
  check_width(input);
  return fits_narrow(input) ? parallel_impl<Narrow>(input) : parallel_impl<Big>(input);
}

}  // namespace plab::kernels
