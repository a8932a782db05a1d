#pragma once

#include <string>

#include "plab/json_io.hpp"
#include "plab/rational.hpp"

namespace plab::test {

inline std::string fixture(const std::string& name) { return std::string(PLAB_FIXTURES) + "/" + name; }
inline LayeredGraph load_graph(const std::string& name) { return graph_from_json(read_json_file(fixture(name))); }

inline Rational q(long long p, long long d = 1) { return Rational(BigInt(p), BigInt(d)); }
inline Rational q(int p, int d = 1) { return q(static_cast<long long>(p), static_cast<long long>(d)); }
inline Rational q(const char* s) { return Rational::parse(s); }

// Every nonempty subset of {0..n-1}, as sorted index lists in mask order.
template <class F>
void for_each_subset(int n, F&& f) {
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    f(s);
  }
}

}  // namespace plab::test
