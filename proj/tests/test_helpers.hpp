#pragma once

#include <array>
#include <functional>
#include <vector>

#include "peirce/rings.hpp"

namespace peirce::testing {

// Independent table-backed constructions used as oracles. Elements of the
// 2x2 constructions are digit tuples over Z_m packed in a fixed order, and
// the tables are produced by direct coordinate formulas, not by any library
// ring machinery.

// Upper triangular 2x2 over Z_m: (a, b, d) packed as a + m*b + m*m*d,
// multiplication (a,b,d)(a',b',d') = (aa', ab'+bd', dd').
inline RingPtr table_upper_triangular_2x2(std::uint64_t m) {
  const std::uint64_t n = m * m * m;
  auto pack = [m](std::uint64_t a, std::uint64_t b, std::uint64_t d) {
    return a + m * b + m * m * d;
  };
  std::vector<std::vector<Elem>> add(n, std::vector<Elem>(n));
  std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      std::uint64_t a = x % m, b = x / m % m, d = x / (m * m);
      std::uint64_t a2 = y % m, b2 = y / m % m, d2 = y / (m * m);
      add[x][y] = pack((a + a2) % m, (b + b2) % m, (d + d2) % m);
      mul[x][y] = pack(a * a2 % m, (a * b2 + b * d2) % m, d * d2 % m);
    }
  return make_table_ring(std::move(add), std::move(mul), pack(0, 0, 0), pack(1, 0, 1),
                         "UT2(Z" + std::to_string(m) + ") via tables");
}

// Full 2x2 matrix ring over Z_m: (a,b,c,d) packed little-endian by digit.
inline RingPtr table_full_matrix_2x2(std::uint64_t m) {
  const std::uint64_t n = m * m * m * m;
  auto pack = [m](std::array<std::uint64_t, 4> v) {
    return v[0] + m * v[1] + m * m * v[2] + m * m * m * v[3];
  };
  auto unpack = [m](std::uint64_t x) {
    return std::array<std::uint64_t, 4>{x % m, x / m % m, x / (m * m) % m, x / (m * m * m)};
  };
  std::vector<std::vector<Elem>> add(n, std::vector<Elem>(n));
  std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      auto [a, b, c, d] = unpack(x);
      auto [e, f, g, h] = unpack(y);
      add[x][y] = pack({(a + e) % m, (b + f) % m, (c + g) % m, (d + h) % m});
      mul[x][y] = pack({(a * e + b * g) % m, (a * f + b * h) % m, (c * e + d * g) % m,
                        (c * f + d * h) % m});
    }
  return make_table_ring(std::move(add), std::move(mul), 0, pack({1, 0, 0, 1}),
                         "M2(Z" + std::to_string(m) + ") via tables");
}

}  // namespace peirce::testing
