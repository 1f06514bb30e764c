#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sympbrsk/error.hpp"

namespace sympbrsk {

/// Number of multisets of size k over an n-element set, C(n + k - 1, k).
inline std::uint64_t multiset_coefficient(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  std::uint64_t result = 1;
  // result * (n + i) / (i + 1) stays integral at every step.
  for (std::uint64_t i = 0; i < k; ++i) result = result * (n + i) / (i + 1);
  return result;
}

inline std::uint64_t multiset_count_up_to(std::uint64_t n, std::uint64_t kmax) {
  std::uint64_t total = 0;
  for (std::uint64_t k = 0; k <= kmax; ++k) total += multiset_coefficient(n, k);
  return total;
}

/// Visits every size-k multiset over `items` as a non-decreasing index
/// sequence mapped back to items, in lexicographic order of the indices.
template <class T, class Visitor>
void for_each_multiset(std::span<const T> items, int k, Visitor&& visit) {
  if (k < 0) throw InvalidInput("for_each_multiset: negative size");
  std::vector<T> current;
  current.reserve(k);
  if (k == 0) {
    visit(std::as_const(current));
    return;
  }
  if (items.empty()) return;
  std::vector<std::size_t> idx(k, 0);
  const std::size_t last = items.size() - 1;
  while (true) {
    current.clear();
    for (std::size_t i : idx) current.push_back(items[i]);
    visit(std::as_const(current));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == last) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[pos];
  }
}

/// All multisets of size 0..kmax, size-major, each size in lexicographic order.
template <class T>
std::vector<std::vector<T>> multisets_up_to(std::span<const T> items, int kmax) {
  std::vector<std::vector<T>> out;
  for (int k = 0; k <= kmax; ++k)
    for_each_multiset(items, k, [&](const std::vector<T>& m) { out.push_back(m); });
  return out;
}

}  // namespace sympbrsk
