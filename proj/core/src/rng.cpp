#include "bgc/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgc {

std::vector<int> sample_without_replacement(int n, int k, Xoshiro256& rng) {
  if (k < 0 || k > n) throw std::invalid_argument("sample size must satisfy 0 <= k <= n");
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  for (int j = n - k; j < n; ++j) {
    const int t = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) {
      chosen.push_back(j);
    } else {
      chosen.push_back(t);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace bgc
