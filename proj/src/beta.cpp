#include "sigsurf/beta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sigsurf {

BetaVector::BetaVector(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n < 1) throw std::invalid_argument("BetaVector: n must be >= 1");
  if (bits_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("BetaVector: bit count does not match n");
  }
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BetaVector: entries must be 0 or 1");
  }
}

BetaVector BetaVector::from_grid(int n, const GridLabel& indices) {
  if (n < 1) throw std::invalid_argument("BetaVector: n must be >= 1");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
  int prev = -1;
  for (int idx : indices) {
    if (idx < 0 || idx >= n) {
      throw std::out_of_range("BetaVector: grid index " + std::to_string(idx) +
                              " outside [0, " + std::to_string(n - 1) + "]");
    }
    if (idx <= prev) throw std::invalid_argument("BetaVector: grid must be strictly increasing");
    bits[static_cast<std::size_t>(idx)] = 1;
    prev = idx;
  }
  return BetaVector(n, std::move(bits));
}

int BetaVector::weight() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0);
}

GridLabel BetaVector::grid() const {
  GridLabel out;
  for (int j = 0; j < n_; ++j) {
    if (bits_[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

BetaVector BetaVector::complement() const {
  std::vector<std::uint8_t> bits(bits_.size());
  std::transform(bits_.begin(), bits_.end(), bits.begin(),
                 [](std::uint8_t b) { return static_cast<std::uint8_t>(1 - b); });
  return BetaVector(n_, std::move(bits));
}

BetaVector BetaVector::reversal() const {
  std::vector<std::uint8_t> bits(bits_.rbegin(), bits_.rend());
  return BetaVector(n_, std::move(bits));
}

bool is_complement_canonical(const BetaVector& beta) {
  return beta.grid() <= beta.complement().grid();
}

void for_each_beta(int n, int m, bool canonical_only,
                   const std::function<void(const BetaVector&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_beta: n must be >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("for_each_beta: m outside [0, n]");
  const bool dedup = canonical_only && 2 * m == n;

  GridLabel grid(static_cast<std::size_t>(m));
  std::iota(grid.begin(), grid.end(), 0);
  while (true) {
    BetaVector beta = BetaVector::from_grid(n, grid);
    if (!dedup || is_complement_canonical(beta)) fn(beta);

    // next m-combination of {0, ..., n-1} in lexicographic order
    int k = m - 1;
    while (k >= 0 && grid[static_cast<std::size_t>(k)] == n - m + k) --k;
    if (k < 0) break;
    ++grid[static_cast<std::size_t>(k)];
    for (int t = k + 1; t < m; ++t) {
      grid[static_cast<std::size_t>(t)] = grid[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
}

std::vector<BetaVector> enumerate_betas(int n, int m, bool canonical_only) {
  std::vector<BetaVector> out;
  for_each_beta(n, m, canonical_only, [&out](const BetaVector& b) { out.push_back(b); });
  return out;
}

}  // namespace sigsurf
