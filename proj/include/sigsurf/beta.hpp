#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace sigsurf {

// Strictly increasing list of selected indices in {0, ..., n-1}.
using GridLabel = std::vector<int>;

// Occupation vector beta = (beta_0, ..., beta_{n-1}) with beta_j in {0, 1}.
// Out-of-range reads follow the boundary convention beta_{-1} = beta_n = 0,
// which lets every invariant sum run over j = 0..n without special cases.
class BetaVector {
 public:
  BetaVector(int n, std::vector<std::uint8_t> bits);
  static BetaVector from_grid(int n, const GridLabel& indices);

  int n() const { return n_; }
  int weight() const;

  int bit(int j) const {
    if (j < 0 || j >= n_) return 0;
    return bits_[static_cast<std::size_t>(j)];
  }

  GridLabel grid() const;
  BetaVector complement() const;  // flips every bit; rank n - m
  BetaVector reversal() const;    // beta_j -> beta_{n-1-j}

  bool operator==(const BetaVector& other) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

// True when grid(beta) <= grid(complement(beta)) lexicographically.  Only
// meaningful for 2m = n; elsewhere the weight already separates a vector
// from its complement.
bool is_complement_canonical(const BetaVector& beta);

// Visits all C(n, m) occupation vectors in lexicographic grid order.  With
// canonical_only set and 2m = n, only complement-canonical representatives
// are produced.
void for_each_beta(int n, int m, bool canonical_only,
                   const std::function<void(const BetaVector&)>& fn);

std::vector<BetaVector> enumerate_betas(int n, int m, bool canonical_only = false);

}  // namespace sigsurf
