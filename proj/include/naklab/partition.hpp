#pragma once

// Generalized partitions: finite multisets of nonzero integers.

#include "naklab/scalar.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace naklab {

class GeneralizedPartition {
 public:
  GeneralizedPartition() = default;
  /// Throws std::invalid_argument on a zero part.
  explicit GeneralizedPartition(const std::vector<int>& parts);

  /// Parses "(−2,−1)"-style text, also accepting "-2 -1" or "()" for empty.
  static GeneralizedPartition parse(std::string_view text);

  bool empty() const { return mult_.empty(); }
  int length() const;       // ℓ(λ)
  int size() const;         // |λ|
  int square_sum() const;   // s(λ)
  Rational multiplicity_factorial() const;  // λ^!
  int multiplicity(int part) const;
  const std::map<int, int>& multiplicities() const { return mult_; }

  /// Parts in ascending order, i.e. creation modes first, then annihilation
  /// modes with growing modulus.
  std::vector<int> ordered_parts() const;
  /// Positive parts only (annihilation modes), ascending.
  std::vector<int> positive_parts() const;
  /// Moduli of the negative parts (creation modes), descending.
  std::vector<int> creation_moduli() const;
  int positive_sum() const;

  std::string str() const;

  friend bool operator==(const GeneralizedPartition&, const GeneralizedPartition&) = default;
  friend auto operator<=>(const GeneralizedPartition& a, const GeneralizedPartition& b) {
    return a.ordered_parts() <=> b.ordered_parts();
  }

 private:
  std::map<int, int> mult_;
};

/// Ordinary partitions of n into exactly `length` parts, each part descending.
std::vector<std::vector<int>> partitions_with_length(int n, int length);

/// All ordinary partitions of n (descending parts).
std::vector<std::vector<int>> partitions_of(int n);

/// Generalized partitions with ℓ(λ) = length, |λ| = size and positive parts
/// summing to at most `max_positive_sum`. The empty partition appears only
/// when length == 0 and size == 0.
std::vector<GeneralizedPartition> generalized_partitions(int length, int size, int max_positive_sum);

}  // namespace naklab
