#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace holocolor {

/// A bijection of {1, ..., k}.
class Permutation {
 public:
  Permutation() = default;

  /// `images[i-1]` is the image of i. Throws DomainError unless a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// Transposition (a b) in S_degree.
  static Permutation transposition(int degree, int a, int b);
  /// Parses cycle notation such as "(1 2)(3 4)" or "()".
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation power(long long exponent) const;

  /// Cycle lengths including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  /// Cycle notation: cycles led by their least point, in increasing order of
  /// that point, fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// (a * b)(x) = a(b(x)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

struct SubgroupClosure {
  std::size_t order = 0;
  std::vector<Permutation> elements;  ///< sorted
};

/// Closure of `gens` under composition in S_degree. Throws BudgetExceeded
/// when degree exceeds `kClosureDegreeBudget`.
SubgroupClosure subgroup_closure(int degree, const std::vector<Permutation>& gens);

inline constexpr int kClosureDegreeBudget = 8;

}  // namespace holocolor
