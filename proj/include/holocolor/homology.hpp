#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "holocolor/triangulation.hpp"

namespace holocolor {

using BigInt = boost::multiprecision::cpp_int;

/// Integer matrix in row-major dense layout.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Sparse integer matrix: one (column -> value) list per row, zero entries absent.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> row_entries;
};

/// Nonzero invariant factors d1 | d2 | ... | dr of the Smith normal form,
/// all positive. Their count is the rank.
std::vector<BigInt> smith_invariant_factors(const IntMatrix& m);
std::vector<BigInt> smith_invariant_factors(const SparseIntMatrix& m);

struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<BigInt> torsion;  ///< each >= 2, each dividing the next

  bool operator==(const HomologyGroup&) const = default;
};

/// H_0 .. H_n with integer coefficients.
struct HomologyProfile {
  std::vector<HomologyGroup> groups;

  long long betti_alternating_sum() const;
  bool operator==(const HomologyProfile&) const = default;
};

/// Boundary map C_k -> C_{k-1} in the bases of `face_census(t).faces`.
SparseIntMatrix boundary_matrix(const FaceCensus& census, int k);

HomologyProfile homology(const Triangulation& t);

}  // namespace holocolor
