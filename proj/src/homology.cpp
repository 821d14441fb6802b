#include "holocolor/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace holocolor {

namespace {

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Diagonalizes a dense matrix in place by unimodular row and column
// operations; the diagonal ends up as a divisibility chain.
std::vector<BigInt> dense_smith(IntMatrix a) {
  std::vector<BigInt> factors;
  const std::size_t limit = std::min(a.rows, a.cols);
  auto swap_rows = [&](std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
  };
  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
  };

  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    BigInt best;
    for (std::size_t r = t; r < a.rows; ++r)
      for (std::size_t c = t; c < a.cols; ++c)
        if (a.at(r, c) != 0 && (!found || abs_value(a.at(r, c)) < best)) {
          found = true;
          best = abs_value(a.at(r, c));
          pr = r;
          pc = c;
        }
    if (!found) break;
    swap_rows(t, pr);
    swap_cols(t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows; ++r) {
        if (a.at(r, t) == 0) continue;
        BigInt q = a.at(r, t) / a.at(t, t);
        for (std::size_t c = t; c < a.cols; ++c) a.at(r, c) -= q * a.at(t, c);
        if (a.at(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols; ++c) {
        if (a.at(t, c) == 0) continue;
        BigInt q = a.at(t, c) / a.at(t, t);
        for (std::size_t r = t; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, t);
        if (a.at(t, c) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t br = t, bc = t;
        BigInt small = abs_value(a.at(t, t));
        for (std::size_t r = t + 1; r < a.rows; ++r)
          if (a.at(r, t) != 0 && abs_value(a.at(r, t)) < small) small = abs_value(a.at(r, t)), br = r, bc = t;
        for (std::size_t c = t + 1; c < a.cols; ++c)
          if (a.at(t, c) != 0 && abs_value(a.at(t, c)) < small) small = abs_value(a.at(t, c)), br = t, bc = c;
        swap_rows(t, br);
        swap_cols(t, bc);
        continue;
      }
      // Pivot must divide the whole trailing block; otherwise fold a row in.
      std::size_t bad_row = 0;
      bool divisible = true;
      for (std::size_t r = t + 1; r < a.rows && divisible; ++r)
        for (std::size_t c = t + 1; c < a.cols; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) {
            divisible = false;
            bad_row = r;
            break;
          }
      if (divisible) break;
      for (std::size_t c = t; c < a.cols; ++c) a.at(t, c) += a.at(bad_row, c);
    }
    factors.push_back(abs_value(a.at(t, t)));
  }
  return factors;
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(const IntMatrix& m) { return dense_smith(m); }

std::vector<BigInt> smith_invariant_factors(const SparseIntMatrix& m) {
  // Unit pivots are eliminated sparsely (least Markowitz fill first); whatever
  // is left has no +-1 entries and is finished densely.
  std::vector<std::map<std::size_t, BigInt>> rows(m.rows);
  std::vector<std::set<std::size_t>> cols(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (const auto& [c, v] : m.row_entries[r])
      if (v != 0) {
        rows[r][c] += v;
        cols[c].insert(r);
      }

  std::size_t units = 0;
  while (true) {
    bool found = false;
    std::size_t pr = 0, pc = 0, best = 0;
    for (std::size_t r = 0; r < m.rows; ++r)
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[r].size() - 1) * (cols[c].size() - 1);
        if (!found || cost < best) {
          found = true;
          best = cost;
          pr = r;
          pc = c;
        }
      }
    if (!found) break;

    const BigInt pivot = rows[pr].at(pc);
    std::vector<std::size_t> others(cols[pc].begin(), cols[pc].end());
    for (std::size_t r : others) {
      if (r == pr) continue;
      BigInt factor = rows[r].at(pc) * pivot;  // pivot is its own inverse
      for (const auto& [c, v] : rows[pr]) {
        auto& slot = rows[r][c];
        slot -= factor * v;
        if (slot == 0) {
          rows[r].erase(c);
          cols[c].erase(r);
        } else {
          cols[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : rows[pr]) cols[c].erase(pr);
    rows[pr].clear();
    ++units;
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!cols[c].empty()) live_cols.push_back(c);

  std::vector<BigInt> factors(units, BigInt(1));
  if (!live_rows.empty()) {
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) {
        auto j = static_cast<std::size_t>(std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin());
        rest.at(i, j) = v;
      }
    auto tail = dense_smith(std::move(rest));
    factors.insert(factors.end(), tail.begin(), tail.end());
  }
  return factors;
}

long long HomologyProfile::betti_alternating_sum() const {
  long long sum = 0;
  for (std::size_t k = 0; k < groups.size(); ++k)
    sum += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(groups[k].betti);
  return sum;
}

SparseIntMatrix boundary_matrix(const FaceCensus& census, int k) {
  SparseIntMatrix m;
  if (k < 1 || static_cast<std::size_t>(k) >= census.faces.size()) return m;
  const auto& lower = census.faces[static_cast<std::size_t>(k) - 1];
  const auto& upper = census.faces[static_cast<std::size_t>(k)];
  m.rows = lower.size();
  m.cols = upper.size();
  m.row_entries.resize(m.rows);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto& face = upper[c];
    for (std::size_t i = 0; i < face.size(); ++i) {
      Simplex facet;
      for (std::size_t x = 0; x < face.size(); ++x)
        if (x != i) facet.push_back(face[x]);
      auto r = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), facet) - lower.begin());
      m.row_entries[r].emplace_back(c, BigInt(i % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

HomologyProfile homology(const Triangulation& t) {
  const auto census = face_census(t);
  const auto n = static_cast<std::size_t>(t.dimension());
  // factors[k] are the invariant factors of the boundary map out of C_k.
  std::vector<std::vector<BigInt>> factors(n + 2);
  for (std::size_t k = 1; k <= n; ++k)
    factors[k] = smith_invariant_factors(boundary_matrix(census, static_cast<int>(k)));

  HomologyProfile profile;
  for (std::size_t k = 0; k <= n; ++k) {
    HomologyGroup group;
    const std::size_t chains = census.faces[k].size();
    group.betti = chains - factors[k].size() - factors[k + 1].size();
    for (const auto& d : factors[k + 1])
      if (d > 1) group.torsion.push_back(d);
    std::sort(group.torsion.begin(), group.torsion.end());
    profile.groups.push_back(std::move(group));
  }
  return profile;
}

}  // namespace holocolor
