#include "holocolor/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "holocolor/error.hpp"
#include "text_util.hpp"

namespace holocolor {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[static_cast<std::size_t>(x - 1)])
      throw DomainError("image list is not a permutation");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  auto p = identity(degree);
  if (a < 1 || b < 1 || a > degree || b > degree) throw DomainError("transposition point out of range");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  auto p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      auto v = detail::parse_uint(text.substr(i, j - i));
      if (!v || *v < 1 || *v > static_cast<std::uint64_t>(degree))
        throw ParseError("cycle point out of range");
      int x = static_cast<int>(*v);
      if (used[static_cast<std::size_t>(x - 1)]) throw ParseError("point repeated in cycle notation");
      used[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
      i = j;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p.images_[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::power(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent) : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DomainError("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 1; x <= a.degree(); ++x) images[static_cast<std::size_t>(x - 1)] = a(b(x));
  return Permutation(std::move(images));
}

SubgroupClosure subgroup_closure(int degree, const std::vector<Permutation>& gens) {
  if (degree > kClosureDegreeBudget)
    throw BudgetExceeded("subgroup closure is limited to degree " + std::to_string(kClosureDegreeBudget));
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw DomainError("generator of degree " + std::to_string(g.degree()) + " in S_" + std::to_string(degree));

  std::size_t factorial = 1;
  for (int i = 2; i <= degree; ++i) factorial *= static_cast<std::size_t>(i);

  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    auto p = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      auto q = compose(p, g);
      if (seen.insert(q).second) {
        if (seen.size() > factorial) throw BudgetExceeded("closure exceeded the symmetric group order");
        frontier.push_back(std::move(q));
      }
    }
  }
  SubgroupClosure closure;
  closure.order = seen.size();
  closure.elements.assign(seen.begin(), seen.end());
  return closure;
}

}  // namespace holocolor
