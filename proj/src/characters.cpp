#include "immw/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "immw/error.hpp"

namespace immw {

namespace {

// Beta-numbers (first-column hook lengths): removing a border strip of size r
// is subtracting r from one beta value while keeping the set distinct; the
// strip height is the number of beta values jumped over.
std::vector<long long> beta_numbers(const Partition& shape) {
  const int depth = shape.depth();
  std::vector<long long> beta(depth);
  for (int i = 0; i < depth; ++i) beta[i] = shape.part(i) + (depth - 1 - i);
  return beta;
}

Partition partition_from_beta(std::vector<long long> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int depth = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < depth; ++i) {
    const long long p = beta[i] - (depth - 1 - i);
    if (p > 0) parts.push_back(static_cast<int>(p));
  }
  return Partition(std::move(parts));
}

long long mn_recursive(const Partition& shape, const std::vector<int>& rho, std::size_t next,
                       std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (next == rho.size()) return shape.size() == 0 ? 1 : 0;

  std::vector<int> rho_rest(rho.begin() + static_cast<long>(next), rho.end());
  const auto key = std::make_pair(shape.parts(), rho_rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int strip = rho[next];
  const std::vector<long long> beta = beta_numbers(shape);
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const long long target = beta[i] - strip;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++height;
    }
    if (occupied) continue;
    std::vector<long long> reduced = beta;
    reduced[i] = target;
    const long long sub = mn_recursive(partition_from_beta(std::move(reduced)), rho, next + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

std::mutex& character_mutex() {
  static std::mutex mtx;
  return mtx;
}

}  // namespace

long long mn_character(const Partition& shape, const Partition& rho) {
  if (shape.size() != rho.size())
    throw SizeMismatchError("mn_character: |λ| != |ρ|");
  static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  std::lock_guard<std::mutex> lock(character_mutex());
  return mn_recursive(shape, rho.parts(), 0, memo);
}

long long conjugacy_class_size(const Partition& rho) {
  // |class| = m! / z_ρ with z_ρ = ∏ k^{m_k} m_k!.
  long long z = 1;
  const auto& parts = rho.parts();
  std::size_t k = 0;
  while (k < parts.size()) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    const int mult = static_cast<int>(run - k);
    for (int r = 0; r < mult; ++r) z *= parts[k];
    z *= factorial(mult);
    k = run;
  }
  return factorial(rho.size()) / z;
}

CharacterTable::CharacterTable(int m) : m_(m), partitions_(enumerate_partitions(m)) {
  if (m < 1) throw DomainError("CharacterTable: m must be positive");
  classes_.assign(partitions_.rbegin(), partitions_.rend());
  const int count = static_cast<int>(partitions_.size());
  values_.assign(count, std::vector<long long>(count, 0));
  class_sizes_.resize(count);
  for (int r = 0; r < count; ++r) class_sizes_[r] = conjugacy_class_size(classes_[r]);
  for (int l = 0; l < count; ++l)
    for (int r = 0; r < count; ++r) values_[l][r] = mn_character(partitions_[l], classes_[r]);
}

int CharacterTable::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < partitions_.size(); ++i)
    if (partitions_[i] == p) return static_cast<int>(i);
  throw DomainError("CharacterTable: partition of wrong size");
}

int CharacterTable::class_index_of(const Partition& rho) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i] == rho) return static_cast<int>(i);
  throw DomainError("CharacterTable: cycle type of wrong size");
}

long long CharacterTable::value(const Partition& lambda, const Partition& rho) const {
  return values_[index_of(lambda)][class_index_of(rho)];
}

const CharacterTable& CharacterTable::cached(int m) {
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<CharacterTable>> tables;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = tables[m];
  if (!slot) slot = std::make_unique<CharacterTable>(m);
  return *slot;
}

}  // namespace immw
