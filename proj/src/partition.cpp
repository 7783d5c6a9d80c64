#include "immw/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "immw/error.hpp"

namespace immw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw DomainError("Partition: parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> values) {
  for (int v : values)
    if (v < 0) throw DomainError("Partition: negative part");
  std::sort(values.begin(), values.end(), std::greater<>());
  while (!values.empty() && values.back() == 0) values.pop_back();
  return Partition(std::move(values));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

WeakComposition::WeakComposition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw DomainError("WeakComposition: negative entry");
    total_ += e;
  }
}

std::string WeakComposition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

MultisetIndex::MultisetIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1) throw DomainError("MultisetIndex: values must be at least 1");
    if (k > 0 && indices_[k] < indices_[k - 1])
      throw DomainError("MultisetIndex: values must be nondecreasing");
  }
}

MultisetIndex MultisetIndex::from_weight(const WeakComposition& mu) {
  std::vector<int> idx;
  idx.reserve(mu.total());
  for (int i = 0; i < mu.length(); ++i)
    for (int r = 0; r < mu.entry(i); ++r) idx.push_back(i + 1);
  return MultisetIndex(std::move(idx));
}

WeakComposition MultisetIndex::weight(int n) const {
  if (max_value() > n) throw DomainError("MultisetIndex: value exceeds n");
  std::vector<int> mult(n, 0);
  for (int v : indices_) ++mult[v - 1];
  return WeakComposition(std::move(mult));
}

long long MultisetIndex::m_of() const {
  long long prod = 1;
  std::size_t k = 0;
  while (k < indices_.size()) {
    std::size_t run = k;
    while (run < indices_.size() && indices_[run] == indices_[k]) ++run;
    prod *= factorial(static_cast<int>(run - k));
    k = run;
  }
  return prod;
}

long long factorial(int m) {
  if (m < 0) throw DomainError("factorial: negative argument");
  if (m > 20) throw ResourceLimitError("factorial: argument too large for 64 bits");
  long long f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

std::vector<Partition> enumerate_partitions(int m, std::optional<int> max_depth) {
  if (m < 0) throw DomainError("enumerate_partitions: negative m");
  const int depth_cap = max_depth.value_or(m);
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> descend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) >= depth_cap) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      descend(remaining - p, p);
      current.pop_back();
    }
  };
  descend(m, m);
  return out;
}

bool dominates(const Partition& lhs, const Partition& rhs) {
  if (lhs.size() != rhs.size())
    throw SizeMismatchError("dominates: partitions of different sizes");
  const int depth = std::max(lhs.depth(), rhs.depth());
  long long sum_l = 0, sum_r = 0;
  for (int k = 0; k < depth; ++k) {
    sum_l += lhs.part(k);
    sum_r += rhs.part(k);
    if (sum_l < sum_r) return false;
  }
  return true;
}

Partition sort_to_partition(const WeakComposition& mu) {
  return Partition::from_unsorted(mu.entries());
}

HookData hook_data(const Partition& shape) {
  if (shape.size() < 1) throw DomainError("hook_data: empty partition");
  const Partition conj = shape.conjugate();
  HookData data;
  data.hooks.resize(shape.depth());
  data.hook_product = 1;
  for (int i = 0; i < shape.depth(); ++i) {
    data.hooks[i].resize(shape.part(i));
    for (int j = 0; j < shape.part(i); ++j) {
      const int arm = shape.part(i) - j - 1;
      const int leg = conj.part(j) - i - 1;
      data.hooks[i][j] = arm + leg + 1;
      data.hook_product *= data.hooks[i][j];
    }
  }
  data.tableau_count = factorial(shape.size()) / data.hook_product;
  return data;
}

std::vector<WeakComposition> weak_compositions(int total, int length) {
  if (total < 0 || length < 0) throw DomainError("weak_compositions: negative argument");
  std::vector<WeakComposition> out;
  if (length == 0) {
    if (total == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> current(length, 0);
  std::function<void(int, int)> descend = [&](int pos, int remaining) {
    if (pos == length - 1) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      current[pos] = v;
      descend(pos + 1, remaining - v);
    }
  };
  descend(0, total);
  return out;
}

}  // namespace immw
