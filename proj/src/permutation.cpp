#include "immw/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "immw/error.hpp"

namespace immw {

Permutation Permutation::identity(int m) {
  if (m < 0) throw DomainError("Permutation: negative degree");
  std::vector<int> img(m);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_one_line(const std::vector<int>& images_1based) {
  const int m = static_cast<int>(images_1based.size());
  std::vector<int> img(m);
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    const int v = images_1based[i] - 1;
    if (v < 0 || v >= m || seen[v])
      throw DomainError("Permutation: one-line notation is not a bijection");
    seen[v] = true;
    img[i] = v;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::adjacent_transposition(int m, int i) {
  if (i < 1 || i > m - 1)
    throw DomainError("Permutation: adjacent transposition index out of range");
  Permutation s = identity(m);
  std::swap(s.images_[i - 1], s.images_[i]);
  return s;
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (degree() != other.degree())
    throw SizeMismatchError("Permutation: composing different degrees");
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[i] = images_[other.images_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<int>(i);
  return Permutation(std::move(img));
}

int Permutation::sign() const {
  const Partition type = cycle_type(*this);
  return ((degree() - type.depth()) % 2 == 0) ? 1 : -1;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble-sorting the one-line notation multiplies on the right by s_i per
  // swap; reversing the swap list gives a left-to-right word for σ.
  std::vector<int> work = images_;
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < work.size(); ++i) {
      if (work[i] > work[i + 1]) {
        std::swap(work[i], work[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Partition cycle_type(const Permutation& sigma) {
  const int m = sigma.degree();
  std::vector<bool> seen(m, false);
  std::vector<int> lengths;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = sigma.image(j)) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::vector<Permutation> all_permutations(int m) {
  if (m > 10) throw ResourceLimitError("all_permutations: m too large");
  std::vector<int> line(m);
  std::iota(line.begin(), line.end(), 1);
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(factorial(m)));
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

long long permutation_rank(const Permutation& sigma) {
  const int m = sigma.degree();
  long long rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (sigma.image(j) < sigma.image(i)) ++smaller;
    rank += smaller * factorial(m - 1 - i);
  }
  return rank;
}

Permutation permutation_unrank(int m, long long rank) {
  if (rank < 0 || rank >= factorial(m))
    throw DomainError("permutation_unrank: rank out of range");
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> line;
  line.reserve(m);
  for (int i = m - 1; i >= 0; --i) {
    const long long f = factorial(i);
    const int pick = static_cast<int>(rank / f);
    rank %= f;
    line.push_back(pool[pick]);
    pool.erase(pool.begin() + pick);
  }
  return Permutation::from_one_line(line);
}

}  // namespace immw
