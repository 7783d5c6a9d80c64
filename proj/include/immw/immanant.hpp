#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "immw/characters.hpp"
#include "immw/matrix.hpp"
#include "immw/partition.hpp"
#include "immw/permutation.hpp"

namespace immw {

enum class ImmanantStrategy { naive, cycle_cached, parallel };

namespace detail {

// Cycle type of a one-line permutation as a class index into `table`.
inline int class_index(const std::vector<int>& line, const CharacterTable& table,
                       std::vector<bool>& seen_buf, std::vector<int>& len_buf) {
  const int m = static_cast<int>(line.size());
  std::fill(seen_buf.begin(), seen_buf.end(), false);
  len_buf.clear();
  for (int i = 0; i < m; ++i) {
    if (seen_buf[i]) continue;
    int len = 0;
    for (int j = i; !seen_buf[j]; j = line[j] - 1) {
      seen_buf[j] = true;
      ++len;
    }
    len_buf.push_back(len);
  }
  std::sort(len_buf.begin(), len_buf.end(), std::greater<>());
  const auto& classes = table.classes();
  for (std::size_t r = 0; r < classes.size(); ++r)
    if (classes[r].parts() == len_buf) return static_cast<int>(r);
  throw DomainError("class_index: cycle type not found");
}

// Σ over permutations of [start, stop) in lexicographic rank order of
// χ^λ(σ)·∏_i b_{σ(i),i}; the σ-major accumulation order is fixed so floating
// runs are reproducible.
template <class S>
S immanant_range(const DenseMatrix<S>& b, const std::vector<long long>& chi_by_class,
                 const CharacterTable& table, long long start, long long stop) {
  const int m = static_cast<int>(b.rows());
  std::vector<int> line = permutation_unrank(m, start).one_line();
  std::vector<bool> seen_buf(m);
  std::vector<int> len_buf;
  S total(0);
  for (long long r = start; r < stop; ++r) {
    const long long chi = chi_by_class[class_index(line, table, seen_buf, len_buf)];
    if (chi != 0) {
      S prod = ScalarTraits<S>::from_rational(Rational(chi));
      for (int i = 0; i < m; ++i) prod *= b(line[i] - 1, i);
      total += prod;
    }
    std::next_permutation(line.begin(), line.end());
  }
  return total;
}

}  // namespace detail

/// Σ over cycle types ρ of all diagonal products ∏_i b_{σ(i),i} with σ of
/// type ρ, indexed like `table.classes()`. One permutation sweep serves every
/// character of 𝔖_m.
template <class S>
std::vector<S> class_diagonal_sums(const DenseMatrix<S>& b, const CharacterTable& table) {
  if (b.rows() != b.cols()) throw SizeMismatchError("class_diagonal_sums: matrix not square");
  const int m = static_cast<int>(b.rows());
  if (m != table.m()) throw SizeMismatchError("class_diagonal_sums: table degree mismatch");
  std::vector<S> sums(table.classes().size(), S(0));
  std::vector<int> line(m);
  std::iota(line.begin(), line.end(), 1);
  std::vector<bool> seen_buf(m);
  std::vector<int> len_buf;
  do {
    S prod(1);
    for (int i = 0; i < m; ++i) prod *= b(line[i] - 1, i);
    sums[detail::class_index(line, table, seen_buf, len_buf)] += prod;
  } while (std::next_permutation(line.begin(), line.end()));
  return sums;
}

/// Imm_{χ^λ}(B) = Σ_σ χ^λ(σ) ∏_i b_{σ(i),i}.
template <class S>
S immanant(const DenseMatrix<S>& b, const Partition& shape,
           ImmanantStrategy strategy = ImmanantStrategy::cycle_cached, int workers = 0) {
  if (b.rows() != b.cols()) throw SizeMismatchError("immanant: matrix not square");
  const int m = static_cast<int>(b.rows());
  if (shape.size() != m) throw SizeMismatchError("immanant: |λ| != matrix size");
  if (m == 0) return S(1);
  if (m > 10) throw ResourceLimitError("immanant: matrix too large for permutation sum");

  switch (strategy) {
    case ImmanantStrategy::naive: {
      std::vector<int> line(m);
      std::iota(line.begin(), line.end(), 1);
      S total(0);
      do {
        const Permutation sigma = Permutation::from_one_line(line);
        const long long chi = mn_character(shape, cycle_type(sigma));
        if (chi != 0) {
          S prod = ScalarTraits<S>::from_rational(Rational(chi));
          for (int i = 0; i < m; ++i) prod *= b(line[i] - 1, i);
          total += prod;
        }
      } while (std::next_permutation(line.begin(), line.end()));
      return total;
    }

    case ImmanantStrategy::cycle_cached: {
      const CharacterTable& table = CharacterTable::cached(m);
      const auto sums = class_diagonal_sums(b, table);
      const int row = table.index_of(shape);
      S total(0);
      for (std::size_t r = 0; r < sums.size(); ++r) {
        const long long chi = table.value(row, static_cast<int>(r));
        if (chi != 0) total += ScalarTraits<S>::from_rational(Rational(chi)) * sums[r];
      }
      return total;
    }

    case ImmanantStrategy::parallel: {
      const CharacterTable& table = CharacterTable::cached(m);
      const int row = table.index_of(shape);
      std::vector<long long> chi_by_class(table.classes().size());
      for (std::size_t r = 0; r < chi_by_class.size(); ++r)
        chi_by_class[r] = table.value(row, static_cast<int>(r));

      // Chunk boundaries depend only on m, so results are identical for any
      // worker count; partials are reduced in chunk order.
      const long long total_perms = factorial(m);
      const long long chunk_size = 720;
      const long long chunk_count = (total_perms + chunk_size - 1) / chunk_size;
      std::vector<S> partial(chunk_count, S(0));

      long long thread_count = workers > 0 ? workers
                                           : static_cast<long long>(std::thread::hardware_concurrency());
      thread_count = std::max<long long>(1, std::min(thread_count, chunk_count));

      std::atomic<long long> next_chunk{0};
      auto drain = [&]() {
        for (;;) {
          const long long c = next_chunk.fetch_add(1);
          if (c >= chunk_count) break;
          const long long start = c * chunk_size;
          const long long stop = std::min(total_perms, start + chunk_size);
          partial[c] = detail::immanant_range(b, chi_by_class, table, start, stop);
        }
      };
      if (thread_count == 1) {
        drain();
      } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(drain);
        for (auto& th : pool) th.join();
      }

      S total(0);
      for (const S& p : partial) total += p;
      return total;
    }
  }
  throw DomainError("immanant: unknown strategy");
}

/// Imm_{χ^λ}(A_I), the immanant of the generalized principal submatrix.
template <class S>
S immanant_of_submatrix(const DenseMatrix<S>& a, const Partition& shape, const MultisetIndex& idx,
                        ImmanantStrategy strategy = ImmanantStrategy::cycle_cached) {
  if (shape.size() != idx.size())
    throw SizeMismatchError("immanant_of_submatrix: |λ| != |I|");
  return immanant(generalized_submatrix(a, idx), shape, strategy);
}

/// Imm for every λ ⊢ m from one permutation sweep.
template <class S>
std::map<Partition, S> immanants_all_shapes(const DenseMatrix<S>& b) {
  const int m = static_cast<int>(b.rows());
  const CharacterTable& table = CharacterTable::cached(m);
  const auto sums = class_diagonal_sums(b, table);
  std::map<Partition, S> out;
  for (std::size_t l = 0; l < table.partitions().size(); ++l) {
    S total(0);
    for (std::size_t r = 0; r < sums.size(); ++r) {
      const long long chi = table.value(static_cast<int>(l), static_cast<int>(r));
      if (chi != 0) total += ScalarTraits<S>::from_rational(Rational(chi)) * sums[r];
    }
    out.emplace(table.partitions()[l], std::move(total));
  }
  return out;
}

/// Determinant by fraction-free elimination (λ=(1^n) route is `immanant`).
template <class S>
S determinant(const DenseMatrix<S>& b) {
  return bareiss_determinant<S>(b);
}

/// Permanent, the λ=(n) immanant.
template <class S>
S permanent(const DenseMatrix<S>& b) {
  if (b.rows() != b.cols()) throw SizeMismatchError("permanent: matrix not square");
  if (b.rows() == 0) return S(1);
  return immanant(b, Partition(std::vector<int>{static_cast<int>(b.rows())}));
}

}  // namespace immw
