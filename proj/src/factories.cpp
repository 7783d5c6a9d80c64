#include "immw/factories.hpp"

namespace immw {

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

}  // namespace

std::optional<TnWitness> tn_violation(const DenseMatrix<Rational>& a) {
  if (a.rows() != a.cols()) throw SizeMismatchError("tn_violation: matrix not square");
  const int n = static_cast<int>(a.rows());
  if (n > 6) throw ResourceLimitError("tn_violation: minor enumeration limited to n <= 6");
  for (int k = 1; k <= n; ++k) {
    std::vector<int> rows(k);
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
      std::vector<int> cols(k);
      for (int i = 0; i < k; ++i) cols[i] = i;
      do {
        const Rational value = minor_of(a, rows, cols);
        if (value < Rational(0)) return TnWitness{rows, cols, value};
      } while (next_combination(cols, n));
    } while (next_combination(rows, n));
  }
  return std::nullopt;
}

}  // namespace immw
