#include "immw/tableau.hpp"

#include <algorithm>
#include <functional>

#include "immw/error.hpp"

namespace immw {

namespace {

void check_shape(const Partition& shape, const std::vector<std::vector<int>>& rows,
                 const char* who) {
  if (static_cast<int>(rows.size()) != shape.depth())
    throw SizeMismatchError(std::string(who) + ": row count does not match shape");
  for (int i = 0; i < shape.depth(); ++i)
    if (static_cast<int>(rows[i].size()) != shape.part(i))
      throw SizeMismatchError(std::string(who) + ": row length does not match shape");
}

}  // namespace

StandardTableau::StandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_shape(shape_, rows_, "StandardTableau");
  std::vector<bool> seen(shape_.size() + 1, false);
  for (int i = 0; i < shape_.depth(); ++i) {
    for (int j = 0; j < shape_.part(i); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > shape_.size() || seen[v])
        throw DomainError("StandardTableau: entries must be a permutation of 1..m");
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v)
        throw DomainError("StandardTableau: rows must strictly increase");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw DomainError("StandardTableau: columns must strictly increase");
    }
  }
}

std::pair<int, int> StandardTableau::cell_of(int r) const {
  for (int i = 0; i < shape_.depth(); ++i)
    for (int j = 0; j < shape_.part(i); ++j)
      if (rows_[i][j] == r) return {i, j};
  throw DomainError("StandardTableau: value not present");
}

std::vector<int> StandardTableau::row_word() const {
  std::vector<int> word;
  word.reserve(shape_.size());
  for (const auto& row : rows_) word.insert(word.end(), row.begin(), row.end());
  return word;
}

SemistandardTableau::SemistandardTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  check_shape(shape_, rows_, "SemistandardTableau");
  for (int i = 0; i < shape_.depth(); ++i) {
    for (int j = 0; j < shape_.part(i); ++j) {
      const int v = rows_[i][j];
      if (v < 1) throw DomainError("SemistandardTableau: entries must be positive");
      if (j > 0 && rows_[i][j - 1] > v)
        throw DomainError("SemistandardTableau: rows must weakly increase");
      if (i > 0 && rows_[i - 1][j] >= v)
        throw DomainError("SemistandardTableau: columns must strictly increase");
    }
  }
}

int SemistandardTableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int v : row) m = std::max(m, v);
  return m;
}

WeakComposition SemistandardTableau::weight(int n) const {
  if (max_entry() > n) throw DomainError("SemistandardTableau: entry exceeds n");
  std::vector<int> mult(n, 0);
  for (const auto& row : rows_)
    for (int v : row) ++mult[v - 1];
  return WeakComposition(std::move(mult));
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != i + 1)
      throw SizeMismatchError("GTPattern: row i must have i entries");
  for (int i = 2; i <= n(); ++i) {
    for (int j = 1; j <= i - 1; ++j) {
      if (!(at(i, j) >= at(i - 1, j) && at(i - 1, j) >= at(i, j + 1)))
        throw DomainError("GTPattern: interlacing violated");
    }
  }
  for (const auto& row : rows_)
    for (int v : row)
      if (v < 0) throw DomainError("GTPattern: entries must be nonnegative");
}

int GTPattern::at(int i, int j) const {
  if (i < 1 || i > n() || j < 1) throw DomainError("GTPattern: index out of range");
  if (j > i) return 0;
  return rows_[i - 1][j - 1];
}

WeakComposition GTPattern::weight() const {
  std::vector<int> mu(n(), 0);
  long long prev = 0;
  for (int i = 1; i <= n(); ++i) {
    long long sum = 0;
    for (int j = 1; j <= i; ++j) sum += at(i, j);
    mu[i - 1] = static_cast<int>(sum - prev);
    prev = sum;
  }
  return WeakComposition(std::move(mu));
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
  if (shape.size() < 1) throw DomainError("enumerate_syt: empty shape");
  std::vector<std::vector<int>> rows(shape.depth());
  for (int i = 0; i < shape.depth(); ++i) rows[i].assign(shape.part(i), 0);
  std::vector<int> filled(shape.depth(), 0);  // cells used per row
  std::vector<StandardTableau> out;

  std::function<void(int)> place = [&](int value) {
    if (value > shape.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int i = 0; i < shape.depth(); ++i) {
      const int j = filled[i];
      if (j >= shape.part(i)) continue;
      if (i > 0 && filled[i - 1] <= j) continue;  // column predecessor missing
      rows[i][j] = value;
      ++filled[i];
      place(value + 1);
      --filled[i];
    }
  };
  place(1);

  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
    return a.row_word() < b.row_word();
  });
  return out;
}

std::vector<SemistandardTableau> enumerate_ssyt(const Partition& shape,
                                                const WeakComposition& mu) {
  if (shape.size() != mu.total())
    throw SizeMismatchError("enumerate_ssyt: |shape| != Σμ");
  const int n = mu.length();
  std::vector<SemistandardTableau> out;
  if (shape.size() == 0) {
    out.emplace_back(shape, std::vector<std::vector<int>>{});
    return out;
  }
  if (shape.depth() > n) return out;

  std::vector<std::vector<int>> rows(shape.depth());
  for (int i = 0; i < shape.depth(); ++i) rows[i].assign(shape.part(i), 0);
  std::vector<int> remaining(mu.entries());

  // Cells in row-major order; candidate values are bounded below by the row
  // and column neighbours already placed.
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.depth(); ++i)
    for (int j = 0; j < shape.part(i); ++j) cells.emplace_back(i, j);

  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == cells.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    auto [i, j] = cells[c];
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0) lo = std::max(lo, rows[i - 1][j] + 1);
    for (int v = lo; v <= n; ++v) {
      if (remaining[v - 1] == 0) continue;
      rows[i][j] = v;
      --remaining[v - 1];
      fill(c + 1);
      ++remaining[v - 1];
    }
    rows[i][j] = 0;
  };
  fill(0);
  return out;
}

long long kostka(const Partition& shape, const WeakComposition& mu) {
  return static_cast<long long>(enumerate_ssyt(shape, mu).size());
}

GTPattern gt_from_ssyt(const SemistandardTableau& tab, int n) {
  if (tab.max_entry() > n) throw DomainError("gt_from_ssyt: entry exceeds n");
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1].assign(i, 0);
    for (int j = 1; j <= i; ++j) {
      int count = 0;
      if (j <= tab.shape().depth())
        for (int v : tab.rows()[j - 1])
          if (v <= i) ++count;
      rows[i - 1][j - 1] = count;
    }
  }
  return GTPattern(std::move(rows));
}

SemistandardTableau ssyt_from_gt(const GTPattern& pattern) {
  const int n = pattern.n();
  std::vector<int> shape_parts;
  for (int j = 1; j <= n; ++j)
    if (pattern.at(n, j) > 0) shape_parts.push_back(pattern.at(n, j));
  Partition shape(shape_parts);

  std::vector<std::vector<int>> rows(shape.depth());
  for (int j = 1; j <= shape.depth(); ++j) {
    // Row j gains (λ_{ij} − λ_{i−1,j}) copies of value i.
    for (int i = j; i <= n; ++i) {
      const int prev = (i - 1 >= j) ? pattern.at(i - 1, j) : 0;
      for (int r = prev; r < pattern.at(i, j); ++r) rows[j - 1].push_back(i);
    }
  }
  return SemistandardTableau(std::move(shape), std::move(rows));
}

ThetaResult theta_mu(const StandardTableau& tab, const WeakComposition& mu) {
  if (tab.size() != mu.total()) throw SizeMismatchError("theta_mu: |shape| != Σμ");
  const MultisetIndex multiset = MultisetIndex::from_weight(mu);
  ThetaResult result;
  result.filling.resize(tab.shape().depth());
  for (int i = 0; i < tab.shape().depth(); ++i) {
    result.filling[i].resize(tab.shape().part(i));
    for (int j = 0; j < tab.shape().part(i); ++j)
      result.filling[i][j] = multiset.index(tab.entry(i, j) - 1);
  }
  result.is_semistandard = true;
  for (int i = 0; i < tab.shape().depth() && result.is_semistandard; ++i) {
    for (int j = 0; j < tab.shape().part(i); ++j) {
      if (result.filling[i][j] > mu.length()) result.is_semistandard = false;
      if (j > 0 && result.filling[i][j - 1] > result.filling[i][j])
        result.is_semistandard = false;
      if (i > 0 && result.filling[i - 1][j] >= result.filling[i][j])
        result.is_semistandard = false;
    }
  }
  return result;
}

}  // namespace immw
