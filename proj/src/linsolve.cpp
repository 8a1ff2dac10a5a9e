#include "linsolve.hpp"

#include <algorithm>

#include "error.hpp"

namespace noether {

namespace {

using ZRow = std::vector<Integer>;

// Clear denominators row by row; the solution set is unchanged.
std::vector<ZRow> to_integer_rows(const QMatrix& A, const std::vector<Rational>* b) {
  std::vector<ZRow> rows;
  rows.reserve(A.size());
  for (std::size_t r = 0; r < A.size(); ++r) {
    Integer lcm = 1;
    auto fold = [&](const Rational& q) {
      Integer den = q.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    };
    for (const auto& q : A[r]) fold(q);
    if (b) fold((*b)[r]);
    ZRow row;
    row.reserve(A[r].size() + (b ? 1 : 0));
    auto scaled = [&](const Rational& q) {
      Rational s = q * Rational(lcm);
      if (s.get_den() != 1) fail(ErrorKind::internal, "row scaling failed");
      return Integer(s.get_num());
    };
    for (const auto& q : A[r]) row.push_back(scaled(q));
    if (b) row.push_back(scaled((*b)[r]));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Fraction-free forward elimination (Bareiss). Returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<ZRow>& rows, std::size_t ncols_total) {
  std::vector<std::size_t> pivot_cols;
  Integer prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols_total && rank < rows.size(); ++col) {
    std::size_t pr = rank;
    while (pr < rows.size() && rows[pr][col] == 0) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[rank], rows[pr]);
    const Integer pivot = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Integer factor = rows[r][col];
      for (std::size_t c = col; c < ncols_total; ++c) {
        Integer v = rows[r][c] * pivot - factor * rows[rank][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        rows[r][c] = std::move(v);
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(col);
    ++rank;
  }
  return pivot_cols;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear(QMatrix A, std::vector<Rational> b,
                                                  std::size_t ncols) {
  if (A.size() != b.size()) fail(ErrorKind::internal, "solve_linear shape mismatch");
  for (const auto& row : A)
    if (row.size() != ncols) fail(ErrorKind::internal, "solve_linear shape mismatch");
  if (A.empty()) return std::vector<Rational>(ncols, Rational(0));

  std::vector<ZRow> rows = to_integer_rows(A, &b);
  const std::size_t width = ncols + 1;
  std::vector<std::size_t> pivots = eliminate(rows, width);

  // Inconsistent iff some pivot lands in the RHS column.
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;

  std::vector<Rational> x(ncols, Rational(0));
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t col = pivots[k];
    const ZRow& row = rows[k];
    Rational acc = Rational(row[ncols]);
    for (std::size_t c = col + 1; c < ncols; ++c) {
      if (row[c] == 0) continue;
      acc -= Rational(row[c]) * x[c];
    }
    x[col] = acc / Rational(row[col]);
  }
  return x;
}

std::size_t matrix_rank(QMatrix A) {
  if (A.empty()) return 0;
  std::vector<ZRow> rows = to_integer_rows(A, nullptr);
  return eliminate(rows, A[0].size()).size();
}

}  // namespace noether
