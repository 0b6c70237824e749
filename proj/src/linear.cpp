#include "sharpmap/linear.hpp"

#include <optional>

namespace sharpmap::linear {

std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, col)) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

// Dense simplex tableau: constraint rows with the right-hand side stored
// in the last column, one basic variable per row.
class Tableau {
 public:
  Tableau(RationalMatrix t, std::vector<std::size_t> basis)
      : t_(std::move(t)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t vars() const { return t_.cols() - 1; }
  const RationalMatrix& matrix() const { return t_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t ncols = t_.cols();
    Rational inv = 1 / t_(row, col);
    for (std::size_t j = 0; j < ncols; ++j) t_(row, j) *= inv;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == row || sgn(t_(i, col)) == 0) continue;
      Rational f = t_(i, col);
      for (std::size_t j = 0; j < ncols; ++j) {
        if (sgn(t_(row, j)) != 0) t_(i, j) -= f * t_(row, j);
      }
    }
    basis_[row] = col;
  }

  // Maximises cost . x over columns [0, allowed). Returns false if unbounded.
  bool maximize(const std::vector<Rational>& cost, std::size_t allowed) {
    const std::size_t rhs = vars();
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) {
          if (sgn(t_(i, j)) != 0) reduced -= cost[basis_[i]] * t_(i, j);
        }
        if (sgn(reduced) > 0) entering = j;
      }
      if (!entering) return true;
      const std::size_t col = *entering;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(t_(i, col)) <= 0) continue;
        Rational ratio = t_(i, rhs) / t_(i, col);
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, col);
    }
  }

  void drop_row(std::size_t row) {
    RationalMatrix smaller(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == row) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) smaller(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(smaller);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  Rational value_of(std::size_t var) const {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basis_[i] == var) return t_(i, vars());
    }
    return Rational(0);
  }

 private:
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

PositiveSolution max_min_positive(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error("right-hand side has wrong length");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // columns: w_0..w_{n-1} (x = w + t), t, u (slack of t <= 1), artificials
  const std::size_t t_col = n;
  const std::size_t u_col = n + 1;
  const std::size_t structural = n + 2;
  const std::size_t rows = m + 1;
  const std::size_t vars = structural + rows;

  RationalMatrix t(rows, vars + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational row_sum(0);
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = a(i, j);
      row_sum += a(i, j);
    }
    t(i, t_col) = row_sum;
    t(i, vars) = b[i];
  }
  t(m, t_col) = 1;
  t(m, u_col) = 1;
  t(m, vars) = 1;
  for (std::size_t i = 0; i < rows; ++i) {
    if (sgn(t(i, vars)) < 0) {
      for (std::size_t j = 0; j <= vars; ++j) t(i, j) = -t(i, j);
    }
    t(i, structural + i) = 1;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = structural + i;
  Tableau tab(std::move(t), std::move(basis));

  PositiveSolution result;
  {
    RationalMatrix copy(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) copy(i, j) = a(i, j);
    result.freedom = n - rank(std::move(copy));
  }

  // phase 1: drive the artificials to zero
  std::vector<Rational> phase1(vars, Rational(0));
  for (std::size_t i = 0; i < rows; ++i) phase1[structural + i] = -1;
  tab.maximize(phase1, vars);
  Rational infeasibility(0);
  for (std::size_t i = 0; i < rows; ++i) infeasibility += tab.value_of(structural + i);
  if (sgn(infeasibility) != 0) return result;

  // pivot remaining (zero-level) artificials out, dropping redundant rows
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < structural) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < structural && !col; ++j) {
      if (sgn(tab.matrix()(i, j)) != 0) col = j;
    }
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  // phase 2: maximise t over structural columns only
  std::vector<Rational> phase2(vars, Rational(0));
  phase2[t_col] = 1;
  if (!tab.maximize(phase2, structural)) {
    throw Error("internal error: bounded program reported unbounded");
  }
  Rational tval = tab.value_of(t_col);
  result.min_entry = tval;
  result.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) result.x[j] = tab.value_of(j) + tval;
  result.feasible = sgn(tval) > 0;
  return result;
}

}  // namespace sharpmap::linear
