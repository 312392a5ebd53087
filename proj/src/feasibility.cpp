#include <stdexcept>

#include "r2m/exact_linalg.hpp"

namespace r2m {

namespace {

// Phase-one tableau over [y | artificials | rhs] with one objective row. The
// objective row holds reduced costs for "minimize the sum of artificials";
// artificial columns never re-enter once they leave the basis.
class PhaseOne {
 public:
  PhaseOne(RationalMatrix body, std::vector<Rational> rhs)
      : rows_(body.rows()), vars_(body.cols()), t_(rows_ + 1, vars_ + rows_ + 1), basis_(rows_) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = rhs[i] < 0;
      for (std::size_t j = 0; j < vars_; ++j) t_(i, j) = flip ? -body(i, j) : body(i, j);
      t_(i, vars_ + i) = 1;
      t_(i, rhs_col()) = flip ? -rhs[i] : rhs[i];
      basis_[i] = vars_ + i;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < vars_; ++j) t_(rows_, j) += t_(i, j);
      t_(rows_, rhs_col()) += t_(i, rhs_col());
    }
  }

  // Runs to optimality; returns the basic solution when the optimum is zero.
  std::optional<std::vector<Rational>> solve() {
    for (;;) {
      std::size_t enter = vars_;
      for (std::size_t j = 0; j < vars_; ++j)
        if (t_(rows_, j) > 0) {
          enter = j;
          break;
        }
      if (enter == vars_) break;

      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, rhs_col()) / t_(i, enter);
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      // The phase-one objective is bounded below by zero.
      if (leave == rows_) throw std::logic_error("feasible_nonneg: unbounded phase-one ray");
      pivot(leave, enter);
    }
    if (t_(rows_, rhs_col()) != 0) return std::nullopt;

    std::vector<Rational> y(vars_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < vars_) y[basis_[i]] = t_(i, rhs_col());
    return y;
  }

 private:
  std::size_t rhs_col() const { return vars_ + rows_; }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j <= rhs_col(); ++j) t_(r, j) *= inv;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      const Rational f = t_(i, c);
      for (std::size_t j = 0; j <= rhs_col(); ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t vars_;
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> feasible_nonneg(const RationalMatrix& a, const std::vector<Rational>& b,
                                                     std::span<const std::size_t> nonneg_indices) {
  if (a.rows() != b.size()) throw std::invalid_argument("feasible_nonneg: A.rows() != b.size()");
  std::vector<bool> nonneg(a.cols(), false);
  for (auto idx : nonneg_indices) {
    if (idx >= a.cols()) throw std::invalid_argument("feasible_nonneg: nonnegativity index out of range");
    nonneg[idx] = true;
  }

  // Free columns split as x = x_plus - x_minus; column j maps to y[first[j]]
  // and, when free, y[first[j] + 1] carries the negative part.
  std::vector<std::size_t> first(a.cols());
  std::size_t vars = 0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    first[j] = vars;
    vars += nonneg[j] ? 1 : 2;
  }
  RationalMatrix body(a.rows(), vars);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      body(i, first[j]) = a(i, j);
      if (!nonneg[j]) body(i, first[j] + 1) = -a(i, j);
    }

  auto y = PhaseOne(std::move(body), b).solve();
  if (!y) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) x[j] = nonneg[j] ? (*y)[first[j]] : (*y)[first[j]] - (*y)[first[j] + 1];
  return x;
}

}  // namespace r2m
