#include "rcx/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace rcx {

LinearConstraint make_le(std::vector<Rat> coeffs, Rat rhs) {
  return LinearConstraint{std::move(coeffs), Relation::LessEq, std::move(rhs)};
}
LinearConstraint make_ge(std::vector<Rat> coeffs, Rat rhs) {
  return LinearConstraint{std::move(coeffs), Relation::GreaterEq, std::move(rhs)};
}
LinearConstraint make_eq(std::vector<Rat> coeffs, Rat rhs) {
  return LinearConstraint{std::move(coeffs), Relation::Equal, std::move(rhs)};
}

namespace {

// Dense rational simplex tableau over the standard form A y = b, y >= 0,
// b >= 0, kept basis-solved (basic columns are unit columns). Bland's rule
// is used for both the entering and the leaving choice, so the method
// terminates on every input.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
      : a_(std::move(a)), b_(std::move(b)) {
    rows_ = a_.size();
    cols_ = rows_ ? a_[0].size() : 0;
    // Normalize right-hand sides to be nonnegative.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (b_[i] < 0) {
        b_[i] = -b_[i];
        for (auto& v : a_[i]) v = -v;
      }
    }
    structural_end_ = cols_;
    basis_.assign(rows_, -1);
  }

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_; }

  // Adds one artificial column per row that has no basic column yet and
  // minimizes their sum. Returns true when the system is feasible.
  bool phase1() {
    // Reuse a column as the initial basic variable where one exists: a unit
    // column whose row is otherwise untouched. Cheap scan, not required for
    // correctness.
    std::vector<char> row_done(rows_, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      int unit_row = -1;
      bool ok = true;
      for (std::size_t i = 0; i < rows_ && ok; ++i) {
        if (a_[i][j] == 0) continue;
        if (a_[i][j] == 1 && unit_row == -1 && !row_done[i]) {
          unit_row = static_cast<int>(i);
        } else {
          ok = false;
        }
      }
      if (ok && unit_row >= 0) {
        basis_[unit_row] = static_cast<int>(j);
        row_done[unit_row] = 1;
      }
    }
    artificial_begin_ = cols_;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= 0) continue;
      for (std::size_t r = 0; r < rows_; ++r) a_[r].push_back(Rat(r == i ? 1 : 0));
      basis_[i] = static_cast<int>(cols_);
      ++cols_;
    }

    // Phase-1 objective: minimize the sum of artificial variables.
    std::vector<Rat> cost(cols_, Rat(0));
    for (std::size_t j = artificial_begin_; j < cols_; ++j) cost[j] = 1;
    run(cost, /*allow_artificial=*/true);

    Rat value(0);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= static_cast<int>(artificial_begin_)) value += b_[i];
    }
    if (value != 0) return false;
    drive_out_artificials();
    return true;
  }

  // Minimizes cost over the feasible region reached by phase1().
  // Returns false when the objective is unbounded below.
  bool phase2(const std::vector<Rat>& structural_cost) {
    std::vector<Rat> cost(cols_, Rat(0));
    for (std::size_t j = 0; j < structural_cost.size() && j < artificial_begin_; ++j) {
      cost[j] = structural_cost[j];
    }
    return run(cost, /*allow_artificial=*/false);
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> y(structural_end_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] >= 0 && basis_[i] < static_cast<int>(structural_end_)) {
        y[basis_[i]] = b_[i];
      }
    }
    return y;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rat piv = a_[row][col];
    assert(piv != 0);
    for (auto& v : a_[row]) v /= piv;
    b_[row] /= piv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || a_[i][col] == 0) continue;
      const Rat factor = a_[i][col];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[row][j] != 0) a_[i][j] -= factor * a_[row][j];
      }
      b_[i] -= factor * b_[row];
    }
    basis_[row] = static_cast<int>(col);
  }

  // Returns false on an unbounded objective.
  bool run(std::vector<Rat> cost, bool allow_artificial) {
    // Reduce the cost row against the current basis.
    for (std::size_t i = 0; i < rows_; ++i) {
      const int bj = basis_[i];
      if (bj < 0 || cost[bj] == 0) continue;
      const Rat factor = cost[bj];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[i][j] != 0) cost[j] -= factor * a_[i][j];
      }
    }
    const std::size_t limit = allow_artificial ? cols_ : artificial_begin_;
    for (;;) {
      // Bland: entering column is the smallest index with negative reduced cost.
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;

      // Leaving row: minimum ratio, ties broken by smallest basic index.
      std::size_t leave = rows_;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = b_[i] / a_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;  // unbounded direction

      const Rat factor = cost[enter];
      pivot(leave, enter);
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a_[leave][j] != 0) cost[j] -= factor * a_[leave][j];
      }
    }
  }

  // After a zero-value phase 1, make sure no artificial variable stays in
  // the basis: pivot it out, or drop the row when it has become redundant.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_;) {
      if (basis_[i] < static_cast<int>(artificial_begin_)) {
        ++i;
        continue;
      }
      std::size_t col = artificial_begin_;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (a_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col == artificial_begin_) {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --rows_;
      } else {
        pivot(i, col);  // degenerate pivot, b_[i] == 0
        ++i;
      }
    }
  }

  std::vector<std::vector<Rat>> a_;
  std::vector<Rat> b_;
  std::vector<int> basis_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t structural_end_ = 0;
  std::size_t artificial_begin_ = 0;
};

struct StandardForm {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  int dim = 0;  // free variables; column layout: x+ (dim), x- (dim), slacks
};

StandardForm to_standard(const std::vector<LinearConstraint>& constraints, int dim) {
  for (const auto& c : constraints) {
    if (static_cast<int>(c.coeffs.size()) != dim) {
      throw std::invalid_argument("linear constraint dimension mismatch");
    }
  }
  std::size_t slacks = 0;
  for (const auto& c : constraints) {
    if (c.rel != Relation::Equal) ++slacks;
  }
  StandardForm sf;
  sf.dim = dim;
  const std::size_t cols = 2 * static_cast<std::size_t>(dim) + slacks;
  std::size_t slack_at = 2 * static_cast<std::size_t>(dim);
  for (const auto& c : constraints) {
    std::vector<Rat> row(cols, Rat(0));
    for (int j = 0; j < dim; ++j) {
      row[j] = c.coeffs[j];
      row[dim + j] = -c.coeffs[j];
    }
    if (c.rel == Relation::LessEq) {
      row[slack_at++] = 1;
    } else if (c.rel == Relation::GreaterEq) {
      row[slack_at++] = -1;
    }
    sf.a.push_back(std::move(row));
    sf.b.push_back(c.rhs);
  }
  return sf;
}

RatPoint extract_point(const std::vector<Rat>& y, int dim) {
  RatPoint x(dim);
  for (int j = 0; j < dim; ++j) x[j] = y[j] - y[dim + j];
  return x;
}

}  // namespace

LpFeasibility lp_feasible(const std::vector<LinearConstraint>& constraints, int dim) {
  if (dim < 0) throw std::invalid_argument("lp_feasible: negative dimension");
  if (constraints.empty()) return {true, RatPoint(dim, Rat(0))};
  StandardForm sf = to_standard(constraints, dim);
  Tableau t(std::move(sf.a), std::move(sf.b));
  LpFeasibility result;
  if (!t.phase1()) return result;
  result.feasible = true;
  result.witness = extract_point(t.solution(), dim);
  return result;
}

LpSolution lp_optimize(const std::vector<LinearConstraint>& constraints, int dim,
                       const std::vector<Rat>& objective, LpSense sense) {
  if (static_cast<int>(objective.size()) != dim) {
    throw std::invalid_argument("objective dimension mismatch");
  }
  if (constraints.empty()) {
    LpSolution out;
    bool zero = true;
    for (const auto& c : objective) {
      if (c != 0) zero = false;
    }
    out.status = zero ? LpStatus::Optimal : LpStatus::Unbounded;
    out.point = RatPoint(dim, Rat(0));
    out.value = 0;
    return out;
  }
  StandardForm sf = to_standard(constraints, dim);
  Tableau t(std::move(sf.a), std::move(sf.b));
  LpSolution out;
  if (!t.phase1()) {
    out.status = LpStatus::Infeasible;
    return out;
  }
  // Costs on the split variables; minimize either the objective or its negation.
  std::vector<Rat> cost(2 * static_cast<std::size_t>(dim), Rat(0));
  for (int j = 0; j < dim; ++j) {
    Rat c = objective[j];
    if (sense == LpSense::Maximize) c = -c;
    cost[j] = c;
    cost[dim + j] = -c;
  }
  if (!t.phase2(cost)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  out.status = LpStatus::Optimal;
  out.point = extract_point(t.solution(), dim);
  Rat value(0);
  for (int j = 0; j < dim; ++j) value += objective[j] * out.point[j];
  out.value = value;
  return out;
}

namespace detail {

std::optional<std::vector<Rat>> feasible_nonneg(std::vector<std::vector<Rat>> a,
                                                std::vector<Rat> b) {
  if (a.size() != b.size()) throw std::invalid_argument("feasible_nonneg: shape mismatch");
  Tableau t(std::move(a), std::move(b));
  if (!t.phase1()) return std::nullopt;
  return t.solution();
}

}  // namespace detail

}  // namespace rcx
