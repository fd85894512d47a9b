#include <colorgames/lp.hpp>

#include <stdexcept>

namespace colorgames {

void LinearSystem::add(std::vector<Rational> coeffs, Relation relation,
                       Rational rhs) {
  if (coeffs.size() != variables_)
    throw std::invalid_argument("constraint has " +
                                std::to_string(coeffs.size()) +
                                " coefficients, system has " +
                                std::to_string(variables_) + " variables");
  constraints_.push_back(Constraint{std::move(coeffs), relation, std::move(rhs)});
}

void LinearSystem::add_nonnegativity() {
  constraints_.reserve(constraints_.size() + variables_);
  for (std::size_t j = 0; j < variables_; ++j) {
    std::vector<Rational> row(variables_);
    row[j] = 1;
    add(std::move(row), Relation::ge, 0);
  }
}

bool LinearSystem::satisfied_by(std::span<const Rational> assignment) const {
  if (assignment.size() != variables_) return false;
  Rational lhs;
  for (const auto& c : constraints_) {
    lhs = 0;
    for (std::size_t j = 0; j < variables_; ++j)
      if (c.coeffs[j] != 0) lhs += c.coeffs[j] * assignment[j];
    switch (c.relation) {
      case Relation::eq: if (lhs != c.rhs) return false; break;
      case Relation::ge: if (lhs < c.rhs) return false; break;
      case Relation::le: if (lhs > c.rhs) return false; break;
    }
  }
  return true;
}

namespace {

// Dense phase-1 tableau. Column layout: structural columns (one per
// nonnegative variable, two per free variable), then one slack per
// inequality row, then the right-hand side. Artificial variables are never
// stored as columns: once an artificial leaves the basis it cannot re-enter.
class Phase1Tableau {
 public:
  explicit Phase1Tableau(const LinearSystem& system) : system_(system) {
    const std::size_t n = system.variables();
    auto constraints = system.constraints();

    // A single-variable row c*x (>=|=|<=) r that forces x >= t with t >= 0
    // lets x be a nonnegative column. Rows forcing exactly x >= 0 are then
    // redundant and dropped.
    std::vector<bool> nonneg(n, false);
    std::vector<bool> drop(constraints.size(), false);
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const auto& c = constraints[i];
      std::size_t var = n;
      int nonzeros = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (c.coeffs[j] != 0) {
          var = j;
          ++nonzeros;
        }
      if (nonzeros != 1) continue;
      const int s = sgn(c.coeffs[var]);
      const bool lower = c.relation == Relation::eq ||
                         (c.relation == Relation::ge && s > 0) ||
                         (c.relation == Relation::le && s < 0);
      if (!lower) continue;
      // Bound is rhs / coeff; sign of bound = sign(rhs) * s.
      const int bound_sign = sgn(c.rhs) * s;
      if (bound_sign >= 0) nonneg[var] = true;
      if (bound_sign == 0 && c.relation != Relation::eq) drop[i] = true;
    }

    column_of_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      column_of_[j] = structural_++;
      if (!nonneg[j]) {
        negative_part_.push_back({j, structural_});
        ++structural_;
      }
    }

    std::size_t slacks = 0;
    for (std::size_t i = 0; i < constraints.size(); ++i)
      if (!drop[i] && constraints[i].relation != Relation::eq) ++slacks;
    cols_ = structural_ + slacks;

    std::size_t next_slack = structural_;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      if (drop[i]) continue;
      const auto& c = constraints[i];
      std::vector<Rational> row(cols_ + 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (c.coeffs[j] == 0) continue;
        row[column_of_[j]] = c.coeffs[j];
      }
      for (auto [var, col] : negative_part_)
        if (c.coeffs[var] != 0) row[col] = -c.coeffs[var];
      std::size_t slack = cols_;
      if (c.relation == Relation::ge) row[slack = next_slack++] = -1;
      if (c.relation == Relation::le) row[slack = next_slack++] = 1;
      row[cols_] = c.rhs;
      if (row[cols_] < 0)
        for (auto& x : row) x = -x;

      if (slack != cols_ && row[slack] == 1) {
        basis_.push_back(slack);
      } else {
        basis_.push_back(artificial(rows_.size()));
      }
      rows_.push_back(std::move(row));
    }

    objective_.assign(cols_ + 1, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (is_artificial(basis_[i]))
        for (std::size_t j = 0; j <= cols_; ++j)
          if (rows_[i][j] != 0) objective_[j] -= rows_[i][j];
  }

  // Minimises the sum of artificials. Returns true iff it reaches zero.
  bool run() {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      if (entering == cols_) break;

      std::size_t leaving = rows_.size();
      Rational best;
      Rational ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][entering]) <= 0) continue;
        ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase 1 is bounded below by zero, so an improving column always has
      // a positive entry in some row.
      if (leaving == rows_.size())
        throw std::logic_error("phase-1 simplex found an unbounded ray");
      pivot(leaving, entering);
    }
    return objective_[cols_] == 0;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> column_value(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (!is_artificial(basis_[i])) column_value[basis_[i]] = rows_[i][cols_];
    std::vector<Rational> x(system_.variables());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = column_value[column_of_[j]];
    for (auto [var, col] : negative_part_) x[var] -= column_value[col];
    return x;
  }

 private:
  std::size_t artificial(std::size_t row) const { return cols_ + 1 + row; }
  bool is_artificial(std::size_t var) const { return var > cols_; }

  void pivot(std::size_t r, std::size_t s) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[s];
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nonzero_.push_back(j);
      }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[s]) == 0) return;
      factor_ = row[s];
      for (std::size_t j : nonzero_) {
        product_ = factor_ * prow[j];
        row[j] -= product_;
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(objective_);
    basis_[r] = s;
  }

  const LinearSystem& system_;
  std::vector<std::size_t> column_of_;
  std::vector<std::pair<std::size_t, std::size_t>> negative_part_;
  std::size_t structural_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> nonzero_;
  Rational factor_;
  Rational product_;
};

}  // namespace

FeasibilityResult solve_feasibility(const LinearSystem& system) {
  Phase1Tableau tableau(system);
  if (!tableau.run()) return {};
  auto x = tableau.solution();
  if (!system.satisfied_by(x))
    throw std::logic_error("simplex produced an assignment that fails re-check");
  return {std::move(x)};
}

std::vector<Integer> clear_denominators(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const auto& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                       v.get_den_mpz_t());
  std::vector<Integer> scaled;
  scaled.reserve(values.size());
  for (const auto& v : values) scaled.push_back(v.get_num() * (lcm / v.get_den()));
  return scaled;
}

std::vector<Integer> integer_scale(std::span<const Rational> assignment,
                                   const LinearSystem& system) {
  int inhomogeneous = 0;
  for (const auto& c : system.constraints())
    if (c.rhs != 0) ++inhomogeneous;
  if (inhomogeneous > 1)
    throw std::logic_error("integer_scale needs a homogeneous system with at "
                           "most one normalization row");
  if (!system.satisfied_by(assignment))
    throw std::logic_error("integer_scale given an infeasible assignment");
  bool positive = false;
  for (const auto& v : assignment) {
    if (v < 0) throw std::logic_error("integer_scale given a negative entry");
    positive = positive || v > 0;
  }
  if (!positive) throw std::logic_error("integer_scale given an all-zero vector");
  return clear_denominators(assignment);
}

}  // namespace colorgames
