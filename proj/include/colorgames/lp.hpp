#pragma once

#include <colorgames/rational.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace colorgames {

enum class Relation { eq, ge, le };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::eq;
  Rational rhs;
};

// Linear constraints over `variables()` unknowns. Variables are free unless a
// constraint bounds them; nonnegativity is an ordinary `x_i >= 0` row.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t variables) : variables_(variables) {}

  std::size_t variables() const { return variables_; }
  std::span<const Constraint> constraints() const { return constraints_; }

  // Throws std::invalid_argument if the coefficient vector has the wrong
  // length.
  void add(std::vector<Rational> coeffs, Relation relation, Rational rhs);
  void add_nonnegativity();
  void reserve(std::size_t constraints) { constraints_.reserve(constraints); }

  bool satisfied_by(std::span<const Rational> assignment) const;

 private:
  std::size_t variables_;
  std::vector<Constraint> constraints_;
};

struct FeasibilityResult {
  // Present iff the system is feasible; satisfies every constraint exactly.
  std::optional<std::vector<Rational>> assignment;

  bool feasible() const { return assignment.has_value(); }
};

// Phase-1 simplex over exact rationals with Bland's rule. Always terminates.
FeasibilityResult solve_feasibility(const LinearSystem& system);

// Multiplies a feasible solution of a system that is homogeneous except for
// at most one normalization row by the LCM of its denominators. Throws
// std::logic_error when the preconditions do not hold.
std::vector<Integer> integer_scale(std::span<const Rational> assignment,
                                   const LinearSystem& system);

// LCM of the denominators times the vector; no other checks.
std::vector<Integer> clear_denominators(std::span<const Rational> values);

}  // namespace colorgames
