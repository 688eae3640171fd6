#pragma once

#include <optional>
#include <vector>

#include "opcalc/generalized.hpp"
#include "opcalc/operator_polynomial.hpp"

namespace opcalc {

// Linear constant-coefficient problem f(D) xi = forcing, optionally with
// classical initial values xi(0), xi'(0), ..., one per operator degree.
struct OdeProblem {
  OperatorPolynomial op;
  GeneralizedFunction forcing;
  Interval interval;
  std::optional<std::vector<Complex>> initial_values;
};

// f(D) applied to xi. The zero polynomial gives the zero class.
GeneralizedFunction apply_operator(const OperatorPolynomial& f,
                                   const GeneralizedFunction& xi);

// One solution of f(D) xi = omega, namely (1/f) * omega. Throws
// ZeroPolynomial when f == 0.
GeneralizedFunction particular_solution(const OperatorPolynomial& f,
                                        const GeneralizedFunction& omega);

// Basis of the solution space of f(D) xi = 0: the Borel sums of
// s^{j+1} / f for j = 0 .. deg f - 1. A nonzero constant operator has the
// trivial solution space and yields the empty list.
std::vector<GeneralizedFunction> homogeneous_basis(const OperatorPolynomial& f,
                                                   const Interval& interval);

// Pieces of an initial value solution; exposed so callers can inspect the
// boundary-matching polynomial r.
struct IvpParts {
  ChebFunction particular;    // continuous representative of (1/f) * forcing
  OperatorPolynomial r;       // degree <= deg f - 1
  ChebFunction homogeneous;   // Borel sum of s r / f
};

IvpParts solve_initial_value_parts(const OdeProblem& problem);

// The unique solution matching the initial values: particular + Borel sum
// of s r / f, with r found from a triangular coefficient match.
GeneralizedFunction solve_initial_value(const OdeProblem& problem);

// Residual check: f(D) xi equals omega as generalized functions.
bool satisfies(const OperatorPolynomial& f, const GeneralizedFunction& xi,
               const GeneralizedFunction& omega, double tolerance = tol::kResidual);

}  // namespace opcalc
