#pragma once

// Solvers for the Pell-type equations behind the movable cone of X^[n]:
//
//   x^2 - D y^2 = 1        (fundamental unit and its powers)
//   A x^2 - B y^2 = 1      (two-term equation)
//   x^2 - D y^2 = 1, q | x + 1
//
// Everything is arbitrary precision.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "movcone/arith.hpp"
#include "movcone/errors.hpp"

namespace movcone {

/// A positive solution (x, y) of A x^2 - B y^2 = 1, verified on construction.
class PellSolution {
 public:
  static PellSolution checked(Integer x, Integer y, const Integer& a, const Integer& b) {
    if (sgn(x) <= 0 || sgn(y) <= 0 || a * x * x - b * y * y != 1) {
      throw std::logic_error("(" + x.get_str() + ", " + y.get_str() + ") does not solve " +
                             a.get_str() + "x^2 - " + b.get_str() + "y^2 = 1");
    }
    return PellSolution(std::move(x), std::move(y));
  }

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;

 private:
  PellSolution(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {}
  Integer x_;
  Integer y_;
};

namespace detail {

inline void require_pell_discriminant(const Integer& d) {
  if (d < 2) throw InvalidInput("Pell discriminant must be >= 2, got " + d.get_str());
  if (is_perfect_square(d)) throw PerfectSquare(d.get_str() + " is a perfect square");
}

}  // namespace detail

/// Minimal positive solution of x^2 - D y^2 = 1 from the continued fraction
/// of sqrt(D). Uses p_{k-1}^2 - D q_{k-1}^2 = (-1)^k Q_k, so the first k with
/// Q_k = 1 and k even yields the fundamental unit (one or two periods).
inline PellSolution pell_fundamental(const Integer& d) {
  detail::require_pell_discriminant(d);
  const Integer a0 = isqrt(d);
  Integer P = 0, Q = 1, a = a0;
  Integer p_prev = 1, p = a0;
  Integer q_prev = 0, q = 1;
  for (std::uint64_t k = 1;; ++k) {
    P = a * Q - P;
    Q = (d - P * P) / Q;
    if (Q == 1 && k % 2 == 0) break;
    a = (a0 + P) / Q;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return PellSolution::checked(p, q, 1, d);
}

/// x_{k+1} + y_{k+1} sqrt(D) = (x_1 + y_1 sqrt(D)) (x_k + y_k sqrt(D)).
inline PellSolution next_pell_solution(const PellSolution& unit, const PellSolution& current,
                                       const Integer& d) {
  Integer x = unit.x() * current.x() + d * unit.y() * current.y();
  Integer y = unit.x() * current.y() + unit.y() * current.x();
  return PellSolution::checked(std::move(x), std::move(y), 1, d);
}

/// The first `count` positive solutions of x^2 - D y^2 = 1, increasing in x.
inline std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count) {
  require(count >= 1, "count must be >= 1");
  const PellSolution unit = pell_fundamental(d);
  std::vector<PellSolution> out;
  out.reserve(count);
  out.push_back(unit);
  while (out.size() < count) out.push_back(next_pell_solution(unit, out.back(), d));
  return out;
}

/// Solution of A x^2 - B y^2 = 1 with minimal x > 0 and y > 0.
///
/// Any solution has x/y - sqrt(B/A) = 1 / (A y^2 (x/y + sqrt(B/A)))
/// < 1 / (2 sqrt(AB) y^2), so x/y is a convergent of (0 + sqrt(AB))/A once
/// AB > 1. Along that expansion A p_{k-1}^2 - B q_{k-1}^2 = (-1)^k Q_k, with
/// Q_k > 0 for every k since the convergents alternate around sqrt(B/A).
/// The states (P_k, Q_k, k mod 2) are eventually periodic; a repeated state
/// without a hit proves there is no solution.
///
/// If AB is a perfect square, (Ax - cy)(Ax + cy) = A with c^2 = AB forces
/// Ax <= (A+1)/2, which no x >= 1 satisfies.
inline std::optional<PellSolution> solve_two_term(const Integer& a, const Integer& b) {
  require(a >= 1 && b >= 1, "two-term Pell coefficients must be positive");
  const Integer n = a * b;
  if (is_perfect_square(n)) return std::nullopt;

  const Integer root = isqrt(n);
  Integer P = 0, Q = a;
  // (p, q) holds the convergent with index k - 1, starting from p_{-1}/q_{-1}.
  Integer p_prev = 0, p = 1;
  Integer q_prev = 1, q = 0;
  std::map<std::tuple<Integer, Integer, int>, std::uint64_t, std::less<>> seen;
  for (std::uint64_t k = 0;; ++k) {
    if (k > 0 && Q == 1 && k % 2 == 0) return PellSolution::checked(p, q, a, b);
    auto key = std::make_tuple(P, Q, static_cast<int>(k % 2));
    if (k > 0 && !seen.emplace(std::move(key), k).second) return std::nullopt;
    Integer digit = floor_div(P + root, Q);
    Integer p_next = digit * p + p_prev;
    Integer q_next = digit * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    P = digit * Q - P;
    Q = (n - P * P) / Q;
  }
}

inline constexpr std::uint64_t kDivisibilityScanCap = 1'000'000;

/// First solution of x^2 - D y^2 = 1 (in increasing x, hence increasing y/x)
/// with q | x + 1. The residues of (x_k, y_k) mod q are purely periodic since
/// the unit acts invertibly, so returning to (1, 0) mod q ends the search.
inline std::optional<PellSolution> first_with_divisibility(
    const Integer& d, const Integer& q, std::uint64_t max_iterations = kDivisibilityScanCap) {
  require(q >= 1, "divisibility modulus must be >= 1");
  const PellSolution unit = pell_fundamental(d);
  const Integer start_x = Integer(1) % q;
  const Integer start_y = 0;
  PellSolution current = unit;
  for (std::uint64_t k = 1; k <= max_iterations; ++k) {
    Integer x_mod = current.x() % q;
    Integer y_mod = current.y() % q;
    if ((current.x() + 1) % q == 0) return current;
    if (x_mod == start_x && y_mod == start_y) return std::nullopt;
    current = next_pell_solution(unit, current, d);
  }
  throw CapExceeded("no residue period found for D=" + d.get_str() + ", q=" + q.get_str() +
                    " within " + std::to_string(max_iterations) + " iterations");
}

}  // namespace movcone
