#pragma once

// Movable cone and flopping walls of X^[n] for a K3 surface with
// Pic = Z.H, H.H = 2d. Rays are written H^[n] - t.B; t = 0 is the
// Hilbert-Chow side and t = mu the other boundary of Mov.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "movcone/arith.hpp"
#include "movcone/errors.hpp"
#include "movcone/lattice.hpp"
#include "movcone/pell.hpp"

namespace movcone {

enum class BoundaryCase { SquareRatio, TwoTermPell, FilteredPell };

inline std::string to_string(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::SquareRatio: return "SquareRatio";
    case BoundaryCase::TwoTermPell: return "TwoTermPell";
    case BoundaryCase::FilteredPell: return "FilteredPell";
  }
  return "?";
}

/// 1-based case number in the order the cases are tried.
inline int case_number(BoundaryCase c) { return static_cast<int>(c) + 1; }

/// k/h = sqrt(d/(n-1)) in lowest terms.
struct SquareRatioWitness {
  Integer k;
  Integer h;
  friend bool operator==(const SquareRatioWitness&, const SquareRatioWitness&) = default;
};

using BoundaryWitness = std::variant<SquareRatioWitness, PellSolution>;

struct MovableCone {
  std::int64_t n;
  std::int64_t d;
  Rational mu;
  BoundaryCase case_tag;
  BoundaryWitness witness;
};

/// The non-trivial boundary ray H^[n] - mu.B of Mov(X^[n]).
///
/// Cases, tried in order:
///   1. d(n-1) a square:           mu = k/h = sqrt(d/(n-1))
///   2. (n-1)x^2 - d y^2 = 1:       mu = d y / (x (n-1)), x minimal
///   3. x^2 - d(n-1) y^2 = 1,
///      (n-1) | x + 1:              mu = d y / x, y/x minimal
inline MovableCone movable_boundary(std::int64_t n, std::int64_t d) {
  require(n >= 2, "n must be >= 2, got " + std::to_string(n));
  require(d >= 1, "half-degree d must be >= 1, got " + std::to_string(d));
  const Integer nm1 = n - 1;
  const Integer dd = d;
  const Integer product = dd * nm1;

  if (is_perfect_square(product)) {
    // d/(n-1) = product/(n-1)^2
    Rational ratio = make_rational(isqrt(product), nm1);
    return {n, d, ratio, BoundaryCase::SquareRatio,
            SquareRatioWitness{ratio.get_num(), ratio.get_den()}};
  }
  if (auto sol = solve_two_term(nm1, dd)) {
    Rational mu = make_rational(dd * sol->y(), sol->x() * nm1);
    return {n, d, mu, BoundaryCase::TwoTermPell, *sol};
  }
  if (auto sol = first_with_divisibility(product, nm1)) {
    Rational mu = make_rational(dd * sol->y(), sol->x());
    return {n, d, mu, BoundaryCase::FilteredPell, *sol};
  }
  throw ExhaustedCases("no boundary case applies for n=" + std::to_string(n) +
                       ", d=" + std::to_string(d));
}

struct EnumerationCaps {
  std::int64_t m_max = 8;
  /// The heuristic default was cut down to kMaxDefaultM.
  bool clamped = false;
};

inline constexpr std::int64_t kMinDefaultM = 8;
inline constexpr std::int64_t kMaxDefaultM = 4096;

/// max(8, 4 x1), x1 the boundary witness (k for the square case), clamped to
/// kMaxDefaultM since Pell witnesses can have dozens of digits.
inline EnumerationCaps default_caps(const MovableCone& cone) {
  Integer x1 = std::visit(
      [](const auto& w) -> Integer {
        if constexpr (std::is_same_v<std::decay_t<decltype(w)>, PellSolution>) {
          return w.x();
        } else {
          return w.k;
        }
      },
      cone.witness);
  Integer wanted = 4 * x1;
  if (wanted < kMinDefaultM) wanted = kMinDefaultM;
  if (wanted > kMaxDefaultM) return {kMaxDefaultM, true};
  return {to_int64(wanted), false};
}

struct Wall {
  Rational slope;
  MukaiVector witness;
};

struct WallSet {
  MovableCone cone;
  std::vector<Wall> walls;                       // strictly increasing slopes in (0, mu)
  std::vector<MukaiVector> boundary_witnesses;   // classes cutting out t = mu
  EnumerationCaps caps;
  /// A wall first appeared in the last quarter of 1..m_max.
  bool cap_warning = false;
};

namespace detail {

inline constexpr std::size_t kMaxBoundaryWitnesses = 8;

/// A class a = (r, m, s) with m >= 1, a.v = k, s = r(n-1) - k, together with
/// the slope t of v^perp cap a^perp.
struct Candidate {
  MukaiVector a;
  Integer k;
  Rational slope;
};

/// Visits every a with m in [1, m_max], a.v = k in [k_lo, k_hi],
/// a.a >= -2c (c in {0, 1}) and wall slope 0 < t <= mu.
///
/// With s = r(n-1) - k:  a.a = 2dm^2 - 2r(r(n-1) - k), and the ray slope is
/// t = -2dm / (2r(n-1) - k). Positivity forces 2r(n-1) < k and t <= mu = p/q
/// gives (k - 2r(n-1)) p >= 2dmq. So r runs from the smaller root of
/// (n-1)r^2 - kr - (dm^2 + c) up to floor((kp - 2dmq) / (2(n-1)p)).
inline void for_each_class(std::int64_t n, std::int64_t d, const Rational& mu,
                           std::int64_t m_max, std::int64_t k_lo, std::int64_t k_hi,
                           int pairing_floor_half,
                           const std::function<void(const Candidate&)>& visit) {
  const Integer nm1 = n - 1;
  const Integer dd = d;
  const Integer p = mu.get_num();
  const Integer q = mu.get_den();
  if (sgn(p) <= 0) return;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const Integer mm = m;
    const Integer c = dd * mm * mm + pairing_floor_half;
    for (std::int64_t kk = k_lo; kk <= k_hi; ++kk) {
      const Integer k = kk;
      auto quadratic = [&](const Integer& r) -> Integer { return nm1 * r * r - k * r - c; };
      const Integer disc = k * k + 4 * nm1 * c;
      Integer r = floor_div(k - ceil_sqrt(disc), 2 * nm1) - 1;
      while (quadratic(r) > 0) ++r;
      const Integer r_hi = floor_div(k * p - 2 * dd * mm * q, 2 * nm1 * p);
      for (; r <= r_hi; ++r) {
        if (quadratic(r) > 0) break;
        Integer s = r * nm1 - k;
        Integer den = 2 * r * nm1 - k;
        Rational t = make_rational(-2 * dd * mm, den);
        visit(Candidate{MukaiVector{r, mm, std::move(s)}, k, std::move(t)});
      }
    }
  }
}

/// Lexicographic (|m|, |r|).
inline bool smaller_witness(const MukaiVector& a, const MukaiVector& b) {
  const int by_m = cmp(Integer(abs(a.m)), Integer(abs(b.m)));
  if (by_m != 0) return by_m < 0;
  return cmp(Integer(abs(a.r)), Integer(abs(b.r))) < 0;
}

inline bool is_primitive(const MukaiVector& a) {
  return gcd_of(gcd_of(a.r, a.m), a.s) == 1;
}

/// Sign choice with a.v >= 0.
inline MukaiVector with_nonnegative_k(const MukaiVector& a, const Integer& k) {
  return sgn(k) < 0 ? -a : a;
}

inline EnumerationCaps resolve_caps(const MovableCone& cone,
                                    const std::optional<EnumerationCaps>& caps) {
  EnumerationCaps out = caps.value_or(default_caps(cone));
  require(out.m_max >= 1, "m_max must be >= 1");
  return out;
}

}  // namespace detail

/// Interior walls of Mov(X^[n]): rays v^perp cap a^perp with a.a >= -2 and
/// 0 <= a.v <= n-1 strictly between t = 0 and t = mu.
///
/// Classes are taken with m >= 1; a and -a cut out the same ray, so a.v runs
/// over -(n-1)..(n-1) and the stored witness is the sign with a.v >= 0.
inline WallSet enumerate_walls(std::int64_t n, std::int64_t d,
                               std::optional<EnumerationCaps> caps = std::nullopt) {
  MovableCone cone = movable_boundary(n, d);
  WallSet out{cone, {}, {}, detail::resolve_caps(cone, caps), false};
  const std::int64_t warn_from = out.caps.m_max - out.caps.m_max / 4 + 1;

  std::map<Rational, MukaiVector> by_slope;
  std::vector<MukaiVector> boundary;
  detail::for_each_class(
      n, d, cone.mu, out.caps.m_max, -(n - 1), n - 1, 1, [&](const detail::Candidate& cand) {
        MukaiVector witness = detail::with_nonnegative_k(cand.a, cand.k);
        if (cand.slope == cone.mu) {
          if (boundary.size() < detail::kMaxBoundaryWitnesses && detail::is_primitive(witness) &&
              std::find(boundary.begin(), boundary.end(), witness) == boundary.end()) {
            boundary.push_back(std::move(witness));
          }
          return;
        }
        auto [it, inserted] = by_slope.try_emplace(cand.slope, witness);
        if (inserted) {
          if (cand.a.m >= warn_from && out.caps.m_max >= 4) out.cap_warning = true;
        } else if (detail::smaller_witness(witness, it->second)) {
          it->second = std::move(witness);
        }
      });

  out.walls.reserve(by_slope.size());
  for (auto& [slope, witness] : by_slope) out.walls.push_back(Wall{slope, std::move(witness)});
  out.boundary_witnesses = std::move(boundary);
  return out;
}

/// A spherical class s (s.s = -2) with 1 <= s.v <= n-1 whose wall meets
/// the closed region 0 < t <= mu. For n = 3 this is s.v in {1, 2}.
inline std::optional<MukaiVector> exists_spherical_obstruction(
    std::int64_t n, std::int64_t d, std::optional<EnumerationCaps> caps = std::nullopt) {
  MovableCone cone = movable_boundary(n, d);
  EnumerationCaps used = detail::resolve_caps(cone, caps);
  const Integer dd = d;
  std::optional<MukaiVector> found;
  detail::for_each_class(n, d, cone.mu, used.m_max, -(n - 1), n - 1, 1,
                         [&](const detail::Candidate& cand) {
                           if (found || sgn(cand.k) == 0) return;
                           if (self_pairing(cand.a, dd) == -2) {
                             found = detail::with_nonnegative_k(cand.a, cand.k);
                           }
                         });
  return found;
}

struct PositiveDecomposition {
  MukaiVector a;  // a.v <= b.v
  MukaiVector b;
};

/// v = a + b with a.a, b.b >= 0 and a.v, b.v > 0, restricted to walls meeting
/// 0 < t <= mu. One summand has m >= 1; its a.v lies in 1..2(n-1)-1.
inline std::optional<PositiveDecomposition> exists_positive_decomposition(
    std::int64_t n, std::int64_t d, std::optional<EnumerationCaps> caps = std::nullopt) {
  MovableCone cone = movable_boundary(n, d);
  EnumerationCaps used = detail::resolve_caps(cone, caps);
  const Integer dd = d;
  const MukaiVector v = hilbert_classes(n).v;
  std::optional<PositiveDecomposition> found;
  detail::for_each_class(n, d, cone.mu, used.m_max, 1, 2 * (n - 1) - 1, 0,
                         [&](const detail::Candidate& cand) {
                           if (found) return;
                           MukaiVector rest = v - cand.a;
                           if (sgn(self_pairing(rest, dd)) < 0) return;
                           Integer rest_k = mukai_pairing(rest, v, dd);
                           if (rest_k < cand.k) {
                             found = PositiveDecomposition{rest, cand.a};
                           } else {
                             found = PositiveDecomposition{cand.a, rest};
                           }
                         });
  return found;
}

struct Table1Row {
  std::int64_t h2;
  std::vector<Rational> walls;
  Rational mu;
  bool cap_warning = false;
};

/// Walls and movable boundary of X^[3] per degree H.H.
inline std::vector<Table1Row> table1(const std::vector<std::int64_t>& degrees,
                                     std::optional<EnumerationCaps> caps = std::nullopt) {
  std::vector<Table1Row> rows;
  rows.reserve(degrees.size());
  for (std::int64_t h2 : degrees) {
    const Degree degree = Degree::k3(h2);
    WallSet set = enumerate_walls(3, degree.d(), caps);
    Table1Row row{h2, {}, set.cone.mu, set.cap_warning};
    for (const Wall& w : set.walls) row.walls.push_back(w.slope);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline const std::vector<std::int64_t>& table1_reference_degrees() {
  static const std::vector<std::int64_t> degrees{2, 4, 6, 8, 10, 12, 14, 16, 24, 36, 64, 100};
  return degrees;
}

/// alpha_m with H^[3] - (alpha_m / 2) B the boundary of Mov(X^[3]).
inline Rational szemberg_alpha(std::int64_t d) { return 2 * movable_boundary(3, d).mu; }

}  // namespace movcone
