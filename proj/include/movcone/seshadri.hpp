#pragma once

// Seshadri constants of surfaces with Pic = Z.H: known values, lower bounds
// from nef divisors on Hilbert schemes, the comparison with floor(sqrt(H.H)),
// and the link between epsilon(H) and walls of Mov(X^[3]).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "movcone/arith.hpp"
#include "movcone/cones.hpp"
#include "movcone/errors.hpp"
#include "movcone/pell.hpp"

namespace movcone {

enum class SurfaceKind { K3, GeneralType, Enriques };

inline std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::K3: return "K3";
    case SurfaceKind::GeneralType: return "GeneralType";
    case SurfaceKind::Enriques: return "Enriques";
  }
  return "?";
}

/// K_X = a.H and b minimal with b.H effective.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::K3;
  std::int64_t h2 = 2;
  std::int64_t a = 0;
  std::int64_t b = 1;

  static SurfaceSpec k3(std::int64_t h2) { return {SurfaceKind::K3, h2, 0, 1}; }

  void validate() const {
    require(h2 > 0, "H.H must be positive");
    require(a >= 0, "canonical multiple a must be >= 0");
    require(b >= 1, "effective multiple b must be >= 1");
    if (kind == SurfaceKind::K3) {
      require(a == 0, "a K3 surface has trivial canonical class");
      require(h2 % 2 == 0, "K3 degrees are even");
    }
    if (kind == SurfaceKind::GeneralType) require(a >= 1, "general type needs a >= 1");
  }
};

enum class SeshadriStatus { Known, Conjectural, Unknown };

inline std::string to_string(SeshadriStatus s) {
  switch (s) {
    case SeshadriStatus::Known: return "Known";
    case SeshadriStatus::Conjectural: return "Conjectural";
    case SeshadriStatus::Unknown: return "Unknown";
  }
  return "?";
}

struct SeshadriRecord {
  Rational value;  // 0 when Unknown
  SeshadriStatus status = SeshadriStatus::Unknown;
  std::string source;
};

/// Values of epsilon(H) recorded in the literature for very general surfaces.
inline SeshadriRecord known_epsilon(const SurfaceSpec& spec,
                                    std::optional<std::int64_t> phi = std::nullopt) {
  spec.validate();
  if (spec.kind == SurfaceKind::Enriques) {
    if (!phi) throw MissingPhi("Enriques surfaces need the Cossec value phi(H)");
    require(*phi >= 1, "phi(H) must be positive");
    require(*phi * *phi <= spec.h2, "phi(H)^2 cannot exceed H.H");
    return {Rational(*phi), SeshadriStatus::Known, "Galati-Knutsen (Enriques, eps = phi)"};
  }
  if (spec.kind != SurfaceKind::K3) return {Rational(0), SeshadriStatus::Unknown, ""};

  switch (spec.h2) {
    case 2: return {Rational(1), SeshadriStatus::Known, "Bauer et al. survey"};
    case 4: return {Rational(2), SeshadriStatus::Known, "Bauer (quartics)"};
    case 6: return {Rational(2), SeshadriStatus::Known, "Galati-Knutsen"};
    case 8: return {make_rational(8, 3), SeshadriStatus::Known, "Galati-Knutsen"};
    case 14: return {make_rational(14, 4), SeshadriStatus::Conjectural, "Galati-Knutsen (evidence)"};
    case 24: return {make_rational(24, 5), SeshadriStatus::Conjectural, "Galati-Knutsen (evidence)"};
    default: break;
  }
  const Integer h2 = spec.h2;
  if (is_perfect_square(h2)) return {Rational(isqrt(h2)), SeshadriStatus::Known, "Knutsen"};
  return {Rational(0), SeshadriStatus::Unknown, ""};
}

inline bool feasible_n(std::int64_t h2, std::int64_t n) {
  return n >= 1 && Integer(n) * n + n >= h2;
}

/// 2 H^2 n / ((a+1) H^2 + n(n+1) + 2), valid whenever n^2 + n >= H^2.
inline Rational bound_at_n(std::int64_t h2, std::int64_t a, std::int64_t n) {
  require(h2 >= 1, "H.H must be positive");
  require(a >= 0, "canonical multiple a must be >= 0");
  if (!feasible_n(h2, n)) {
    throw InfeasibleN("n=" + std::to_string(n) + " violates n^2 + n >= H.H = " +
                      std::to_string(h2));
  }
  const Integer hh = h2, nn = n;
  return make_rational(2 * hh * nn, (a + 1) * hh + nn * (nn + 1) + 2);
}

struct BoundResult {
  std::int64_t n;  // the index used (alpha in the corollaries)
  Rational value;
};

/// K3 bound at alpha = ceil(sqrt(H^2 + 2)).
inline BoundResult bound_k3(std::int64_t h2) {
  require(h2 > 0 && h2 % 2 == 0, "K3 degree must be positive and even");
  const std::int64_t alpha = to_int64(ceil_sqrt(Integer(h2) + 2));
  return {alpha, bound_at_n(h2, 0, alpha)};
}

/// 2 b H^2 alpha / ((ab + b^2) H^2 + alpha(alpha+1) + 2),
/// alpha = ceil(sqrt((ab + b^2) H^2 + 2)).
inline BoundResult bound_general_type(std::int64_t h2, std::int64_t a, std::int64_t b) {
  require(h2 >= 1, "H.H must be positive");
  require(a >= 0 && b >= 1, "need a >= 0 and b >= 1");
  const Integer hh = h2, aa = a, bb = b;
  const Integer weight = (aa * bb + bb * bb) * hh;
  const Integer alpha = ceil_sqrt(weight + 2);
  return {to_int64(alpha), make_rational(2 * bb * hh * alpha, weight + alpha * (alpha + 1) + 2)};
}

/// Minimal n with n^2 + n >= H^2.
inline std::int64_t minimal_feasible_n(std::int64_t h2) {
  std::int64_t n = to_int64(isqrt(Integer(h2)));
  if (n < 1) n = 1;
  while (n > 1 && feasible_n(h2, n - 1)) --n;
  while (!feasible_n(h2, n)) ++n;
  return n;
}

/// bound_at_n maximised over n_min..ceil(sqrt((a+1)H^2 + 2)) + 1; ties go to the smaller n.
inline BoundResult best_bound(std::int64_t h2, std::int64_t a = 0) {
  require(h2 >= 1, "H.H must be positive");
  require(a >= 0, "canonical multiple a must be >= 0");
  const std::int64_t lo = minimal_feasible_n(h2);
  const std::int64_t hi =
      std::max(lo, to_int64(ceil_sqrt(Integer(a + 1) * h2 + 2)) + 1);
  BoundResult best{lo, bound_at_n(h2, a, lo)};
  for (std::int64_t n = lo + 1; n <= hi; ++n) {
    Rational value = bound_at_n(h2, a, n);
    if (value > best.value) best = {n, std::move(value)};
  }
  return best;
}

/// Knutsen's floor(sqrt(H^2)), used uniformly (exceptional cases are not modelled).
inline std::int64_t knutsen_bound(std::int64_t h2) {
  require(h2 >= 1, "H.H must be positive");
  return to_int64(isqrt(Integer(h2)));
}

struct Table2Row {
  std::int64_t h2;
  std::int64_t alpha;
  Rational bound;
  std::int64_t knutsen;
  bool better;
};

inline Table2Row table2_row(std::int64_t h2) {
  BoundResult k3 = bound_k3(h2);
  std::int64_t floor_root = knutsen_bound(h2);
  bool better = k3.value > floor_root;
  return {h2, k3.n, std::move(k3.value), floor_root, better};
}

inline std::vector<Table2Row> table2(const std::vector<std::int64_t>& degrees) {
  std::vector<Table2Row> rows;
  rows.reserve(degrees.size());
  for (std::int64_t h2 : degrees) rows.push_back(table2_row(h2));
  return rows;
}

inline const std::vector<std::int64_t>& table2_reference_degrees() {
  static const std::vector<std::int64_t> degrees{8,  14, 22, 24, 32, 34, 58,
                                                 60, 62, 74, 76, 78, 80};
  return degrees;
}

/// Even degrees in [4, max_h2]; squares of even integers are skipped unless asked.
inline std::vector<std::int64_t> scan_degrees(std::int64_t max_h2, bool include_squares) {
  std::vector<std::int64_t> out;
  for (std::int64_t h2 = 4; h2 <= max_h2; h2 += 2) {
    if (!include_squares && is_perfect_square(Integer(h2))) continue;
    out.push_back(h2);
  }
  return out;
}

struct ScanResult {
  std::int64_t better = 0;
  std::int64_t total = 0;
  /// better / total; 0/0 is reported as an empty scan.
  std::optional<Rational> fraction() const {
    if (total == 0) return std::nullopt;
    return make_rational(better, total);
  }
};

namespace detail {

inline bool k3_bound_beats_knutsen(std::int64_t h2) {
  // 2 H^2 alpha / (H^2 + alpha(alpha+1) + 2) > k  <=>  2 H^2 alpha > k (...)
  const Integer hh = h2;
  const Integer alpha = ceil_sqrt(hh + 2);
  const Integer k = isqrt(hh);
  return 2 * hh * alpha > k * (hh + alpha * (alpha + 1) + 2);
}

}  // namespace detail

/// Counts degrees where the closed-form K3 bound strictly beats floor(sqrt(H^2)).
/// Shards are contiguous degree blocks; counts are summed, so the result does
/// not depend on `jobs`.
inline ScanResult scan_comparison(std::int64_t max_h2, bool include_squares = false,
                                  unsigned jobs = 1) {
  require(max_h2 >= 4, "scan needs max H.H >= 4");
  const std::vector<std::int64_t> degrees = scan_degrees(max_h2, include_squares);
  jobs = std::max(1u, jobs);
  const std::size_t shard = (degrees.size() + jobs - 1) / jobs;
  std::vector<std::int64_t> counts(jobs, 0);
  auto work = [&](unsigned j) {
    const std::size_t lo = std::min(degrees.size(), j * shard);
    const std::size_t hi = std::min(degrees.size(), lo + shard);
    for (std::size_t i = lo; i < hi; ++i) counts[j] += detail::k3_bound_beats_knutsen(degrees[i]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  }
  ScanResult result;
  result.total = static_cast<std::int64_t>(degrees.size());
  for (std::int64_t c : counts) result.better += c;
  return result;
}

enum class ObservationVerdict { OnInteriorWall, OnBoundary, NotOnWall, EpsilonUnknown };

inline std::string to_string(ObservationVerdict v) {
  switch (v) {
    case ObservationVerdict::OnInteriorWall: return "OnInteriorWall";
    case ObservationVerdict::OnBoundary: return "OnBoundary";
    case ObservationVerdict::NotOnWall: return "NotOnWall";
    case ObservationVerdict::EpsilonUnknown: return "EpsilonUnknown";
  }
  return "?";
}

struct ObservationResult {
  ObservationVerdict verdict = ObservationVerdict::EpsilonUnknown;
  SeshadriRecord epsilon;
  std::optional<Rational> t;   // epsilon / 2
  std::optional<Rational> mu;  // boundary of Mov(X^[3])
  std::optional<MukaiVector> wall_witness;
};

/// Where H^[3] - (epsilon/2) B sits in Mov(X^[3]).
inline ObservationResult check_observation(std::int64_t h2,
                                           std::optional<EnumerationCaps> caps = std::nullopt) {
  const Degree degree = Degree::k3(h2);
  ObservationResult out;
  out.epsilon = known_epsilon(SurfaceSpec::k3(h2));
  if (out.epsilon.status == SeshadriStatus::Unknown) return out;

  const Rational t = out.epsilon.value / 2;
  out.t = t;
  WallSet walls = enumerate_walls(3, degree.d(), caps);
  out.mu = walls.cone.mu;
  if (t == walls.cone.mu) {
    out.verdict = ObservationVerdict::OnBoundary;
    return out;
  }
  for (const Wall& wall : walls.walls) {
    if (wall.slope == t) {
      out.verdict = ObservationVerdict::OnInteriorWall;
      out.wall_witness = wall.witness;
      return out;
    }
  }
  out.verdict = ObservationVerdict::NotOnWall;
  return out;
}

/// (H^[3] - t B).f_C(P^1) = C.H - t (2 + p_a) for the trigonal curve map f_C.
inline Rational curve_wall_pairing(const Integer& ch, const Integer& pa, const Rational& t) {
  require(ch >= 1, "C.H must be positive");
  require(pa >= 0, "arithmetic genus must be >= 0");
  return Rational(ch) - t * Rational(2 + pa);
}

/// (q/p) H^2 for the fundamental solution of p^2 - H^2 q^2 = 1.
inline Rational szemberg_conjecture_bound(std::int64_t h2) {
  require(h2 >= 1, "H.H must be positive");
  const Integer hh = h2;
  if (is_perfect_square(hh)) throw PerfectSquare("H.H = " + hh.get_str() + " is a perfect square");
  PellSolution sol = pell_fundamental(hh);
  return make_rational(sol.y() * hh, sol.x());
}

}  // namespace movcone
