#pragma once

// Algebraic Mukai lattice Z + Z.H + Z of a surface with Pic = Z.H, H.H = 2d,
// and the identification Pic(X^[n]) = v^perp spanned by H^[n] and B.

#include <cstdint>
#include <optional>
#include <type_traits>
#include <ostream>
#include <string>
#include <variant>

#include "movcone/arith.hpp"
#include "movcone/errors.hpp"

namespace movcone {

/// A class (r, m.H, s) in the algebraic Mukai lattice.
struct MukaiVector {
  Integer r;
  Integer m;
  Integer s;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return {a.r + b.r, a.m + b.m, a.s + b.s};
  }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return {a.r - b.r, a.m - b.m, a.s - b.s};
  }
  friend MukaiVector operator-(const MukaiVector& a) { return {-a.r, -a.m, -a.s}; }
  friend MukaiVector operator*(const Integer& k, const MukaiVector& a) {
    return {k * a.r, k * a.m, k * a.s};
  }

  std::string str() const {
    return "(" + r.get_str() + "," + m.get_str() + "," + s.get_str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const MukaiVector& a) { return os << a.str(); }
};

/// The degree of the polarisation. K3 degrees are even and d = H.H / 2.
class Degree {
 public:
  static Degree k3(std::int64_t h2) {
    require(h2 > 0 && h2 % 2 == 0, "K3 degree H.H must be a positive even integer, got " +
                                       std::to_string(h2));
    return Degree(h2);
  }
  static Degree general(std::int64_t h2) {
    require(h2 > 0, "degree H.H must be positive, got " + std::to_string(h2));
    return Degree(h2);
  }

  std::int64_t h2() const { return h2_; }
  /// Half-degree d; only meaningful for even degrees.
  std::int64_t d() const { return h2_ / 2; }
  bool is_even() const { return h2_ % 2 == 0; }

 private:
  explicit Degree(std::int64_t h2) : h2_(h2) {}
  std::int64_t h2_;
};

/// (a, D, b).(c, D', d) = D.D' - a.d - c.b with D.D' = 2d.m.m'.
inline Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b, const Integer& d) {
  return 2 * d * a.m * b.m - a.r * b.s - b.r * a.s;
}

inline Integer self_pairing(const MukaiVector& a, const Integer& d) { return mukai_pairing(a, a, d); }

struct HilbertClasses {
  MukaiVector v;        // Mukai vector of the ideal sheaf of n points
  MukaiVector h_class;  // H^[n]
  MukaiVector b_class;  // B, half the exceptional divisor of Hilbert-Chow
};

inline HilbertClasses hilbert_classes(std::int64_t n) {
  require(n >= 2, "Hilbert scheme length n must be >= 2, got " + std::to_string(n));
  return {MukaiVector{1, 0, Integer(-(n - 1))}, MukaiVector{0, 1, 0},
          MukaiVector{1, 0, Integer(n - 1)}};
}

/// A ray alpha.H^[n] + beta.B in Pic(X^[n]) (x) Q.
///
/// Stored coprime with alpha >= 0, and beta = 1 when alpha = 0, so that a
/// ray and its negative compare equal.
class DivisorRay {
 public:
  static DivisorRay normalized(Integer alpha, Integer beta) {
    if (sgn(alpha) == 0 && sgn(beta) == 0) throw InvalidInput("zero divisor has no ray");
    Integer g = gcd_of(alpha, beta);
    alpha /= g;
    beta /= g;
    if (sgn(alpha) < 0 || (sgn(alpha) == 0 && sgn(beta) < 0)) {
      alpha = -alpha;
      beta = -beta;
    }
    return DivisorRay(std::move(alpha), std::move(beta));
  }

  /// The ray H^[n] - t.B.
  static DivisorRay from_slope(const Rational& t) {
    return normalized(t.get_den(), -t.get_num());
  }

  const Integer& alpha() const { return alpha_; }
  const Integer& beta() const { return beta_; }

  /// t with ray = H^[n] - t.B; empty for the pure B direction.
  std::optional<Rational> slope() const {
    if (sgn(alpha_) == 0) return std::nullopt;
    return make_rational(-beta_, alpha_);
  }

  MukaiVector as_class(std::int64_t n) const {
    return MukaiVector{beta_, alpha_, beta_ * Integer(n - 1)};
  }

  friend bool operator==(const DivisorRay&, const DivisorRay&) = default;

 private:
  DivisorRay(Integer alpha, Integer beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  Integer alpha_;
  Integer beta_;
};

/// Both orthogonality conditions vanish identically: no ray is cut out.
struct Degenerate {
  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};

using WallRay = std::variant<DivisorRay, Degenerate>;

/// The ray v^perp cap a^perp inside Pic(X^[n]).
///
/// With D = alpha.H^[n] + beta.B = (beta, alpha, beta(n-1)) we get
/// D.v = 0 identically and D.a = 2d.m.alpha - beta(s + r(n-1)).
inline WallRay wall_ray_from_class(const MukaiVector& a, std::int64_t n, std::int64_t d) {
  require(n >= 2, "n must be >= 2");
  require(d >= 1, "half-degree d must be >= 1");
  Integer alpha = a.s + a.r * Integer(n - 1);
  Integer beta = 2 * Integer(d) * a.m;
  if (sgn(alpha) == 0 && sgn(beta) == 0) return Degenerate{};
  return DivisorRay::normalized(std::move(alpha), std::move(beta));
}

}  // namespace movcone
