#pragma once

// Infimum Seshadri constants read off nef cones of nested Hilbert schemes
// X^[r,r+1], and comparisons against the Nagata value sqrt(H^2 / r).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <variant>

#include "movcone/arith.hpp"
#include "movcone/errors.hpp"

namespace movcone {

struct ProjectivePlane {};

/// F_e with ample H = aC + bF (C.C = -e, F a fibre).
struct Hirzebruch {
  std::int64_t e;
  std::int64_t a;
  std::int64_t b;
};

struct VeryGeneralK3 {
  std::int64_t h2;
};

using NestedSurface = std::variant<ProjectivePlane, Hirzebruch, VeryGeneralK3>;

inline void validate(const NestedSurface& surface) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Hirzebruch>) {
          require(s.e >= 1, "Hirzebruch index e must be positive");
          require(s.a > 0 && s.b > s.a * s.e, "aC + bF is ample iff a > 0 and b > a.e");
        } else if constexpr (std::is_same_v<T, VeryGeneralK3>) {
          require(s.h2 >= 2 && s.h2 % 2 == 0, "K3 degree must be even and >= 2");
        }
      },
      surface);
}

/// Closed forms, each only on the range where the nef cone is known:
///   P^2:            1/r                     (r >= 2)
///   F_e, aC + bF:   min(a, b - ae)/r        (r >= 2)
///   K3, H^2:        H^2 / (r + 1 + H^2/2)   (r >= H^2/2 + 1)
inline Rational eps_inf(const NestedSurface& surface, std::int64_t r) {
  validate(surface);
  return std::visit(
      [r](const auto& s) -> Rational {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ProjectivePlane>) {
          if (r < 2) throw OutOfRange("P^2 formula needs r >= 2");
          return make_rational(1, r);
        } else if constexpr (std::is_same_v<T, Hirzebruch>) {
          if (r < 2) throw OutOfRange("Hirzebruch formula needs r >= 2");
          return make_rational(std::min(s.a, s.b - s.a * s.e), r);
        } else {
          if (r < s.h2 / 2 + 1) {
            throw OutOfRange("K3 formula needs r >= H^2/2 + 1 = " + std::to_string(s.h2 / 2 + 1));
          }
          return make_rational(s.h2, r + 1 + s.h2 / 2);
        }
      },
      surface);
}

enum class NagataComparison { Below, Equal, Above };

inline std::string to_string(NagataComparison c) {
  switch (c) {
    case NagataComparison::Below: return "Below";
    case NagataComparison::Equal: return "Equal";
    case NagataComparison::Above: return "Above";
  }
  return "?";
}

/// candidate versus sqrt(H^2 / r), via candidate^2 r against H^2.
inline NagataComparison nagata_value_compare(std::int64_t h2, std::int64_t r,
                                             const Rational& candidate) {
  require(h2 >= 1 && r >= 1, "H.H and r must be positive");
  auto order = compare_with_sqrt(candidate, make_rational(h2, r));
  if (order < 0) return NagataComparison::Below;
  if (order > 0) return NagataComparison::Above;
  return NagataComparison::Equal;
}

/// C.H / sum(m_i) < sqrt(H^2 / r), i.e. (C.H)^2 r < H^2 (sum m_i)^2.
inline bool is_nagata_submaximal(std::int64_t ch, std::span<const std::int64_t> mults,
                                 std::int64_t h2, std::int64_t r) {
  require(ch >= 1, "C.H must be positive");
  require(h2 >= 1 && r >= 1, "H.H and r must be positive");
  require(static_cast<std::int64_t>(mults.size()) == r, "need exactly r multiplicities");
  Integer total = 0;
  for (std::int64_t m : mults) {
    require(m >= 1, "multiplicities must be >= 1");
    total += m;
  }
  const Integer c = ch;
  return c * c * r < Integer(h2) * total * total;
}

enum class MdsVerdict { Obstructed, NotObstructed };

inline std::string to_string(MdsVerdict v) {
  return v == MdsVerdict::Obstructed ? "Obstructed" : "NotObstructed";
}

struct MdsResult {
  MdsVerdict verdict = MdsVerdict::NotObstructed;
  /// The obstruction is conditional on epsilon(H, r) = sqrt(H^2 / r).
  bool assumes_nagata = false;
  /// P^2 with r = s^2 > 9: not a Mori dream space, unconditionally.
  bool p2_perfect_square = false;
};

/// X^[r,r+1] cannot be a Mori dream space when sqrt(H^2 / r) is irrational,
/// assuming the Nagata value is attained.
inline MdsResult mds_obstructed(std::int64_t h2, std::int64_t r, bool projective_plane = false) {
  require(h2 >= 1 && r >= 1, "H.H and r must be positive");
  MdsResult out;
  if (!is_perfect_square(Integer(h2) * r)) {
    out.verdict = MdsVerdict::Obstructed;
    out.assumes_nagata = true;
  }
  if (projective_plane && r > 9 && is_perfect_square(Integer(r))) out.p2_perfect_square = true;
  return out;
}

}  // namespace movcone
