#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jshapes/conformal.hpp"
#include "jshapes/curve.hpp"
#include "jshapes/scaled_complex.hpp"

namespace jshapes {

// Which coordinates z is given in: the original plane, or the frame shifted so
// that the translation point t sits at 0.
enum class Frame { kOriginal, kTranslated };

// Exponent beyond which a value is reported as ESCAPED_LARGE.
inline constexpr std::int64_t kExpCap = std::int64_t{1} << 30;

/// omega(z) = c^-n prod (z - r_k) and P(z) = z (omega(z) + 1), with roots r_k
/// sampled from the exterior map on the circle of radius 1 + epsilon.
struct ShapePolynomial {
  std::size_t n = 0;
  double epsilon = 0.0;
  Complex t;                  // translation point (original frame)
  Complex capacity;           // (1 + epsilon) times the map capacity
  std::vector<Complex> roots; // translated frame

  std::size_t degree() const { return n + 1; }
};

struct EpsilonOptions {
  int max_level = 20;          // schedule 2^-1 ... 2^-max_level
  std::size_t samples = 4096;
};

// Largest epsilon = 2^-j whose inflated curve lies strictly inside `annulus`
// (given in the original frame). Throws NO_EPSILON.
double select_epsilon(const ExteriorMap& map, const AnnulusSpec& annulus,
                      const EpsilonOptions& options = {});

// Roots phi((1 + epsilon) e^{2 pi i k / n}), k = 1..n. Throws DUPLICATE_ROOTS.
ShapePolynomial sample_roots(const ExteriorMap& map, double epsilon, std::size_t n);

// Checks the stored invariants (n matches, n >= 8, distinct roots, nonzero
// capacity, and roots strictly inside `annulus` when given).
void validate(const ShapePolynomial& poly, const AnnulusSpec* annulus = nullptr);

// Same polynomial expressed about a different translation point.
ShapePolynomial rebase(const ShapePolynomial& poly, Complex new_t);

ScaledComplex eval_omega(const ShapePolynomial& poly, const ScaledComplex& z);  // translated frame
ScaledComplex eval_omega(const ShapePolynomial& poly, Complex z, Frame frame);

struct Evaluation {
  ScaledComplex value;
  bool escaped_large = false;  // exponent above kExpCap

  Complex to_complex() const { return value.to_complex(); }
};

ScaledComplex eval_P(const ShapePolynomial& poly, const ScaledComplex& z);  // translated frame
Evaluation eval_P(const ShapePolynomial& poly, Complex z, Frame frame);

}  // namespace jshapes
