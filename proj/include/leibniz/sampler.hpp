#pragma once

#include "leibniz/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace leibniz {

using Rng = std::mt19937_64;

/// Small nonzero rational p/q with |p| <= 9, 1 <= q <= 5.
Scalar random_rational(Rng& rng);

/// Affine consequences of a polynomial system, solved and substituted until
/// none remain. Holds the solved variables as expressions in the rest.
class LinearClosure {
 public:
  explicit LinearClosure(std::vector<Poly> constraints);

  /// False when the system reduced to a nonzero constant.
  bool consistent() const { return consistent_; }
  /// Constraints that are still nonlinear after the closure.
  const std::vector<Poly>& remaining() const { return remaining_; }
  /// Solved variable -> expression in the unsolved ones.
  const std::map<std::string, Poly>& solved() const { return solved_; }

  /// Fixes one variable and re-closes.
  void assign(const std::string& name, const Scalar& value);
  /// Fixes several variables at once, then re-closes once.
  void assign(const std::map<std::string, Scalar>& values);
  Poly apply(const Poly& p) const;

 private:
  void close();
  void substitute_all(const std::map<std::string, Poly>& values);

  std::vector<Poly> remaining_;
  std::map<std::string, Poly> solved_;
  bool consistent_ = true;
};

struct SamplerOptions {
  /// Probability that a freely chosen variable is set to zero.
  double zero_probability = 0.25;
  /// Variables assigned first, as one batch, before any others.
  std::vector<std::string> priority;
};

/// Draws exact points of the zero set of a polynomial system by alternating
/// random assignments with linear closure. Every returned point satisfies all
/// constraints exactly; nullopt means the random branch was inconsistent.
std::optional<std::map<std::string, Scalar>> sample_zero_set(const std::vector<Poly>& constraints,
                                                             const std::vector<std::string>& variables,
                                                             Rng& rng, const SamplerOptions& options = {});

/// Same, starting from an already closed system; only the listed variables
/// and the closure's solved variables appear in the result.
std::optional<std::map<std::string, Scalar>> sample_zero_set(const LinearClosure& base,
                                                             const std::vector<std::string>& variables,
                                                             Rng& rng, const SamplerOptions& options = {});

/// Removes zero polynomials and duplicates up to a scalar factor; the result
/// is monic and sorted by text.
std::vector<Poly> distinct_up_to_scale(const std::vector<Poly>& polys);

}  // namespace leibniz
