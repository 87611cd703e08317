#pragma once

#include <cstdint>
#include <string_view>

#include "sympspin/exact_matrix.hpp"
#include "sympspin/gaussian_rational.hpp"

namespace sympspin {

/// SplitMix64 generator. Fully specified bit-for-bit, so sampled data is identical
/// across compilers and standard libraries (unlike std::uniform_int_distribution).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Independent child stream; advances this generator by one step.
  SplitMix64 split() { return SplitMix64(next() ^ 0x9e3779b97f4a7c15ULL); }
  /// Child stream keyed by a label, without advancing this generator.
  SplitMix64 fork(std::string_view label) const;

  /// Uniform integer in [lo, hi], unbiased (rejection sampling).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  /// Rational p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(std::int64_t bound);
  /// Gaussian rational with independently sampled real and imaginary parts.
  GaussianRational gaussian_rational(std::int64_t bound);

 private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a, used to derive per-suite seeds from labels.
std::uint64_t stable_hash(std::string_view text);

/// Deterministic vector of real rationals with numerator and denominator magnitude <= bound.
/// Throws InvalidArgument when bound < 1.
ExactVector sample_rational_vector(std::size_t dim, std::uint64_t seed, std::int64_t bound);

}  // namespace sympspin
