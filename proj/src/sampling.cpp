#include "sympspin/sampling.hpp"

#include <limits>

#include "sympspin/errors.hpp"

namespace sympspin {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::fork(std::string_view label) const {
  SplitMix64 child(state_ ^ stable_hash(label));
  child.next();
  return child;
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational SplitMix64::rational(std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("rational sampling bound must be >= 1");
  long num = static_cast<long>(uniform(-bound, bound));
  long den = static_cast<long>(uniform(1, bound));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

GaussianRational SplitMix64::gaussian_rational(std::int64_t bound) {
  Rational re = rational(bound);
  Rational im = rational(bound);
  return {std::move(re), std::move(im)};
}

std::uint64_t stable_hash(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

ExactVector sample_rational_vector(std::size_t dim, std::uint64_t seed, std::int64_t bound) {
  if (bound < 1) throw InvalidArgument("sample_rational_vector: bound must be >= 1");
  SplitMix64 rng(seed);
  ExactVector v;
  v.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) v.emplace_back(rng.rational(bound));
  return v;
}

}  // namespace sympspin
