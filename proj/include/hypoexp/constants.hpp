#ifndef HYPOEXP_CONSTANTS_HPP
#define HYPOEXP_CONSTANTS_HPP

#include <cstddef>
#include <cstdint>

// Source-of-truth defaults for every user-overridable tolerance and count.
// The CLI --help text quotes these values.

namespace hypoexp::defaults {

// Relative separation below which scales are treated as coincident and the
// evaluation is routed away from the distinct-scale formula. Below this
// separation the pairwise-difference denominators lose more than half of
// double-precision significance for moderate n.
inline constexpr double kRelTol = 1e-8;

// Absolute tolerance for the nested quadrature oracle.
inline constexpr double kQuadAbsTol = 1e-10;

// Largest dimension the nested quadrature will attempt.
inline constexpr std::size_t kQuadMaxDim = 4;

// Monte Carlo defaults.
inline constexpr std::uint64_t kSeed = 1;
inline constexpr std::size_t kSampleCount = 1'000'000;

// Randomized identity verification.
inline constexpr int kVerifyMaxN = 12;
inline constexpr int kVerifySeeds = 100;

}  // namespace hypoexp::defaults

#endif
