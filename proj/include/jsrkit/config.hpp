#pragma once

#include <cstddef>
#include <cstdint>

#include "scalar.hpp"

namespace jsrkit {

/// Numeric defaults shared by the library and the CLI. Reports echo them.
namespace defaults {

inline constexpr real tie_tol = 1e-9;           ///< spectral-maximal candidate ties, relative
inline constexpr real close_tol = 1e-9;         ///< lower/upper closure, relative
inline constexpr real rank_tol = 1e-9;          ///< numerical rank, relative to sigma_1
inline constexpr real rank_one_tol = 1e-9;      ///< rank-one verdict slack, relative
inline constexpr real span_drop_tol = 1e-9;     ///< Gram-Schmidt drop threshold, relative
inline constexpr real offender_tol = 1e-6;      ///< SFH offender threshold, relative
inline constexpr real barabanov_tol = 1e-6;     ///< residual accepted when verifying a norm
inline constexpr real approx_tol = 1e-9;        ///< fixed-point step at which iteration stops
inline constexpr real separation_gap = 1e-9;    ///< eigenvalue-modulus gap, relative
inline constexpr std::size_t mesh_size = 720;
inline constexpr std::size_t approx_max_iter = 500;
inline constexpr std::size_t depth = 4;
inline constexpr std::uint64_t word_budget = 10'000'000;
inline constexpr std::uint64_t seed = 1234567;
inline constexpr std::size_t witness_attempts = 64;  ///< random trials in the invariant-subspace search
inline constexpr std::size_t sphere_samples = 4096;  ///< generated sample points when no mesh applies

} // namespace defaults

} // namespace jsrkit
