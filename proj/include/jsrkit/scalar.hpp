#pragma once

#include <cmath>
#include <complex>
#include <string_view>
#include <type_traits>

namespace jsrkit {

using real = double;
using complex = std::complex<double>;

/// Ground field of a tuple: the reals or the complex numbers.
enum class Field { Real, Complex };

inline constexpr std::string_view to_string(Field f) noexcept {
    return f == Field::Real ? "real" : "complex";
}

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Scalar types admitted as matrix entries.
template <class T>
concept Scalar = std::is_same_v<T, real> || std::is_same_v<T, complex>;

template <Scalar T>
inline constexpr Field field_of = is_complex_v<T> ? Field::Complex : Field::Real;

// std::conj(double) returns a complex; keep the scalar type instead.
template <Scalar T>
constexpr T conj_of(const T& x) {
    if constexpr (is_complex_v<T>) {
        return std::conj(x);
    } else {
        return x;
    }
}

template <Scalar T>
real abs_of(const T& x) {
    return std::abs(x);
}

template <Scalar T>
real abs2_of(const T& x) {
    if constexpr (is_complex_v<T>) {
        return std::norm(x);
    } else {
        return x * x;
    }
}

template <Scalar T>
bool is_finite(const T& x) {
    if constexpr (is_complex_v<T>) {
        return std::isfinite(x.real()) && std::isfinite(x.imag());
    } else {
        return std::isfinite(x);
    }
}

} // namespace jsrkit
