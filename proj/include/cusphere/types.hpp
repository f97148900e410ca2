#pragma once

#include <complex>
#include <type_traits>

#include <Eigen/Dense>

namespace cusphere {

using Real = double;
using Complex = std::complex<double>;

template <typename Scalar> using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar> using Mat3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar> using Mat6 = Eigen::Matrix<Scalar, 6, 6>;

/// States are row vectors ordered (X_r, X_i, Y_r, Y_i, Z_r, Z_i); they act on
/// group elements from the left, v' = v * G.
template <typename Scalar> using SixVector = Eigen::Matrix<Scalar, 1, 6>;

using IntMat6 = Mat6<int>;
using RealMat6 = Mat6<Real>;
using ComplexMat6 = Mat6<Complex>;
using ComplexMat3 = Mat3<Complex>;

template <typename T> struct is_complex : std::false_type {};
template <typename T> struct is_complex<std::complex<T>> : std::true_type {};
template <typename T> inline constexpr bool is_complex_v = is_complex<T>::value;

inline Complex to_complex(double v) { return Complex(v, 0.0); }
inline Complex to_complex(const Complex& v) { return v; }

/// Rotation angles in radians. Imaginary parts are allowed; they turn the
/// trigonometric entries of the group elements hyperbolic.
struct Angles {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};
  Complex z{0.0, 0.0};

  static Angles real(double x, double y, double z) {
    return Angles{Complex(x, 0.0), Complex(y, 0.0), Complex(z, 0.0)};
  }

  bool is_real() const {
    return x.imag() == 0.0 && y.imag() == 0.0 && z.imag() == 0.0;
  }
};

/// Real scaling factors occupying the oriented-plane slots of the scaled
/// generator. Zero scales recover the plain rotation generator.
struct ScaleParams {
  double c = 0.0;
  double e = 0.0;

  bool is_zero() const { return c == 0.0 && e == 0.0; }
};

}  // namespace cusphere
