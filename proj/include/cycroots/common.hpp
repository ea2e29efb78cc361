#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cycroots {

using Complex = std::complex<double>;
using MatrixXc = Eigen::MatrixXcd;
using MatrixXr = Eigen::MatrixXd;
using VectorXc = Eigen::VectorXcd;
using VectorXr = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error hierarchy. The CLI maps InputError to exit code 2 and every other
// cycroots::Error to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class StructureError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class SizeError : public Error {
public:
    using Error::Error;
};

// Malformed documents, unreadable files, bad flags.
class InputError : public Error {
public:
    using Error::Error;
};

inline double inf_norm(const MatrixXc& m) {
    return m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

inline double inf_norm(const MatrixXr& m) {
    return m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

inline double max_abs(const MatrixXc& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double max_abs(const MatrixXr& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline void require_square(Eigen::Index rows, Eigen::Index cols, const char* what) {
    if (rows != cols) {
        throw ShapeError(std::string(what) + ": matrix must be square, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
    }
}

// Argument in [0, 2*pi). atan2 returns (-pi, pi]; the negative half is shifted up.
inline double arg_0_2pi(Complex z) {
    double theta = std::arg(z);
    if (theta < 0.0) {
        theta += kTwoPi;
    }
    if (theta >= kTwoPi) {
        theta -= kTwoPi;
    }
    return theta;
}

// Reality test |Im z| <= tol * max(1, |z|).
inline bool is_real_value(Complex z, double tol) {
    return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
}

}  // namespace cycroots
