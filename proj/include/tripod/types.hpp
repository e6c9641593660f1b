// types.hpp — shared aliases for the dense complex linear algebra used everywhere
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace tripod {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

}  // namespace tripod
