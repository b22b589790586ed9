#pragma once

#include <complex>

#include <Eigen/Dense>

namespace spinz {

using Complex = std::complex<double>;

using IntVec = Eigen::VectorXi;
using IntMat = Eigen::MatrixXi;
using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;
using ComplexVec = Eigen::VectorXcd;
using ComplexMat = Eigen::MatrixXcd;

}  // namespace spinz
