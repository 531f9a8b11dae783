#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace adstc {

using cd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Thrown when an enumeration or DP state count exceeds its configured cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejected configuration; `key` names the offending entry.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& key_, const std::string& what_)
        : std::runtime_error("config key '" + key_ + "': " + what_), key(key_) {}
    std::string key;
};

}  // namespace adstc
