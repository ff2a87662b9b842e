#pragma once

#include <stdexcept>
#include <string>

namespace disco {

/// Malformed or unreadable input data (files, matrices, non-finite values).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A parameter outside its documented bounds (mu, eps, generator settings).
class parameter_error : public std::runtime_error {
public:
    explicit parameter_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Labels that do not fit the data: wrong length, reserved values misused.
class label_error : public std::runtime_error {
public:
    explicit label_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace disco
