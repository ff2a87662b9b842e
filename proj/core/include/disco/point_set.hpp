#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "disco/errors.hpp"

namespace disco {

/// n points with m real coordinates each, stored row-major.
/// All coordinates are validated to be finite at construction.
class PointSet {
public:
    PointSet(std::size_t n, std::size_t m, std::vector<double> data)
        : n_(n), m_(m), data_(std::move(data)) {
        if (n_ < 1 || m_ < 1) {
            throw input_error("PointSet requires n >= 1 and m >= 1");
        }
        if (data_.size() != n_ * m_) {
            throw input_error("PointSet data size does not match n*m");
        }
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (!std::isfinite(data_[i])) {
                throw input_error("non-finite coordinate at row " +
                                  std::to_string(i / m_) + ", column " +
                                  std::to_string(i % m_));
            }
        }
    }

    std::size_t size() const { return n_; }
    std::size_t dims() const { return m_; }

    double operator()(std::size_t i, std::size_t d) const { return data_[i * m_ + d]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * m_, m_};
    }

    const std::vector<double>& data() const { return data_; }

    double euclidean(std::size_t i, std::size_t j) const {
        const double* a = data_.data() + i * m_;
        const double* b = data_.data() + j * m_;
        double s = 0.0;
        for (std::size_t d = 0; d < m_; ++d) {
            const double diff = a[d] - b[d];
            s += diff * diff;
        }
        return std::sqrt(s);
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<double> data_;
};

/// Dense symmetric n-by-n matrix used for the explicit distance products.
/// The scoring path itself never materializes one of these for large n.
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t n) : n_(n), v_(n * n, 0.0) {}

    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> v_;
};

}  // namespace disco
