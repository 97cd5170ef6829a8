// Copyright 2026 The qrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREC_MATRIX_HPP_
#define QREC_MATRIX_HPP_

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrec {

/// Dense square matrix of doubles with masked entries stored as NaN.
///
/// Correlator matrices use a masked diagonal: the (i, i) cells are not valid
/// two-qubit quantities and are excluded from every statistic and serialized
/// as null.
class SquareMatrix {
  public:
    SquareMatrix() = default;

    explicit SquareMatrix(int size, double value = 0.0)
        : size_(size), cells_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), value) {
        if (size < 0) throw std::invalid_argument("matrix size must be non-negative");
    }

    /// Matrix with `value` off the diagonal and a masked (NaN) diagonal.
    static SquareMatrix with_masked_diagonal(int size, double value = 0.0) {
        SquareMatrix m(size, value);
        for (int i = 0; i < size; ++i) m.set(i, i, mask_value());
        return m;
    }

    static constexpr double mask_value() { return std::numeric_limits<double>::quiet_NaN(); }

    int size() const { return size_; }

    double at(int i, int j) const {
        check_index(i, j);
        return cells_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)];
    }

    void set(int i, int j, double v) {
        check_index(i, j);
        cells_[static_cast<std::size_t>(i) * size_ + static_cast<std::size_t>(j)] = v;
    }

    bool masked(int i, int j) const { return std::isnan(at(i, j)); }

    const std::vector<double>& cells() const { return cells_; }

  private:
    void check_index(int i, int j) const {
        if (i < 0 || j < 0 || i >= size_ || j >= size_) {
            throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range for size " +
                                    std::to_string(size_));
        }
    }

    int size_ = 0;
    std::vector<double> cells_;
};

}  // namespace qrec

#endif  // QREC_MATRIX_HPP_
