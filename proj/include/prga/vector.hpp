#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace prga {

// Fixed-length real vector with finite coordinates.
class DenseVector {
public:
    // n zero coordinates; n must be >= 1.
    explicit DenseVector(std::size_t n);
    explicit DenseVector(std::vector<double> coords);
    DenseVector(std::initializer_list<double> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    // Coordinate-wise; sizes must agree.
    DenseVector& operator+=(const DenseVector& other);
    DenseVector& operator-=(const DenseVector& other);
    DenseVector& operator*=(double s);

    friend bool operator==(const DenseVector&, const DenseVector&) = default;

private:
    std::vector<double> coords_;
};

DenseVector operator+(DenseVector a, const DenseVector& b);
DenseVector operator-(DenseVector a, const DenseVector& b);
DenseVector operator*(double s, DenseVector v);
DenseVector operator-(DenseVector v);

double dot(const DenseVector& a, const DenseVector& b);
double norm2(const DenseVector& v);

// a*x + b*y without intermediate allocation beyond the result.
DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y);

// Canonical basis vector e_i in R^n.
DenseVector unit_vector(std::size_t n, std::size_t i);

}  // namespace prga
