#include "prga/vector.hpp"

#include <cmath>
#include <string>

#include "prga/errors.hpp"

namespace prga {

namespace {

void check_finite(const std::vector<double>& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!std::isfinite(coords[i])) {
            throw DomainError("non-finite coordinate at index " + std::to_string(i));
        }
    }
}

void check_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

DenseVector::DenseVector(std::size_t n) : coords_(n, 0.0) {
    if (n == 0) throw DomainError("vector dimension must be at least 1");
}

DenseVector::DenseVector(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("vector dimension must be at least 1");
    check_finite(coords_);
}

DenseVector::DenseVector(std::initializer_list<double> coords)
    : DenseVector(std::vector<double>(coords)) {}

DenseVector& DenseVector::operator+=(const DenseVector& other) {
    check_same_size(size(), other.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

DenseVector& DenseVector::operator-=(const DenseVector& other) {
    check_same_size(size(), other.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

DenseVector& DenseVector::operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
}

DenseVector operator+(DenseVector a, const DenseVector& b) { return a += b; }
DenseVector operator-(DenseVector a, const DenseVector& b) { return a -= b; }
DenseVector operator*(double s, DenseVector v) { return v *= s; }
DenseVector operator-(DenseVector v) {
    std::vector<double> out(v.coords().begin(), v.coords().end());
    for (double& c : out) c = -c;
    return DenseVector(std::move(out));
}

double dot(const DenseVector& a, const DenseVector& b) {
    check_same_size(a.size(), b.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double norm2(const DenseVector& v) { return std::sqrt(dot(v, v)); }

DenseVector combine(double a, const DenseVector& x, double b, const DenseVector& y) {
    check_same_size(x.size(), y.size());
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * x[i] + b * y[i];
    return DenseVector(std::move(out));
}

DenseVector unit_vector(std::size_t n, std::size_t i) {
    if (i >= n) throw DomainError("canonical index out of range");
    std::vector<double> out(n, 0.0);
    out[i] = 1.0;
    return DenseVector(std::move(out));
}

}  // namespace prga
