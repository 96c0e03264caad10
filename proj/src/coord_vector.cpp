#include "symsep/coord_vector.hpp"

#include <stdexcept>

namespace symsep {

CoordVector::CoordVector(std::initializer_list<std::pair<const int, double>> entries) {
    for (const auto& [index, value] : entries) set(index, value);
}

CoordVector CoordVector::basis(int index) {
    CoordVector v;
    v.set(index, 1.0);
    return v;
}

CoordVector CoordVector::staircaseC0(int n) {
    if (n < 1) throw std::invalid_argument("staircaseC0: n must be >= 1");
    CoordVector v;
    for (int k = 1; k <= n; ++k) v.set(k, 1.0);
    v.set(n + 1, -1.0);
    return v;
}

double CoordVector::coeff(int index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? 0.0 : it->second;
}

void CoordVector::set(int index, double value) {
    if (index < 1) throw std::invalid_argument("CoordVector: indices are positive integers");
    if (value == 0.0)
        entries_.erase(index);
    else
        entries_[index] = value;
}

std::vector<int> CoordVector::support() const {
    std::vector<int> indices;
    indices.reserve(entries_.size());
    for (const auto& [index, value] : entries_) indices.push_back(index);
    return indices;
}

int CoordVector::minIndex() const {
    if (entries_.empty()) throw std::domain_error("minIndex: zero vector has no support");
    return entries_.begin()->first;
}

int CoordVector::maxIndex() const {
    if (entries_.empty()) throw std::domain_error("maxIndex: zero vector has no support");
    return entries_.rbegin()->first;
}

CoordVector CoordVector::restrict(int a, int b) const {
    if (a < 1 || b < a) throw std::invalid_argument("restrict: interval must satisfy 1 <= a <= b");
    CoordVector out;
    for (auto it = entries_.lower_bound(a); it != entries_.end() && it->first <= b; ++it)
        out.entries_.insert(*it);
    return out;
}

double CoordVector::dot(const CoordVector& other) const {
    const CoordVector* small = this;
    const CoordVector* large = &other;
    if (small->entries_.size() > large->entries_.size()) std::swap(small, large);
    double sum = 0.0;
    for (const auto& [index, value] : small->entries_) sum += value * large->coeff(index);
    return sum;
}

CoordVector& CoordVector::operator+=(const CoordVector& other) {
    for (const auto& [index, value] : other.entries_) set(index, coeff(index) + value);
    return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& other) {
    for (const auto& [index, value] : other.entries_) set(index, coeff(index) - value);
    return *this;
}

CoordVector& CoordVector::operator*=(double scalar) {
    if (scalar == 0.0) {
        entries_.clear();
        return *this;
    }
    for (auto& [index, value] : entries_) value *= scalar;
    return *this;
}

bool strictlyBefore(const CoordVector& b1, const CoordVector& b2) {
    if (b1.isZero() || b2.isZero()) return false;
    return b1.maxIndex() < b2.minIndex();
}

}  // namespace symsep
