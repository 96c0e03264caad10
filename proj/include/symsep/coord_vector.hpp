#ifndef SYMSEP_COORD_VECTOR_HPP
#define SYMSEP_COORD_VECTOR_HPP

#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace symsep {

/// Finitely supported real coordinate vector over indices 1, 2, 3, ...
/// Entries that are exactly 0.0 are never stored, so support() is exact.
class CoordVector {
public:
    CoordVector() = default;
    CoordVector(std::initializer_list<std::pair<const int, double>> entries);

    static CoordVector basis(int index);

    /// Vector with entries 1 at indices 1..n and -1 at index n+1.
    static CoordVector staircaseC0(int n);

    /// Coefficient at a given index; 0.0 if the index is not in the support.
    double coeff(int index) const;

    /// Stores (or erases, when value == 0.0) a coefficient. Index must be >= 1.
    void set(int index, double value);

    const std::map<int, double>& entries() const { return entries_; }
    std::vector<int> support() const;
    std::size_t supportSize() const { return entries_.size(); }
    bool isZero() const { return entries_.empty(); }

    /// Smallest/largest support index; throws std::domain_error on the zero vector.
    int minIndex() const;
    int maxIndex() const;

    /// Keeps exactly the entries with index in [a, b].
    CoordVector restrict(int a, int b) const;

    double dot(const CoordVector& other) const;

    CoordVector& operator+=(const CoordVector& other);
    CoordVector& operator-=(const CoordVector& other);
    CoordVector& operator*=(double scalar);

    friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
    friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
    friend CoordVector operator*(double s, CoordVector a) { return a *= s; }
    friend CoordVector operator*(CoordVector a, double s) { return a *= s; }
    friend CoordVector operator-(CoordVector a) { return a *= -1.0; }

    bool operator==(const CoordVector& other) const { return entries_ == other.entries_; }

private:
    std::map<int, double> entries_;
};

/// b1 < b2 in the block order: max support(b1) < min support(b2).
/// False if either vector is zero.
bool strictlyBefore(const CoordVector& b1, const CoordVector& b2);

}  // namespace symsep

#endif
