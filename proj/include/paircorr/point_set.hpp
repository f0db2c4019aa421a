#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace paircorr {

/// Fractional part {x} = x - floor(x), always in [0,1).
double fractional_part(double x) noexcept;

/// Distance to the nearest integer of x - y, for x, y in [0,1).
double torus_distance(double x, double y) noexcept;

/// An ordered, non-empty list of points on the unit torus [0,1).
///
/// Construction validates the range; use `PointSet::reduced` to map arbitrary
/// reals onto the torus first. Duplicates are allowed.
class PointSet {
public:
    /// Throws std::invalid_argument if `points` is empty or any value lies
    /// outside [0,1).
    explicit PointSet(std::vector<double> points);

    /// Reduces every value by its fractional part before storing it.
    static PointSet reduced(std::span<const double> values);

    std::size_t size() const noexcept { return points_.size(); }
    double operator[](std::size_t i) const noexcept { return points_[i]; }
    std::span<const double> points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Copy of the points in ascending order.
    std::vector<double> sorted() const;

    /// Same points translated by c modulo one.
    PointSet shifted(double c) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<double> points_;
};

} // namespace paircorr
