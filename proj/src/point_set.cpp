#include "paircorr/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace paircorr {

double fractional_part(double x) noexcept
{
    double f = x - std::floor(x);
    // -tiny - floor(-tiny) rounds to 1.0
    if (f >= 1.0) f = 0.0;
    return f;
}

double torus_distance(double x, double y) noexcept
{
    const double d = std::fabs(x - y);
    return std::min(d, 1.0 - d);
}

PointSet::PointSet(std::vector<double> points) : points_(std::move(points))
{
    if (points_.empty()) throw std::invalid_argument("PointSet: at least one point is required");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double p = points_[i];
        if (!(p >= 0.0 && p < 1.0)) {
            throw std::invalid_argument("PointSet: point " + std::to_string(i) + " = " + std::to_string(p) +
                                        " is outside [0,1)");
        }
    }
}

PointSet PointSet::reduced(std::span<const double> values)
{
    std::vector<double> pts;
    pts.reserve(values.size());
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("PointSet: non-finite value");
        pts.push_back(fractional_part(v));
    }
    return PointSet(std::move(pts));
}

std::vector<double> PointSet::sorted() const
{
    std::vector<double> out = points_;
    std::sort(out.begin(), out.end());
    return out;
}

PointSet PointSet::shifted(double c) const
{
    std::vector<double> out;
    out.reserve(points_.size());
    for (double p : points_) out.push_back(fractional_part(p + c));
    return PointSet(std::move(out));
}

} // namespace paircorr
