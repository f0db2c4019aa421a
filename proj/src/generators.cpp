#include "paircorr/generators.hpp"

#include "paircorr/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace paircorr {

namespace {

constexpr std::uint64_t kExactIntegerLimit = std::uint64_t{1} << 53;

double below(double bound)
{
    return std::nextafter(bound, -std::numeric_limits<double>::infinity());
}

double ulp(double x)
{
    const double a = std::fabs(x);
    return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

void require_points(std::size_t n, const char* who)
{
    if (n == 0) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
}

} // namespace

// ---------------------------------------------------------------------------
// DensitySpec

DensitySpec::DensitySpec(std::vector<double> breakpoints, std::vector<double> heights)
    : breakpoints_(std::move(breakpoints)), heights_(std::move(heights))
{
    if (heights_.empty()) throw std::invalid_argument("DensitySpec: at least one piece is required");
    if (breakpoints_.size() != heights_.size() + 1)
        throw std::invalid_argument("DensitySpec: need exactly one more breakpoint than heights");
    if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
        throw std::invalid_argument("DensitySpec: breakpoints must start at 0 and end at 1");
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        if (!(breakpoints_[k] > breakpoints_[k - 1]))
            throw std::invalid_argument("DensitySpec: breakpoints must be strictly ascending");
    }
    double mass = 0.0;
    cumulative_.reserve(breakpoints_.size());
    for (std::size_t k = 0; k < heights_.size(); ++k) {
        if (!(heights_[k] >= 0.0) || !std::isfinite(heights_[k]))
            throw std::invalid_argument("DensitySpec: heights must be finite and >= 0");
        cumulative_.push_back(mass);
        mass += heights_[k] * (breakpoints_[k + 1] - breakpoints_[k]);
    }
    if (std::fabs(mass - 1.0) > 1e-12)
        throw std::invalid_argument("DensitySpec: total mass is " + std::to_string(mass) + ", expected 1");
    cumulative_.push_back(1.0);
}

DensitySpec DensitySpec::uniform()
{
    return DensitySpec({0.0, 1.0}, {1.0});
}

double DensitySpec::quantile(double u) const
{
    if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("DensitySpec::quantile: u must lie in [0,1)");
    // Zero-mass pieces have equal consecutive cumulative values and are skipped here.
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    auto k = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    k = std::min(k, heights_.size() - 1);
    while (heights_[k] == 0.0 && k > 0) --k;

    const double lo = breakpoints_[k];
    const double hi = breakpoints_[k + 1];
    const double x = lo + (u - cumulative_[k]) / heights_[k];
    return std::clamp(x, lo, below(hi));
}

// ---------------------------------------------------------------------------
// Weyl-type sequences

double fractional_product(std::uint64_t k, double alpha)
{
    if (k >= kExactIntegerLimit) throw std::invalid_argument("fractional_product: multiplier exceeds 2^53");
    const auto kd = static_cast<double>(k);
    const double p = kd * alpha;
    const double err = std::fma(kd, alpha, -p);
    return fractional_part(fractional_part(p) + err);
}

void check_phase_precision(std::uint64_t max_multiplier, double alpha, std::size_t n)
{
    if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
    if (max_multiplier >= kExactIntegerLimit)
        throw std::invalid_argument("multiplier " + std::to_string(max_multiplier) + " exceeds 2^53");
    const double phase_error = static_cast<double>(max_multiplier) * ulp(alpha);
    const double budget = 0.25 / static_cast<double>(n);
    if (phase_error > budget) {
        throw std::invalid_argument("phase precision guard: max multiplier " + std::to_string(max_multiplier) +
                                    " times ulp(alpha) = " + std::to_string(phase_error) +
                                    " exceeds 1/(4N) = " + std::to_string(budget) + "; reduce N");
    }
}

PointSet kronecker(double alpha, std::size_t n)
{
    require_points(n, "kronecker");
    check_phase_precision(n, alpha, n);
    std::vector<double> pts(n);
    for (std::size_t k = 0; k < n; ++k) pts[k] = fractional_product(k + 1, alpha);
    return PointSet(std::move(pts));
}

PointSet quadratic_weyl(double alpha, std::size_t n)
{
    require_points(n, "quadratic_weyl");
    if (n >= (std::uint64_t{1} << 26)) throw std::invalid_argument("quadratic_weyl: n^2 exceeds 2^53");
    const std::uint64_t nn = static_cast<std::uint64_t>(n);
    check_phase_precision(nn * nn, alpha, n);
    std::vector<double> pts(n);
    for (std::uint64_t k = 1; k <= nn; ++k) pts[k - 1] = fractional_product(k * k, alpha);
    return PointSet(std::move(pts));
}

PointSet general_weyl(std::span<const std::uint64_t> multipliers, double alpha)
{
    if (multipliers.empty()) throw std::invalid_argument("general_weyl: at least one multiplier is required");
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t largest = 0;
    for (auto m : multipliers) {
        if (m == 0) throw std::invalid_argument("general_weyl: multipliers must be positive");
        if (!seen.insert(m).second)
            throw std::invalid_argument("general_weyl: duplicate multiplier " + std::to_string(m));
        largest = std::max(largest, m);
    }
    check_phase_precision(largest, alpha, multipliers.size());
    std::vector<double> pts;
    pts.reserve(multipliers.size());
    for (auto m : multipliers) pts.push_back(fractional_product(m, alpha));
    return PointSet(std::move(pts));
}

// ---------------------------------------------------------------------------
// van der Corput

double radical_inverse(std::uint64_t k, unsigned base)
{
    if (base < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
    // Reverse the digits as an integer, then divide once.
    std::uint64_t reversed = 0;
    std::uint64_t scale = 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / base;
    while (k > 0) {
        if (scale > limit) throw std::invalid_argument("radical_inverse: index too large for base");
        reversed = reversed * base + k % base;
        scale *= base;
        k /= base;
    }
    const double v = static_cast<double>(reversed) / static_cast<double>(scale);
    return v < 1.0 ? v : below(1.0);
}

PointSet van_der_corput(unsigned base, std::size_t n)
{
    if (base < 2) throw std::invalid_argument("van_der_corput: base must be >= 2");
    require_points(n, "van_der_corput");
    std::vector<double> pts(n);
    for (std::size_t k = 0; k < n; ++k) pts[k] = radical_inverse(k + 1, base);
    return PointSet(std::move(pts));
}

// ---------------------------------------------------------------------------
// Random samples

PointSet iid_uniform(std::uint64_t seed, std::size_t n)
{
    require_points(n, "iid_uniform");
    Rng rng(seed);
    std::vector<double> pts(n);
    for (auto& p : pts) p = rng.uniform01();
    return PointSet(std::move(pts));
}

PointSet iid_density(const DensitySpec& spec, std::uint64_t seed, std::size_t n)
{
    require_points(n, "iid_density");
    Rng rng(seed);
    std::vector<double> pts(n);
    for (auto& p : pts) p = spec.quantile(rng.uniform01());
    return PointSet(std::move(pts));
}

PointSet atom_mixture(double atom, double weight, std::uint64_t seed, std::size_t n)
{
    require_points(n, "atom_mixture");
    if (!(atom >= 0.0 && atom < 1.0)) throw std::invalid_argument("atom_mixture: atom must lie in [0,1)");
    if (!(weight > 0.0 && weight < 1.0)) throw std::invalid_argument("atom_mixture: weight must lie in (0,1)");
    Rng rng(seed);
    std::vector<double> pts(n);
    for (auto& p : pts) {
        const double choice = rng.uniform01();
        const double value = rng.uniform01();
        p = choice < weight ? atom : value;
    }
    return PointSet(std::move(pts));
}

PointSet two_interval_sequence(double a, double b, std::size_t n)
{
    require_points(n, "two_interval_sequence");
    if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("two_interval_sequence: a must lie in (0,1)");
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("two_interval_sequence: b must lie in (0,1)");
    std::vector<double> pts(n);
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto kd = static_cast<double>(k);
        if (std::floor((kd + 1.0) * b) > std::floor(kd * b)) {
            pts[k] = std::min(a * radical_inverse(++low, 2), below(a));
        } else {
            pts[k] = std::clamp(a + (1.0 - a) * radical_inverse(++high, 2), a, below(1.0));
        }
    }
    return PointSet(std::move(pts));
}

} // namespace paircorr
