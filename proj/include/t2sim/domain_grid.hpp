#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace t2sim {

/// Uniform sampling of a closed interval [x_min, x_max], endpoints included.
/// All discrete computations in this library run over such a grid.
class DomainGrid {
public:
    DomainGrid(double x_min, double x_max, std::size_t n)
        : x_min_(x_min), x_max_(x_max), n_(n) {
        if (!(x_min < x_max))
            throw std::invalid_argument("DomainGrid: x_min must be less than x_max");
        if (n < 2)
            throw std::invalid_argument("DomainGrid: need at least two sample points");
        step_ = (x_max - x_min) / static_cast<double>(n - 1);
    }

    [[nodiscard]] double x_min() const noexcept { return x_min_; }
    [[nodiscard]] double x_max() const noexcept { return x_max_; }
    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double step() const noexcept { return step_; }

    /// k-th sample point. The two endpoints are returned exactly; the naive
    /// x_min + k*step can overshoot x_max by an ulp and fall off a support
    /// that ends there.
    [[nodiscard]] double point(std::size_t k) const {
        if (k >= n_)
            throw std::out_of_range("DomainGrid::point: index out of range");
        if (k == 0) return x_min_;
        if (k == n_ - 1) return x_max_;
        return x_min_ + static_cast<double>(k) * step_;
    }

    [[nodiscard]] std::vector<double> points() const {
        std::vector<double> xs(n_);
        for (std::size_t k = 0; k < n_; ++k) xs[k] = point(k);
        return xs;
    }

    friend bool operator==(const DomainGrid&, const DomainGrid&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double step_;
};

}  // namespace t2sim
