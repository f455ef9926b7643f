#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "t2sim/domain_grid.hpp"

namespace t2sim {

class MembershipFunction;

/// Trapezoid with support [a, d] and core [b, c]; grade `height` on the core,
/// linear ramps on (a, b) and (c, d), zero outside. a == b == c == d is the
/// degenerate single-point spike.
struct Trapezoid {
    double a;
    double b;
    double c;
    double d;
    double height = 1.0;
};

/// Triangle with support [a, c] and peak `height` at b.
struct Triangle {
    double a;
    double b;
    double c;
    double height = 1.0;
};

/// Linear interpolation through (x, grade) vertices with strictly increasing
/// x; zero outside [front.x, back.x]. A single vertex is a one-point spike.
struct PiecewiseLinear {
    struct Vertex {
        double x;
        double grade;
    };
    std::vector<Vertex> vertices;
};

/// One grade per grid point, linear interpolation between neighbours, zero
/// outside the grid's interval.
struct Sampled {
    DomainGrid grid;
    std::vector<double> grades;
};

/// Pointwise convex combination (1 - weight)*first + weight*second of two
/// membership functions. Grades stay in [0, 1] because the parents' do.
struct Blend {
    std::shared_ptr<const MembershipFunction> first;
    std::shared_ptr<const MembershipFunction> second;
    double weight;
};

/// Immutable membership function: grade in [0, 1] at every x, zero outside a
/// bounded support. Evaluation is exact at piecewise-linear vertices and at
/// sample points; no snapping of queries to grid points.
class MembershipFunction {
public:
    using Shape = std::variant<Trapezoid, Triangle, PiecewiseLinear, Sampled, Blend>;

    MembershipFunction(Trapezoid t) : shape_(validated(std::move(t))) {}
    MembershipFunction(Triangle t) : shape_(validated(std::move(t))) {}
    MembershipFunction(PiecewiseLinear p) : shape_(validated(std::move(p))) {}
    MembershipFunction(Sampled s) : shape_(validated(std::move(s))) {}
    MembershipFunction(Blend b) : shape_(validated(std::move(b))) {}

    [[nodiscard]] double operator()(double x) const {
        return std::visit([x](const auto& s) { return eval(s, x); }, shape_);
    }

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }

private:
    static void check_finite(double v, const char* what) {
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string("MembershipFunction: non-finite ") + what);
    }

    static void check_height(double h) {
        check_finite(h, "height");
        if (!(h > 0.0) || h > 1.0)
            throw std::invalid_argument("MembershipFunction: height must lie in (0, 1]");
    }

    static void check_grade(double g) {
        check_finite(g, "grade");
        if (g < 0.0 || g > 1.0)
            throw std::invalid_argument("MembershipFunction: grade must lie in [0, 1]");
    }

    static Trapezoid validated(Trapezoid t) {
        check_finite(t.a, "abscissa");
        check_finite(t.b, "abscissa");
        check_finite(t.c, "abscissa");
        check_finite(t.d, "abscissa");
        if (!(t.a <= t.b && t.b <= t.c && t.c <= t.d))
            throw std::invalid_argument("Trapezoid: requires a <= b <= c <= d");
        check_height(t.height);
        return t;
    }

    static Triangle validated(Triangle t) {
        check_finite(t.a, "abscissa");
        check_finite(t.b, "abscissa");
        check_finite(t.c, "abscissa");
        if (!(t.a <= t.b && t.b <= t.c))
            throw std::invalid_argument("Triangle: requires a <= b <= c");
        check_height(t.height);
        return t;
    }

    static PiecewiseLinear validated(PiecewiseLinear p) {
        if (p.vertices.empty())
            throw std::invalid_argument("PiecewiseLinear: needs at least one vertex");
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            check_finite(p.vertices[i].x, "vertex abscissa");
            check_grade(p.vertices[i].grade);
            if (i > 0 && !(p.vertices[i - 1].x < p.vertices[i].x))
                throw std::invalid_argument("PiecewiseLinear: vertex x must be strictly increasing");
        }
        return p;
    }

    static Sampled validated(Sampled s) {
        if (s.grades.size() != s.grid.size())
            throw std::invalid_argument("Sampled: one grade per grid point required");
        for (double g : s.grades) check_grade(g);
        return s;
    }

    static Blend validated(Blend b) {
        if (!b.first || !b.second)
            throw std::invalid_argument("Blend: both components must be present");
        check_finite(b.weight, "weight");
        if (b.weight < 0.0 || b.weight > 1.0)
            throw std::invalid_argument("Blend: weight must lie in [0, 1]");
        return b;
    }

    static double eval(const Trapezoid& t, double x) {
        if (x < t.a || x > t.d) return 0.0;
        if (x >= t.b && x <= t.c) return t.height;
        if (x < t.b) return t.height * (x - t.a) / (t.b - t.a);
        return t.height * (t.d - x) / (t.d - t.c);
    }

    static double eval(const Triangle& t, double x) {
        if (x < t.a || x > t.c) return 0.0;
        if (x == t.b) return t.height;
        if (x < t.b) return t.height * (x - t.a) / (t.b - t.a);
        return t.height * (t.c - x) / (t.c - t.b);
    }

    static double eval(const PiecewiseLinear& p, double x) {
        const auto& vs = p.vertices;
        if (x < vs.front().x || x > vs.back().x) return 0.0;
        auto it = std::lower_bound(vs.begin(), vs.end(), x,
                                   [](const PiecewiseLinear::Vertex& v, double q) { return v.x < q; });
        if (it->x == x) return it->grade;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        double u = (x - lo.x) / (hi.x - lo.x);
        return lo.grade + u * (hi.grade - lo.grade);
    }

    static double eval(const Sampled& s, double x) {
        const DomainGrid& g = s.grid;
        if (x < g.x_min() || x > g.x_max()) return 0.0;
        double t = (x - g.x_min()) / g.step();
        std::size_t k = std::min(static_cast<std::size_t>(std::max(t, 0.0)), g.size() - 2);
        double x0 = g.point(k);
        double x1 = g.point(k + 1);
        // Exact hits on either bracket endpoint return the stored grade; the
        // index arithmetic above can land one cell off for grid-point queries.
        if (x == x0) return s.grades[k];
        if (x == x1) return s.grades[k + 1];
        if (x < x0) return s.grades[k];  // only reachable by rounding at the cell edge
        double u = std::clamp((x - x0) / (x1 - x0), 0.0, 1.0);
        return s.grades[k] + u * (s.grades[k + 1] - s.grades[k]);
    }

    static double eval(const Blend& b, double x) {
        return (1.0 - b.weight) * (*b.first)(x) + b.weight * (*b.second)(x);
    }

    Shape shape_;
};

/// Grades of `mf` at every grid point, in grid order. A Sampled function
/// defined on this very grid is returned verbatim.
[[nodiscard]] inline std::vector<double> discretize(const MembershipFunction& mf,
                                                    const DomainGrid& grid) {
    if (const auto* s = std::get_if<Sampled>(&mf.shape()); s && s->grid == grid)
        return s->grades;
    std::vector<double> grades(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) grades[k] = mf(grid.point(k));
    return grades;
}

/// Pointwise dominance on the grid: a(x) <= b(x) at every sample point.
/// A partial order; incomparable pairs return false both ways.
[[nodiscard]] inline bool mf_leq(const MembershipFunction& a, const MembershipFunction& b,
                                 const DomainGrid& grid) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
        double x = grid.point(k);
        if (a(x) > b(x)) return false;
    }
    return true;
}

/// Same function with every grade multiplied by `factor` in (0, 1].
[[nodiscard]] inline MembershipFunction scale(const MembershipFunction& mf, double factor) {
    if (!(factor > 0.0) || factor > 1.0)
        throw std::invalid_argument("scale: factor must lie in (0, 1]");
    struct Visitor {
        double f;
        MembershipFunction operator()(Trapezoid t) const {
            t.height *= f;
            return {std::move(t)};
        }
        MembershipFunction operator()(Triangle t) const {
            t.height *= f;
            return {std::move(t)};
        }
        MembershipFunction operator()(PiecewiseLinear p) const {
            for (auto& v : p.vertices) v.grade *= f;
            return {std::move(p)};
        }
        MembershipFunction operator()(Sampled s) const {
            for (auto& g : s.grades) g *= f;
            return {std::move(s)};
        }
        MembershipFunction operator()(const Blend& b) const {
            return {Blend{std::make_shared<const MembershipFunction>(scale(*b.first, f)),
                          std::make_shared<const MembershipFunction>(scale(*b.second, f)),
                          b.weight}};
        }
    };
    return std::visit(Visitor{factor}, mf.shape());
}

}  // namespace t2sim
