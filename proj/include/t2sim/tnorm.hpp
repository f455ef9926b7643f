#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace t2sim {

/// Binary t-norm on [0, 1]: commutative, associative, monotone, with 1 as
/// identity. Three standard choices are provided; minimum is the default
/// everywhere a t-norm is taken.
class TNorm {
public:
    enum class Kind { minimum, product, lukasiewicz };

    static TNorm minimum() noexcept { return TNorm(Kind::minimum); }
    static TNorm product() noexcept { return TNorm(Kind::product); }
    static TNorm lukasiewicz() noexcept { return TNorm(Kind::lukasiewicz); }

    [[nodiscard]] double operator()(double x, double y) const noexcept {
        switch (kind_) {
            case Kind::minimum: return std::min(x, y);
            case Kind::product: return x * y;
            case Kind::lukasiewicz: return std::max(0.0, x + y - 1.0);
        }
        return 0.0;  // unreachable
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

    [[nodiscard]] std::string_view name() const noexcept {
        switch (kind_) {
            case Kind::minimum: return "minimum";
            case Kind::product: return "product";
            case Kind::lukasiewicz: return "lukasiewicz";
        }
        return "";  // unreachable
    }

    friend bool operator==(const TNorm&, const TNorm&) = default;

private:
    explicit TNorm(Kind kind) noexcept : kind_(kind) {}
    Kind kind_;
};

[[nodiscard]] inline std::optional<TNorm> parse_tnorm(std::string_view name) noexcept {
    if (name == "minimum") return TNorm::minimum();
    if (name == "product") return TNorm::product();
    if (name == "lukasiewicz") return TNorm::lukasiewicz();
    return std::nullopt;
}

}  // namespace t2sim
