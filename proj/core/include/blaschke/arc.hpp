#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "blaschke/angle.hpp"

namespace blaschke {

/// Counterclockwise arc on the unit circle, half-open as the point set
/// [start, end). Equal endpoints denote the full circle.
class Arc {
public:
    Arc(Angle start, Angle end);

    Angle start() const { return start_; }
    Angle end() const { return end_; }

    /// Arc length in (0, 2*pi].
    double length() const { return length_; }

    bool is_full_circle() const { return length_ == two_pi; }

    Angle midpoint() const;

    /// Half-open membership: start included, end excluded.
    bool contains(Angle theta) const;

    /// Membership in the open arc (start, end).
    bool interior_contains(Angle theta) const;

private:
    Angle start_;
    Angle end_;
    double length_;
};

/// Ordered counterclockwise arcs covering the circle exactly once.
class Partition {
public:
    /// Validates that consecutive arcs chain end-to-start around the circle
    /// and that the lengths sum to 2*pi.
    static Partition from_arcs(std::vector<Arc> arcs);

    /// Builds [s, s+l1), [s+l1, s+l1+l2), ... from positive arc lengths that
    /// sum to 2*pi. The last arc closes exactly onto the first start.
    static Partition from_lengths(Angle first_start, std::span<const double> lengths);

    std::size_t size() const { return arcs_.size(); }
    const Arc& arc(std::size_t index) const { return arcs_[index]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::vector<Angle> midpoints() const;

    /// The arc start points, in partition order.
    std::vector<Angle> boundary_points() const;

    double min_arc_length() const;

private:
    explicit Partition(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}

    std::vector<Arc> arcs_;
};

}  // namespace blaschke
