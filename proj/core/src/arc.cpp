#include "blaschke/arc.hpp"

#include <cmath>
#include <sstream>

#include "blaschke/errors.hpp"

namespace blaschke {

Arc::Arc(Angle start, Angle end) : start_(start), end_(end) {
    const double span = canonical_angle(end.radians() - start.radians());
    length_ = span == 0.0 ? two_pi : span;
}

Angle Arc::midpoint() const {
    return Angle(start_.radians() + 0.5 * length_);
}

bool Arc::contains(Angle theta) const {
    return canonical_angle(theta.radians() - start_.radians()) < length_;
}

bool Arc::interior_contains(Angle theta) const {
    const double offset = canonical_angle(theta.radians() - start_.radians());
    return offset > 0.0 && offset < length_;
}

Partition Partition::from_arcs(std::vector<Arc> arcs) {
    if (arcs.empty()) {
        throw InvalidInput("partition requires at least one arc");
    }
    const std::size_t n = arcs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Angle end = arcs[i].end();
        const Angle next_start = arcs[(i + 1) % n].start();
        if (circular_distance(end, next_start) > angle_tolerance) {
            const double forward_gap = canonical_angle(next_start.radians() - end.radians());
            std::ostringstream msg;
            if (forward_gap > std::numbers::pi) {
                msg << "arcs overlap at angle " << next_start.radians() << ": arc " << i
                    << " ends at " << end.radians() << " past the start of arc "
                    << (i + 1) % n;
            } else {
                msg << "arcs leave a gap at angle " << end.radians() << ": arc " << i
                    << " ends before arc " << (i + 1) % n << " starts at "
                    << next_start.radians();
            }
            throw InvalidInput(msg.str());
        }
    }
    double total = 0.0;
    for (const Arc& arc : arcs) {
        total += arc.length();
    }
    if (std::fabs(total - two_pi) > 1e-10) {
        std::ostringstream msg;
        msg << "arc lengths sum to " << total
            << "; a partition must cover the circle exactly once";
        throw InvalidInput(msg.str());
    }
    return Partition(std::move(arcs));
}

Partition Partition::from_lengths(Angle first_start, std::span<const double> lengths) {
    if (lengths.empty()) {
        throw InvalidInput("partition requires at least one arc length");
    }
    double total = 0.0;
    for (double length : lengths) {
        if (!(length > 0.0) || length > two_pi) {
            throw InvalidInput("arc lengths must lie in (0, 2*pi]");
        }
        total += length;
    }
    if (std::fabs(total - two_pi) > 1e-10) {
        std::ostringstream msg;
        msg << "arc lengths sum to " << total << ", expected 2*pi";
        throw InvalidInput(msg.str());
    }
    std::vector<Arc> arcs;
    arcs.reserve(lengths.size());
    double cursor = first_start.radians();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const Angle start(cursor);
        cursor += lengths[i];
        const Angle end = (i + 1 == lengths.size()) ? first_start : Angle(cursor);
        arcs.emplace_back(start, end);
    }
    return from_arcs(std::move(arcs));
}

std::vector<Angle> Partition::midpoints() const {
    std::vector<Angle> result;
    result.reserve(arcs_.size());
    for (const Arc& arc : arcs_) {
        result.push_back(arc.midpoint());
    }
    return result;
}

std::vector<Angle> Partition::boundary_points() const {
    std::vector<Angle> result;
    result.reserve(arcs_.size());
    for (const Arc& arc : arcs_) {
        result.push_back(arc.start());
    }
    return result;
}

double Partition::min_arc_length() const {
    double shortest = arcs_.front().length();
    for (const Arc& arc : arcs_) {
        shortest = std::min(shortest, arc.length());
    }
    return shortest;
}

}  // namespace blaschke
