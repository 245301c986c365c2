#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "superlum/kinematics.hpp"

namespace superlum {

enum class SpeedClass { Subluminal, Luminal, Superluminal };

std::string_view to_string(SpeedClass s) noexcept;

/// A worldline piece between two labeled events, directed from the earlier
/// event to the later one in the diagram's current frame.
struct Segment {
    std::string from;
    std::string to;

    bool operator==(const Segment&) const = default;
};

/// A finite, piecewise-linear spacetime scenario.
///
/// `source` and `sinks` are the path query of the defining frame; they are
/// carried along unchanged by transform_diagram.
struct Diagram {
    double c = 1.0;
    std::map<std::string, Event1p1> events;
    std::vector<Segment> segments;
    std::string source;
    std::vector<std::string> sinks;
};

/// Throws InvalidDiagram for dangling endpoints or self-loops, ZeroExtent for
/// segments joining coincident events.
void validate(const Diagram& d);

/// Subluminal if |dx| < c|dt| - tol, Luminal within tol, Superluminal
/// otherwise (dt = 0 is infinite speed). tol is relative to max(|dx|, c|dt|).
SpeedClass classify_segment(const Event1p1& from, const Event1p1& to, double c = 1.0,
                            double tol = 1e-10);
SpeedClass classify_segment(const Diagram& d, const Segment& s);

/// Event order in the current frame: coordinate time, ties broken by x.
bool precedes(const Event1p1& a, const Event1p1& b);

/// Maps every event through the boost, re-directs each segment from its
/// earlier to its later endpoint and re-sorts segments by start time.
/// Segments whose endpoints become exactly simultaneous keep the direction
/// they had.
Diagram transform_diagram(const Diagram& d, const Boost& b);

struct PathSet {
    std::vector<std::string> sources;
    std::vector<std::string> sinks;
    std::vector<std::vector<std::string>> paths;
};

struct PathCount {
    std::size_t count = 0;
    PathSet set;
};

/// Distinct directed chains from source to any of the sinks along the
/// current segment directions. Throws CyclicDiagram.
PathCount count_paths(const Diagram& d, const std::string& source,
                      const std::vector<std::string>& sinks);

/// Events with no incoming segment (sources) and with no outgoing segment
/// (sinks) in the current frame.
PathSet frame_endpoints(const Diagram& d);

/// count_paths summed over every frame source to the frame sinks.
PathCount count_frame_paths(const Diagram& d);

enum class Role { Emission, Absorption };

std::string_view to_string(Role r) noexcept;

struct RoleEntry {
    std::string label;
    Role role;

    bool operator==(const RoleEntry&) const = default;
};

/// Roles of interaction vertices (events touching at least two segments):
/// more outgoing than incoming segments is an emission, the reverse an
/// absorption. Pass-through vertices and open worldline ends are not
/// reported. Throws IsolatedEvent for an event without segments.
std::vector<RoleEntry> role_report(const Diagram& d);

}  // namespace superlum
