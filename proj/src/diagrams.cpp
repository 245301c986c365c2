#include "superlum/diagrams.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <tuple>

#include "superlum/error.hpp"
#include "superlum/kernels.hpp"
#include "superlum/tolerance.hpp"

namespace superlum {

std::string_view to_string(SpeedClass s) noexcept {
    switch (s) {
        case SpeedClass::Subluminal: return "subluminal";
        case SpeedClass::Luminal: return "luminal";
        case SpeedClass::Superluminal: return "superluminal";
    }
    return "unknown";
}

std::string_view to_string(Role r) noexcept {
    return r == Role::Emission ? "emission" : "absorption";
}

namespace {

const Event1p1& event_at(const Diagram& d, const std::string& label) {
    const auto it = d.events.find(label);
    if (it == d.events.end()) {
        throw Error(ErrorCode::InvalidDiagram, "unknown event label '" + label + "'");
    }
    return it->second;
}

using Adjacency = std::map<std::string, std::vector<std::string>>;

Adjacency outgoing(const Diagram& d) {
    Adjacency adj;
    for (const auto& [label, _] : d.events) adj[label];
    for (const auto& s : d.segments) adj[s.from].push_back(s.to);
    return adj;
}

void require_acyclic(const Adjacency& adj) {
    enum class Mark { White, Grey, Black };
    std::map<std::string, Mark> mark;
    std::function<void(const std::string&)> visit = [&](const std::string& v) {
        mark[v] = Mark::Grey;
        for (const auto& w : adj.at(v)) {
            if (mark[w] == Mark::Grey) {
                throw Error(ErrorCode::CyclicDiagram, "cycle through '" + w + "'");
            }
            if (mark[w] == Mark::White) visit(w);
        }
        mark[v] = Mark::Black;
    };
    for (const auto& [v, _] : adj) {
        if (mark[v] == Mark::White) visit(v);
    }
}

}  // namespace

void validate(const Diagram& d) {
    if (!(d.c > 0.0) || !std::isfinite(d.c)) {
        throw Error(ErrorCode::InvalidDiagram, "c must be positive");
    }
    for (const auto& s : d.segments) {
        if (s.from == s.to) {
            throw Error(ErrorCode::InvalidDiagram, "segment '" + s.from + "' joins an event to itself");
        }
        const auto& a = event_at(d, s.from);
        const auto& b = event_at(d, s.to);
        if (a.t == b.t && a.x == b.x) {
            throw Error(ErrorCode::ZeroExtent,
                        "segment " + s.from + "->" + s.to + " has zero spacetime extent");
        }
    }
}

SpeedClass classify_segment(const Event1p1& from, const Event1p1& to, double c, double tol) {
    const double time_extent = c * std::abs(to.t - from.t);
    const double space_extent = std::abs(to.x - from.x);
    if (time_extent == 0.0 && space_extent == 0.0) {
        throw Error(ErrorCode::ZeroExtent, "segment has zero spacetime extent");
    }
    const double band = tol * std::max(time_extent, space_extent);
    if (space_extent < time_extent - band) return SpeedClass::Subluminal;
    if (std::abs(space_extent - time_extent) <= band) return SpeedClass::Luminal;
    return SpeedClass::Superluminal;
}

SpeedClass classify_segment(const Diagram& d, const Segment& s) {
    return classify_segment(event_at(d, s.from), event_at(d, s.to), d.c);
}

bool precedes(const Event1p1& a, const Event1p1& b) {
    return std::tie(a.t, a.x) < std::tie(b.t, b.x);
}

Diagram transform_diagram(const Diagram& d, const Boost& b) {
    validate(d);
    const Matrix2 m = boost_matrix(b);

    std::vector<double> t;
    std::vector<double> x;
    t.reserve(d.events.size());
    x.reserve(d.events.size());
    for (const auto& [_, e] : d.events) {
        t.push_back(e.t);
        x.push_back(e.x);
    }
    kernels::boost_1p1(m, d.c, t, x, t, x);

    Diagram out;
    out.c = d.c;
    out.source = d.source;
    out.sinks = d.sinks;
    std::size_t i = 0;
    for (const auto& [label, _] : d.events) {
        out.events.emplace(label, Event1p1{t[i], x[i]});
        ++i;
    }

    out.segments.reserve(d.segments.size());
    for (const auto& s : d.segments) {
        const auto& a = out.events.at(s.from);
        const auto& e = out.events.at(s.to);
        const double scale = std::max({std::abs(a.t), std::abs(e.t), 1.0});
        if (std::abs(e.t - a.t) <= kAbsTol * scale) {
            out.segments.push_back(s);
        } else if (e.t < a.t) {
            out.segments.push_back(Segment{s.to, s.from});
        } else {
            out.segments.push_back(s);
        }
    }
    std::stable_sort(out.segments.begin(), out.segments.end(),
                     [&](const Segment& l, const Segment& r) {
                         const auto& lf = out.events.at(l.from);
                         const auto& rf = out.events.at(r.from);
                         if (precedes(lf, rf)) return true;
                         if (precedes(rf, lf)) return false;
                         return precedes(out.events.at(l.to), out.events.at(r.to));
                     });
    return out;
}

PathCount count_paths(const Diagram& d, const std::string& source,
                      const std::vector<std::string>& sinks) {
    event_at(d, source);
    for (const auto& s : sinks) event_at(d, s);
    const Adjacency adj = outgoing(d);
    require_acyclic(adj);

    const std::set<std::string> sink_set(sinks.begin(), sinks.end());
    PathCount result;
    result.set.sources = {source};
    result.set.sinks = sinks;

    std::vector<std::string> chain{source};
    std::function<void(const std::string&)> walk = [&](const std::string& v) {
        for (const auto& w : adj.at(v)) {
            chain.push_back(w);
            if (sink_set.contains(w)) result.set.paths.push_back(chain);
            walk(w);
            chain.pop_back();
        }
    };
    walk(source);
    result.count = result.set.paths.size();
    return result;
}

PathSet frame_endpoints(const Diagram& d) {
    std::map<std::string, int> in_degree;
    std::map<std::string, int> out_degree;
    for (const auto& s : d.segments) {
        ++out_degree[s.from];
        ++in_degree[s.to];
    }
    PathSet ends;
    for (const auto& [label, _] : d.events) {
        const int in = in_degree[label];
        const int out = out_degree[label];
        if (in == 0 && out > 0) ends.sources.push_back(label);
        if (out == 0 && in > 0) ends.sinks.push_back(label);
    }
    return ends;
}

PathCount count_frame_paths(const Diagram& d) {
    PathCount total;
    total.set = frame_endpoints(d);
    for (const auto& src : total.set.sources) {
        auto part = count_paths(d, src, total.set.sinks);
        for (auto& p : part.set.paths) total.set.paths.push_back(std::move(p));
    }
    total.count = total.set.paths.size();
    return total;
}

std::vector<RoleEntry> role_report(const Diagram& d) {
    std::map<std::string, int> in_degree;
    std::map<std::string, int> out_degree;
    for (const auto& s : d.segments) {
        ++out_degree[s.from];
        ++in_degree[s.to];
    }
    std::vector<RoleEntry> roles;
    for (const auto& [label, _] : d.events) {
        const int in = in_degree[label];
        const int out = out_degree[label];
        if (in + out == 0) {
            throw Error(ErrorCode::IsolatedEvent, "event '" + label + "' touches no segment");
        }
        if (in + out < 2 || in == out) continue;
        roles.push_back(RoleEntry{label, out > in ? Role::Emission : Role::Absorption});
    }
    return roles;
}

}  // namespace superlum
