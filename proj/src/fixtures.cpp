#include "superlum/fixtures.hpp"

namespace superlum::fixtures {

Diagram superluminal_exchange() {
    Diagram d;
    d.events = {{"A0", {-1.0, 0.0}}, {"A", {0.0, 0.0}}, {"A1", {2.0, 0.0}},
                {"B0", {-1.0, 3.0}}, {"B", {1.0, 3.0}}, {"B1", {2.0, 3.0}}};
    d.segments = {{"A0", "A"}, {"B0", "B"}, {"A", "A1"}, {"A", "B"}, {"B", "B1"}};
    d.source = "A";
    d.sinks = {"B"};
    return d;
}

Diagram decay() {
    Diagram d;
    d.events = {{"P", {0.0, 0.0}}, {"D", {1.0, 0.0}}, {"C1", {3.0, -1.0}}, {"C2", {3.0, 1.2}}};
    d.segments = {{"P", "D"}, {"D", "C1"}, {"D", "C2"}};
    d.source = "P";
    d.sinks = {"C1", "C2"};
    return d;
}

Diagram mirror() {
    Diagram d;
    d.events = {{"A", {0.0, 0.0}}, {"M", {1.0, -1.0}}, {"B", {2.0, 0.0}}};
    d.segments = {{"A", "M"}, {"M", "B"}};
    d.source = "A";
    d.sinks = {"B"};
    return d;
}

Diagram scattering() {
    Diagram d;
    d.events = {{"A", {0.0, 0.0}}, {"alpha", {2.0, -1.0}}, {"B", {4.0, 0.0}}, {"B'", {4.0, -0.5}}};
    d.segments = {{"A", "alpha"}, {"alpha", "B'"}, {"alpha", "B"}};
    d.source = "A";
    d.sinks = {"B", "B'"};
    return d;
}

}  // namespace superlum::fixtures
