#pragma once

#include <string>
#include <vector>

#include "goodset/point.hpp"

namespace goodset {

/// One counterexample: the points involved plus a short reason.
struct Witness {
    std::vector<Point> points;
    std::string note;
};

/// Outcome of a named verification. `statement` is the property being tested,
/// written as a formula.
struct CheckResult {
    std::string name;
    std::string statement;
    bool passed = true;
    std::vector<Witness> witnesses;
    std::string detail;

    void fail(std::vector<Point> pts, std::string note) {
        passed = false;
        witnesses.push_back({std::move(pts), std::move(note)});
    }
};

}  // namespace goodset
