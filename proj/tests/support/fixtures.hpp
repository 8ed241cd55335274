#pragma once

#include <goodset/good_set.hpp>

// Value sets of the reference curves, written out by hand from their
// parametrizations. They are also recomputed from the curves in curve_test.
namespace fixtures {

using goodset::GoodSet;
using goodset::Point;

// x = t^2, y = t^3
inline GoodSet s_cusp() { return goodset::validate_good_set(1, {Point{0}, Point{2}}); }

// node xy = 0
inline GoodSet s_node() { return goodset::validate_good_set(2, {Point{0, 0}, Point{1, 1}}); }

// the three coordinate axes in 3-space
inline GoodSet s_axes() { return goodset::validate_good_set(3, {Point{0, 0, 0}, Point{1, 1, 1}}); }

// tacnode y(y - x^2) = 0
inline GoodSet s_tacnode() { return goodset::validate_good_set(2, {Point{0, 0}, Point{1, 1}, Point{2, 2}}); }

// maximal ideals
inline GoodSet m_cusp() { return goodset::orthant(Point{2}); }
inline GoodSet m_node() { return goodset::orthant(Point{1, 1}); }
inline GoodSet m_axes() { return goodset::orthant(Point{1, 1, 1}); }
inline GoodSet m_tacnode() { return goodset::validate_good_set(2, {Point{1, 1}, Point{2, 2}}); }

inline GoodSet natural(std::size_t r) { return goodset::natural_set(goodset::default_labels(r)); }

}  // namespace fixtures
