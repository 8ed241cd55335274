#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "goodset/maximals.hpp"

namespace goodset::render {

// '#' member, '.' gap, 'M' maximal (relative and absolute), 'R' relative only,
// 'A' absolute only, 'X' Frobenius vector when it is not maximal.
struct Grid {
    Labels axes;  // labels of the horizontal and (for r = 2) vertical axis
    Point lo;     // lower-left cell
    std::vector<std::string> rows;  // top row first
};

namespace detail {

inline char marker(const GoodSet& e, const std::map<Point, MaximalClassification>& maxi, const Point& p,
                   const Point& f) {
    if (auto it = maxi.find(p); it != maxi.end()) {
        const auto& c = it->second;
        if (c.is_relative && c.is_absolute) return 'M';
        if (c.is_relative) return 'R';
        if (c.is_absolute) return 'A';
        return 'M';
    }
    if (p == f) return 'X';
    return e.contains(p) ? '#' : '.';
}

}  // namespace detail

/// Cells over [m − e, c + 2e) for r ≤ 2.
inline Grid grid(const GoodSet& e) {
    if (e.dim() > 2) throw precondition_error("grid needs r <= 2; use grids() for r = 3");
    std::map<Point, MaximalClassification> maxi;
    for (const auto& m : maximal_points(e)) maxi.emplace(m.point, m);
    const Point f = e.conductor() - ones(e.dim());
    const Point lo = e.min() - ones(e.dim());
    const Point hi = e.conductor() + ones(e.dim());  // inclusive
    Grid g{e.labels(), lo, {}};
    if (e.dim() == 1) {
        std::string row;
        for (Coord x = lo[0]; x <= hi[0]; ++x) row += detail::marker(e, maxi, Point{x}, f);
        g.rows.push_back(row);
        return g;
    }
    for (Coord y = hi[1]; y >= lo[1]; --y) {
        std::string row;
        for (Coord x = lo[0]; x <= hi[0]; ++x) row += detail::marker(e, maxi, Point{x, y}, f);
        g.rows.push_back(row);
    }
    return g;
}

/// r ≤ 2: one grid. r = 3: the three pairwise projections.
inline std::vector<Grid> grids(const GoodSet& e) {
    if (e.dim() <= 2) return {grid(e)};
    if (e.dim() > 3) throw precondition_error("render supports r <= 3");
    const auto& l = e.labels();
    return {grid(project(e, {l[0], l[1]})), grid(project(e, {l[0], l[2]})), grid(project(e, {l[1], l[2]}))};
}

inline std::string text(const GoodSet& e) {
    auto gs = grids(e);
    std::ostringstream out;
    for (std::size_t k = 0; k < gs.size(); ++k) {
        if (gs.size() > 1) {
            if (k) out << '\n';
            out << "[" << gs[k].axes[0] << "," << gs[k].axes[1] << "]\n";
        }
        for (const auto& row : gs[k].rows) out << row << '\n';
    }
    return out.str();
}

inline constexpr int cell_px = 24;

inline std::string svg(const GoodSet& e) {
    auto gs = grids(e);
    std::size_t width = 0, height = 0;
    for (const auto& g : gs) {
        width = std::max(width, g.rows.front().size());
        height += g.rows.size();
    }
    height += gs.size() - 1;  // one blank row between panels
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width * cell_px << "\" height=\""
        << height * cell_px << "\" viewBox=\"0 0 " << width * cell_px << ' ' << height * cell_px << "\">\n";
    std::size_t row0 = 0;
    const int h = cell_px / 2;
    for (const auto& g : gs) {
        for (std::size_t y = 0; y < g.rows.size(); ++y)
            for (std::size_t x = 0; x < g.rows[y].size(); ++x) {
                const char c = g.rows[y][x];
                const std::size_t px = x * cell_px, py = (row0 + y) * cell_px;
                out << "  <rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell_px << "\" height=\"" << cell_px
                    << "\" fill=\"#ffffff\" stroke=\"#cccccc\"/>\n";
                const std::size_t cx = px + h, cy = py + h;
                switch (c) {
                    case '#':
                        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"7\" fill=\"#222222\"/>\n";
                        break;
                    case '.':
                        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy
                            << "\" r=\"7\" fill=\"none\" stroke=\"#222222\"/>\n";
                        break;
                    case 'X':
                        out << "  <path d=\"M" << cx - 7 << ' ' << cy - 7 << "L" << cx + 7 << ' ' << cy + 7 << "M"
                            << cx - 7 << ' ' << cy + 7 << "L" << cx + 7 << ' ' << cy - 7
                            << "\" stroke=\"#c00000\" stroke-width=\"2\"/>\n";
                        break;
                    default:  // M, R, A
                        out << "  <rect x=\"" << cx - 8 << "\" y=\"" << cy - 8
                            << "\" width=\"16\" height=\"16\" fill=\"" << (c == 'M' ? "#1f5fbf" : c == 'R' ? "#2e8b57" : "#b8860b")
                            << "\"/>\n  <text x=\"" << cx << "\" y=\"" << cy + 4
                            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#ffffff\">" << c << "</text>\n";
                }
            }
        row0 += g.rows.size() + 1;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace goodset::render
