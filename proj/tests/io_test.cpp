#include <gtest/gtest.h>

#include <goodset/io.hpp>
#include <goodset/render.hpp>
#include <goodset/report.hpp>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_sets.hpp"

using namespace goodset;
using namespace fixtures;
using io::json;

namespace {

json load(const std::string& rel) { return io::parse(io::read_file(std::string(GOODSET_DATA_DIR) + "/" + rel), rel); }

bool has_check(const json& checks, const std::string& name, bool passed) {
    for (const auto& c : checks)
        if (c["name"] == name) return c["passed"].get<bool>() == passed;
    return false;
}

}  // namespace

TEST(Io, GoodSetRoundTrip) {
    for (const auto& s : {s_cusp(), s_node(), s_axes(), s_tacnode(), m_tacnode()})
        EXPECT_EQ(io::good_set_from_json(io::to_json(s)), s);
    EXPECT_EQ(io::good_set_from_json(load("goodsets/s_d.json")), s_tacnode());
}

TEST(Io, GoodSetErrors) {
    EXPECT_THROW(io::good_set_from_json(json{{"r", 2}}), io::format_error);
    EXPECT_THROW(io::good_set_from_json(json{{"points", {{0, "a"}}}}), io::format_error);
    try {
        io::good_set_from_json(load("invalid/property_b.json"));
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::property_b);
    }
    json hdr{{"points", {{0, 0}, {1, 1}}}, {"conductor", {2, 2}}};
    try {
        io::good_set_from_json(hdr);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.kind(), ValidationError::Kind::inconsistent_header);
    }
    json loose{{"points", {{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
    EXPECT_THROW(io::good_set_from_json(loose), ValidationError);
    EXPECT_EQ(io::good_set_from_json(loose, true), natural(2));
    EXPECT_THROW(io::parse(io::read_file(std::string(GOODSET_DATA_DIR) + "/invalid/not_json.json"), "x"),
                 io::format_error);
    EXPECT_THROW(io::read_file("/nonexistent/file.json"), io::input_error);
}

TEST(Io, CurveFiles) {
    auto b = io::curve_from_json(load("curves/fix_b.json"));
    EXPECT_EQ(b.dim(), 2u);
    EXPECT_EQ(b.ideal("m").generators.size(), 2u);
    json withden = load("curves/fix_b.json");
    withden["ideals"]["q"] = json{{"generators", {"x", "y"}}, {"denominator", "x+y"}};
    auto q = io::curve_from_json(withden);
    ASSERT_TRUE(q.ideal("q").denominator.has_value());
    json bad = withden;
    bad["branches"][0]["x"] = "t +";
    EXPECT_THROW(io::curve_from_json(bad), curve::parse_error);
    bad = withden;
    bad.erase("variables");
    EXPECT_THROW(io::curve_from_json(bad), io::format_error);
}

TEST(Io, HashIsStable) {
    EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
    EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Render, NodeGrid) {
    // rows y = 2..-1, columns x = -1..2
    EXPECT_EQ(render::text(s_node()), "..##\n..##\n.M..\n....\n");
}

TEST(Render, TacnodeGrid) {
    EXPECT_EQ(render::text(s_tacnode()), "...##\n...##\n..M..\n.M...\n.....\n");
}

TEST(Render, StripAndPanels) {
    EXPECT_EQ(render::text(s_cusp()), ".#M##\n");
    auto three = render::text(s_axes());
    EXPECT_NE(three.find("[1,2]"), std::string::npos);
    EXPECT_NE(three.find("[2,3]"), std::string::npos);
    EXPECT_THROW(render::text(natural(4)), precondition_error);
}

TEST(Render, FrobeniusMarkerWhenNotMaximal) {
    std::mt19937_64 rng(701);
    int seen = 0;
    for (int t = 0; t < 300; ++t) {
        GoodSet s = testing_support::random_semigroup(rng, 2);
        const Point f = frobenius(s);
        auto m = maximals(s);
        const bool maximal = std::find(m.begin(), m.end(), f) != m.end();
        auto grid = render::text(s);
        EXPECT_EQ(std::count(grid.begin(), grid.end(), 'X'), maximal ? 0 : 1);
        EXPECT_EQ(static_cast<std::size_t>(std::count(grid.begin(), grid.end(), 'M')), m.size());
        seen += !maximal;
    }
    EXPECT_GT(seen, 0);
}

TEST(Render, SvgSize) {
    auto svg = render::svg(s_node());
    EXPECT_NE(svg.find("width=\"96\" height=\"96\""), std::string::npos);
}

TEST(Report, AnalyzeNode) {
    json r = report::analyze(s_node());
    EXPECT_TRUE(r["symmetry"]["symmetric"].get<bool>());
    EXPECT_EQ(r["maximals"].size(), 1u);
    EXPECT_EQ(r["maximals"][0]["point"], json({0, 0}));
    EXPECT_EQ(r["frobenius"], json({0, 0}));
    for (const auto& c : r["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
}

TEST(Report, AnalyzeAxes) {
    json r = report::analyze(s_axes());
    EXPECT_FALSE(r["symmetry"]["symmetric"].get<bool>());
    bool found = false;
    for (const auto& w : r["symmetry"]["witnesses"])
        if (w["alpha"] == json({1, 0, 0})) found = true;
    EXPECT_TRUE(found);
    EXPECT_TRUE(has_check(r["checks"], "local_duality_eq", false));
    EXPECT_TRUE(has_check(r["checks"], "pq_duality_eq", false));
    EXPECT_TRUE(has_check(r["checks"], "apery_symmetry", false));
}

TEST(Report, AnalyzeMonomodule) {
    report::AnalyzeOptions opt;
    opt.semigroup = s_node();
    json r = report::analyze(m_node(), opt);
    EXPECT_FALSE(r["is_semigroup"].get<bool>());
    EXPECT_TRUE(r["is_monomodule"].get<bool>());
    EXPECT_EQ(io::good_set_from_json(r["transform"]), natural(2));
}

TEST(Report, Deterministic) {
    for (const auto& s : {s_node(), s_axes(), s_tacnode()})
        EXPECT_EQ(report::analyze(s).dump(), report::analyze(s).dump());
}
