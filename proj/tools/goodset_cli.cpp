#include <algorithm>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <goodset/goodset.hpp>

namespace {

using goodset::GoodSet;
using goodset::Point;
using json = nlohmann::json;
namespace io = goodset::io;
namespace curve = goodset::curve;
namespace fs = std::filesystem;

enum Exit : int { ok = 0, invalid = 1, bound_too_small = 2, usage = 3 };

struct Outcome {
    int code = ok;
    json body;
    std::string text;  // non-JSON payload (render)
};

Outcome failure(int code, const std::string& kind, const std::string& message, json extra = json::object()) {
    extra["kind"] = kind;
    extra["message"] = message;
    return {code, json{{"error", extra}}, {}};
}

template <class F>
Outcome guarded(F&& body) {
    try {
        return body();
    } catch (const curve::BoundTooSmall& e) {
        return failure(bound_too_small, "BoundTooSmall", e.what(), json{{"bound", io::to_json(e.bound())}});
    } catch (const goodset::ValidationError& e) {
        json extra = json::object();
        if (!e.pair().empty()) extra["pair"] = io::to_json(e.pair());
        if (e.label()) extra["label"] = *e.label();
        return failure(invalid, goodset::to_string(e.kind()), e.what(), extra);
    } catch (const io::format_error& e) {
        return failure(invalid, "FormatError", e.what());
    } catch (const curve::parse_error& e) {
        return failure(invalid, "ParseError", e.what());
    } catch (const curve::unknown_name& e) {
        return failure(invalid, "UnknownName", e.what());
    } catch (const io::input_error& e) {
        return failure(usage, "InputError", e.what());
    } catch (const goodset::precondition_error& e) {
        return failure(usage, "PreconditionError", e.what());
    } catch (const goodset::rank_cap_exceeded& e) {
        return failure(usage, "RankCapExceeded", e.what());
    } catch (const goodset::dimension_mismatch& e) {
        return failure(usage, "DimensionMismatch", e.what());
    } catch (const goodset::error& e) {
        return failure(invalid, "Error", e.what());
    } catch (const std::exception& e) {
        return failure(invalid, "Error", e.what());
    }
}

Point parse_point(const std::string& s) {
    std::vector<goodset::Coord> c;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw goodset::precondition_error("not a point: '" + s + "'");
        }
    }
    if (c.empty()) throw goodset::precondition_error("empty point");
    return Point(std::move(c));
}

struct Loaded {
    std::string path;
    json doc;
    std::string hash;
};

Loaded load(const std::string& path) {
    std::string bytes = io::read_file(path);
    return {path, io::parse(bytes, path), io::fnv1a_hex(bytes)};
}

json input_json(const Loaded& in) { return json{{"path", in.path}, {"fnv1a", in.hash}}; }

struct CurveSource {
    bool from_curve = false;
    std::string bound;
    std::string ideal;
};

std::optional<Point> optional_point(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_point(s);
}

/// A good set from a good-set file or, with from_curve, from a curve file.
/// The second member is the ring's value set when an ideal was selected.
std::pair<GoodSet, std::optional<GoodSet>> good_set_of(const Loaded& in, bool normalize, const CurveSource& src) {
    if (!src.from_curve) {
        if (io::is_curve_document(in.doc))
            throw goodset::precondition_error(in.path + " is a curve file; pass --from-curve");
        return {io::good_set_from_json(in.doc, normalize), std::nullopt};
    }
    auto ring = io::curve_from_json(in.doc);
    auto [s, bound] = curve::auto_value_set(ring, curve::Ring{}, optional_point(src.bound));
    if (src.ideal.empty()) return {s, std::nullopt};
    return {curve::value_set(ring, ring.ideal(src.ideal), bound), s};
}

std::string pretty(const json& j, int indent = 0) {
    std::ostringstream out;
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (it.key() == "checks" && v.is_array()) {
            out << pad << "checks:\n";
            for (const auto& c : v) {
                out << pad << "  " << (c.at("passed").get<bool>() ? "PASS " : "FAIL ") << c.at("name").get<std::string>();
                if (c.contains("detail")) out << " (" << c["detail"].get<std::string>() << ")";
                if (!c.at("witnesses").empty()) out << " [" << c["witnesses"].size() << " witnesses]";
                out << "\n";
            }
        } else if (v.is_object()) {
            out << pad << it.key() << ":\n" << pretty(v, indent + 2);
        } else if (v.is_array() && v.size() > 12) {
            out << pad << it.key() << ": " << v.size() << " entries\n";
        } else {
            out << pad << it.key() << ": " << v.dump() << "\n";
        }
    }
    return out.str();
}

int emit(const Outcome& o, bool pretty_out) {
    if (!o.text.empty() && o.code == ok) {
        std::cout << o.text;
    } else if (pretty_out) {
        std::cout << pretty(o.body);
    } else {
        std::cout << o.body.dump(2) << "\n";
    }
    if (o.code != ok && o.body.contains("error"))
        std::cerr << "error: " << o.body["error"]["message"].get<std::string>() << "\n";
    return o.code;
}

/// Run one per-file command over every *.json in a directory, concurrently; the
/// merged document is ordered by file name and one failure does not stop the rest.
Outcome batch(const std::string& dir, const std::function<Outcome(const std::string&)>& one) {
    if (!fs::is_directory(dir)) return failure(usage, "InputError", "not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& ent : fs::directory_iterator(dir))
        if (ent.is_regular_file() && ent.path().extension() == ".json") files.push_back(ent.path());
    std::sort(files.begin(), files.end());
    std::vector<std::future<Outcome>> jobs;
    for (const auto& f : files) jobs.push_back(std::async(std::launch::async, one, f.string()));
    json results = json::object();
    int passed = 0, failed = 0, code = ok;
    for (std::size_t k = 0; k < files.size(); ++k) {
        Outcome o = jobs[k].get();
        results[files[k].filename().string()] = json{{"exit_code", o.code}, {"result", o.body}};
        if (o.code == ok) {
            ++passed;
        } else {
            ++failed;
            if (code == ok) code = o.code;
        }
    }
    return {code, json{{"files", results}, {"summary", json{{"total", files.size()}, {"ok", passed}, {"failed", failed}}}}, {}};
}

struct Common {
    std::string file, dir;
    bool normalize = false;
    bool pretty = false;
    CurveSource src;
};

void add_common(CLI::App* cmd, Common& c, bool allow_dir) {
    if (allow_dir) {
        auto* f = cmd->add_option("file", c.file, "input JSON file");
        auto* d = cmd->add_option("--dir", c.dir, "process every *.json file in a directory");
        f->excludes(d);
        d->excludes(f);
    } else {
        cmd->add_option("file", c.file, "input JSON file")->required();
    }
    cmd->add_flag("--normalize", c.normalize, "lower a non-minimal conductor instead of rejecting it");
    cmd->add_flag("--pretty", c.pretty, "human-readable summary instead of JSON");
    cmd->add_flag("--from-curve", c.src.from_curve, "read a curve file and use its value set");
    cmd->add_option("--bound", c.src.bound, "box bound for --from-curve, e.g. 4,4");
    cmd->add_option("--ideal", c.src.ideal, "with --from-curve, take the value set of this ideal");
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
#ifdef GOODSET_CURVE_ALIAS
    args.insert(args.begin() + 1, "curve");
#endif
    CLI::App app{"Value sets of curve singularities: good sets, maximals, Apery sets, duality, colengths"};
    app.require_subcommand(1);
    app.set_version_flag("--version", goodset::report::tool_version);

    Outcome result;
    bool pretty_out = false;

    // validate
    Common val;
    auto* validate = app.add_subcommand("validate", "check a good-set file and print its canonical form");
    add_common(validate, val, true);
    validate->callback([&] {
        pretty_out = val.pretty;
        auto one = [&](const std::string& path) {
            return guarded([&] {
                auto in = load(path);
                auto [e, s] = good_set_of(in, val.normalize, val.src);
                return Outcome{ok, json{{"input", input_json(in)}, {"valid", true}, {"good_set", io::to_json(e)}}, {}};
            });
        };
        result = val.dir.empty() ? one(val.file) : batch(val.dir, one);
    });

    // analyze
    Common an;
    std::string an_semigroup;
    bool an_transform = false;
    auto* analyze = app.add_subcommand("analyze", "maximals, p/q table, symmetry and the duality checks");
    add_common(analyze, an, true);
    analyze->add_option("--semigroup", an_semigroup, "good-set file of the reference semigroup S");
    analyze->add_flag("--transform", an_transform, "include Pol(E) and check against it");
    analyze->callback([&] {
        pretty_out = an.pretty;
        auto one = [&](const std::string& path) {
            return guarded([&] {
                auto in = load(path);
                auto [e, s] = good_set_of(in, an.normalize, an.src);
                goodset::report::AnalyzeOptions opt;
                opt.semigroup = s;
                if (!an_semigroup.empty()) opt.semigroup = io::good_set_from_json(load(an_semigroup).doc, an.normalize);
                opt.transform = an_transform;
                json out = goodset::report::analyze(e, opt);
                out["input"] = input_json(in);
                return Outcome{ok, out, {}};
            });
        };
        if (an.dir.empty() && an.file.empty()) throw CLI::RequiredError("file or --dir");
        result = an.dir.empty() ? one(an.file) : batch(an.dir, one);
    });

    // dual
    Common du;
    std::string du_semigroup;
    auto* dual = app.add_subcommand("dual", "Pol transform of E with respect to S");
    add_common(dual, du, false);
    dual->add_option("--semigroup", du_semigroup, "good-set file of S (default: E itself)");
    dual->callback([&] {
        pretty_out = du.pretty;
        result = guarded([&] {
            auto in = load(du.file);
            auto [e, s] = good_set_of(in, du.normalize, du.src);
            GoodSet ref = s.value_or(e);
            if (!du_semigroup.empty()) ref = io::good_set_from_json(load(du_semigroup).doc, du.normalize);
            GoodSet t = goodset::pol_transform(e, ref);
            json out{{"input", input_json(in)},
                     {"tool", goodset::report::tool_json()},
                     {"semigroup", io::to_json(ref)},
                     {"transform", io::to_json(t)},
                     {"symmetric", goodset::symmetry_check(ref).symmetric}};
            return Outcome{ok, out, {}};
        });
    });

    // colength
    Common co;
    std::string co_sub, co_gamma;
    auto* col = app.add_subcommand("colength", "l(E/D) and the colength formulas");
    add_common(col, co, false);
    col->add_option("--sub", co_sub, "good-set file of D ⊆ E (default: the orthant at c(E))");
    col->add_option("--gamma", co_gamma, "gamma for the truncation formulas (default c(E)+e)");
    col->callback([&] {
        pretty_out = co.pretty;
        result = guarded([&] {
            auto in = load(co.file);
            auto [e, s] = good_set_of(in, co.normalize, co.src);
            GoodSet d = co_sub.empty() ? goodset::orthant(e.conductor(), e.labels())
                                       : io::good_set_from_json(load(co_sub).doc, co.normalize);
            Point gamma = co_gamma.empty() ? e.conductor() + goodset::ones(e.dim()) : parse_point(co_gamma);
            json out{{"input", input_json(in)},
                     {"tool", goodset::report::tool_json()},
                     {"colength", goodset::colength(e, d)},
                     {"gamma", io::to_json(gamma)},
                     {"chain", goodset::ell_truncation(e, gamma)},
                     {"recursive", goodset::colength_recursive_formula(e, gamma)}};
            if (e.dim() == 2) out["closed_r2"] = goodset::colength_r2_formula(e, gamma);
            if (goodset::algebra_check(e, goodset::AlgebraMode::semigroup)) {
                out["delta"] = goodset::delta_invariant(e);
                out["length_test"] = goodset::gorenstein_length_test(e);
            }
            return Outcome{ok, out, {}};
        });
    });

    // apery
    Common ap;
    std::string ap_alpha, ap_hi;
    auto* apery = app.add_subcommand("apery", "Apery set window and the Apery symmetry check");
    add_common(apery, ap, false);
    apery->add_option("--alpha", ap_alpha, "alpha in E, e.g. 1,1")->required();
    apery->add_option("--hi", ap_hi, "upper corner of the window (default c(E)+alpha)");
    apery->callback([&] {
        pretty_out = ap.pretty;
        result = guarded([&] {
            auto in = load(ap.file);
            auto [e, s] = good_set_of(in, ap.normalize, ap.src);
            const Point alpha = parse_point(ap_alpha);
            const Point hi = ap_hi.empty() ? e.conductor() + alpha : parse_point(ap_hi);
            json out{{"input", input_json(in)},
                     {"tool", goodset::report::tool_json()},
                     {"alpha", io::to_json(alpha)},
                     {"window_hi", io::to_json(hi)},
                     {"apery_set", io::to_json(goodset::apery_window(e, alpha, hi))}};
            if (goodset::algebra_check(e, goodset::AlgebraMode::semigroup))
                out["checks"] = json::array({io::to_json(goodset::apery_symmetry_check(e, e, e, alpha))});
            return Outcome{ok, out, {}};
        });
    });

    // render
    Common re;
    std::string re_format = "text";
    auto* render = app.add_subcommand("render", "draw a value set (r <= 3) as a text grid or SVG");
    add_common(render, re, false);
    render->add_option("--format", re_format, "text or svg")->check(CLI::IsMember({"text", "svg"}));
    render->callback([&] {
        result = guarded([&] {
            auto in = load(re.file);
            auto [e, s] = good_set_of(in, re.normalize, re.src);
            return Outcome{ok, json::object(),
                           re_format == "svg" ? goodset::render::svg(e) : goodset::render::text(e)};
        });
    });

    // curve ingest | report
    auto* cv = app.add_subcommand("curve", "parametrized curves");
    cv->require_subcommand(1);
    std::string ci_file, ci_bound, ci_ideal;
    bool ci_dual = false, ci_pretty = false;
    auto* ingest = cv->add_subcommand("ingest", "value set of the ring or of an ideal");
    ingest->add_option("file", ci_file, "curve JSON file")->required();
    ingest->add_option("--bound", ci_bound, "box bound b1,...,br")->required();
    ingest->add_option("--ideal", ci_ideal, "ideal name from the file");
    ingest->add_flag("--dual", ci_dual, "value set of the dual (O : I) instead");
    ingest->add_flag("--pretty", ci_pretty, "human-readable summary instead of JSON");
    ingest->callback([&] {
        pretty_out = ci_pretty;
        result = guarded([&] {
            auto in = load(ci_file);
            auto ring = io::curve_from_json(in.doc);
            const Point bound = parse_point(ci_bound);
            curve::Module m = curve::Ring{};
            if (!ci_ideal.empty()) m = ring.ideal(ci_ideal);
            GoodSet e = ci_dual ? curve::dual_value_set(ring, m, bound) : curve::value_set(ring, m, bound);
            json out{{"input", input_json(in)},
                     {"tool", goodset::report::tool_json()},
                     {"module", ci_ideal.empty() ? "ring" : ci_ideal},
                     {"dual", ci_dual},
                     {"bound", io::to_json(bound)},
                     {"good_set", io::to_json(e)}};
            return Outcome{ok, out, {}};
        });
    });
    std::string cr_file, cr_bound;
    std::vector<std::string> cr_partitions;
    bool cr_pretty = false;
    auto* crep = cv->add_subcommand("report", "delta, intersection multiplicities and conductor checks");
    crep->add_option("file", cr_file, "curve JSON file")->required();
    crep->add_option("--bound", cr_bound, "starting bound (doubled until sufficient)");
    crep->add_option("--partition", cr_partitions, "partition of J as parts joined by '|', e.g. 1|2,3")
        ->expected(0, -1);
    crep->add_flag("--pretty", cr_pretty, "human-readable summary instead of JSON");
    crep->callback([&] {
        pretty_out = cr_pretty;
        result = guarded([&] {
            auto in = load(cr_file);
            auto ring = io::curve_from_json(in.doc);
            std::vector<curve::PartitionRequest> reqs;
            for (const auto& spec : cr_partitions) {
                curve::PartitionRequest req;
                std::stringstream ss(spec);
                std::string part;
                while (std::getline(ss, part, '|')) {
                    Point p = parse_point(part);
                    goodset::Labels t(p.begin(), p.end());
                    req.j.insert(req.j.end(), t.begin(), t.end());
                    req.parts.push_back(t);
                }
                reqs.push_back(req);
            }
            auto rep = curve::curve_invariants_report(ring, optional_point(cr_bound), reqs);
            json out = goodset::report::curve_report_json(rep);
            out["input"] = input_json(in);
            return Outcome{ok, out, {}};
        });
    });

    try {
        std::vector<const char*> cargs;
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    } catch (const goodset::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return emit(result, pretty_out);
}
