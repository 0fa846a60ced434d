#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ckpolar/ckpolar.hpp"
#include "ckpolar/scene.hpp"

using namespace ckpolar;

namespace {

enum ExitCode { kOk = 0, kDomain = 1, kUsage = 2, kInternal = 3 };

std::string read_scene_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scene file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rational arg_rational(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string(flag) + ": " + e.what());
    }
}

Json verdict_pair(const char* key, bool value) {
    Json out = Json::object();
    out[key] = value;
    return out;
}

Json radius_json(const RadiusClass& r) {
    Json out = Json::object();
    out["kind"] = to_string(r.kind);
    out["exact"] = to_json(r.exact);
    out["approx"] = r.approx;
    return out;
}

Json hyperplane_row(const Subspace& h) { return to_json(annihilator(h).rows().front()); }

struct Options {
    std::string scene_path;
    std::string k, y, kperp, center, matrix;
    std::string lambda, mu;
    int bound = 2;
    std::size_t max_candidates = SearchBudget{}.max_candidates;
    std::uint64_t seed = 1;
    std::size_t count = 5;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar varieties, tangent cones, spheres and reflections in Cayley-Klein spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("scene", opt.scene_path, "Scene file (JSON), or - for standard input")->required();

    auto* polar_seq = app.add_subcommand("polar-sequence", "Filtration dimensions and polar sequence of K");
    polar_seq->add_option("--k", opt.k, "Subspace K")->required();

    auto* total = app.add_subcommand("total-polar", "Total polars of K");
    total->require_subcommand(1);
    auto* total_test = total->add_subcommand("test", "Is Y a total polar of K");
    total_test->add_option("--k", opt.k)->required();
    total_test->add_option("--y", opt.y)->required();
    auto* total_canonical = total->add_subcommand("canonical", "One total polar of K");
    total_canonical->add_option("--k", opt.k)->required();
    auto* total_flag = total->add_subcommand("flag", "Flag whose Schubert variety is the polar variety of K");
    total_flag->add_option("--k", opt.k)->required();

    auto* regular = app.add_subcommand("regular", "Regularity and uniqueness of the total polar");
    regular->add_option("--k", opt.k)->required();

    auto* struve = app.add_subcommand("struve", "Struve polar criterion");
    struve->add_option("--k", opt.k)->required();
    struve->add_option("--y", opt.y)->required();

    auto* tangent = app.add_subcommand("tangent", "Is K tangent to the absolute figure");
    tangent->add_option("--k", opt.k)->required();

    auto* cone = app.add_subcommand("tangent-cone", "Tangent cone with vertex Z");
    cone->add_option("--center", opt.center)->required();

    auto* sphere_cmd = app.add_subcommand("sphere", "Sphere lambda Q_0 + mu T_Z and its radius");
    sphere_cmd->add_option("--center", opt.center)->required();
    sphere_cmd->add_option("--lambda", opt.lambda, "Rational p/q")->required();
    sphere_cmd->add_option("--mu", opt.mu, "Rational p/q")->required();

    auto* reflect = app.add_subcommand("reflect", "Reflection in the pair (K, K_perp)");
    reflect->add_option("--k", opt.k)->required();
    reflect->add_option("--kperp", opt.kperp)->required();

    auto* motion = app.add_subcommand("is-motion", "Motion test");
    motion->add_option("--matrix", opt.matrix)->required();

    auto* decompose = app.add_subcommand("decompose", "Factor a motion into point-hyperplane reflections");
    decompose->add_option("--matrix", opt.matrix)->required();

    auto* oracle = app.add_subcommand("oracle", "Bounded search for the definition of a total polar");
    oracle->add_option("--k", opt.k)->required();
    oracle->add_option("--y", opt.y, "Candidate total polar; without it, sample members of the polar variety");
    oracle->add_option("--bound", opt.bound, "Coefficient bound b")->check(CLI::PositiveNumber);
    oracle->add_option("--max-candidates", opt.max_candidates)->check(CLI::PositiveNumber);
    oracle->add_option("--seed", opt.seed);
    oracle->add_option("--count", opt.count)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const Scene scene = parse_scene(read_scene_text(opt.scene_path));
        const AbsoluteFigure& f = scene.figure;
        Json out = Json::object();

        if (*polar_seq) {
            const Subspace& k = scene.subspace(opt.k);
            out["filtration_dims"] = filtration_dims(f, k);
            Json entries = Json::array();
            for (const auto& e : polar_sequence(f, k)) {
                Json entry = Json::object();
                entry["block"] = e.block;
                entry["position"] = e.position;
                entry["space"] = to_json(e.space);
                entries.push_back(std::move(entry));
            }
            out["entries"] = std::move(entries);
        } else if (*total_test) {
            out = verdict_pair("is_total_polar", is_total_polar(f, scene.subspace(opt.k), scene.subspace(opt.y)));
        } else if (*total_canonical) {
            out["total_polar"] = to_json(canonical_total_polar(f, scene.subspace(opt.k)));
        } else if (*total_flag) {
            Json flag = Json::array();
            for (const auto& w : schubert_flag(f, scene.subspace(opt.k)).flag) flag.push_back(to_json(w));
            out["flag"] = std::move(flag);
        } else if (*regular) {
            const Subspace& k = scene.subspace(opt.k);
            out["is_regular"] = is_regular(f, k);
            out["has_unique_total_polar"] = has_unique_total_polar(f, k);
        } else if (*struve) {
            const Subspace& k = scene.subspace(opt.k);
            const Subspace& y = scene.subspace(opt.y);
            out["is_struve_polar"] = is_struve_polar(f, k, y);
            out["is_total_polar"] = is_total_polar(f, k, y);
        } else if (*tangent) {
            out = verdict_pair("is_tangent", is_tangent(f, scene.subspace(opt.k)));
        } else if (*cone) {
            const Point z = scene.point(opt.center);
            out["center"] = to_json(z.coords());
            out["matrix"] = to_json(tangent_cone(f, z).matrix());
        } else if (*sphere_cmd) {
            const Point z = scene.point(opt.center);
            const Sphere s = sphere(f, z, arg_rational(opt.lambda, "--lambda"), arg_rational(opt.mu, "--mu"));
            out["center"] = to_json(z.coords());
            out["lambda"] = to_json(s.lambda);
            out["mu"] = to_json(s.mu);
            out["matrix"] = to_json(s.form.matrix());
            out["radius"] = s.radius ? radius_json(*s.radius) : Json(nullptr);
        } else if (*reflect) {
            const ReflectionPair p = reflection(f, scene.subspace(opt.k), scene.subspace(opt.kperp));
            out["matrix"] = to_json(p.matrix);
            out["is_motion"] = static_cast<bool>(is_motion(f, p.matrix));
        } else if (*motion) {
            const MotionVerdict v = is_motion(f, scene.matrix(opt.matrix));
            out["is_motion"] = static_cast<bool>(v);
            if (v) {
                out["block_scalar"] = to_json(v.motion->block_scalar);
            } else {
                out["failed_block"] = v.failed_block;
                out["reason"] = v.reason;
            }
        } else if (*decompose) {
            const MotionDecomposition d = decompose_motion(f, scene.matrix(opt.matrix));
            Json pairs = Json::array();
            for (const auto& p : d.reflections) {
                Json pair = Json::object();
                pair["point"] = to_json(Point::from_subspace(p.k_space).coords());
                pair["hyperplane"] = hyperplane_row(p.k_polar);
                pairs.push_back(std::move(pair));
            }
            out["reflections"] = std::move(pairs);
            out["sigma"] = d.sigma;
            if (!d.within_bound)
                std::cerr << "finding: " << d.reflections.size() << " reflections exceed n + 1 = " << f.n() + 1 << "\n";
        } else if (*oracle) {
            const Subspace& k = scene.subspace(opt.k);
            const SearchBudget budget{opt.bound, opt.max_candidates};
            auto result_json = [&](const OracleResult& r) {
                Json o = Json::object();
                o["verdict"] = to_string(r.verdict);
                o["configurations"] = r.configurations;
                o["budget_exhausted"] = r.budget_exhausted;
                if (r.witness) {
                    Json w = Json::object();
                    Json pts = Json::array();
                    for (const auto& p : r.witness->points) pts.push_back(to_json(p));
                    w["points"] = std::move(pts);
                    w["levels"] = r.witness->levels;
                    Json hs = Json::array();
                    for (const auto& h : r.witness->hyperplanes) hs.push_back(to_json(h));
                    w["hyperplanes"] = std::move(hs);
                    o["witness"] = std::move(w);
                }
                return o;
            };
            out["bound"] = opt.bound;
            if (!opt.y.empty()) {
                out["result"] = result_json(oracle_is_total_polar(f, k, scene.subspace(opt.y), budget));
            } else {
                out["seed"] = opt.seed;
                Json samples = Json::array();
                for (const auto& y : sample_schubert(f, k, opt.seed, opt.count, opt.bound)) {
                    Json s = Json::object();
                    s["space"] = to_json(y);
                    s["result"] = result_json(oracle_is_total_polar(f, k, y, budget));
                    samples.push_back(std::move(s));
                }
                out["samples"] = std::move(samples);
            }
        }
        std::cout << out.dump(2) << "\n";
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kUsage;
    } catch (const DimensionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    }
}
