#include "weylface/cli.hpp"

#include "weylface/json_io.hpp"
#include "weylface/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace weylface {

namespace {

Weight parse_lambda(const std::string& text, int rank) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    if (int(parts.size()) != rank)
        throw std::invalid_argument("expected " + std::to_string(rank) +
                                    " comma-separated rational coordinates, got '" + text + "'");
    QVec coords;
    for (const auto& p : parts) coords.push_back(Rat::parse(p));
    return Weight(std::move(coords));
}

Subset parse_subset(const std::string& text, int rank) {
    Subset s = Subset::empty(rank);
    if (text.empty()) return s;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("empty index in subset '" + text + "'");
        int idx = std::stoi(cur);
        if (idx < 1 || idx > rank)
            throw std::invalid_argument("subset index " + cur + " outside 1.." + std::to_string(rank));
        s = s.with(idx - 1);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c >= '0' && c <= '9')
            cur.push_back(c);
        else
            throw std::invalid_argument("invalid character in subset '" + text + "'");
    }
    flush();
    return s;
}

WeylWord parse_word(const std::string& text, const Subset& j) {
    WeylWord w = WeylWord::identity(j);
    if (text.empty()) return w;
    std::string cur;
    auto flush = [&]() {
        int idx = std::stoi(cur);
        if (idx < 1 || idx > j.rank)
            throw std::invalid_argument("generator index " + cur + " outside 1.." + std::to_string(j.rank));
        w.letters.push_back(idx - 1);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (c >= '0' && c <= '9')
            cur.push_back(c);
        else
            throw std::invalid_argument("invalid character in word '" + text + "'");
    }
    flush();
    return w;
}

std::vector<Weight> parse_weight_list(const std::string& text, int rank) {
    std::vector<Weight> out;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            out.push_back(parse_lambda(cur, rank));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(parse_lambda(cur, rank));
    return out;
}

std::vector<CartanType> parse_types(const std::string& text) {
    std::vector<CartanType> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(CartanType::parse(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(CartanType::parse(cur));
    return out;
}

std::string weight_line(const Weight& w) { return w.str(); }

void print_weight_set(std::ostream& out, const WeightSet& ws, const std::string& title) {
    out << title << ": " << ws.size() << (ws.size() == 1 ? " weight\n" : " weights\n");
    for (const auto& w : ws.elements) out << "  " << weight_line(w) << "\n";
}

void print_gvm(std::ostream& out, const GVMWeights& gw) {
    print_weight_set(out, gw.finite_part, "finite part");
    if (gw.ray_roots.empty()) return;
    out << "minus Z_+ combinations of " << gw.ray_roots.size() << " roots:\n";
    for (const auto& r : gw.ray_roots) out << "  " << r.omega.str() << "\n";
}

std::string subset_arg_help = "comma-separated 1-based node indices; \"\" for the empty set";

struct CommonArgs {
    std::string type_text;
    std::string lambda_text;
    bool json = false;
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weight sets, weight polyhedra and their faces over finite root systems"};
    app.name("weylface");
    app.require_subcommand(1);

    CommonArgs common;
    std::string j_text, i0_text, i1_text, i2_text, nu_text, y_text, w_text;
    bool enumerate_flag = false;
    std::string suite;
    std::string types_text = "A1,A2,B2";
    int max_coord = 2;
    unsigned seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_lambda = true) {
        cmd->add_option("type", common.type_text, "Cartan type, e.g. A2 or g2")->required();
        if (with_lambda)
            cmd->add_option("lambda", common.lambda_text,
                            "highest weight in fundamental-weight coordinates, e.g. 1,1 or 3/2,0")
                ->required();
        cmd->add_flag("--json", common.json, "emit JSON instead of text");
    };

    CLI::App* roots = app.add_subcommand("roots", "print the root system data");
    add_common(roots, false);

    CLI::App* weights = app.add_subcommand("weights", "weights of the simple module V(lambda)");
    add_common(weights);

    CLI::App* truncate = app.add_subcommand("truncate", "weights of V(lambda) reachable inside I0");
    add_common(truncate);
    truncate->add_option("--I0", i0_text, subset_arg_help)->required();

    CLI::App* gvm = app.add_subcommand("gvm-hull", "V-representation of conv wt M(lambda, J)");
    add_common(gvm);
    gvm->add_option("--J", j_text, subset_arg_help + " (default: all nodes)");

    CLI::App* faces_cmd = app.add_subcommand("faces", "all faces of conv wt M(lambda, J)");
    add_common(faces_cmd);
    faces_cmd->add_option("--J", j_text, subset_arg_help + " (default: all nodes)");

    CLI::App* fweights = app.add_subcommand("face-weights", "weights on the face named by (w, I0)");
    add_common(fweights);
    fweights->add_option("--J", j_text, subset_arg_help + " (default: all nodes)");
    fweights->add_option("--I0", i0_text, subset_arg_help)->required();
    fweights->add_option("--w", w_text, "Weyl word as comma-separated generator indices; \"\" = identity");

    CLI::App* fequal = app.add_subcommand("face-equal", "decide wt V_I1(lambda) = wt V_I2(lambda)");
    add_common(fequal);
    fequal->add_option("--I1", i1_text, subset_arg_help)->required();
    fequal->add_option("--I2", i2_text, subset_arg_help)->required();

    CLI::App* center = app.add_subcommand("center", "center of the truncation face wt V_J(lambda)");
    add_common(center);
    center->add_option("--J", j_text, subset_arg_help)->required();

    CLI::App* maximizer = app.add_subcommand("maximizer", "maximizer of (nu, -) in wt V(lambda)");
    add_common(maximizer);
    maximizer->add_option("--nu", nu_text, "functional weight, comma-separated rationals")->required();

    CLI::App* weak = app.add_subcommand("weakface", "weak-face tests inside wt V(lambda)");
    add_common(weak);
    weak->add_option("--Y", y_text, "candidate subset: weights joined by ';', e.g. \"1,1;-1,2\"");
    weak->add_option("--I0", i0_text, "use the truncation wt V_I0(lambda) as the candidate");
    weak->add_flag("--enumerate", enumerate_flag, "list every weak face (within the brute-force bound)");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of: T2 T32 T33 tvin P53 L3 L22 lp all")->required();
    verify->add_option("--types", types_text, "comma-separated Cartan types (default A1,A2,B2)");
    verify->add_option("--max-coord", max_coord, "max coordinate sum of swept highest weights");
    verify->add_option("--seed", seed, "seed for sampled verification");
    verify->add_flag("--json", common.json, "emit JSON instead of text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) {
            VerifyOptions opts;
            opts.types = parse_types(types_text);
            opts.max_coord = max_coord;
            opts.seed = seed;
            auto reports = run_suite(suite, opts);
            long long total_violations = 0;
            for (const auto& r : reports) total_violations += long(r.violations.size());
            if (common.json) {
                json arr = json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r));
                out << json{{"suite", suite}, {"reports", arr}, {"total_violations", total_violations}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& r : reports) {
                    out << r.theorem << " " << r.instance << ": checked " << r.subsets_checked;
                    if (r.hypothesis_excluded)
                        out << ", theorem hypothesis excluded";
                    out << ", " << r.violations.size() << " violations\n";
                    for (const auto& v : r.violations) out << "    " << v << "\n";
                }
                out << "total violations: " << total_violations << "\n";
            }
            return total_violations == 0 ? 0 : 1;
        }

        CartanType type = CartanType::parse(common.type_text);
        RootSystem rs = build_root_system(type);

        if (app.got_subcommand(roots)) {
            if (common.json) {
                json cart = json::array();
                for (const auto& row : rs.cartan) cart.push_back(row);
                json pos = json::array();
                for (const auto& r : rs.positive_roots)
                    pos.push_back(json{{"alpha", r.alpha}, {"omega", rat_vec_to_json(r.omega.coords)}});
                json form = json::array();
                for (const auto& row : rs.sym_form) form.push_back(rat_vec_to_json(row));
                out << json{{"type", type.str()},
                            {"cartan_matrix", cart},
                            {"positive_roots", pos},
                            {"sym_form", form}}
                           .dump(2)
                    << "\n";
            } else {
                out << type.str() << ": " << rs.positive_roots.size() << " positive roots\n";
                out << "cartan matrix (columns are simple roots):\n";
                for (const auto& row : rs.cartan) {
                    out << " ";
                    for (long v : row) out << " " << v;
                    out << "\n";
                }
                out << "positive roots (simple-root coordinates | weight coordinates):\n";
                for (const auto& r : rs.positive_roots) {
                    out << "  [";
                    for (size_t i = 0; i < r.alpha.size(); ++i)
                        out << (i ? "," : "") << r.alpha[i];
                    out << "] | " << r.omega.str() << "\n";
                }
            }
            return 0;
        }

        Weight lambda = parse_lambda(common.lambda_text, rs.rank);
        Subset full = Subset::full(rs.rank);

        if (app.got_subcommand(weights)) {
            WeightSet ws = simple_module_weights(rs, lambda);
            if (common.json)
                out << weight_set_to_json(ws).dump(2) << "\n";
            else
                print_weight_set(out, ws, "wt V(" + lambda.str() + ") over " + type.str());
            return 0;
        }
        if (app.got_subcommand(truncate)) {
            WeightSet ws = truncated_weights(rs, lambda, parse_subset(i0_text, rs.rank));
            if (common.json)
                out << weight_set_to_json(ws).dump(2) << "\n";
            else
                print_weight_set(out, ws, "truncated weights");
            return 0;
        }
        Subset j = gvm->count("--J") || faces_cmd->count("--J") || fweights->count("--J") ||
                           center->count("--J")
                       ? parse_subset(j_text, rs.rank)
                       : full;
        if (app.got_subcommand(gvm)) {
            VPolyhedron hull = gvm_hull(rs, lambda, j);
            if (common.json) {
                out << vpolyhedron_to_json(hull).dump(2) << "\n";
            } else {
                out << "conv wt M(" << lambda.str() << ", J=" << j.str() << "): " << hull.points.size()
                    << " points, " << hull.rays.size() << " rays\n";
                for (const auto& p : hull.points) out << "  point " << Weight(p).str() << "\n";
                for (const auto& r : hull.rays) out << "  ray   " << Weight(r).str() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(faces_cmd)) {
            auto faces = enumerate_faces(rs, lambda, j);
            if (common.json) {
                out << faces_to_json(faces).dump(2) << "\n";
            } else {
                out << faces.size() << " faces of conv wt M(" << lambda.str() << ", J=" << j.str()
                    << ")\n";
                int idx = 1;
                for (const auto& f : faces) {
                    out << "face " << idx++ << ": vertices";
                    for (const auto& v : f.vertex_set) out << " " << v.str();
                    if (!f.ray_set.empty()) {
                        out << " rays";
                        for (const auto& r : f.ray_set) out << " " << Weight(r).str();
                    }
                    out << " (" << f.descriptors.size() << " descriptors, first: w=[";
                    const auto& d = f.descriptors.front();
                    for (size_t i = 0; i < d.w.letters.size(); ++i)
                        out << (i ? "," : "") << d.w.letters[i] + 1;
                    out << "] I0=" << d.i0.str() << ")\n";
                }
            }
            return 0;
        }
        if (app.got_subcommand(fweights)) {
            FaceDescriptor d{parse_word(w_text, j), parse_subset(i0_text, rs.rank)};
            GVMWeights gw = face_weights(rs, lambda, j, d);
            if (common.json)
                out << gvm_weights_to_json(gw).dump(2) << "\n";
            else
                print_gvm(out, gw);
            return 0;
        }
        if (app.got_subcommand(fequal)) {
            auto res = faces_equal(rs, lambda, parse_subset(i1_text, rs.rank),
                                   parse_subset(i2_text, rs.rank));
            if (common.json) {
                out << json{{"equal", res.equal},
                            {"criteria",
                             {{"truncations", res.truncations_equal},
                              {"rho", res.rho_equal},
                              {"orbits", res.orbits_equal}}}}
                           .dump(2)
                    << "\n";
            } else {
                out << (res.equal ? "equal" : "unequal") << " (criteria a,b,c agree)\n";
            }
            return 0;
        }
        if (app.got_subcommand(center)) {
            Weight c = face_center(rs, lambda, j);
            if (common.json) {
                json coeffs = json::array();
                if (!j.is_empty()) coeffs = rat_vec_to_json(solve_center_system(rs, lambda, j));
                out << json{{"center", rat_vec_to_json(c.coords)}, {"coefficients", coeffs}}.dump(2)
                    << "\n";
            } else {
                out << "center of wt V_" << j.str() << "(" << lambda.str() << "): " << c.str() << "\n";
                if (!j.is_empty()) {
                    QVec coeffs = solve_center_system(rs, lambda, j);
                    out << "root coefficients:";
                    auto idx = j.members();
                    for (size_t i = 0; i < idx.size(); ++i)
                        out << " a_" << idx[i] + 1 << "/|Y|=" << coeffs[i].str();
                    out << "\n";
                }
            }
            return 0;
        }
        if (app.got_subcommand(maximizer)) {
            Weight nu = parse_lambda(nu_text, rs.rank);
            WeightSet ws = maximizer_face(rs, lambda, nu);
            if (common.json)
                out << weight_set_to_json(ws).dump(2) << "\n";
            else
                print_weight_set(out, ws, "maximizer of (" + nu.str() + ", -) in wt V(" + lambda.str() + ")");
            return 0;
        }
        if (app.got_subcommand(weak)) {
            WeightSet x = simple_module_weights(rs, lambda);
            if (enumerate_flag) {
                auto faces = enumerate_weak_faces(rs, x);
                if (common.json) {
                    json arr = json::array();
                    for (const auto& f : faces) arr.push_back(weight_set_to_json(f));
                    out << arr.dump(2) << "\n";
                } else {
                    out << faces.size() << " weak faces of wt V(" << lambda.str() << ")\n";
                    for (const auto& f : faces) {
                        out << " ";
                        for (const auto& w : f.elements) out << " " << w.str();
                        out << "\n";
                    }
                }
                return 0;
            }
            WeightSet y;
            if (weak->count("--Y")) {
                y = WeightSet(parse_weight_list(y_text, rs.rank), Provenance::ad_hoc, rs.rank);
            } else if (weak->count("--I0")) {
                y = truncated_weights(rs, lambda, parse_subset(i0_text, rs.rank));
            } else {
                throw std::invalid_argument("weakface needs --Y, --I0 or --enumerate");
            }
            WeakFaceVerdict v = is_positive_weak_face(rs, x, y, WeakCheck::verified);
            if (common.json) {
                json jv{{"weak", v.is_weak}, {"positive", v.is_positive}};
                if (v.counterexample) {
                    json ce{{"m", rat_vec_to_json(v.counterexample->m_coeffs)},
                            {"r", rat_vec_to_json(v.counterexample->r_coeffs)}};
                    if (v.counterexample->violator)
                        ce["violator"] = rat_vec_to_json(v.counterexample->violator->coords);
                    jv["counterexample"] = ce;
                }
                out << jv.dump(2) << "\n";
            } else {
                out << "weak face: " << (v.is_weak ? "yes" : "no")
                    << ", positive weak face: " << (v.is_positive ? "yes" : "no") << "\n";
                if (v.counterexample && v.counterexample->violator)
                    out << "violating element: " << v.counterexample->violator->str() << "\n";
            }
            return 0;
        }
        err << "error: no command handled\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace weylface
