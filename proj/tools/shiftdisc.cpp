// shiftdisc: CLI over the towers / shift_graph / parity / cubes /
// colorings / discrepancy modules. One subcommand per run; the report is a
// single JSON document {command, config, result, version} on stdout.

#include <cstdio>
#include <iostream>
#include <memory>

#include <CLI11.hpp>
#include <json.hpp>

#include "shiftdisc/colorings.hpp"
#include "shiftdisc/cubes.hpp"
#include "shiftdisc/discrepancy.hpp"
#include "shiftdisc/parity.hpp"
#include "shiftdisc/towers.hpp"
#include "shiftdisc/version.hpp"

using json = nlohmann::ordered_json;
using namespace shiftdisc;

namespace {

double parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return std::stod(s);
        double num = std::stod(s.substr(0, slash));
        double den = std::stod(s.substr(slash + 1));
        if (den == 0.0) throw validation_error("rational with zero denominator: " + s);
        return num / den;
    } catch (const std::invalid_argument&) {
        throw validation_error("cannot parse rational: " + s);
    }
}

SortedSet parse_set(const std::string& s) {
    std::vector<int> v;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            if (!cur.empty()) v.push_back(std::stoi(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty()) v.push_back(std::stoi(cur));
    return SortedSet(std::move(v));
}

void emit(const std::string& command, const json& config, const json& result) {
    json doc;
    doc["command"] = command;
    doc["config"] = config;
    doc["result"] = result;
    doc["version"] = kVersion;
    std::cout << doc.dump(2) << "\n";
}

json report_json(const DiscrepancyReport& r) {
    json j;
    j["method"] = r.method;
    j["num_colors"] = r.num_colors;
    j["total"] = r.total;
    j["counts"] = r.counts;
    j["freqs"] = r.freqs;
    j["deviation"] = r.deviation;
    j["confidence_radius"] = r.confidence_radius;
    if (r.method == "monte_carlo") j["seed"] = r.seed;
    if (r.has_signed_sum) j["signed_sum"] = r.signed_sum;
    return j;
}

struct ColoringChoice {
    std::string type = "explicit"; // explicit | randomized
    int N = 0, l = 0, c = 3;
    std::uint64_t seed = 0;
    bool fallback = false;

    std::shared_ptr<ColoringPipeline> pipe;

    void build() {
        if (fallback || l < 4)
            pipe = std::make_shared<ColoringPipeline>(build_fallback_pipeline(N, l));
        else
            pipe = std::make_shared<ColoringPipeline>(build_pipeline(N, l));
    }

    int num_colors() const { return type == "explicit" ? c : 2; }

    ColorFn fn() const {
        auto p = pipe;
        if (type == "explicit") {
            int cc = c;
            return [p, cc](const SortedSet& X) { return gamma_explicit(X, *p, cc); };
        }
        if (type != "randomized")
            throw validation_error("coloring must be explicit or randomized");
        std::uint64_t s = seed;
        return [p, s](const SortedSet& X) {
            return gamma_randomized(X, *p, s) > 0 ? 1 : 0;
        };
    }

    json config_json() const {
        json j;
        j["coloring"] = type;
        j["N"] = N;
        j["l"] = l;
        if (type == "explicit") j["c"] = c;
        if (type == "randomized") j["coloring_seed"] = seed;
        j["fallback"] = fallback;
        return j;
    }
};

void add_coloring_flags(CLI::App* cmd, ColoringChoice& ch) {
    cmd->add_option("--coloring", ch.type, "explicit (gamma') or randomized (psi.phi)");
    cmd->add_option("--ambient", ch.N, "ambient N for the kappa pipeline")->required();
    cmd->add_option("--l", ch.l, "window/block length l")->required();
    cmd->add_option("--c", ch.c, "modulus c for gamma' (odd, >= 3)");
    cmd->add_option("--coloring-seed", ch.seed, "seed of the randomized psi");
    cmd->add_flag("--fallback", ch.fallback, "force the delta-only pipeline");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit low-discrepancy colorings of k-sets: construction and measurement"};
    app.require_subcommand(1);

    // towers
    auto* cmd_towers = app.add_subcommand("towers", "evaluate tw / tw-bar");
    std::string t_kind = "standard";
    int t_height = 1, t_x = 1;
    std::int64_t t_bits = 1000000;
    cmd_towers->add_option("--kind", t_kind, "standard | sqrt2");
    cmd_towers->add_option("--height", t_height)->required();
    cmd_towers->add_option("--x", t_x)->required();
    cmd_towers->add_option("--bit-limit", t_bits);

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bound calculators");
    std::string b_name;
    std::vector<std::string> b_params;
    cmd_bounds->add_option("--name", b_name)->required();
    cmd_bounds->add_option("--param", b_params, "name=value, value may be a rational a/b");

    // shift-color
    auto* cmd_scolor = app.add_subcommand("shift-color", "color one block");
    int sc_N = 0, sc_l = 0;
    std::string sc_block;
    bool sc_fallback = false;
    cmd_scolor->add_option("--n", sc_N)->required();
    cmd_scolor->add_option("--l", sc_l)->required();
    cmd_scolor->add_option("--block", sc_block, "comma-separated elements")->required();
    cmd_scolor->add_flag("--fallback", sc_fallback);

    // shift-verify
    auto* cmd_sverify = app.add_subcommand("shift-verify", "properness check");
    int sv_N = 0, sv_l = 0, sv_threads = 1, sv_mutate = -1;
    std::string sv_mode = "exhaustive";
    std::int64_t sv_budget = 10000000, sv_samples = 100000;
    std::uint64_t sv_seed = 0;
    bool sv_fallback = false;
    cmd_sverify->add_option("--n", sv_N)->required();
    cmd_sverify->add_option("--l", sv_l)->required();
    cmd_sverify->add_option("--mode", sv_mode, "exhaustive | sampled");
    cmd_sverify->add_option("--budget", sv_budget);
    cmd_sverify->add_option("--samples", sv_samples);
    cmd_sverify->add_option("--seed", sv_seed);
    cmd_sverify->add_option("--threads", sv_threads);
    cmd_sverify->add_flag("--fallback", sv_fallback);
    cmd_sverify->add_option("--mutate-final", sv_mutate,
                            "test hook: constant final color, must produce violations");

    // odd-cycle
    auto* cmd_odd = app.add_subcommand("odd-cycle", "non-bipartiteness of Sh(N,l)");
    int oc_N = 0, oc_l = 0;
    std::int64_t oc_budget = 10000000;
    cmd_odd->add_option("--n", oc_N)->required();
    cmd_odd->add_option("--l", oc_l)->required();
    cmd_odd->add_option("--budget", oc_budget);

    // parity
    auto* cmd_parity = app.add_subcommand("parity", "Bernoulli sums mod l");
    std::string pa_p = "1/2";
    int pa_n = 1, pa_l = 2, pa_h = 0;
    cmd_parity->set_help_flag("--help", "print help"); // frees -h for --h below
    cmd_parity->add_option("--p", pa_p, "success probability, rational allowed");
    cmd_parity->add_option("--n", pa_n)->required();
    cmd_parity->add_option("--l", pa_l)->required();
    cmd_parity->add_option("--h", pa_h);

    // cube-stats
    auto* cmd_cube = app.add_subcommand("cube-stats", "hits and maximal cube of X");
    std::string cu_variant = "A", cu_set, cu_x;
    int cu_l = 0, cu_m = 0;
    cmd_cube->add_option("--variant", cu_variant, "A | B");
    cmd_cube->add_option("--l", cu_l)->required();
    cmd_cube->add_option("--m", cu_m, "ground set [1..m] (alternative to --set)");
    cmd_cube->add_option("--set", cu_set, "explicit ground set, comma-separated");
    cmd_cube->add_option("--x", cu_x, "the k-set X")->required();

    // codec-roundtrip
    auto* cmd_codec = app.add_subcommand("codec-roundtrip", "encode/decode a cube image");
    std::string cr_set, cr_x;
    int cr_l = 0, cr_m = 0, cr_ambient = 0;
    bool cr_fallback = false;
    cmd_codec->add_option("--l", cr_l)->required();
    cmd_codec->add_option("--m", cr_m);
    cmd_codec->add_option("--set", cr_set);
    cmd_codec->add_option("--x", cr_x)->required();
    cmd_codec->add_option("--ambient", cr_ambient, "pipeline N (default max ground element)");
    cmd_codec->add_flag("--fallback", cr_fallback);

    // color
    auto* cmd_color = app.add_subcommand("color", "gamma' or randomized gamma of X");
    ColoringChoice co_choice;
    std::string co_x;
    add_coloring_flags(cmd_color, co_choice);
    cmd_color->add_option("--x", co_x)->required();

    // disc-exact
    auto* cmd_de = app.add_subcommand("disc-exact", "exact relative discrepancy over C(S,k)");
    ColoringChoice de_choice;
    std::string de_set;
    int de_m = 0, de_k = 0, de_threads = 1;
    std::int64_t de_budget = 10000000;
    add_coloring_flags(cmd_de, de_choice);
    cmd_de->add_option("--m", de_m, "ground set [1..m]");
    cmd_de->add_option("--set", de_set);
    cmd_de->add_option("--k", de_k)->required();
    cmd_de->add_option("--budget", de_budget);
    cmd_de->add_option("--threads", de_threads);

    // disc-mc
    auto* cmd_mc = app.add_subcommand("disc-mc", "Monte Carlo relative discrepancy");
    ColoringChoice mc_choice;
    std::string mc_set;
    int mc_m = 0, mc_k = 0, mc_threads = 1;
    std::int64_t mc_samples = 100000;
    std::uint64_t mc_seed = 0;
    add_coloring_flags(cmd_mc, mc_choice);
    cmd_mc->add_option("--m", mc_m);
    cmd_mc->add_option("--set", mc_set);
    cmd_mc->add_option("--k", mc_k)->required();
    cmd_mc->add_option("--samples", mc_samples);
    cmd_mc->add_option("--seed", mc_seed);
    cmd_mc->add_option("--threads", mc_threads);

    // cover-report
    auto* cmd_cover = app.add_subcommand("cover-report", "maximal-cube cover accounting");
    ColoringChoice cv_choice;
    std::string cv_variant = "B", cv_set;
    int cv_m = 0, cv_dim_threshold = 1;
    std::int64_t cv_budget = 10000000;
    add_coloring_flags(cmd_cover, cv_choice);
    cmd_cover->add_option("--variant", cv_variant);
    cmd_cover->add_option("--m", cv_m);
    cmd_cover->add_option("--set", cv_set);
    cmd_cover->add_option("--dim-threshold", cv_dim_threshold);
    cmd_cover->add_option("--budget", cv_budget);

    // worst-set
    auto* cmd_worst = app.add_subcommand("worst-set", "max deviation over ground sets");
    ColoringChoice ws_choice;
    std::string ws_mode = "sampled";
    int ws_m = 0, ws_k = 0;
    std::int64_t ws_samples = 20, ws_budget = 10000000;
    std::uint64_t ws_seed = 0;
    add_coloring_flags(cmd_worst, ws_choice);
    cmd_worst->add_option("--m", ws_m)->required();
    cmd_worst->add_option("--k", ws_k)->required();
    cmd_worst->add_option("--mode", ws_mode);
    cmd_worst->add_option("--samples", ws_samples);
    cmd_worst->add_option("--seed", ws_seed);
    cmd_worst->add_option("--budget", ws_budget);

    CLI11_PARSE(app, argc, argv);

    auto ground_or_range = [](const std::string& set, int m) {
        if (!set.empty()) return parse_set(set);
        if (m < 1) throw validation_error("provide --set or --m");
        return SortedSet::range(1, m);
    };

    try {
        if (*cmd_towers) {
            if (t_kind != "standard" && t_kind != "sqrt2")
                throw validation_error("kind must be standard or sqrt2");
            TowerValue tv = tower(t_kind == "standard" ? TowerKind::standard : TowerKind::sqrt2,
                                  t_height, t_x, t_bits);
            json cfg{{"kind", t_kind}, {"height", t_height}, {"x", t_x}, {"bit_limit", t_bits}};
            json res;
            res["exact"] = tv.exact;
            if (tv.exact)
                res["value"] = tv.value.str();
            else
                res["bit_length_greater_than"] = tv.bit_length_bound.str();
            emit("towers", cfg, res);
        } else if (*cmd_bounds) {
            std::map<std::string, double> params;
            json cfg_params;
            for (const std::string& kv : b_params) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw validation_error("param must be name=value: " + kv);
                std::string key = kv.substr(0, eq);
                params[key] = parse_rational(kv.substr(eq + 1));
                cfg_params[key] = params[key];
            }
            BoundResult br = bound_calculator(b_name, params);
            json cfg{{"name", b_name}, {"params", cfg_params}};
            json res;
            res["value"] = br.value;
            res["exponent"] = br.exponent;
            if (br.has_feasible) res["feasible"] = br.feasible;
            res["note"] = br.note;
            emit("bounds", cfg, res);
        } else if (*cmd_scolor) {
            ColoringPipeline pipe = (sc_fallback || sc_l < 4)
                                        ? build_fallback_pipeline(sc_N, sc_l)
                                        : build_pipeline(sc_N, sc_l);
            SortedSet block = parse_set(sc_block);
            int color = pipe.color(block);
            json cfg{{"N", sc_N}, {"l", sc_l}, {"block", block.elems()},
                     {"fallback", sc_fallback}};
            json levels = json::array();
            for (const auto& lv : pipe.levels)
                levels.push_back({{"kind", step_kind_name(lv.kind)},
                                  {"color_bound", lv.color_bound}});
            json res{{"color", color}, {"level", block.size()},
                     {"three_color", pipe.three_color}, {"levels", levels}};
            emit("shift-color", cfg, res);
        } else if (*cmd_sverify) {
            ColoringPipeline pipe = (sv_fallback || sv_l < 4)
                                        ? build_fallback_pipeline(sv_N, sv_l)
                                        : build_pipeline(sv_N, sv_l);
            if (sv_mutate >= 0) pipe.final_color_override = sv_mutate;
            VerifyReport vr = verify_proper(pipe, sv_mode, sv_budget, sv_seed,
                                            sv_samples, sv_threads);
            json cfg{{"N", sv_N}, {"l", sv_l}, {"mode", sv_mode}, {"budget", sv_budget},
                     {"samples", sv_samples}, {"seed", sv_seed},
                     {"fallback", sv_fallback}, {"mutate_final", sv_mutate}};
            json res{{"edges_checked", vr.edges_checked}, {"violations", vr.violations},
                     {"used_counts", pipe.used_counts()}};
            emit("shift-verify", cfg, res);
        } else if (*cmd_odd) {
            bool odd = odd_cycle_check(oc_N, oc_l, oc_budget);
            json cfg{{"N", oc_N}, {"l", oc_l}, {"budget", oc_budget}};
            emit("odd-cycle", cfg, json{{"non_bipartite", odd}});
        } else if (*cmd_parity) {
            ParityParams pp;
            pp.p = parse_rational(pa_p);
            pp.n = pa_n;
            pp.l = pa_l;
            pp.h = pa_h;
            std::vector<double> dist = mod_distribution(pp);
            json cfg{{"p", pa_p}, {"n", pa_n}, {"l", pa_l}, {"h", pa_h}};
            json res;
            res["probability"] = dist[static_cast<std::size_t>(pa_h)];
            res["uniform"] = 1.0 / pa_l;
            res["deviation"] = std::fabs(dist[static_cast<std::size_t>(pa_h)] - 1.0 / pa_l);
            res["bound"] = parity_bound(pp);
            res["distribution"] = dist;
            emit("parity", cfg, res);
        } else if (*cmd_cube) {
            Variant var = cu_variant == "A" ? Variant::A : Variant::B;
            if (cu_variant != "A" && cu_variant != "B")
                throw validation_error("variant must be A or B");
            IntervalPartition part(ground_or_range(cu_set, cu_m), var, cu_l);
            SortedSet X = parse_set(cu_x);
            int z = count_hits(X, part);
            json cfg{{"variant", cu_variant}, {"l", cu_l},
                     {"ground", part.ground().elems()}, {"x", X.elems()}};
            json res;
            res["hits"] = z;
            auto cube = maximal_cube(X, part);
            if (cube) {
                json cj{{"J", cube->J()}, {"R", cube->R().elems()},
                        {"dimension", cube->dimension()}};
                if (cube->dimension() <= 12) {
                    json members = json::array();
                    for (const SortedSet& Y : enumerate_cube(*cube))
                        members.push_back(Y.elems());
                    cj["members"] = members;
                }
                res["maximal_cube"] = cj;
            } else {
                res["maximal_cube"] = nullptr;
            }
            emit("cube-stats", cfg, res);
        } else if (*cmd_codec) {
            SortedSet S = ground_or_range(cr_set, cr_m);
            IntervalPartition part(S, Variant::A, cr_l);
            SortedSet X = parse_set(cr_x);
            auto cube = maximal_cube(X, part);
            if (!cube) throw validation_error("X lies in no cube (Z = 0)");
            int N = cr_ambient > 0 ? cr_ambient : S.max();
            ColoringPipeline pipe = (cr_fallback || cr_l < 4)
                                        ? build_fallback_pipeline(N, cr_l)
                                        : build_pipeline(N, cr_l);
            CubeImageCode code = encode_image(*cube, pipe);
            std::set<std::vector<int>> decoded = decode_image(code);
            std::set<std::vector<int>> image;
            for (const SortedSet& Y : enumerate_cube(*cube))
                image.insert(window_vector(Y, pipe));
            json cfg{{"l", cr_l}, {"ground", S.elems()}, {"x", X.elems()},
                     {"ambient", N}, {"fallback", cr_fallback}};
            json sigma = json::array();
            for (auto& pr : code.sigma) sigma.push_back({pr.first, pr.second});
            json res{{"B", code.B}, {"sigma", sigma},
                     {"f_coordinates", static_cast<int>(code.f.size())},
                     {"image_size", static_cast<int>(image.size())},
                     {"roundtrip_ok", decoded == image}};
            emit("codec-roundtrip", cfg, res);
        } else if (*cmd_color) {
            co_choice.build();
            SortedSet X = parse_set(co_x);
            json cfg = co_choice.config_json();
            cfg["x"] = X.elems();
            json res;
            if (co_choice.type == "explicit")
                res["color"] = gamma_explicit(X, *co_choice.pipe, co_choice.c);
            else
                res["sign"] = gamma_randomized(X, *co_choice.pipe, co_choice.seed);
            emit("color", cfg, res);
        } else if (*cmd_de) {
            de_choice.build();
            SortedSet S = ground_or_range(de_set, de_m);
            DiscrepancyReport r = exact_discrepancy(de_choice.fn(), S, de_k,
                                                    de_choice.num_colors(), de_budget,
                                                    de_threads);
            json cfg = de_choice.config_json();
            cfg["ground"] = S.elems();
            cfg["k"] = de_k;
            cfg["budget"] = de_budget;
            emit("disc-exact", cfg, report_json(r));
        } else if (*cmd_mc) {
            mc_choice.build();
            SortedSet S = ground_or_range(mc_set, mc_m);
            DiscrepancyReport r = mc_discrepancy(mc_choice.fn(), S, mc_k,
                                                 mc_choice.num_colors(), mc_samples,
                                                 mc_seed, mc_threads);
            json cfg = mc_choice.config_json();
            cfg["ground"] = S.elems();
            cfg["k"] = mc_k;
            cfg["samples"] = mc_samples;
            cfg["seed"] = mc_seed;
            emit("disc-mc", cfg, report_json(r));
        } else if (*cmd_cover) {
            cv_choice.build();
            Variant var = cv_variant == "A" ? Variant::A : Variant::B;
            if (cv_variant != "A" && cv_variant != "B")
                throw validation_error("variant must be A or B");
            IntervalPartition part(ground_or_range(cv_set, cv_m), var, cv_choice.l);
            CubeCoverReport r = cube_cover_report(part, cv_choice.fn(),
                                                  cv_choice.num_colors(),
                                                  cv_dim_threshold, cv_budget);
            json cfg = cv_choice.config_json();
            cfg["variant"] = cv_variant;
            cfg["ground"] = part.ground().elems();
            cfg["dim_threshold"] = cv_dim_threshold;
            cfg["budget"] = cv_budget;
            json per_cube = json::array();
            for (auto& [dim, dev] : r.per_cube)
                per_cube.push_back({{"dimension", dim}, {"deviation", dev}});
            json res{{"total_sets", r.total_sets},
                     {"covered_fraction", r.covered_fraction},
                     {"uncovered_fraction", r.uncovered_fraction},
                     {"num_cubes", r.num_cubes},
                     {"per_cube", per_cube},
                     {"composition_bound", r.composition_bound},
                     {"overall_exact_deviation", r.overall_exact_deviation}};
            emit("cover-report", cfg, res);
        } else if (*cmd_worst) {
            ws_choice.build();
            WorstSetReport r = worst_set_scan(ws_choice.N, ws_m, ws_k, ws_choice.fn(),
                                              ws_choice.num_colors(), ws_mode, ws_samples,
                                              ws_seed, ws_budget);
            json cfg = ws_choice.config_json();
            cfg["m"] = ws_m;
            cfg["k"] = ws_k;
            cfg["mode"] = ws_mode;
            cfg["samples"] = ws_samples;
            cfg["seed"] = ws_seed;
            cfg["budget"] = ws_budget;
            json res{{"sets_scanned", r.sets_scanned},
                     {"max_deviation", r.max_deviation},
                     {"argmax", r.argmax.elems()}};
            emit("worst-set", cfg, res);
        }
    } catch (const shiftdisc::error& e) {
        json doc{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << doc.dump(2) << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        json doc{{"error", {{"code", "invalid-argument"}, {"message", e.what()}}}};
        std::cerr << doc.dump(2) << "\n";
        return 2;
    }
    return 0;
}
