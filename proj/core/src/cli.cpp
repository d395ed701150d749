#include "dp4a13/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dp4a13/census.hpp"
#include "dp4a13/constants.hpp"
#include "dp4a13/errors.hpp"
#include "dp4a13/picard.hpp"
#include "dp4a13/surface.hpp"
#include "dp4a13/torsor.hpp"

namespace dp4a13 {

namespace {

using nlohmann::json;

int default_workers() {
    if (const char* env = std::getenv("DP4A13_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

struct RunConfig {
    int case_i = 0;
    i64 bound = 1000;
    i64 prime_bound = 100000;
    std::string method = "torsor";
    std::string format; // resolved per command: json for predict, csv otherwise
    std::string chart = "surface";
    std::string out_path;
    std::string fp_range = "2..13";
    int workers = default_workers();
};

struct OutputTarget {
    std::ostream* stream;
    std::ofstream file;

    explicit OutputTarget(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream = &fallback;
        } else {
            file.open(path);
            if (!file) fail(Errc::bad_argument, "cannot open output file: " + path);
            stream = &file;
        }
    }
    std::ostream& out() { return *stream; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

i64 count_with(const std::string& method, int case_i, i64 bound, int workers) {
    if (method == "direct") return enumerate_direct(case_i, bound, {workers, nullptr});
    TorsorEnumOptions opts;
    opts.workers = workers;
    return enumerate_torsor(case_i, bound, opts);
}

std::set<SurfacePoint> point_set(const std::string& method, int case_i, i64 bound) {
    std::set<SurfacePoint> pts;
    if (method == "direct") {
        EnumOptions opts;
        opts.on_point = [&](const SurfacePoint& p, i64) { pts.insert(p); };
        enumerate_direct(case_i, bound, opts);
    } else {
        TorsorEnumOptions opts;
        opts.on_point = [&](const TorsorPoint& t) { pts.insert(project(t)); };
        enumerate_torsor(case_i, bound, opts);
    }
    return pts;
}

int cmd_count(const RunConfig& cfg, std::ostream& base_out, std::ostream& err) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();

    i64 n_torsor = 0, n_direct = 0;
    double s_torsor = 0, s_direct = 0;
    if (cfg.method == "torsor" || cfg.method == "both") {
        auto t0 = std::chrono::steady_clock::now();
        n_torsor = count_with("torsor", cfg.case_i, cfg.bound, cfg.workers);
        s_torsor = seconds_since(t0);
    }
    if (cfg.method == "direct" || cfg.method == "both") {
        auto t0 = std::chrono::steady_clock::now();
        n_direct = count_with("direct", cfg.case_i, cfg.bound, cfg.workers);
        s_direct = seconds_since(t0);
    }

    const bool disagree = cfg.method == "both" && n_torsor != n_direct;
    if (cfg.format == "json") {
        json j{{"case", cfg.case_i}, {"bound", cfg.bound}, {"method", cfg.method}};
        if (cfg.method != "direct") { j["count_torsor"] = n_torsor; j["seconds_torsor"] = s_torsor; }
        if (cfg.method != "torsor") { j["count_direct"] = n_direct; j["seconds_direct"] = s_direct; }
        j["count"] = cfg.method == "direct" ? n_direct : n_torsor;
        if (cfg.method == "both") j["agree"] = !disagree;
        out << j.dump(2) << "\n";
    } else {
        out << "# dp4a13 count v1\n";
        out << "case,bound,method,count,count_torsor,count_direct,seconds_torsor,seconds_direct\n";
        out << cfg.case_i << ',' << cfg.bound << ',' << cfg.method << ','
            << (cfg.method == "direct" ? n_direct : n_torsor) << ',';
        if (cfg.method != "direct") out << n_torsor;
        out << ',';
        if (cfg.method != "torsor") out << n_direct;
        out << ',' << s_torsor << ',' << s_direct << "\n";
    }

    if (disagree) {
        err << "method disagreement: torsor=" << n_torsor << " direct=" << n_direct << "\n";
        if (cfg.bound <= 10000) {
            auto a = point_set("torsor", cfg.case_i, cfg.bound);
            auto b = point_set("direct", cfg.case_i, cfg.bound);
            for (const auto& p : a)
                if (!b.count(p)) {
                    err << "first differing point (torsor only): " << p.x[0] << ',' << p.x[1]
                        << ',' << p.x[2] << ',' << p.x[3] << ',' << p.x[4] << "\n";
                    return 2;
                }
            for (const auto& p : b)
                if (!a.count(p)) {
                    err << "first differing point (direct only): " << p.x[0] << ',' << p.x[1]
                        << ',' << p.x[2] << ',' << p.x[3] << ',' << p.x[4] << "\n";
                    return 2;
                }
        }
        return 2;
    }
    return 0;
}

json predict_json(int case_i, i64 bound, i64 prime_bound) {
    const auto pc = predicted_constant(case_i, prime_bound);
    return json{{"case", case_i},
                {"c_inf", pc.c_inf.str()},
                {"b", pc.b},
                {"c_fin", pc.c_fin},
                {"tail_bound", pc.tail_bound},
                {"prime_bound", pc.prime_bound},
                {"B", bound},
                {"predicted", predicted_count(case_i, double(bound), prime_bound)}};
}

int cmd_predict(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();
    std::vector<int> cases;
    if (cfg.case_i == 0)
        cases = {1, 2, 3, 4, 5, 6};
    else
        cases = {cfg.case_i};

    if (cfg.format == "csv") {
        out << "# dp4a13 predict v1\n";
        out << "case,c_inf,b,c_fin,tail_bound,prime_bound,B,predicted\n";
        for (int i : cases) {
            const auto pc = predicted_constant(i, cfg.prime_bound);
            out << i << ',' << pc.c_inf.str() << ',' << pc.b << ',' << pc.c_fin << ','
                << pc.tail_bound << ',' << pc.prime_bound << ',' << cfg.bound << ','
                << predicted_count(i, double(cfg.bound), cfg.prime_bound) << "\n";
        }
    } else {
        json arr = json::array();
        for (int i : cases) arr.push_back(predict_json(i, cfg.bound, cfg.prime_bound));
        out << (cases.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();
    std::vector<i64> ladder;
    for (i64 b = 1000; b < cfg.bound; b *= 10) ladder.push_back(b);
    if (ladder.empty() || ladder.back() != cfg.bound) ladder.push_back(cfg.bound);

    json arr = json::array();
    if (cfg.format == "csv") {
        out << "# dp4a13 compare v1\n";
        out << "case,B,count,predicted,ratio\n";
    }
    for (i64 b : ladder) {
        const i64 n = count_with(cfg.method, cfg.case_i, b, cfg.workers);
        const double pred = predicted_count(cfg.case_i, double(b), cfg.prime_bound);
        const double ratio = double(n) / pred;
        if (cfg.format == "csv")
            out << cfg.case_i << ',' << b << ',' << n << ',' << pred << ',' << ratio << "\n";
        else
            arr.push_back({{"case", cfg.case_i}, {"B", b}, {"count", n},
                           {"predicted", pred}, {"ratio", ratio}});
    }
    if (cfg.format == "json") out << arr.dump(2) << "\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();
    const auto sets = classify_boundaries();
    if (cfg.format == "json") {
        json arr = json::array();
        for (CurveSet d : sets) {
            json comps = json::array();
            for (int j = 1; j <= 7; ++j)
                if (set_contains(d, j)) comps.push_back("E" + std::to_string(j));
            arr.push_back({{"components", comps},
                           {"self_intersection", self_intersection_via_graph(d)}});
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "# dp4a13 classify v1\n";
        out << "components,self_intersection\n";
        for (CurveSet d : sets)
            out << set_str(d) << ',' << self_intersection_via_graph(d) << "\n";
    }
    return 0;
}

int cmd_fp(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();
    i64 lo = 2, hi = 13;
    const auto dots = cfg.fp_range.find("..");
    if (dots != std::string::npos) {
        lo = std::atoll(cfg.fp_range.substr(0, dots).c_str());
        hi = std::atoll(cfg.fp_range.substr(dots + 2).c_str());
    } else if (!cfg.fp_range.empty()) {
        lo = hi = std::atoll(cfg.fp_range.c_str());
    }
    std::vector<i64> ps;
    for (i64 p = lo; p <= hi; ++p)
        if (is_prime(p)) ps.push_back(p);
    std::vector<int> cases = cfg.case_i ? std::vector<int>{cfg.case_i}
                                        : std::vector<int>{1, 2, 3, 4, 5, 6};
    const auto rows = census_table(cases, ps);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"p", r.p}, {"case", r.case_i}, {"surface", r.surface},
                           {"resolution", r.resolution}, {"u_points", r.u_points},
                           {"p2_tau", r.p2_tau.str()}, {"match", r.match}});
        out << arr.dump(2) << "\n";
    } else {
        out << "# dp4a13 fp v1\n";
        out << "p,case,surface,resolution,u_points,p2_tau,match\n";
        for (const auto& r : rows)
            out << r.p << ',' << r.case_i << ',' << r.surface << ',' << r.resolution << ','
                << r.u_points << ',' << r.p2_tau.str() << ',' << (r.match ? 1 : 0) << "\n";
    }
    return 0;
}

int cmd_points(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();

    if (cfg.chart == "torsor") {
        out << "# dp4a13 torsor points v1\n";
        out << "case,eta1,eta2,eta3,eta4,eta5,eta6,eta7,eta8,eta9,height\n";
        TorsorEnumOptions opts;
        opts.on_point = [&](const TorsorPoint& t) {
            out << cfg.case_i;
            for (int j = 1; j <= 9; ++j) out << ',' << t.eta(j);
            out << ',' << cox_height(cfg.case_i, t) << "\n";
        };
        enumerate_torsor(cfg.case_i, cfg.bound, opts);
        return 0;
    }

    if (cfg.chart == "surface") {
        std::set<std::pair<SurfacePoint, i64>> rows;
        if (cfg.method == "direct") {
            EnumOptions opts;
            opts.on_point = [&](const SurfacePoint& p, i64 h) { rows.insert({p, h}); };
            enumerate_direct(cfg.case_i, cfg.bound, opts);
        } else {
            TorsorEnumOptions opts;
            opts.on_point = [&](const TorsorPoint& t) {
                rows.insert({project(t), cox_height(cfg.case_i, t)});
            };
            enumerate_torsor(cfg.case_i, cfg.bound, opts);
        }
        out << "# dp4a13 points v1\n";
        out << "case,x0,x1,x2,x3,x4,height\n";
        for (const auto& [p, h] : rows) {
            out << cfg.case_i;
            for (i64 v : p.x) out << ',' << v;
            out << ',' << h << "\n";
        }
        return 0;
    }

    // degree-0 charts; rows with eta8 = 0 have no g'/g'' image and are skipped there
    std::set<std::array<double, 3>> rows;
    TorsorEnumOptions opts;
    opts.on_point = [&](const TorsorPoint& t) {
        const auto [x, y] = chart_xy(t);
        const double h = double(cox_height(cfg.case_i, t));
        if (cfg.chart == "f") {
            rows.insert({x.to_double(), y.to_double(), h});
        } else if (!y.is_zero()) {
            if (cfg.chart == "gp")
                rows.insert({(Rat(1) / x).to_double(), (x / y).to_double(), h});
            else
                rows.insert({(Rat(1) / (x * y)).to_double(), x.to_double(), h});
        }
    };
    enumerate_torsor(cfg.case_i, cfg.bound, opts);
    out << "# dp4a13 chart points v1 (chart " << cfg.chart << ")\n";
    out << "case,x,y,height\n";
    for (const auto& r : rows)
        out << cfg.case_i << ',' << r[0] << ',' << r[1] << ',' << r[2] << "\n";
    return 0;
}

int cmd_constants(const RunConfig& cfg, std::ostream& base_out, std::ostream&) {
    OutputTarget target(cfg.out_path, base_out);
    std::ostream& out = target.out();
    std::vector<int> cases = cfg.case_i ? std::vector<int>{cfg.case_i}
                                        : std::vector<int>{1, 2, 3, 4, 5, 6};
    if (cfg.format == "json") {
        json arr = json::array();
        for (int i : cases) {
            const auto& bc = boundary_case(i);
            json faces = json::array();
            for (const auto& f : bc.faces) {
                json names = json::array();
                for (int j : f) names.push_back("E" + std::to_string(j));
                faces.push_back({{"face", names},
                                 {"alpha", alpha(i, f).str()},
                                 {"tau_infinity", f.size() == 1 ? 8 : 4}});
            }
            arr.push_back({{"case", i},
                           {"components", set_str(bc.components)},
                           {"c_inf", c_infinity(i).str()},
                           {"b", exponent_b(i)},
                           {"faces", faces}});
        }
        out << arr.dump(2) << "\n";
    } else {
        out << "# dp4a13 constants v1\n";
        out << "case,face,alpha,tau_infinity,c_inf,b\n";
        for (int i : cases) {
            const auto& bc = boundary_case(i);
            for (const auto& f : bc.faces) {
                std::string fname = "{";
                for (size_t k = 0; k < f.size(); ++k)
                    fname += (k ? ";E" : "E") + std::to_string(f[k]);
                fname += "}";
                out << i << ',' << fname << ',' << alpha(i, f).str() << ','
                    << (f.size() == 1 ? 8 : 4) << ',' << c_infinity(i).str() << ','
                    << exponent_b(i) << "\n";
            }
        }
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"integral points of bounded height on a singular quartic del Pezzo surface"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool need_case) {
        auto* c = sub->add_option("--case", cfg.case_i, "boundary case 1..6")
                      ->check(CLI::Range(1, 6));
        if (need_case) c->required();
        sub->add_option("--bound", cfg.bound, "height bound B")->check(CLI::PositiveNumber);
        sub->add_option("--prime-bound", cfg.prime_bound, "Euler product truncation")
            ->check(CLI::Range(i64(2), i64(100000000)));
        sub->add_option("--workers", cfg.workers, "worker threads (default $DP4A13_WORKERS or 1)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format: csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
    };

    auto* count = app.add_subcommand(
        "count", "count integral points N_i(B); csv columns: case,bound,method,count,"
                 "count_torsor,count_direct,seconds_torsor,seconds_direct");
    add_common(count, true);
    count->add_option("--method", cfg.method, "torsor|direct|both")
        ->check(CLI::IsMember({"torsor", "direct", "both"}));

    auto* predict = app.add_subcommand(
        "predict", "expected leading term; fields: case,c_inf (exact fraction),b,c_fin,"
                   "tail_bound,prime_bound,B,predicted (json by default)");
    add_common(predict, false);

    auto* compare = app.add_subcommand(
        "compare", "count vs prediction on a geometric B ladder; csv columns: "
                   "case,B,count,predicted,ratio");
    add_common(compare, true);
    compare->add_option("--method", cfg.method, "torsor|direct");

    auto* classify = app.add_subcommand(
        "classify", "admissible boundary divisors; csv columns: components,self_intersection");
    add_common(classify, false);

    auto* fp = app.add_subcommand(
        "fp", "finite-field census; csv columns: p,case,surface,resolution,u_points,"
              "p2_tau,match");
    add_common(fp, false);
    fp->add_option("range", cfg.fp_range, "prime range, e.g. 2..13");

    auto* points = app.add_subcommand(
        "points", "emit point data; chart=surface: case,x0..x4,height; chart=f|gp|gpp: "
                  "case,x,y,height; chart=torsor: case,eta1..eta9,height. Rows with "
                  "eta8=0 have no g'/g'' image and are omitted there.");
    add_common(points, true);
    points->add_option("--chart", cfg.chart, "surface|f|gp|gpp|torsor")
        ->check(CLI::IsMember({"surface", "f", "gp", "gpp", "torsor"}));
    points->add_option("--method", cfg.method, "torsor|direct (surface chart only)")
        ->check(CLI::IsMember({"torsor", "direct"}));

    auto* constants = app.add_subcommand(
        "constants", "alpha table and assembled constants; csv columns: "
                     "case,face,alpha,tau_infinity,c_inf,b");
    add_common(constants, false);

    std::vector<const char*> argv;
    argv.push_back("dp4a13");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    if (cfg.format.empty()) cfg.format = predict->parsed() ? "json" : "csv";

    try {
        if (count->parsed()) return cmd_count(cfg, out, err);
        if (predict->parsed()) return cmd_predict(cfg, out, err);
        if (compare->parsed()) return cmd_compare(cfg, out, err);
        if (classify->parsed()) return cmd_classify(cfg, out, err);
        if (fp->parsed()) return cmd_fp(cfg, out, err);
        if (points->parsed()) return cmd_points(cfg, out, err);
        if (constants->parsed()) return cmd_constants(cfg, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Errc::method_disagreement ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run_cli(args, out, err);
}

} // namespace dp4a13
