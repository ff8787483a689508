// Command-line driver. Talks to the library exclusively through the C API.
#include "capflow.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CurveGuard {
    capflow_curve* p = nullptr;
    ~CurveGuard() { capflow_curve_free(p); }
};

struct TableGuard {
    capflow_fk_table* p = nullptr;
    ~TableGuard() { capflow_fk_free(p); }
};

int fail(capflow_status st, const std::string& what) {
    std::fprintf(stderr, "error (%s): %s\n", what.c_str(), capflow_last_error());
    return static_cast<int>(st);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// temp-file + rename so partially written outputs never shadow good ones
void write_atomic(const fs::path& path, const std::string& content) {
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
    }
    fs::rename(tmp, path);
}

json curve_to_json(const capflow_curve* c, double t) {
    const int count = capflow_curve_nodes(c);
    std::vector<double> r(count), z(count);
    capflow_curve_data(c, r.data(), z.data());
    json j;
    j["n"] = capflow_curve_dim(c);
    j["theta"] = capflow_curve_theta(c);
    j["t"] = t;
    j["r"] = r;
    j["z"] = z;
    return j;
}

capflow_status curve_from_file(const std::string& path, capflow_curve** out) {
    std::ifstream in(path);
    if (!in) return CAPFLOW_ERR_INVALID;
    json j;
    try {
        in >> j;
    } catch (...) {
        return CAPFLOW_ERR_INVALID;
    }
    const std::vector<double> r = j.at("r"), z = j.at("z");
    return capflow_curve_from_arrays(j.at("n"), j.at("theta"), r.data(), z.data(),
                                     static_cast<int>(r.size()), out);
}

struct Manifest {
    std::string command;
    json config;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void flush(const fs::path& dir, int exit_status) {
        json j;
        j["command"] = command;
        j["config"] = config;
        j["version"] = "1.0";
        j["outputs"] = outputs;
        j["wall_clock_s"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        j["exit_status"] = exit_status;
        write_atomic(dir / "manifest.json", j.dump(2) + "\n");
    }
};

const char* kTrajectoryHeaderBase =
    "min_rho,min_height_slack,minF,maxKappa,angle_defect,cap_dist,speed_sup";

struct TrajWriter {
    std::string buf;
    int ncols;
    explicit TrajWriter(int n) : ncols(n + 2) {
        buf = "t";
        for (int i = 0; i < ncols; ++i) buf += ",W" + std::to_string(i);
        buf += std::string(",") + kTrajectoryHeaderBase + "\n";
    }
    void add(const capflow_record& r) {
        buf += fmt(r.t);
        for (int i = 0; i < ncols; ++i) buf += "," + fmt(r.W[i]);
        for (double v : {r.min_rho, r.min_height_slack, r.minF, r.maxKappa,
                         r.angle_defect, r.cap_dist, r.speed_sup})
            buf += "," + fmt(v);
        buf += "\n";
    }
};

int cmd_cap(int n, double theta, double R, int M, const std::string& out) {
    fs::create_directories(out);
    Manifest man;
    man.command = "cap";
    man.config = {{"n", n}, {"theta", theta}, {"R", R}, {"nodes", M}, {"out", out}};

    CurveGuard c;
    if (auto st = capflow_make_cap(n, theta, R, M, &c.p); st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, "make_cap");
    }
    write_atomic(fs::path(out) / "snapshot.json", curve_to_json(c.p, 0.0).dump() + "\n");
    man.outputs.push_back("snapshot.json");

    std::vector<double> W(n + 2);
    if (auto st = capflow_quermass(c.p, W.data()); st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, "quermass");
    }
    double alpha;
    {
        const int count = capflow_curve_nodes(c.p);
        std::vector<double> r(count), z(count);
        capflow_curve_data(c.p, r.data(), z.data());
        alpha = std::acos(z.back());
    }
    std::string csv = "R,alpha";
    for (int i = 0; i < n + 2; ++i) csv += ",W" + std::to_string(i);
    csv += "\n" + fmt(R) + "," + fmt(alpha);
    for (int i = 0; i < n + 2; ++i) csv += "," + fmt(W[i]);
    csv += "\n";
    write_atomic(fs::path(out) / "quermass.csv", csv);
    man.outputs.push_back("quermass.csv");
    man.flush(out, 0);
    return 0;
}

struct SimUser {
    TrajWriter* traj;
    fs::path dir;
    int snap_index = 0;
};

int cmd_simulate(const std::string& flow, int k, int n, double theta,
                 const std::string& init, double R, int mode, double eps,
                 const std::string& file, int M, double t_end, double cfl,
                 double dt_max, int resample_every, int diagnostics_every,
                 const std::string& out) {
    fs::create_directories(out);
    Manifest man;
    man.command = "simulate";
    man.config = {{"flow", flow},   {"k", k},       {"n", n},
                  {"theta", theta}, {"init", init}, {"R", R},
                  {"mode", mode},   {"eps", eps},   {"file", file},
                  {"nodes", M},     {"t_end", t_end}, {"cfl", cfl},
                  {"dt_max", dt_max}, {"resample_every", resample_every},
                  {"diagnostics_every", diagnostics_every}, {"out", out}};

    CurveGuard c;
    capflow_status st = CAPFLOW_OK;
    if (init == "cap")
        st = capflow_make_cap(n, theta, R, M, &c.p);
    else if (init == "flat")
        st = capflow_make_flat_ball(n, theta, M, &c.p);
    else if (init == "perturbed")
        st = capflow_make_perturbed_cap(n, theta, R, mode, eps, M, nullptr, &c.p);
    else if (init == "file")
        st = curve_from_file(file, &c.p);
    else {
        std::fprintf(stderr, "unknown init kind '%s'\n", init.c_str());
        man.flush(out, 1);
        return 1;
    }
    if (st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, "init");
    }

    capflow_flow_config cfg;
    capflow_flow_config_default(&cfg);
    cfg.kind = (flow == "mcf") ? 1 : 0;
    cfg.k = k;
    cfg.cfl = cfl;
    cfg.dt_max = dt_max;
    cfg.t_end = t_end;
    cfg.resample_every = resample_every;
    cfg.diagnostics_every = diagnostics_every;

    TrajWriter traj(n);
    SimUser user{&traj, out, 0};
    auto rec_cb = [](const capflow_record* r, void* u) {
        static_cast<SimUser*>(u)->traj->add(*r);
    };
    auto snap_cb = [](const capflow_curve* cv, double t, void* u) {
        auto* su = static_cast<SimUser*>(u);
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%04d.json", su->snap_index++);
        write_atomic(su->dir / name, curve_to_json(cv, t).dump() + "\n");
    };
    CurveGuard final_curve;
    st = capflow_flow_run(c.p, &cfg, rec_cb, snap_cb, &user, &final_curve.p);
    // partial trajectory is flushed regardless of how the run ended
    write_atomic(fs::path(out) / "trajectory.csv", traj.buf);
    man.outputs.push_back("trajectory.csv");
    if (st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, "flow_run");
    }
    write_atomic(fs::path(out) / "final.json", curve_to_json(final_curve.p, t_end).dump() + "\n");
    man.outputs.push_back("final.json");
    man.flush(out, 0);
    return 0;
}

int cmd_verify(const std::string& which, const std::string& in_path, int n,
               double theta, double R, int mode, double eps, int k_flag, int M,
               double tol, const std::string& out) {
    fs::create_directories(out);
    Manifest man;
    man.command = "verify";
    man.config = {{"which", which}, {"in", in_path}, {"n", n},
                  {"theta", theta}, {"R", R},        {"mode", mode},
                  {"eps", eps},     {"k", k_flag},   {"nodes", M},
                  {"tol", tol},     {"out", out}};

    CurveGuard c;
    if (!in_path.empty()) {
        if (auto st = curve_from_file(in_path, &c.p); st != CAPFLOW_OK) {
            man.flush(out, CAPFLOW_ERR_INVALID);
            return fail(CAPFLOW_ERR_INVALID, "load input curve");
        }
    } else {
        if (auto st = capflow_make_cap(n, theta, R, M, &c.p); st != CAPFLOW_OK) {
            man.flush(out, st);
            return fail(st, "make_cap");
        }
    }
    const int dim = capflow_curve_dim(c.p);
    const double th = capflow_curve_theta(c.p);

    json rep;
    rep["which"] = which;
    bool ok = true;
    auto item = [&](const std::string& name, double value, double tolv, bool pass) {
        rep["checks"].push_back(
            {{"name", name}, {"value", value}, {"tol", tolv}, {"pass", pass}});
        ok = ok && pass;
    };

    capflow_status st = CAPFLOW_OK;
    if (which == "hm") {
        const double t = tol > 0 ? tol : 1e-4;
        for (int k = 1; k <= dim && st == CAPFLOW_OK; ++k) {
            double v = 0;
            st = capflow_hsiung_minkowski(c.p, k, &v);
            if (st == CAPFLOW_OK)
                item("hm_k" + std::to_string(k), v, t, std::abs(v) < t);
        }
    } else if (which == "hk") {
        const double t = tol > 0 ? tol : 1e-6;
        double v = 0;
        st = capflow_heintze_karcher(c.p, &v);
        if (st == CAPFLOW_OK) item("hk", v, t, v > -t);
    } else if (which == "variation") {
        // difference-quotient speed against a cap base at matched resolution
        const double t = tol > 0 ? tol : 1e-3;
        const int count = capflow_curve_nodes(c.p);
        CurveGuard base;
        st = capflow_make_cap(dim, th, R, count - 1, &base.p);
        if (st == CAPFLOW_OK) {
            std::vector<double> r0(count), z0(count), r1(count), z1(count);
            capflow_curve_data(base.p, r0.data(), z0.data());
            CurveGuard pert;
            const double e = eps > 0 ? eps : 1e-3;
            st = capflow_make_perturbed_cap(dim, th, R, mode, e, count - 1, nullptr,
                                            &pert.p);
            if (st == CAPFLOW_OK) {
                capflow_curve_data(pert.p, r1.data(), z1.data());
                // normal component of the node difference; the evaluator
                // re-measures the realized speed internally
                std::vector<double> f(count);
                for (int j = 0; j < count; ++j) {
                    // base cap normal from neighbours (central differences)
                    const int a = std::max(j - 1, 0), b = std::min(j + 1, count - 1);
                    double tr = r0[b] - r0[a], tz = z0[b] - z0[a];
                    const double nn = std::hypot(tr, tz);
                    const double nr = tz / nn, nz = -tr / nn;
                    f[j] = ((r1[j] - r0[j]) * nr + (z1[j] - z0[j]) * nz) / e;
                }
                for (int k = 0; k <= dim && st == CAPFLOW_OK; ++k) {
                    double v = 0;
                    st = capflow_variation_check(base.p, f.data(), k, 2e-3, &v);
                    if (st == CAPFLOW_OK)
                        item("variation_k" + std::to_string(k), v, t, std::abs(v) < t);
                }
            }
        }
    } else if (which == "horocap") {
        double rho = 0, slack = 0;
        int strict = 0;
        st = capflow_horocap(c.p, &rho, &slack, &strict);
        if (st == CAPFLOW_OK) {
            const double t = tol > 0 ? tol : 1e-10;
            item("min_rho", rho, t, rho > -t);
            item("min_height_slack", slack, t, slack > -t);
            rep["strict"] = strict != 0;
        }
    } else if (which == "support") {
        const double t = tol > 0 ? tol : 1e-8;
        double v = 0;
        st = capflow_support_check(c.p, &v);
        if (st == CAPFLOW_OK) item("support_max", v, t, v <= t);
    } else if (which == "inequality") {
        const double t = tol > 0 ? tol : 1e-6;
        for (int k = (k_flag > 0 ? k_flag : 1);
             k <= (k_flag > 0 ? k_flag : dim) && st == CAPFLOW_OK; ++k) {
            TableGuard tab;
            st = capflow_fk_build(dim, th, k, 513, 1e-3, 1e3, &tab.p);
            if (st != CAPFLOW_OK) break;
            double v = 0;
            st = capflow_fk_margin(tab.p, c.p, &v);
            if (st == CAPFLOW_OK)
                item("margin_k" + std::to_string(k), v, t, v > -t);
        }
    } else {
        std::fprintf(stderr, "unknown verification '%s'\n", which.c_str());
        man.flush(out, 1);
        return 1;
    }
    if (st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, which);
    }
    rep["pass"] = ok;
    write_atomic(fs::path(out) / "report.json", rep.dump(2) + "\n");
    man.outputs.push_back("report.json");
    const int code = ok ? 0 : 3;
    man.flush(out, code);
    if (!ok) std::fprintf(stderr, "verification '%s' FAILED\n", which.c_str());
    return code;
}

int cmd_tabulate_fk(int n, double theta, int k, int samples, double rmin,
                    double rmax, const std::string& out) {
    fs::create_directories(out);
    Manifest man;
    man.command = "tabulate-fk";
    man.config = {{"n", n},       {"theta", theta}, {"k", k}, {"samples", samples},
                  {"rmin", rmin}, {"rmax", rmax},   {"out", out}};
    TableGuard t;
    if (auto st = capflow_fk_build(n, theta, k, samples, rmin, rmax, &t.p);
        st != CAPFLOW_OK) {
        man.flush(out, st);
        return fail(st, "fk_build");
    }
    std::string csv = "# n=" + std::to_string(n) + " theta=" + fmt(theta) +
                      " k=" + std::to_string(k) + " samples=" + std::to_string(samples) +
                      " Rmin=" + fmt(rmin) + " Rmax=" + fmt(rmax) + "\n";
    csv += "R,Wkm1,Wk\n";
    for (int i = 0; i < capflow_fk_rows(t.p); ++i) {
        double R, a, b;
        capflow_fk_row(t.p, i, &R, &a, &b);
        csv += (std::isinf(R) ? std::string("inf") : fmt(R)) + "," + fmt(a) + "," +
               fmt(b) + "\n";
    }
    write_atomic(fs::path(out) / "fk.csv", csv);
    man.outputs.push_back("fk.csv");
    man.flush(out, 0);
    return 0;
}

int cmd_sweep(int n, double theta, int M, const std::string& out) {
    fs::create_directories(out);
    Manifest man;
    man.command = "sweep";
    man.config = {{"n", n}, {"theta", theta}, {"nodes", M}, {"out", out}};

    std::vector<TableGuard> tables(n + 1);
    for (int k = 1; k <= n; ++k) {
        if (auto st = capflow_fk_build(n, theta, k, 513, 1e-3, 1e3, &tables[k].p);
            st != CAPFLOW_OK) {
            man.flush(out, st);
            return fail(st, "fk_build");
        }
    }
    std::string csv = "R,mode,frac,eps,min_rho,support_max,hk";
    for (int k = 1; k <= n; ++k) csv += ",hm_k" + std::to_string(k);
    for (int k = 1; k <= n; ++k) csv += ",margin_k" + std::to_string(k);
    csv += "\n";
    bool ok = true;
    for (double R : {0.5, 0.8, 1.3}) {
        for (int mode : {2, 3}) {
            double es = 0;
            if (auto st = capflow_eps_star(n, theta, R, mode, M, &es);
                st != CAPFLOW_OK) {
                man.flush(out, st);
                return fail(st, "eps_star");
            }
            for (double frac : {0.25, 0.5, 0.8}) {
                const double eps = frac * es;
                CurveGuard c;
                if (auto st = capflow_make_perturbed_cap(n, theta, R, mode, eps, M,
                                                         nullptr, &c.p);
                    st != CAPFLOW_OK) {
                    man.flush(out, st);
                    return fail(st, "make_perturbed_cap");
                }
                double rho = 0, slack = 0, sup = 0, hk = 0;
                capflow_horocap(c.p, &rho, &slack, nullptr);
                capflow_support_check(c.p, &sup);
                capflow_heintze_karcher(c.p, &hk);
                csv += fmt(R) + "," + std::to_string(mode) + "," + fmt(frac) + "," +
                       fmt(eps) + "," + fmt(rho) + "," + fmt(sup) + "," + fmt(hk);
                ok = ok && rho > 0 && sup <= 1e-8 && hk > -1e-6;
                for (int k = 1; k <= n; ++k) {
                    double v = 0;
                    capflow_hsiung_minkowski(c.p, k, &v);
                    csv += "," + fmt(v);
                    ok = ok && std::abs(v) < 1e-4;
                }
                for (int k = 1; k <= n; ++k) {
                    double v = 0;
                    capflow_fk_margin(tables[k].p, c.p, &v);
                    csv += "," + fmt(v);
                    ok = ok && v > -1e-6;
                }
                csv += "\n";
            }
        }
    }
    write_atomic(fs::path(out) / "corpus.csv", csv);
    man.outputs.push_back("corpus.csv");
    const int code = ok ? 0 : 3;
    man.flush(out, code);
    if (!ok) std::fprintf(stderr, "sweep found violations\n");
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Capillary hypersurface flow laboratory"};
    app.require_subcommand(1);
    app.set_config("--config");

    int n = 2, M = 400, k = 1, mode = 2, samples = 513;
    double theta = M_PI / 2, R = 1.0, eps = 0.0, t_end = 1.0, cfl = 0.2,
           dt_max = 1e-3, rmin = 1e-3, rmax = 1e3, tol = 0.0;
    int resample_every = 200, diagnostics_every = 500;
    long seed = 0;
    std::string out, init = "cap", flow = "quotient", file, which, in_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "hypersurface dimension")->check(CLI::Range(2, 6));
        cmd->add_option("--theta", theta, "contact angle in (0, pi/2]");
        cmd->add_option("--nodes", M, "profile intervals");
        cmd->add_option("--seed", seed, "reserved for randomized sweeps");
        cmd->add_option("--out", out, "output directory")->required();
    };

    auto* cap = app.add_subcommand("cap", "emit a cap snapshot and its quermass vector");
    add_common(cap);
    cap->add_option("--R", R, "cap radius")->check(CLI::PositiveNumber);

    auto* sim = app.add_subcommand("simulate", "run a flow");
    add_common(sim);
    sim->add_option("--flow", flow)->check(CLI::IsMember({"quotient", "mcf"}));
    sim->add_option("--k", k, "quotient index")->check(CLI::Range(1, 6));
    sim->add_option("--init", init)->check(CLI::IsMember({"cap", "flat", "perturbed", "file"}));
    sim->add_option("--R", R);
    sim->add_option("--mode", mode);
    sim->add_option("--eps", eps);
    sim->add_option("--file", file, "snapshot to start from");
    sim->add_option("--t-end", t_end);
    sim->add_option("--cfl", cfl);
    sim->add_option("--dt-max", dt_max);
    sim->add_option("--resample-every", resample_every);
    sim->add_option("--diagnostics-every", diagnostics_every);

    auto* ver = app.add_subcommand("verify", "check an identity or inequality");
    add_common(ver);
    ver->add_option("--which", which)
        ->required()
        ->check(CLI::IsMember({"hm", "hk", "variation", "horocap", "support", "inequality"}));
    ver->add_option("--in", in_path, "snapshot to verify (default: cap from flags)");
    ver->add_option("--R", R);
    ver->add_option("--mode", mode);
    ver->add_option("--eps", eps);
    ver->add_option("--k", k);
    ver->add_option("--tol", tol, "tolerance override");

    auto* tab = app.add_subcommand("tabulate-fk", "build an equality table");
    add_common(tab);
    tab->add_option("--k", k)->required();
    tab->add_option("--samples", samples)->check(CLI::Range(64, 100000));
    tab->add_option("--rmin", rmin);
    tab->add_option("--rmax", rmax);

    auto* swp = app.add_subcommand("sweep", "evaluate the corpus");
    add_common(swp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (!(theta > 0.0) || theta > M_PI / 2 + 1e-14) {
        std::fprintf(stderr, "contact angle must lie in (0, pi/2]\n");
        return 1;
    }

    try {
        if (cap->parsed()) return cmd_cap(n, theta, R, M, out);
        if (sim->parsed())
            return cmd_simulate(flow, k, n, theta, init, R, mode, eps, file, M, t_end,
                                cfl, dt_max, resample_every, diagnostics_every, out);
        if (ver->parsed())
            return cmd_verify(which, in_path, n, theta, R, mode, eps,
                              ver->count("--k") ? k : 0, M, tol, out);
        if (tab->parsed()) return cmd_tabulate_fk(n, theta, k, samples, rmin, rmax, out);
        if (swp->parsed()) return cmd_sweep(n, theta, M, out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "fatal: %s\n", e.what());
        return 2;
    }
    return 1;
}
