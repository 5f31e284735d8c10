#include "negsim/io.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace negsim {

namespace {

using nlohmann::json;

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open for writing: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw io_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw io_error("rename failed: " + path.string() + ": " + ec.message());
}

json params_json(const ChainParams& p, const QutritCoupling& c, const TimeGrid& g) {
    return json{{"n", p.n},           {"gamma", p.gamma},     {"alpha", p.alpha},
                {"eta", p.eta},       {"g_a", c.g_a},         {"g_b", c.g_b},
                {"t_start", g.t_start}, {"t_end", g.t_end},   {"steps", g.steps}};
}

void write_meta(const std::filesystem::path& csv_path, json meta) {
    meta["tool"] = "negsim";
    meta["version"] = kVersion;
    meta["generated_utc"] = utc_now();
    atomic_write(csv_path.string() + ".meta.json", meta.dump(2) + "\n");
}

}  // namespace

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_timeseries_csv(const SweepResult& r, const std::filesystem::path& path) {
    std::string body = "t,f15_abs,f19_abs,f59_abs,negativity\n";
    for (std::size_t i = 0; i < r.t_axis.size(); ++i) {
        body += format_g17(r.t_axis[i]);
        body += ',';
        body += format_g17(r.f15_abs[i]);
        body += ',';
        body += format_g17(r.f19_abs[i]);
        body += ',';
        body += format_g17(r.f59_abs[i]);
        body += ',';
        body += format_g17(r.negativity[i]);
        body += '\n';
    }
    atomic_write(path, body);
    json meta{{"kind", "timeseries"},
              {"columns", {"t", "f15_abs", "f19_abs", "f59_abs", "negativity"}},
              {"rows", r.t_axis.size()},
              {"params", params_json(r.params, r.coupling, r.grid)}};
    if (!r.note.empty()) meta["note"] = r.note;
    write_meta(path, meta);
}

void write_grid_csv(const SweepResult& r, const std::filesystem::path& path) {
    std::string body = "alpha,t,negativity\n";
    const std::size_t nt = r.t_axis.size();
    for (std::size_t ia = 0; ia < r.alpha_axis.size(); ++ia)
        for (std::size_t it = 0; it < nt; ++it) {
            body += format_g17(r.alpha_axis[ia]);
            body += ',';
            body += format_g17(r.t_axis[it]);
            body += ',';
            body += format_g17(r.negativity[ia * nt + it]);
            body += '\n';
        }
    atomic_write(path, body);
    json meta{{"kind", "grid"},
              {"columns", {"alpha", "t", "negativity"}},
              {"rows", r.alpha_axis.size() * nt},
              {"alpha_steps", r.alpha_axis.size()},
              {"params", params_json(r.params, r.coupling, r.grid)}};
    if (!r.alpha_axis.empty()) {
        meta["alpha_min"] = r.alpha_axis.front();
        meta["alpha_max"] = r.alpha_axis.back();
    }
    if (!r.note.empty()) meta["note"] = r.note;
    write_meta(path, meta);
}

void write_family_csv(const std::vector<SweepResult>& family,
                      const std::filesystem::path& path) {
    if (family.empty()) throw io_error("empty family for " + path.string());
    std::string body = "eta,t,negativity\n";
    for (const SweepResult& r : family)
        for (std::size_t i = 0; i < r.t_axis.size(); ++i) {
            body += format_g17(r.params.eta);
            body += ',';
            body += format_g17(r.t_axis[i]);
            body += ',';
            body += format_g17(r.negativity[i]);
            body += '\n';
        }
    atomic_write(path, body);
    json etas = json::array();
    for (const SweepResult& r : family) etas.push_back(r.params.eta);
    json meta{{"kind", "eta_family"},
              {"columns", {"eta", "t", "negativity"}},
              {"etas", etas},
              {"params", params_json(family.front().params, family.front().coupling,
                                     family.front().grid)}};
    if (!family.front().note.empty()) meta["note"] = family.front().note;
    write_meta(path, meta);
}

void write_objective_csv(const CriticalAlphaResult& r, const ChainParams& base,
                         const QutritCoupling& c, const TimeGrid& grid,
                         const std::filesystem::path& path) {
    std::string body = "alpha,objective\n";
    for (std::size_t i = 0; i < r.coarse_alpha.size(); ++i) {
        body += format_g17(r.coarse_alpha[i]);
        body += ',';
        body += format_g17(r.coarse_objective[i]);
        body += '\n';
    }
    atomic_write(path, body);
    json meta{{"kind", "critical_alpha_curve"},
              {"columns", {"alpha", "objective"}},
              {"rows", r.coarse_alpha.size()},
              {"flat", r.flat},
              {"params", params_json(base, c, grid)}};
    if (!r.flat) {
        meta["alpha_star"] = r.alpha_star;
        meta["objective_at_star"] = r.objective;
    }
    write_meta(path, meta);
}

}  // namespace negsim
