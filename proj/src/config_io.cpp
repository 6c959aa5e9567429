#include "sitnikov/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sitnikov {

std::string g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

PlanarConfiguration from_json(const nlohmann::json& j,
                              std::optional<double> tol_override) {
    if (!j.is_object() || !j.contains("masses") || !j.contains("positions"))
        throw std::runtime_error("config JSON needs \"masses\" and \"positions\"");

    std::vector<double> masses = j.at("masses").get<std::vector<double>>();
    std::vector<Vec2> positions;
    for (const auto& p : j.at("positions")) {
        if (!p.is_array() || p.size() != 2)
            throw std::runtime_error("positions must be [x,y] pairs");
        positions.push_back({p[0].get<double>(), p[1].get<double>()});
    }

    double tol = kDefaultTol;
    if (j.contains("tol")) tol = j.at("tol").get<double>();
    if (tol_override) tol = *tol_override;
    return {std::move(masses), std::move(positions), tol};
}

}  // namespace

PlanarConfiguration parse_config(const std::string& text,
                                 std::optional<double> tol_override) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config JSON parse error: ") + e.what());
    }
    try {
        return from_json(j, tol_override);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("config JSON schema error: ") + e.what());
    }
}

PlanarConfiguration load_config(const std::string& path,
                                std::optional<double> tol_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), tol_override);
}

std::string config_to_json(const PlanarConfiguration& config,
                           std::optional<Vec2> massless_point) {
    nlohmann::json j;
    j["masses"] = config.masses();
    auto positions = nlohmann::json::array();
    for (const auto& p : config.positions())
        positions.push_back(nlohmann::json::array({p.x, p.y}));
    j["positions"] = positions;
    j["tol"] = config.tol();
    if (massless_point)
        j["massless_point"] = nlohmann::json::array({massless_point->x, massless_point->y});
    return j.dump(2) + "\n";
}

void save_config(const std::string& path, const PlanarConfiguration& config,
                 std::optional<Vec2> massless_point) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config file: " + path);
    out << config_to_json(config, massless_point);
}

void write_trajectory_csv(std::ostream& os, const PlanarConfiguration& config,
                          const Trajectory& trajectory) {
    os << "t,z,v,E\n";
    for (const auto& s : trajectory.samples)
        os << g17(s.t) << ',' << g17(s.z) << ',' << g17(s.v) << ','
           << g17(energy(config, s)) << '\n';
}

void write_trajectory3_csv(std::ostream& os, const Trajectory3& trajectory) {
    os << "t,x,y,z,vx,vy,vz\n";
    for (const auto& s : trajectory.samples)
        os << g17(s.t) << ',' << g17(s.pos.x) << ',' << g17(s.pos.y) << ','
           << g17(s.pos.z) << ',' << g17(s.vel.x) << ',' << g17(s.vel.y) << ','
           << g17(s.vel.z) << '\n';
}

void write_period_rows_csv(std::ostream& os, const std::vector<PeriodResult>& rows) {
    os << "E,z_E,T0,est_error\n";
    for (const auto& r : rows)
        os << g17(r.E) << ',' << g17(r.z_E) << ',' << g17(r.T0) << ','
           << g17(r.est_error) << '\n';
}

void write_polygon_scan_csv(std::ostream& os, const PolygonScanResult& scan) {
    os << "n,sum,holds\n";
    for (const auto& row : scan.rows)
        os << row.n << ',' << g17(row.sum) << ',' << (row.holds ? 1 : 0) << '\n';
}

}  // namespace sitnikov
