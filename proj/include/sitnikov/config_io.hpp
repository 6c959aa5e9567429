#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sitnikov/config.hpp"
#include "sitnikov/dynamics.hpp"
#include "sitnikov/period.hpp"
#include "sitnikov/sync.hpp"

namespace sitnikov {

/// A double rendered with 17 significant digits (round-trip exact).
std::string g17(double value);

/// Read a configuration from JSON: {"masses": [..], "positions": [[x,y],..],
/// "tol": optional}. Unknown keys are ignored. Throws std::runtime_error on
/// unreadable or malformed input and std::invalid_argument on invalid
/// configurations.
PlanarConfiguration load_config(const std::string& path,
                                std::optional<double> tol_override = {});

/// Parse a configuration from JSON text (same schema as load_config).
PlanarConfiguration parse_config(const std::string& text,
                                 std::optional<double> tol_override = {});

/// Serialize a configuration to JSON text; optionally record the position of
/// an associated massless point (extra key, ignored on load).
std::string config_to_json(const PlanarConfiguration& config,
                           std::optional<Vec2> massless_point = {});

void save_config(const std::string& path, const PlanarConfiguration& config,
                 std::optional<Vec2> massless_point = {});

void write_trajectory_csv(std::ostream& os, const PlanarConfiguration& config,
                          const Trajectory& trajectory);
void write_trajectory3_csv(std::ostream& os, const Trajectory3& trajectory);
void write_period_rows_csv(std::ostream& os, const std::vector<PeriodResult>& rows);
void write_polygon_scan_csv(std::ostream& os, const PolygonScanResult& scan);

}  // namespace sitnikov
