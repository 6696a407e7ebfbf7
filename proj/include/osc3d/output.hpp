#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace osc3d {

// shortest representation that round-trips, identical across runs
std::string format_double(double v);

// count >= 1; a single point collapses to lo
std::vector<double> linspace(double lo, double hi, int count);

// column-named result rows; cells keep their type until serialization
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

std::string to_csv(const Table& table);

// wraps the rows with a meta block; columns are recorded in the meta so the
// row arrays stay positional
std::string to_json(const Table& table, nlohmann::json meta);

}  // namespace osc3d
