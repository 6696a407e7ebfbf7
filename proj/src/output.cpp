#include "osc3d/output.hpp"

#include <charconv>
#include <stdexcept>

namespace osc3d {

namespace {

std::string format_cell(const nlohmann::json& v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> linspace(double lo, double hi, int count) {
    if (count < 1) throw std::domain_error("linspace: count must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(count));
    if (count == 1) {
        out[0] = lo;
        return out;
    }
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) out[std::size_t(i)] = lo + step * i;
    return out;
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += format_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table, nlohmann::json meta) {
    meta["columns"] = table.columns;
    nlohmann::json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = table.rows;
    return doc.dump(2) + "\n";
}

}  // namespace osc3d
