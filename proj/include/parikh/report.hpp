#pragma once

// Rendering of attractor tables and reachability rates as text tables, JSON
// and CSV. Layouts follow the classical tables: one row per basis n, one
// column per attractor order k.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parikh/attractors.hpp"
#include "parikh/inverse.hpp"

namespace parikh::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const ParikhVector& v);
nlohmann::json to_json(const Attractor& a);
nlohmann::json to_json(const AttractorTable& table);
nlohmann::json to_json(const ReachabilityReport& r);

/// Attractors of one basis, possibly from an exploratory sweep.
struct AttractorRow {
    std::size_t n = 0;
    std::map<std::size_t, std::vector<Attractor>> by_order;
    std::vector<Attractor> beyond_max_order;
};

AttractorRow row_from(const AttractorTable& table);

/// Columns k1..kK with K = max(3, highest order present).
std::size_t column_count(const std::vector<AttractorRow>& rows);

std::string attractors_text(const std::vector<AttractorRow>& rows);
std::string attractors_csv(const std::vector<AttractorRow>& rows);
nlohmann::json attractors_json(const std::vector<AttractorRow>& rows, MappingMode mode);

/// One cell of the reachability table; rate is empty where no attractor exists.
struct ReachCell {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> rate;
    std::optional<ReachabilityReport> detail;  ///< strict backward search only
};

std::string reach_text(const std::vector<ReachCell>& cells, RateOrigin origin, bool with_witness);
std::string reach_csv(const std::vector<ReachCell>& cells);
nlohmann::json reach_json(const std::vector<ReachCell>& cells, RateOrigin origin, MappingMode mode);

/// CSV field quoting for cells that contain commas or quotes.
std::string csv_field(const std::string& raw);

} // namespace parikh::report
