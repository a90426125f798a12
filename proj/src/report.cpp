#include "parikh/report.hpp"

#include <algorithm>
#include <sstream>

namespace parikh::report {

using nlohmann::json;

json to_json(const ParikhVector& v) {
    return json(std::vector<Count>(v.components().begin(), v.components().end()));
}

json to_json(const Attractor& a) {
    json cycle = json::array();
    for (const auto& member : a.cycle()) cycle.push_back(to_json(member));
    return {{"order", a.order()}, {"cycle", std::move(cycle)}};
}

namespace {

json attractor_list(const std::map<std::size_t, std::vector<Attractor>>& by_order,
                    const std::vector<Attractor>& beyond) {
    json list = json::array();
    for (const auto& [order, attractors] : by_order)
        for (const auto& a : attractors) list.push_back(to_json(a));
    for (const auto& a : beyond) list.push_back(to_json(a));
    return list;
}

std::string cell_text(const std::vector<Attractor>& attractors, const std::string& member_sep,
                      const std::string& attractor_sep) {
    std::string out;
    for (const auto& a : attractors) {
        if (!out.empty()) out += attractor_sep;
        for (std::size_t i = 0; i < a.cycle().size(); ++i) {
            if (i) out += member_sep;
            out += format_vector(a.cycle()[i]);
        }
    }
    return out;
}

std::string render_grid(const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::string out;
    for (std::size_t r = 0; r < grid.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < grid[r].size(); ++c) {
            if (c) line += " | ";
            line += grid[r][c];
            if (c + 1 < grid[r].size()) line.append(width[c] - grid[r][c].size(), ' ');
        }
        out += line + '\n';
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? 3 : 0);
            out += std::string(total, '-') + '\n';
        }
    }
    return out;
}

} // namespace

json to_json(const AttractorTable& table) {
    return {{"basis", table.basis.size()},
            {"attractors", attractor_list(table.entries, table.beyond_max_order)}};
}

json to_json(const ReachabilityReport& r) {
    json chain = json::array();
    for (const auto& v : r.witness_chain) chain.push_back(to_json(v));
    json attractors = json::array();
    for (const auto& a : r.attractors) attractors.push_back(to_json(a));
    json out = {{"basis", r.basis.size()},
                {"order", r.order},
                {"rate_from_alphabetic", r.rate_from_alphabetic},
                {"rate_from_word", r.rate_from_word},
                {"witness_chain", std::move(chain)},
                {"levels", r.levels()},
                {"attractors", std::move(attractors)},
                {"flagged", r.flagged}};
    const WitnessChain w = witness_chain(r);
    out["witness_alphabetic_basis"] = to_json(r.alpha_level);
    out["witness_letter_counts"] = w.letter_counts;
    out["witness_word"] = w.example_word.empty() ? json(nullptr) : json(w.example_word);
    out["witness_verified"] = w.valid;
    return out;
}

AttractorRow row_from(const AttractorTable& table) {
    return {table.basis.size(), table.entries, table.beyond_max_order};
}

std::size_t column_count(const std::vector<AttractorRow>& rows) {
    std::size_t k = 3;
    for (const auto& row : rows)
        if (!row.by_order.empty()) k = std::max(k, row.by_order.rbegin()->first);
    return k;
}

std::string attractors_text(const std::vector<AttractorRow>& rows) {
    const std::size_t columns = column_count(rows);
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"n"};
    for (std::size_t k = 1; k <= columns; ++k) header.push_back("k=" + std::to_string(k));
    grid.push_back(header);
    std::string extra;
    for (const auto& row : rows) {
        std::vector<std::string> line{std::to_string(row.n)};
        for (std::size_t k = 1; k <= columns; ++k) {
            auto it = row.by_order.find(k);
            line.push_back(it == row.by_order.end() ? "-" : cell_text(it->second, "/", ", "));
        }
        grid.push_back(std::move(line));
        for (const auto& a : row.beyond_max_order)
            extra += "n=" + std::to_string(row.n) + ": order " + std::to_string(a.order()) +
                     " beyond --max-order: " + cell_text({a}, "/", ", ") + '\n';
    }
    return render_grid(grid) + extra;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string attractors_csv(const std::vector<AttractorRow>& rows) {
    const std::size_t columns = column_count(rows);
    std::ostringstream out;
    out << 'n';
    for (std::size_t k = 1; k <= columns; ++k) out << ",k" << k;
    out << '\n';
    for (const auto& row : rows) {
        out << row.n;
        for (std::size_t k = 1; k <= columns; ++k) {
            out << ',';
            auto it = row.by_order.find(k);
            if (it != row.by_order.end()) out << csv_field(cell_text(it->second, "|", "|"));
        }
        out << '\n';
    }
    return out.str();
}

json attractors_json(const std::vector<AttractorRow>& rows, MappingMode mode) {
    json tables = json::array();
    for (const auto& row : rows)
        tables.push_back(
            {{"basis", row.n}, {"attractors", attractor_list(row.by_order, row.beyond_max_order)}});
    return {{"schema_version", kSchemaVersion},
            {"mode", std::string(to_string(mode))},
            {"tables", std::move(tables)}};
}

namespace {

std::vector<std::size_t> distinct_n(const std::vector<ReachCell>& cells) {
    std::vector<std::size_t> ns;
    for (const auto& c : cells)
        if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
    return ns;
}

std::vector<std::size_t> distinct_k(const std::vector<ReachCell>& cells) {
    std::vector<std::size_t> ks;
    for (const auto& c : cells)
        if (std::find(ks.begin(), ks.end(), c.k) == ks.end()) ks.push_back(c.k);
    std::sort(ks.begin(), ks.end());
    return ks;
}

const ReachCell* find_cell(const std::vector<ReachCell>& cells, std::size_t n, std::size_t k) {
    for (const auto& c : cells)
        if (c.n == n && c.k == k) return &c;
    return nullptr;
}

} // namespace

std::string reach_text(const std::vector<ReachCell>& cells, RateOrigin origin, bool with_witness) {
    const auto ks = distinct_k(cells);
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"n"};
    for (auto k : ks) header.push_back("k=" + std::to_string(k));
    grid.push_back(header);
    for (auto n : distinct_n(cells)) {
        std::vector<std::string> line{std::to_string(n)};
        for (auto k : ks) {
            const ReachCell* c = find_cell(cells, n, k);
            line.push_back(c && c->rate ? std::to_string(*c->rate) : "-");
        }
        grid.push_back(std::move(line));
    }
    std::string out = "mappings from " + std::string(to_string(origin)) + '\n' + render_grid(grid);
    if (!with_witness) return out;
    for (const auto& c : cells) {
        if (!c.detail) continue;
        const WitnessChain w = witness_chain(*c.detail);
        out += "\nn=" + std::to_string(c.n) + " k=" + std::to_string(c.k) + ": ";
        if (!w.example_word.empty()) out += "word " + w.example_word + ", ";
        out += "counts (" + format_counts(w.letter_counts) + ")";
        for (const auto& v : w.chain) out += " -> " + format_vector(v);
        if (!w.valid) out += "  [not verified]";
        out += '\n';
    }
    return out;
}

std::string reach_csv(const std::vector<ReachCell>& cells) {
    const auto ks = distinct_k(cells);
    std::ostringstream out;
    out << 'n';
    for (auto k : ks) out << ",k" << k;
    out << '\n';
    for (auto n : distinct_n(cells)) {
        out << n;
        for (auto k : ks) {
            out << ',';
            const ReachCell* c = find_cell(cells, n, k);
            if (c && c->rate) out << *c->rate;
        }
        out << '\n';
    }
    return out.str();
}

json reach_json(const std::vector<ReachCell>& cells, RateOrigin origin, MappingMode mode) {
    json results = json::array();
    for (const auto& c : cells) {
        if (c.detail) {
            results.push_back(to_json(*c.detail));
            continue;
        }
        json entry = {{"basis", c.n}, {"order", c.k}};
        if (c.rate) {
            entry["rate_from_alphabetic"] = *c.rate - (origin == RateOrigin::Word ? 1 : 0);
            entry["rate_from_word"] = *c.rate + (origin == RateOrigin::Alphabetic ? 1 : 0);
            entry["witness_chain"] = nullptr;
        } else {
            entry["rate_from_alphabetic"] = nullptr;
            entry["rate_from_word"] = nullptr;
            entry["witness_chain"] = nullptr;
            entry["error"] = "NoAttractor";
        }
        results.push_back(std::move(entry));
    }
    return {{"schema_version", kSchemaVersion},
            {"mode", std::string(to_string(mode))},
            {"from", std::string(to_string(origin))},
            {"results", std::move(results)}};
}

} // namespace parikh::report
