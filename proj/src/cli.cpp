#include "parikh/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "parikh/attractors.hpp"
#include "parikh/countable.hpp"
#include "parikh/dynamics.hpp"
#include "parikh/errors.hpp"
#include "parikh/inverse.hpp"
#include "parikh/report.hpp"
#include "parikh/sampling.hpp"

namespace parikh::cli {

using nlohmann::json;

namespace {

std::size_t parse_size(std::string_view text, std::string_view whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("invalid range '" + std::string(whole) + "'");
    return value;
}

} // namespace

std::pair<std::size_t, std::size_t> parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        std::size_t v = parse_size(text, text);
        return {v, v};
    }
    std::size_t a = parse_size(text.substr(0, dots), text);
    std::size_t b = parse_size(text.substr(dots + 2), text);
    if (a > b) throw ParseError("empty range '" + std::string(text) + "'");
    return {a, b};
}

namespace {

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& text) {
    if (text == "table") return Format::Table;
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    throw ParseError("unknown format '" + text + "'");
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

// --- map -------------------------------------------------------------------

struct MapOptions {
    std::string word;
    std::optional<std::string> alphabet;
    std::size_t n = 0;
    std::string mode = "strict";
    std::string format = "table";
    bool trace = false;
    std::size_t step_limit = kDefaultStepLimit;
};

json checks_json(const PropertyReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"label", c.label},
                          {"description", c.description},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"passed", c.passed},
                          {"informational", c.informational}});
    return {{"stage", std::string(to_string(report.stage))},
            {"plain_sum", report.plain_sum},
            {"weighted_sum", report.weighted_sum},
            {"checks", std::move(checks)}};
}

std::string checks_text(const PropertyReport& report, bool trace, const std::string& indent) {
    std::string out;
    if (!trace) {
        for (const auto& c : report.checks) {
            out += out.empty() ? "  " : " ";
            out += c.label + (c.informational ? (c.passed ? " (=)" : " (info)") : (c.passed ? " ok" : " FAIL"));
        }
        return out + '\n';
    }
    out += '\n';
    for (const auto& c : report.checks) {
        out += indent + c.label + ' ' + c.description + ": expected " + std::to_string(c.expected) +
               ", got " + std::to_string(c.actual) + " [" +
               (c.informational ? "informational" : pass_fail(c.passed)) + "]\n";
    }
    return out;
}

int cmd_map(const MapOptions& opt, std::ostream& out) {
    const MappingMode mode = parse_mode(opt.mode);
    const Format format = parse_format(opt.format);
    if (format == Format::Csv) throw ParseError("map supports --format table|json");
    const Basis basis(opt.n);

    const AlphabeticVector av = alphabetic_map(opt.word, opt.alphabet);
    StageContext ctx{opt.word.size(), av.size(), opt.n};
    const bool enforce = mode == MappingMode::Strict;
    bool checks_ok = true;
    auto track = [&](const PropertyReport& r) {
        if (enforce && !r.all_passed()) checks_ok = false;
        return r;
    };

    std::ostringstream text;
    json doc = {{"schema_version", report::kSchemaVersion},
                {"word", opt.word},
                {"basis", opt.n},
                {"mode", std::string(to_string(mode))}};

    std::string letters(av.alphabet().begin(), av.alphabet().end());
    text << "word: \"" << opt.word << "\" (" << opt.word.size() << " letters)\n";
    text << "alphabet: " << letters
         << (opt.alphabet ? " (explicit; unused letters count at position 0)" : " (first occurrence)")
         << '\n';
    const PropertyReport alpha_props = track(check_stage_properties(av, ctx));
    text << "alphabetic vector: (" << format_counts(av.counts()) << ")"
         << checks_text(alpha_props, opt.trace, "    ");
    doc["alphabet"] = letters;
    doc["alphabet_explicit"] = opt.alphabet.has_value();
    doc["alphabetic_vector"] = std::vector<Count>(av.counts().begin(), av.counts().end());
    doc["alphabetic_properties"] = checks_json(alpha_props);

    ParikhVector beta = ParikhVector::zero(basis);
    try {
        beta = alphabetic_basis_map(av, basis, mode);
    } catch (const OutOfRangeCount& e) {
        text << "escape: " << e.what() << '\n';
        text << "result: divergence before the first basis map (strict mode)\n";
        doc["result"] = "divergence";
        doc["escape"] = {{"stage", "alphabetic-basis"}, {"detail", e.what()}};
        if (format == Format::Json) emit_json(out, doc);
        else out << text.str();
        return kDivergence;
    }
    const PropertyReport beta_props = track(check_stage_properties(Stage::AlphabeticBasis, beta, ctx));
    text << "alphabetic-basis vector: " << format_vector(beta)
         << checks_text(beta_props, opt.trace, "    ");
    doc["alphabetic_basis_vector"] = report::to_json(beta);
    doc["alphabetic_basis_properties"] = checks_json(beta_props);

    const Trajectory t = iterate(beta, mode, opt.step_limit);
    text << "basis trajectory:\n";
    json steps = json::array();
    for (std::size_t i = 0; i < t.states.size(); ++i) {
        const ParikhVector& v = t.states[i];
        json step = {{"step", i}, {"vector", report::to_json(v)}};
        text << "  " << i << ": " << format_vector(v);
        if (i > 0) {
            const Stage stage = i == 1 ? Stage::FirstBasis : Stage::Steady;
            const PropertyReport props = track(check_stage_properties(stage, v, ctx));
            text << checks_text(props, opt.trace, "       ");
            step["properties"] = checks_json(props);
        } else {
            text << '\n';
        }
        steps.push_back(std::move(step));
    }
    doc["trajectory"] = std::move(steps);

    int code = kSuccess;
    switch (t.terminated_by) {
    case Termination::CycleFound: {
        const std::size_t k = *t.cycle_length;
        std::vector<ParikhVector> cycle(t.states.begin() + static_cast<std::ptrdiff_t>(t.tail_length),
                                        t.states.begin() + static_cast<std::ptrdiff_t>(t.tail_length + k));
        const Attractor a = Attractor::from_cycle(cycle, mode);
        const std::size_t mappings = 1 + t.tail_length;
        std::string members;
        for (const auto& m : a.cycle()) members += (members.empty() ? "" : "/") + format_vector(m);
        text << "result: order-" << k << " attractor " << members << " reached after " << mappings
             << " mappings from the alphabetic vector (" << mappings + 1 << " from the word)\n";
        doc["result"] = "converged";
        doc["attractor"] = report::to_json(a);
        doc["mappings_from_alphabetic"] = mappings;
        doc["mappings_from_word"] = mappings + 1;
        break;
    }
    case Termination::OutOfRangeError:
        text << "escape: component " << t.escape->index << " of " << format_vector(t.states.back())
             << " is " << t.escape->value << " >= n=" << opt.n << '\n';
        text << "result: divergence (strict mode)\n";
        doc["result"] = "divergence";
        doc["escape"] = {{"stage", "basis"},
                         {"at", report::to_json(t.states.back())},
                         {"index", t.escape->index},
                         {"value", t.escape->value}};
        code = kDivergence;
        break;
    case Termination::StepLimit:
        text << "result: no cycle within " << opt.step_limit << " basis maps\n";
        doc["result"] = "step-limit";
        code = kCheckFailure;
        break;
    }
    if (code == kSuccess && !checks_ok) {
        text << "property checks failed\n";
        code = kCheckFailure;
    }
    doc["checks_passed"] = checks_ok;
    if (format == Format::Json) emit_json(out, doc);
    else out << text.str();
    return code;
}

// --- attractors ------------------------------------------------------------

struct TableOptions {
    std::string n_range = "2..12";
    std::size_t max_order = kDefaultMaxOrder;
    std::string mode = "strict";
    std::string format = "table";
};

report::AttractorRow ignore_row(std::size_t n, std::size_t max_order) {
    report::AttractorRow row;
    row.n = n;
    if (n < 2) return row;
    const ConvergenceReport conv = verify_convergence_theorem(Basis(n), MappingMode::IgnoreOutOfRange);
    for (const auto& basin : conv.basins) {
        if (basin.attractor.order() > max_order) row.beyond_max_order.push_back(basin.attractor);
        else row.by_order[basin.attractor.order()].push_back(basin.attractor);
    }
    return row;
}

int cmd_attractors(const TableOptions& opt, std::ostream& out) {
    const auto [first, last] = parse_range(opt.n_range);
    if (first == 0) throw InvalidArgument("basis must be at least 1");
    const MappingMode mode = parse_mode(opt.mode);
    const Format format = parse_format(opt.format);

    std::vector<report::AttractorRow> rows;
    for (std::size_t n = first; n <= last; ++n) {
        if (mode == MappingMode::Strict) rows.push_back(report::row_from(find_attractors(Basis(n), opt.max_order)));
        else rows.push_back(ignore_row(n, opt.max_order));
    }
    switch (format) {
    case Format::Json: emit_json(out, report::attractors_json(rows, mode)); break;
    case Format::Csv: out << report::attractors_csv(rows); break;
    case Format::Table:
        if (mode == MappingMode::IgnoreOutOfRange) out << "mode: ignore (exploratory)\n";
        out << report::attractors_text(rows);
        break;
    }
    return kSuccess;
}

// --- reach -----------------------------------------------------------------

struct ReachOptions {
    std::string n_range = "4..11";
    std::optional<std::size_t> k;
    std::string from = "alphabetic";
    std::string mode = "strict";
    std::string format = "table";
    bool witness = false;
};

void reach_cells_strict(std::size_t n, const ReachOptions& opt, std::vector<report::ReachCell>& cells) {
    const AttractorTable table = find_attractors(Basis(n));
    std::vector<std::size_t> ks;
    if (opt.k) {
        ks.push_back(*opt.k);
    } else {
        std::size_t top = 3;
        if (!table.entries.empty()) top = std::max(top, table.entries.rbegin()->first);
        for (std::size_t k = 1; k <= top; ++k) ks.push_back(k);
    }
    const RateOrigin origin = parse_origin(opt.from);
    for (auto k : ks) {
        report::ReachCell cell{n, k, std::nullopt, std::nullopt};
        if (!table.at(k).empty()) {
            ReachabilityReport r = reachability_rate(Basis(n), k);
            cell.rate = r.rate(origin);
            cell.detail = std::move(r);
        }
        cells.push_back(std::move(cell));
    }
}

void reach_cells_ignore(std::size_t n, const ReachOptions& opt, std::vector<report::ReachCell>& cells) {
    std::map<std::size_t, std::size_t> by_order;
    if (n >= 2) {
        const ConvergenceReport conv = verify_convergence_theorem(Basis(n), MappingMode::IgnoreOutOfRange);
        for (const auto& basin : conv.basins) {
            auto& slot = by_order[basin.attractor.order()];
            slot = std::max(slot, basin.max_mappings_from_alphabetic);
        }
    }
    std::vector<std::size_t> ks;
    if (opt.k) {
        ks.push_back(*opt.k);
    } else {
        std::size_t top = 3;
        if (!by_order.empty()) top = std::max(top, by_order.rbegin()->first);
        for (std::size_t k = 1; k <= top; ++k) ks.push_back(k);
    }
    const std::size_t shift = parse_origin(opt.from) == RateOrigin::Word ? 1 : 0;
    for (auto k : ks) {
        report::ReachCell cell{n, k, std::nullopt, std::nullopt};
        if (auto it = by_order.find(k); it != by_order.end()) cell.rate = it->second + shift;
        cells.push_back(std::move(cell));
    }
}

int cmd_reach(const ReachOptions& opt, std::ostream& out) {
    const auto [first, last] = parse_range(opt.n_range);
    if (first == 0) throw InvalidArgument("basis must be at least 1");
    if (opt.k && *opt.k == 0) throw InvalidArgument("order must be at least 1");
    const MappingMode mode = parse_mode(opt.mode);
    const Format format = parse_format(opt.format);
    const RateOrigin origin = parse_origin(opt.from);

    std::vector<report::ReachCell> cells;
    for (std::size_t n = first; n <= last; ++n) {
        if (mode == MappingMode::Strict) reach_cells_strict(n, opt, cells);
        else reach_cells_ignore(n, opt, cells);
    }
    switch (format) {
    case Format::Json: emit_json(out, report::reach_json(cells, origin, mode)); break;
    case Format::Csv: out << report::reach_csv(cells); break;
    case Format::Table:
        if (mode == MappingMode::IgnoreOutOfRange)
            out << "mode: ignore (exploratory, forward sweep over generating vectors)\n";
        out << report::reach_text(cells, origin, opt.witness);
        break;
    }
    return kSuccess;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
    bool formula = false;
    bool theorem = false;
    bool countable = false;
    bool properties = false;
    std::optional<std::string> n_range;
    std::size_t samples = 1000;
    std::uint64_t seed = 7;
    std::size_t exhaustive_cap = kDefaultExhaustiveCap;
    std::string mode = "strict";
    std::string format = "table";
};

bool verify_formula_section(const VerifyOptions& opt, std::ostream& text, json& doc) {
    const auto [first, last] = parse_range(opt.n_range.value_or("8..40"));
    const FormulaReport r = verify_formula(first, last, {1, 2}, opt.exhaustive_cap);
    text << "formula check, n = " << first << ".." << last << " (exhaustive up to n = "
         << opt.exhaustive_cap << ")\n";
    json rows = json::array();
    for (const auto& row : r.rows) {
        auto cell = [](const std::optional<bool>& b) {
            return b ? pass_fail(*b) : std::string("-");
        };
        text << "  n=" << row.n << "  fixed point: " << cell(row.fixed_point)
             << "  2-cycle: " << cell(row.two_cycle) << "  exhaustive: " << cell(row.exhaustive);
        for (const auto& note : row.notes) text << "  [" << note << "]";
        text << '\n';
        json j = {{"n", row.n}, {"passed", row.passed()}, {"notes", row.notes}};
        j["fixed_point"] = row.fixed_point ? json(*row.fixed_point) : json(nullptr);
        j["two_cycle"] = row.two_cycle ? json(*row.two_cycle) : json(nullptr);
        j["exhaustive"] = row.exhaustive ? json(*row.exhaustive) : json(nullptr);
        rows.push_back(std::move(j));
    }
    text << "formula: " << pass_fail(r.passed()) << '\n';
    doc["formula"] = {{"passed", r.passed()}, {"rows", std::move(rows)}};
    return r.passed();
}

bool verify_theorem_section(const VerifyOptions& opt, std::ostream& text, json& doc) {
    const auto [first, last] = parse_range(opt.n_range.value_or("4..12"));
    if (first < 2) throw InvalidArgument("theorem sweep needs n >= 2");
    const MappingMode mode = parse_mode(opt.mode);
    text << "convergence sweep, n = " << first << ".." << last << ", mode " << to_string(mode) << '\n';
    bool all = true;
    json rows = json::array();
    for (std::size_t n = first; n <= last; ++n) {
        const ConvergenceReport r = verify_convergence_theorem(Basis(n), mode);
        // Strict bases below 4 are expected to have no attractor at all.
        bool ok = n >= 4 ? r.state_space_converges() : r.basins.empty();
        if (mode == MappingMode::IgnoreOutOfRange)
            ok = !r.basins.empty() && r.state_space_escapes == 0 && r.generating_escapes == 0;
        all = all && ok;
        std::string orders;
        for (auto k : r.orders()) orders += (orders.empty() ? "" : ",") + std::to_string(k);
        text << "  n=" << n << "  states " << r.state_space_size << "  escapes "
             << r.state_space_escapes << "  attractors " << r.basins.size() << " (orders "
             << (orders.empty() ? "-" : orders) << ")  max steps " << r.max_steps_state_space
             << "  generating classes " << r.generating_classes << " (escaping "
             << r.generating_escapes << ")  " << pass_fail(ok) << '\n';
        json basins = json::array();
        for (const auto& b : r.basins)
            basins.push_back({{"attractor", report::to_json(b.attractor)},
                              {"state_space_starts", b.state_space_starts},
                              {"max_steps_state_space", b.max_steps_state_space},
                              {"generating_classes", b.generating_classes},
                              {"max_steps_generating", b.max_steps_generating},
                              {"max_mappings_from_alphabetic", b.max_mappings_from_alphabetic}});
        json escaping = json::array();
        for (const auto& v : r.escaping_representatives) escaping.push_back(report::to_json(v));
        rows.push_back({{"n", n},
                        {"passed", ok},
                        {"state_space_size", r.state_space_size},
                        {"state_space_escapes", r.state_space_escapes},
                        {"max_steps_state_space", r.max_steps_state_space},
                        {"generating_classes", r.generating_classes},
                        {"generating_escapes", r.generating_escapes},
                        {"escaping_representatives", std::move(escaping)},
                        {"basins", std::move(basins)}});
    }
    text << "theorem: " << pass_fail(all) << '\n';
    doc["theorem"] = {{"passed", all}, {"mode", std::string(to_string(mode))}, {"rows", std::move(rows)}};
    return all;
}

bool verify_countable_section(std::ostream& text, json& doc) {
    const CountableReport r = verify_countable_attractors();
    text << "countable basis\n";
    json checks = json::array();
    for (const auto& c : r.checks) {
        text << "  " << c.name << ": " << c.detail << "  " << pass_fail(c.passed) << '\n';
        checks.push_back({{"name", c.name}, {"detail", c.detail}, {"passed", c.passed}});
    }
    text << "countable: " << pass_fail(r.passed()) << '\n';
    doc["countable"] = {{"passed", r.passed()}, {"checks", std::move(checks)}};
    return r.passed();
}

bool verify_properties_section(const VerifyOptions& opt, std::ostream& text, json& doc) {
    const auto [first, last] = parse_range(opt.n_range.value_or("4..12"));
    if (first < 2) throw InvalidArgument("property sweep needs n >= 2");
    text << "property sweep, n = " << first << ".." << last << ", " << opt.samples
         << " words per n, seed " << opt.seed << '\n';
    bool all = true;
    json rows = json::array();
    for (std::size_t n = first; n <= last; ++n) {
        const PropertySweep s = sample_word_properties(n, opt.samples, opt.seed);
        all = all && s.passed();
        text << "  n=" << n << "  strict-valid " << s.strict_valid << "  escapes " << s.escapes
             << "  violations " << s.violations << "  " << pass_fail(s.passed()) << '\n';
        for (const auto& e : s.examples) text << "    " << e << '\n';
        rows.push_back({{"n", n},
                        {"samples", s.samples},
                        {"strict_valid", s.strict_valid},
                        {"escapes", s.escapes},
                        {"violations", s.violations},
                        {"examples", s.examples}});
    }
    text << "properties: " << pass_fail(all) << '\n';
    doc["properties"] = {{"passed", all}, {"seed", opt.seed}, {"rows", std::move(rows)}};
    return all;
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
    const Format format = parse_format(opt.format);
    if (format == Format::Csv) throw ParseError("verify supports --format table|json");
    if (!opt.formula && !opt.theorem && !opt.countable && !opt.properties)
        throw ParseError("verify needs at least one of --formula --theorem --countable --properties");

    std::ostringstream text;
    json doc = {{"schema_version", report::kSchemaVersion}, {"seed", opt.seed}};
    text << "seed: " << opt.seed << '\n';
    bool ok = true;
    if (opt.formula) ok = verify_formula_section(opt, text, doc) && ok;
    if (opt.theorem) ok = verify_theorem_section(opt, text, doc) && ok;
    if (opt.countable) ok = verify_countable_section(text, doc) && ok;
    if (opt.properties) ok = verify_properties_section(opt, text, doc) && ok;
    doc["passed"] = ok;
    if (format == Format::Json) emit_json(out, doc);
    else out << text.str() << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? kSuccess : kCheckFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parikh vector mappings: attractors, reachability and verification", "parikh"};
    app.require_subcommand(1);

    MapOptions map_opt;
    auto* map = app.add_subcommand("map", "Map a word through the alphabetic and basis mappings");
    map->add_option("word", map_opt.word, "Word to map (may be empty)")->required();
    map->add_option("--n", map_opt.n, "Basis size n")->required();
    map->add_option("--alphabet", map_opt.alphabet, "Explicit ordered alphabet, e.g. abc");
    map->add_option("--mode", map_opt.mode, "strict|ignore")->capture_default_str();
    map->add_option("--format", map_opt.format, "table|json")->capture_default_str();
    map->add_option("--step-limit", map_opt.step_limit, "Maximum basis maps")->capture_default_str();
    map->add_flag("--trace", map_opt.trace, "Show every property check in full");

    TableOptions table_opt;
    auto* attractors = app.add_subcommand("attractors", "Attractors of the basis map per n");
    attractors->add_option("--n-range", table_opt.n_range, "Bases a..b")->capture_default_str();
    attractors->add_option("--max-order", table_opt.max_order, "Largest order tabulated")
        ->capture_default_str();
    attractors->add_option("--mode", table_opt.mode, "strict|ignore")->capture_default_str();
    attractors->add_option("--format", table_opt.format, "table|json|csv")->capture_default_str();

    ReachOptions reach_opt;
    auto* reach = app.add_subcommand("reach", "Attractor reachability rates");
    reach->add_option("--n-range", reach_opt.n_range, "Bases a..b")->capture_default_str();
    reach->add_option("--k", reach_opt.k, "Only this attractor order");
    reach->add_option("--from", reach_opt.from, "alphabetic|word")->capture_default_str();
    reach->add_option("--mode", reach_opt.mode, "strict|ignore")->capture_default_str();
    reach->add_option("--format", reach_opt.format, "table|json|csv")->capture_default_str();
    reach->add_flag("--witness", reach_opt.witness, "Print a chain and word attaining each rate");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Run verification sweeps");
    verify->add_flag("--formula", verify_opt.formula, "Closed-form attractors");
    verify->add_flag("--theorem", verify_opt.theorem, "Convergence over the state space");
    verify->add_flag("--countable", verify_opt.countable, "Symbolic attractors over the countable basis");
    verify->add_flag("--properties", verify_opt.properties, "Sum identities on random words");
    verify->add_option("--n-range", verify_opt.n_range, "Bases a..b");
    verify->add_option("--samples", verify_opt.samples, "Random words per n")->capture_default_str();
    verify->add_option("--seed", verify_opt.seed, "Random seed")->capture_default_str();
    verify->add_option("--exhaustive-cap", verify_opt.exhaustive_cap,
                       "Largest n for exhaustive cross-checks")
        ->capture_default_str();
    verify->add_option("--mode", verify_opt.mode, "strict|ignore (theorem sweep)")->capture_default_str();
    verify->add_option("--format", verify_opt.format, "table|json")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    std::ostringstream buffer;
    try {
        int code = kSuccess;
        if (map->parsed()) code = cmd_map(map_opt, buffer);
        else if (attractors->parsed()) code = cmd_attractors(table_opt, buffer);
        else if (reach->parsed()) code = cmd_reach(reach_opt, buffer);
        else if (verify->parsed()) code = cmd_verify(verify_opt, buffer);
        out << buffer.str();
        return code;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InvalidLetter& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return kCheckFailure;
    }
    return kUsageError;
}

} // namespace parikh::cli
