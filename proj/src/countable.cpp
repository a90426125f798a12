#include "parikh/countable.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace parikh {

Count Cardinal::finite() const {
    if (infinite_) throw DomainError("N has no finite value");
    return value_;
}

Cardinal operator+(Cardinal a, Cardinal b) {
    if (a.infinite_ || b.infinite_) return Cardinal::countable();
    Count r = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &r)) throw Error("cardinal overflow");
    return Cardinal(r);
}

Cardinal operator-(Cardinal a, Cardinal b) {
    if (b.infinite_) throw DomainError("subtracting N is undefined");
    if (a.infinite_) return Cardinal::countable();
    if (b.value_ > a.value_) throw DomainError("negative cardinal");
    return Cardinal(a.value_ - b.value_);
}

std::string Cardinal::to_string() const { return infinite_ ? "N" : std::to_string(value_); }

SymbolicVector::SymbolicVector(std::vector<std::pair<Position, Cardinal>> entries) {
    for (auto& [pos, value] : entries) {
        if (entries_.contains(pos))
            throw Unrepresentable("position " + pos.to_string() + " appears twice");
        if (!value.is_zero()) entries_.emplace(pos, value);
    }
}

Cardinal SymbolicVector::at(Position p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? Cardinal(0) : it->second;
}

SymbolicVector symbolic_basis_map(const SymbolicVector& v) {
    // Finite support: the zero value occupies cofinitely many positions, and
    // each non-zero value occurs at finitely many listed positions.
    std::map<Cardinal, Count> occurrences;
    for (const auto& [pos, value] : v.entries()) ++occurrences[value];

    std::vector<std::pair<Position, Cardinal>> out;
    out.emplace_back(Position(0), Cardinal::countable());
    for (const auto& [value, count] : occurrences) {
        if (value.is_zero()) continue;
        // value N lands at the single symbolic position N
        out.emplace_back(value, Cardinal(count));
    }
    return SymbolicVector(std::move(out));
}

std::string format_symbolic(const SymbolicVector& v) {
    std::string out;
    for (const auto& [pos, value] : v.entries()) {
        if (!out.empty()) out += ' ';
        out += value.to_string() + "_" + pos.to_string();
    }
    if (!out.empty()) out += ' ';
    out += "0_w";
    return out;
}

namespace {

Cardinal parse_cardinal(std::string_view token, std::string_view whole) {
    if (token == "N" || token == "ℕ") return Cardinal::countable();
    Count value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("invalid cardinal '" + std::string(token) + "' in '" + std::string(whole) +
                         "'");
    return Cardinal(value);
}

} // namespace

SymbolicVector parse_symbolic(std::string_view text) {
    std::vector<std::pair<Position, Cardinal>> entries;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto underscore = token.find('_');
        if (underscore == std::string::npos)
            throw ParseError("expected value_position, got '" + token + "'");
        std::string_view value = std::string_view(token).substr(0, underscore);
        std::string_view pos = std::string_view(token).substr(underscore + 1);
        if (pos == "w" || pos == "ω") {
            if (value != "0") throw ParseError("only 0 may fill the remaining positions");
            continue;
        }
        entries.emplace_back(parse_cardinal(pos, text), parse_cardinal(value, text));
    }
    return SymbolicVector(std::move(entries));
}

SymbolicVector symbolic_formula_attractor(std::size_t k) {
    if (k != 1 && k != 2) throw DomainError("closed form covers orders 1 and 2");
    const Cardinal n = Cardinal::countable();
    // (n-4)_0 (k+1)_1 (2-k)_2 1_(n+k-5), positions evaluated with N absorbing.
    std::map<Position, Cardinal> acc;
    auto add = [&](Position p, Cardinal v) { acc[p] = acc[p] + v; };
    add(Position(0), n - Cardinal(4));
    add(Position(1), Cardinal(k + 1));
    add(Position(2), Cardinal(2 - k));
    add(n + Cardinal(k) - Cardinal(5), Cardinal(1));
    return SymbolicVector(std::vector<std::pair<Position, Cardinal>>(acc.begin(), acc.end()));
}

bool CountableReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CountableCheck& c) { return c.passed; });
}

CountableReport verify_countable_attractors() {
    CountableReport report;
    const SymbolicVector a1 = parse_symbolic("N_0 2_1 1_2 1_N 0_w");
    const SymbolicVector a2 = parse_symbolic("N_0 3_1 1_N 0_w");
    const SymbolicVector a2_partner = parse_symbolic("N_0 1_1 1_3 1_N 0_w");

    const SymbolicVector a1_image = symbolic_basis_map(a1);
    report.checks.push_back({"A1 fixed point",
                             format_symbolic(a1) + " -> " + format_symbolic(a1_image),
                             a1_image == a1});
    report.checks.push_back({"A1 idempotent", "P(P(A1)) = P(A1)",
                             symbolic_basis_map(a1_image) == a1_image});

    const SymbolicVector fwd = symbolic_basis_map(a2);
    const SymbolicVector back = symbolic_basis_map(fwd);
    report.checks.push_back({"A2 two-cycle",
                             format_symbolic(a2) + " -> " + format_symbolic(fwd) + " -> " +
                                 format_symbolic(back),
                             fwd == a2_partner && back == a2 && fwd != a2});

    const SymbolicVector limit1 = symbolic_formula_attractor(1);
    const SymbolicVector limit2 = symbolic_formula_attractor(2);
    report.checks.push_back({"A1 closed-form limit", format_symbolic(limit1), limit1 == a1});
    report.checks.push_back({"A2 closed-form limit", format_symbolic(limit2), limit2 == a2});
    return report;
}

} // namespace parikh
