#include "parikh/attractors.hpp"

#include <algorithm>
#include <set>

#include "parikh/partitions.hpp"

namespace parikh {

StateSpace enumerate_state_space(Basis basis) {
    const std::size_t n = basis.size();
    StateSpace space{basis, {}};
    if (n < 2) return space;  // only candidate for n = 1 is (1), weighted sum 0
    for_each_partition(n, n, n - 1, [&](std::span<const Count> parts) {
        ParikhVector v = multiplicity_vector(parts, basis);
        if (v.strict_valid()) space.vectors.push_back(std::move(v));
    });
    std::sort(space.vectors.begin(), space.vectors.end());
    return space;
}

const std::vector<Attractor>& AttractorTable::at(std::size_t k) const {
    static const std::vector<Attractor> none;
    auto it = entries.find(k);
    return it == entries.end() ? none : it->second;
}

std::size_t AttractorTable::count() const {
    std::size_t total = 0;
    for (const auto& [k, list] : entries) total += list.size();
    return total;
}

AttractorTable find_attractors(Basis basis, std::size_t max_order) {
    if (max_order == 0) throw InvalidArgument("max order must be at least 1");
    AttractorTable table;
    table.basis = basis;
    table.max_order = max_order;
    std::set<Attractor> found;
    for (const auto& v : enumerate_state_space(basis).vectors) {
        auto c = classify(v, MappingMode::Strict);
        if (auto* a = std::get_if<Attractor>(&c)) found.insert(*a);
    }
    for (const auto& a : found) {
        if (a.order() <= max_order)
            table.entries[a.order()].push_back(a);
        else
            table.beyond_max_order.push_back(a);
    }
    return table;
}

bool formula_applies(std::size_t n, std::size_t k) noexcept {
    if (k != 1 && k != 2) return false;
    return n >= 8 || (n == 6 && k == 2) || (n == 7 && k == 1);
}

ParikhVector formula_attractor(Basis basis, std::size_t k) {
    const std::size_t n = basis.size();
    if (!formula_applies(n, k))
        throw DomainError("closed form does not apply to n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    std::vector<Count> v(n, 0);
    v[0] += n - 4;
    v[1] += k + 1;
    v[2] += 2 - k;
    v[n + k - 5] += 1;
    return ParikhVector(basis, std::move(v));
}

ParikhVector cycle_partner(const ParikhVector& v) {
    auto once = try_basis_map(v);
    if (!once) throw NotInTwoCycle(format_vector(v) + " leaves the basis");
    if (*once == v) throw NotInTwoCycle(format_vector(v) + " is a fixed point");
    auto twice = try_basis_map(*once);
    if (!twice || *twice != v) throw NotInTwoCycle(format_vector(v) + " is not on a 2-cycle");
    return *once;
}

bool FormulaReport::passed() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const FormulaCheck& r) { return r.passed(); });
}

FormulaReport verify_formula(std::size_t n_first, std::size_t n_last,
                             std::vector<std::size_t> orders, std::size_t exhaustive_cap) {
    FormulaReport report;
    const bool want1 = std::find(orders.begin(), orders.end(), 1) != orders.end();
    const bool want2 = std::find(orders.begin(), orders.end(), 2) != orders.end();
    for (std::size_t n = std::max<std::size_t>(n_first, 1); n <= n_last; ++n) {
        FormulaCheck row;
        row.n = n;
        const Basis basis(n);
        std::vector<Attractor> expected;
        if (want1 && formula_applies(n, 1)) {
            ParikhVector a = formula_attractor(basis, 1);
            row.fixed_point = try_basis_map(a) == a;
            if (*row.fixed_point)
                expected.push_back(Attractor::from_cycle({a}));
            else
                row.notes.push_back("A^1 " + format_vector(a) + " is not fixed");
        }
        if (want2 && formula_applies(n, 2)) {
            ParikhVector a = formula_attractor(basis, 2);
            try {
                ParikhVector b = cycle_partner(a);
                row.two_cycle = true;
                expected.push_back(Attractor::from_cycle({a, b}));
            } catch (const NotInTwoCycle& e) {
                row.two_cycle = false;
                row.notes.push_back(std::string("A^2: ") + e.what());
            }
        }
        if (n <= exhaustive_cap && n >= 2) {
            AttractorTable table = find_attractors(basis);
            std::set<Attractor> exhaustive;
            for (const auto& [k, list] : table.entries)
                if ((k == 1 && want1) || (k == 2 && want2)) exhaustive.insert(list.begin(), list.end());
            std::set<Attractor> closed_form(expected.begin(), expected.end());
            if (n >= 8) {
                bool others = !table.beyond_max_order.empty();
                for (const auto& [k, list] : table.entries)
                    if (k > 2 && !list.empty()) others = true;
                row.exhaustive = exhaustive == closed_form && !others;
                if (!*row.exhaustive) row.notes.push_back("exhaustive table differs from closed form");
            } else {
                row.exhaustive = std::includes(exhaustive.begin(), exhaustive.end(),
                                               closed_form.begin(), closed_form.end());
                if (!*row.exhaustive) row.notes.push_back("closed-form vector missing from table");
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace parikh
