#include "parikh/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

namespace parikh {

namespace {

Count checked_add(Count a, Count b) {
    Count r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in vector sum");
    return r;
}

Count checked_mul(Count a, Count b) {
    Count r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in vector sum");
    return r;
}

Count parse_count(std::string_view text) {
    Count value = 0;
    auto first = text.data();
    auto last = text.data() + text.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    if (first == last) throw ParseError("empty vector component");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("invalid vector component '" + std::string(first, last) + "'");
    return value;
}

} // namespace

std::string_view to_string(MappingMode mode) {
    return mode == MappingMode::Strict ? "strict" : "ignore";
}

MappingMode parse_mode(std::string_view text) {
    if (text == "strict") return MappingMode::Strict;
    if (text == "ignore") return MappingMode::IgnoreOutOfRange;
    throw ParseError("unknown mapping mode '" + std::string(text) + "' (expected strict|ignore)");
}

// --- AlphabeticVector -------------------------------------------------------

AlphabeticVector::AlphabeticVector(std::vector<Letter> alphabet, std::vector<Count> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
    if (alphabet_.size() != counts_.size())
        throw InvalidArgument("alphabet and counts differ in length");
    std::unordered_set<Letter> seen;
    for (Letter l : alphabet_)
        if (!seen.insert(l).second)
            throw InvalidArgument(std::string("duplicate letter '") + l + "' in alphabet");
}

Count AlphabeticVector::total() const {
    Count s = 0;
    for (Count c : counts_) s = checked_add(s, c);
    return s;
}

// --- ParikhVector -----------------------------------------------------------

ParikhVector::ParikhVector(Basis basis, std::vector<Count> components)
    : components_(std::move(components)) {
    if (components_.size() != basis.size())
        throw InvalidArgument("vector has " + std::to_string(components_.size()) +
                              " components, basis is " + std::to_string(basis.size()));
}

ParikhVector::ParikhVector(std::vector<Count> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidArgument("vector must have at least one component");
}

ParikhVector ParikhVector::zero(Basis basis) {
    return ParikhVector(basis, std::vector<Count>(basis.size(), 0));
}

bool ParikhVector::strict_valid() const noexcept {
    const Count n = components_.size();
    return std::all_of(components_.begin(), components_.end(), [n](Count c) { return c < n; });
}

std::strong_ordering ParikhVector::operator<=>(const ParikhVector& other) const {
    if (auto c = components_.size() <=> other.components_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(components_.begin(), components_.end(),
                                                  other.components_.begin(),
                                                  other.components_.end());
}

std::size_t ParikhVectorHash::operator()(const ParikhVector& v) const noexcept {
    std::size_t h = v.size();
    for (Count c : v.components()) h = h * 1099511628211ULL ^ (c + 0x9e3779b97f4a7c15ULL);
    return h;
}

// --- mappings ---------------------------------------------------------------

AlphabeticVector alphabetic_map(std::string_view word, std::optional<std::string_view> alphabet) {
    std::vector<Letter> letters;
    if (alphabet) {
        letters.assign(alphabet->begin(), alphabet->end());
    } else {
        for (Letter c : word)
            if (std::find(letters.begin(), letters.end(), c) == letters.end()) letters.push_back(c);
    }
    std::vector<Count> counts(letters.size(), 0);
    for (Letter c : word) {
        auto it = std::find(letters.begin(), letters.end(), c);
        if (it == letters.end()) throw InvalidLetter(c);
        ++counts[static_cast<std::size_t>(it - letters.begin())];
    }
    return AlphabeticVector(std::move(letters), std::move(counts));
}

ParikhVector alphabetic_basis_map(const AlphabeticVector& av, Basis basis, MappingMode mode) {
    const std::size_t n = basis.size();
    std::vector<Count> out(n, 0);
    for (std::size_t i = 0; i < av.size(); ++i) {
        Count c = av.counts()[i];
        if (c >= n) {
            if (mode == MappingMode::Strict) throw OutOfRangeCount(av.alphabet()[i], c, n);
            continue;
        }
        ++out[c];
    }
    return ParikhVector(basis, std::move(out));
}

std::optional<ParikhVector> try_basis_map(const ParikhVector& v, MappingMode mode) {
    const std::size_t n = v.size();
    std::vector<Count> out(n, 0);
    for (Count c : v.components()) {
        if (c >= n) {
            if (mode == MappingMode::Strict) return std::nullopt;
            continue;
        }
        ++out[c];
    }
    return ParikhVector(std::move(out));
}

ParikhVector basis_map(const ParikhVector& v, MappingMode mode) {
    if (auto out = try_basis_map(v, mode)) return std::move(*out);
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] >= n) throw OutOfRangeComponent(i, v[i], n);
    throw Error("unreachable: basis_map failed without an out-of-range component");
}

Count plain_sum(const ParikhVector& v) {
    Count s = 0;
    for (Count c : v.components()) s = checked_add(s, c);
    return s;
}

Count weighted_sum(const ParikhVector& v) {
    Count s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s = checked_add(s, checked_mul(i, v[i]));
    return s;
}

// --- stage properties ---------------------------------------------------------

std::string_view to_string(Stage stage) {
    switch (stage) {
    case Stage::Alphabetic: return "alphabetic";
    case Stage::AlphabeticBasis: return "alphabetic-basis";
    case Stage::FirstBasis: return "first-basis";
    case Stage::Steady: return "steady";
    }
    return "?";
}

bool PropertyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const PropertyCheck& c) { return c.informational || c.passed; });
}

namespace {

PropertyCheck make_check(std::string label, std::string description, Count expected, Count actual,
                         bool informational = false) {
    return {std::move(label), std::move(description), expected, actual, expected == actual,
            informational};
}

template <class T>
T require(const std::optional<T>& value, const char* what, Stage stage) {
    if (!value)
        throw InvalidArgument(std::string("stage ") + std::string(to_string(stage)) +
                              " needs " + what);
    return *value;
}

} // namespace

PropertyReport check_stage_properties(const AlphabeticVector& av, const StageContext& ctx) {
    PropertyReport r;
    r.stage = Stage::Alphabetic;
    r.plain_sum = av.total();
    r.weighted_sum = 0;
    Count len = require(ctx.word_length, "the word length", r.stage);
    r.checks.push_back(make_check("(i)", "sum of letter counts = |w|", len, r.plain_sum));
    return r;
}

PropertyReport check_stage_properties(Stage stage, const ParikhVector& v, const StageContext& ctx) {
    if (stage == Stage::Alphabetic)
        throw InvalidArgument("the alphabetic stage takes an AlphabeticVector");
    PropertyReport r;
    r.stage = stage;
    r.plain_sum = plain_sum(v);
    r.weighted_sum = weighted_sum(v);
    const Count n = ctx.basis.value_or(v.size());
    switch (stage) {
    case Stage::AlphabeticBasis: {
        Count letters = require(ctx.letter_count, "the letter count", stage);
        Count len = require(ctx.word_length, "the word length", stage);
        r.checks.push_back(make_check("(ii)", "plain sum = number of letters", letters, r.plain_sum));
        r.checks.push_back(make_check("(iii)", "weighted sum = |w|", len, r.weighted_sum));
        break;
    }
    case Stage::FirstBasis: {
        Count letters = require(ctx.letter_count, "the letter count", stage);
        r.checks.push_back(make_check("(iv)", "plain sum = n", n, r.plain_sum));
        r.checks.push_back(make_check("(v)", "weighted sum = number of letters", letters,
                                      r.weighted_sum));
        r.checks.push_back(make_check("(vii)", "weighted sum = n", n, r.weighted_sum, true));
        break;
    }
    case Stage::Steady:
        r.checks.push_back(make_check("(vi)", "plain sum = n", n, r.plain_sum));
        r.checks.push_back(make_check("(vii)", "weighted sum = n", n, r.weighted_sum));
        break;
    case Stage::Alphabetic: break;
    }
    return r;
}

// --- text formats -------------------------------------------------------------

ParikhVector parse_vector(std::string_view text, std::optional<std::size_t> n) {
    std::vector<Count> comps;
    const bool comma_form = text.find(',') != std::string_view::npos || (n && *n == 1);
    if (comma_form) {
        std::size_t start = 0;
        while (true) {
            auto pos = text.find(',', start);
            comps.push_back(parse_count(text.substr(start, pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
    } else {
        if (text.empty()) throw ParseError("empty vector");
        for (char c : text) {
            if (c < '0' || c > '9')
                throw ParseError("invalid compact vector '" + std::string(text) +
                                 "' (use comma-separated components)");
            comps.push_back(static_cast<Count>(c - '0'));
        }
    }
    if (n && comps.size() != *n)
        throw ParseError("vector '" + std::string(text) + "' has " + std::to_string(comps.size()) +
                         " components, expected " + std::to_string(*n));
    return ParikhVector(std::move(comps));
}

std::string format_counts(std::span<const Count> counts) {
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(counts[i]);
    }
    return out;
}

std::string format_comma(const ParikhVector& v) { return format_counts(v.components()); }

bool has_compact_form(const ParikhVector& v) noexcept {
    return std::all_of(v.components().begin(), v.components().end(),
                       [](Count c) { return c <= 9; });
}

std::string format_vector(const ParikhVector& v) {
    if (!has_compact_form(v)) return format_comma(v);
    std::string out;
    for (Count c : v.components()) out += static_cast<char>('0' + c);
    return out;
}

} // namespace parikh
