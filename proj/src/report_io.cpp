#include "catlab/report_io.hpp"

#include "catlab/errors.hpp"

#include <json.hpp>

namespace catlab {

using nlohmann::ordered_json;

PrimeClass parse_prime_class(std::string_view name) {
    for (auto c : {PrimeClass::PType, PrimeClass::QType, PrimeClass::Five, PrimeClass::Two}) {
        if (name == to_string(c)) return c;
    }
    throw FormatError("unknown prime class '" + std::string(name) + "'");
}

std::string to_json(const PeriodReport& r) {
    ordered_json doc;
    doc["n"] = r.n;
    doc["period"] = r.exact_period;
    doc["bound"] = r.bound;
    doc["lcm"] = r.bound_lcm;
    doc["odd_lcm"] = r.odd_lcm;
    doc["ratio"] = {{"num", r.ratio.num}, {"den", r.ratio.den}};
    doc["terms"] = ordered_json::array();
    for (const auto& t : r.terms) {
        doc["terms"].push_back({{"prime", t.prime},
                                {"exponent", t.exponent},
                                {"class", std::string(to_string(t.prime_class))},
                                {"value", t.value}});
    }
    return doc.dump(2) + "\n";
}

std::string to_json(const RecurrenceReport& r) {
    ordered_json doc;
    doc["n"] = r.n;
    doc["recurrence"] = r.recurrence_time;
    doc["period"] = r.exact_period;
    doc["bound"] = r.bound ? ordered_json(*r.bound) : ordered_json(nullptr);
    doc["cycles"] = ordered_json::array();
    for (const auto& c : r.cycles) {
        doc["cycles"].push_back(
            {{"length", c.cycle_length}, {"minimal_period", c.minimal_period}, {"count", c.count}});
    }
    return doc.dump(2) + "\n";
}

namespace {

ordered_json parse(std::string_view text) {
    try {
        auto doc = ordered_json::parse(text);
        if (!doc.is_object()) throw FormatError("report must be a JSON object");
        return doc;
    } catch (const ordered_json::parse_error& e) {
        throw FormatError(std::string("report is not valid JSON: ") + e.what());
    }
}

template <typename T>
T field(const ordered_json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const ordered_json::exception&) {
        throw FormatError(std::string("field '") + key + "' has the wrong type");
    }
}

} // namespace

PeriodReport period_report_from_json(std::string_view text) {
    const auto doc = parse(text);
    PeriodReport r;
    r.n = field<std::uint64_t>(doc, "n");
    r.exact_period = field<std::uint64_t>(doc, "period");
    r.bound = field<std::uint64_t>(doc, "bound");
    r.bound_lcm = field<std::uint64_t>(doc, "lcm");
    r.odd_lcm = field<bool>(doc, "odd_lcm");
    const auto ratio = field<ordered_json>(doc, "ratio");
    r.ratio = {field<std::uint64_t>(ratio, "num"), field<std::uint64_t>(ratio, "den")};
    for (const auto& t : field<ordered_json>(doc, "terms")) {
        r.terms.push_back({field<std::uint64_t>(t, "prime"), field<std::uint32_t>(t, "exponent"),
                           parse_prime_class(field<std::string>(t, "class")),
                           field<std::uint64_t>(t, "value")});
    }
    return r;
}

RecurrenceReport recurrence_report_from_json(std::string_view text) {
    const auto doc = parse(text);
    RecurrenceReport r;
    r.n = field<std::int64_t>(doc, "n");
    r.recurrence_time = field<std::uint64_t>(doc, "recurrence");
    r.exact_period = field<std::uint64_t>(doc, "period");
    if (!doc.contains("bound")) throw FormatError("missing field 'bound'");
    if (!doc["bound"].is_null()) r.bound = field<std::uint64_t>(doc, "bound");
    for (const auto& c : field<ordered_json>(doc, "cycles")) {
        r.cycles.push_back({field<std::uint64_t>(c, "length"), field<std::uint64_t>(c, "minimal_period"),
                            field<std::uint64_t>(c, "count")});
    }
    return r;
}

} // namespace catlab
