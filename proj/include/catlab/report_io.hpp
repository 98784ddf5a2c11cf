#pragma once

// JSON documents for the period and recurrence reports. Field names:
//   period:     n, period, bound, lcm, odd_lcm, ratio {num, den},
//               terms [{prime, exponent, class, value}]
//   recurrence: n, recurrence, period, bound (null for n = 1),
//               cycles [{length, minimal_period, count}]

#include "catlab/image_lab.hpp"
#include "catlab/period_analysis.hpp"

#include <string>
#include <string_view>

namespace catlab {

std::string to_json(const PeriodReport& r);
std::string to_json(const RecurrenceReport& r);

/// Throw FormatError on missing or mistyped fields.
PeriodReport period_report_from_json(std::string_view text);
RecurrenceReport recurrence_report_from_json(std::string_view text);

PrimeClass parse_prime_class(std::string_view name);

} // namespace catlab
