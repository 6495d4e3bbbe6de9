#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>

namespace fho {

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

/// Writes one comma-separated line of round-trip formatted values.
void csv_row(std::ostream& out, std::initializer_list<double> values);

}  // namespace fho
