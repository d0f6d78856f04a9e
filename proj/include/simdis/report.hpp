#ifndef SIMDIS_REPORT_HPP
#define SIMDIS_REPORT_HPP

#include <iosfwd>
#include <string>

#include "simdis/dissection.hpp"

namespace simdis {

// Deterministic key/value text forms of the structured results. Numbers are
// printed with %.17g so parsing them back is lossless.
std::string format_check_report(const CheckReport& rep);
std::string format_dissection_result(const DissectionResult& res);

// Parses the geometry back out of a serialized DissectionResult; metrics are
// restored as written.
DissectionResult parse_dissection_result(std::istream& in);

std::string format_region(const Region& r, const std::string& key);

}  // namespace simdis

#endif
