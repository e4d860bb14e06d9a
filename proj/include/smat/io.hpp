#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smat/prec.hpp"

namespace smat {

/// On-disk instance: `#key value` header lines followed by one complex entry
/// per line (two fields). Values are serialized as hexadecimal floats so a
/// write/read round trip is bit-exact; decimal input is accepted only when it
/// converts to a dyadic exactly.
struct InstanceFile {
  std::string kind;  // poly | nodeset | vector | cauchy | toeplitz | hankel
  long n = 0;        // entry count
  std::optional<long> tau;
  long lambda = kExactLambda;  // "exact" when absent
  std::vector<std::pair<std::string, std::string>> info;  // informational headers
  std::vector<ComplexApprox> entries;
};

InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance(const std::string& path);
void serialize_instance(std::ostream& out, const InstanceFile& f);
void write_instance(const std::string& path, const InstanceFile& f);

// Lossless hex form (sign, hex mantissa, binary exponent).
std::string format_value(const PrecFloat& v);
// Hex or exactly-dyadic decimal; throws ParseError otherwise.
PrecFloat parse_value(const std::string& token);

}  // namespace smat
