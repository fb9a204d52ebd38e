#ifndef PLTOP_IO_HPP
#define PLTOP_IO_HPP

#include "pltop/scenarios.hpp"

namespace pltop {

inline constexpr int kSchemaVersion = 1;

// JSON scenario documents. Rationals travel as "p/q" strings; serialization
// order is fixed so equal scenarios produce equal bytes.
std::string serialize_scenario(const Scenario& sc);
Scenario parse_scenario(const std::string& bytes);

const char* conclusion_name(Conclusion c);
std::optional<Theorem> theorem_from_name(const std::string& s);

std::string serialize_report(const HypothesisReport& r);
std::string serialize_fixed_points(const FixedPointSet& fix);

// Self-contained certificate document embedding the scenario it was
// produced from.
std::string serialize_certificate(const Certificate& cert, const Scenario& sc);

}  // namespace pltop

#endif
