#pragma once

#include <string>

#include "regmap/classify.hpp"
#include "regmap/numtheory.hpp"

namespace regmap {

enum class ReportFormat { Text, Structured };

/// Deterministic rendering of classification results. The structured form
/// is byte-stable across runs and worker counts: it contains no timing and
/// no machine state. Timing belongs to the run metadata the caller prints.
std::string format_classification(const Classification& c, ReportFormat fmt);

std::string format_point(const ProjPoint& pt);

/// Table of integral k(x,y) values.
std::string format_table1(ReportFormat fmt);

/// Lemma survey over a prime range: four-fraction non-integrality,
/// Diophantine solution sets, and solvable-family exclusions.
std::string format_lemmas(int pmin, int pmax, ReportFormat fmt);

std::string format_map_descriptor(const MapDescriptor& d);

}  // namespace regmap
