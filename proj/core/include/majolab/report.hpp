#pragma once

#include <ostream>
#include <string>

#include "majolab/trial_report.hpp"

namespace majolab {

/// One JSONL line: {"trial":..,"seed":..,"checker":..,"margin":..,
/// "worst_k":..,"inputs":{..},"details":{..}}. Numbers carry 17 significant
/// digits so identical reports serialize to identical bytes.
std::string to_jsonl_line(const TrialReport& r);

void write_jsonl(std::ostream& os, const TrialReport& r);

}  // namespace majolab
