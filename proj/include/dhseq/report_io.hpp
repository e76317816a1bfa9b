#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dhseq/analyzer.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

enum class Format { Json, Csv, Text };

std::optional<Format> format_from_string(const std::string& name);

// Canonical JSON forms.  Key order is fixed so that parse + dump round-trips
// byte-identically.
nlohmann::ordered_json to_json(const AnalysisReport& rep);
nlohmann::ordered_json to_json(const SweepItem& item);

// Rendered documents (always newline-terminated).  When emit_sequence is
// set, one full period is attached (bits and packed hex).
std::string render_report(const AnalysisReport& rep, Format format, bool emit_sequence = false);
std::string render_sweep(const std::vector<SweepItem>& items, Format format,
                         bool emit_sequence = false);

}  // namespace dhseq
