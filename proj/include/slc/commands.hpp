#pragma once

#include <iosfwd>
#include <string>

#include "slc/document.hpp"

namespace slc::cli {

using Json = document::Json;

enum ExitCode : int { kOk = 0, kInternal = 1, kParse = 2, kValidation = 3, kCap = 4 };

enum class CycleMode { Semi, Fundamental, Hat };

Json invariants_report(const document::SurfaceDocument& doc);
Json cycle_report(const document::GraphDocument& doc, CycleMode mode);
Json criteria_report(const document::SurfaceDocument& doc, long m_first, long m_last);
Json ring_dims_report(int max_k);
Json multinode3_report();
/// name is descend, multinode3, largeK2 (with k) or largeK2(k).
Json example_report(const std::string& name, std::optional<int> k);
/// Surface document for an example, for --emit-json.
document::SurfaceDocument example_document(const std::string& name, std::optional<int> k);

/// "a..b" or "a".
std::pair<long, long> parse_m_range(const std::string& text);

/// Aligned plain-text rendering of a report.
std::string render_text(const Json& report);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slc::cli
