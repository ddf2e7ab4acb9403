#ifndef JND_REPORT_HPP
#define JND_REPORT_HPP

#include <optional>
#include <string>

#include "jnd/classify.hpp"
#include "jnd/wreath.hpp"

namespace jnd {

inline constexpr const char* kToolVersion = "1.0.0";

enum class ReportFormat { text, structured };

// Top-level CLI report: input descriptor, classification, and optional
// theorem-condition sub-report. Serialization is deterministic byte-for-byte
// for fixed input and version; timing never enters the body.
struct Report {
  std::string input;
  std::optional<ClassificationReport> classification;
  std::optional<TheoremConditionReport> conditions;
  std::optional<std::string> note;
};

// Subgroup members as words over the parent's input generators (g1*g3,
// identity = "e"); full member list for small subgroups, reduced generators
// above the threshold.
std::vector<std::string> subgroup_words(const Subgroup& s,
                                        std::size_t full_list_limit = 64);

std::string render_report(const Report& r, ReportFormat fmt);

}  // namespace jnd

#endif
