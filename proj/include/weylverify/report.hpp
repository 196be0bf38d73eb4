#pragma once

#include "weylverify/engine.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wv {

struct ExclusionRecord {
    Weight weight;
    int lambda_index = -1;
    std::array<bool, 4> es{};
    bool operator==(const ExclusionRecord&) const = default;
};

// The serialized part of a VerificationReport.
struct ReportRecord {
    FamilyInstance instance;
    int d_w = 0;
    std::vector<Weight> candidates;
    std::vector<Weight> survivors;
    std::vector<Weight> surplus;
    std::vector<ExclusionRecord> exclusions;
    std::vector<Weight> final_set;
    Status status = Status::Fail;
    std::vector<std::string> notes;
    bool operator==(const ReportRecord&) const = default;
};

ReportRecord to_record(const VerificationReport& r);

// Inverse of torus_label; throws on malformed labels.
TorusChoice parse_torus_label(const std::string& s);

enum class Format { Json, Csv, Table };
std::optional<Format> parse_format(const std::string& s);

std::string emit_json(const std::vector<ReportRecord>& rs);
std::string emit_json(const ReportRecord& r);
std::vector<ReportRecord> parse_json(const std::string& text);

std::string csv_header();
std::string emit_csv(const std::vector<ReportRecord>& rs);
std::string emit_table(const std::vector<ReportRecord>& rs);

std::string emit(const std::vector<ReportRecord>& rs, Format f);

}  // namespace wv
