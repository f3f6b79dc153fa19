#pragma once

// Full per-code report: parameters, field, annotated defining set, bounds,
// availability and distance, with JSON (schema 1) and text renderings.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/bounds.hpp"
#include "lrc/construction.hpp"
#include "lrc/distance.hpp"
#include "lrc/locality.hpp"

namespace lrc {

inline constexpr int kReportSchema = 1;

struct FieldInfo {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t primitive = 0;
    std::uint32_t alpha = 0;
    friend bool operator==(const FieldInfo&, const FieldInfo&) = default;
};

/// One row of the defining-set picture: which exponents a source contributes.
struct AnnotatedRow {
    std::string source;  ///< "D_1", ..., "D_t", "D_g"
    std::vector<int> exponents;
    friend bool operator==(const AnnotatedRow&, const AnnotatedRow&) = default;
};

struct CodeReport {
    int schema = kReportSchema;
    ConstructionParams params;
    FieldInfo field;
    int n = 0;
    int k = 0;
    std::vector<int> defining_set;
    std::vector<AnnotatedRow> rows;
    /// Global exponents that already lie in some local set.
    std::vector<int> overlap;
    /// Generator polynomial coefficients (element encodings), low degree first.
    std::vector<std::uint32_t> generator;
    BoundReport bounds;
    AvailabilityReport availability;
    DistanceResult distance;

    friend bool operator==(const CodeReport&, const CodeReport&) = default;
};

struct ReportOptions {
    bool exact_distance = false;
    std::uint64_t budget = kDefaultDistanceBudget;
    std::uint64_t trials = kDefaultBracketTrials;
    std::uint64_t seed = 1;
    LocalMethod local_method = LocalMethod::Auto;
};

CodeReport make_report(const ConstructionParams& params, const ReportOptions& options = {});

FieldInfo field_info(const CyclicLRC& code);
std::vector<AnnotatedRow> annotate(const ConstructionParams& params);

/// Text grid with one column per exponent and one marked row per source.
std::string render_defining_set(int n, const std::vector<AnnotatedRow>& rows, const std::vector<int>& full);
std::string render_text(const CodeReport& report);

void to_json(nlohmann::json& j, const ConstructionParams& p);
void from_json(const nlohmann::json& j, ConstructionParams& p);
void to_json(nlohmann::json& j, const HTWitness& w);
void from_json(const nlohmann::json& j, HTWitness& w);
void to_json(nlohmann::json& j, const DistanceBound& b);
void from_json(const nlohmann::json& j, DistanceBound& b);
void to_json(nlohmann::json& j, const BoundReport& b);
void from_json(const nlohmann::json& j, BoundReport& b);
void to_json(nlohmann::json& j, const LocalDistance& d);
void from_json(const nlohmann::json& j, LocalDistance& d);
void to_json(nlohmann::json& j, const GroupCheck& g);
void from_json(const nlohmann::json& j, GroupCheck& g);
void to_json(nlohmann::json& j, const AvailabilityReport& a);
void from_json(const nlohmann::json& j, AvailabilityReport& a);
void to_json(nlohmann::json& j, const DistanceResult& d);
void from_json(const nlohmann::json& j, DistanceResult& d);
void to_json(nlohmann::json& j, const FieldInfo& f);
void from_json(const nlohmann::json& j, FieldInfo& f);
void to_json(nlohmann::json& j, const AnnotatedRow& r);
void from_json(const nlohmann::json& j, AnnotatedRow& r);
void to_json(nlohmann::json& j, const CodeReport& r);
void from_json(const nlohmann::json& j, CodeReport& r);

LocalMethod parse_local_method(const std::string& s);
DistanceMethod parse_distance_method(const std::string& s);

}  // namespace lrc
