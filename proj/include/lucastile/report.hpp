// Copyright 2026 The lucastile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUCASTILE_REPORT_HPP
#define LUCASTILE_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "lucastile/identities.hpp"
#include "lucastile/tiling_check.hpp"

namespace lucastile {

inline constexpr std::string_view version_string = "1.0.0";
inline constexpr std::string_view schema_id = "lucastile/1";

/// A named boolean check.
struct CheckVerdict {
    std::string name;
    bool ok = false;
    std::string detail;
    friend bool operator==(const CheckVerdict&, const CheckVerdict&) = default;
};

using Verdict = std::variant<TilingVerdict, IdentityReport, CheckVerdict>;

inline bool verdict_ok(const Verdict& v)
{
    return std::visit([](const auto& x) { return x.ok; }, v);
}

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    friend bool operator==(const Table&, const Table&) = default;
};

struct Timing {
    std::string step;
    std::int64_t microseconds = 0;
    friend bool operator==(const Timing&, const Timing&) = default;
};

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<Verdict> verdicts;
    std::vector<Table> tables;
    std::vector<Timing> timings; // only filled on request; wall-clock values are not reproducible
    std::string version{version_string};

    bool ok() const
    {
        return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), verdict_ok);
    }

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

enum class Format { Json, Csv, Table };

inline std::optional<Format> format_from_string(std::string_view s)
{
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "table") return Format::Table;
    return std::nullopt;
}

class serialization_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------- JSON out

inline ordered_json identity_to_json(const IdentityReport& r)
{
    ordered_json j;
    j["id"] = r.id;
    j["n"] = r.n;
    j["lhs"] = to_decimal(r.lhs);
    j["rhs"] = to_decimal(r.rhs);
    j["path"] = std::string(to_string(r.path));
    j["ok"] = r.ok;
    if (r.aux_n) {
        j["aux_n"] = *r.aux_n;
    }
    return j;
}

/// One identity report as a single-line JSON object.
inline std::string serialize_identity(const IdentityReport& r)
{
    return identity_to_json(r).dump();
}

inline ordered_json witness_to_json(const TilingWitness& w)
{
    ordered_json j;
    if (const auto* s = std::get_if<SizeWitness>(&w)) {
        j["type"] = "size";
        j["expected"] = s->expected;
        j["actual"] = s->actual;
    } else if (const auto* p = std::get_if<PairWitness>(&w)) {
        j["type"] = "pair";
        j["u"] = p->u.to_string();
        j["v"] = p->v.to_string();
    } else if (const auto* v = std::get_if<VoxelWitness>(&w)) {
        j["type"] = "voxel";
        j["voxel"] = v->voxel;
        j["count"] = v->count;
    }
    return j;
}

inline ordered_json verdict_to_json(const Verdict& v)
{
    ordered_json j;
    if (const auto* t = std::get_if<TilingVerdict>(&v)) {
        j["kind"] = "tiling";
        j["method"] = std::string(to_string(t->method));
        j["n"] = t->dimension;
        j["size"] = t->code_size;
        j["ok"] = t->ok;
        if (t->has_witness()) {
            j["witness"] = witness_to_json(t->witness);
        }
    } else if (const auto* r = std::get_if<IdentityReport>(&v)) {
        j["kind"] = "identity";
        const ordered_json fields = identity_to_json(*r);
        for (const auto& [key, value] : fields.items()) {
            j[key] = value;
        }
    } else {
        const auto& c = std::get<CheckVerdict>(v);
        j["kind"] = "check";
        j["name"] = c.name;
        j["ok"] = c.ok;
        j["detail"] = c.detail;
    }
    return j;
}

inline ordered_json report_to_json(const RunReport& report)
{
    if (report.verdicts.empty()) {
        throw serialization_error("report for '" + report.command + "' has no verdicts");
    }
    ordered_json j;
    j["schema"] = std::string(schema_id);
    j["version"] = report.version;
    j["command"] = report.command;
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : report.parameters) {
        params[key] = value;
    }
    j["parameters"] = params;
    j["ok"] = report.ok();
    j["verdicts"] = ordered_json::array();
    for (const auto& v : report.verdicts) {
        j["verdicts"].push_back(verdict_to_json(v));
    }
    j["tables"] = ordered_json::array();
    for (const auto& t : report.tables) {
        ordered_json tj;
        tj["name"] = t.name;
        tj["columns"] = t.columns;
        tj["rows"] = t.rows;
        j["tables"].push_back(tj);
    }
    if (!report.timings.empty()) {
        j["timings"] = ordered_json::array();
        for (const auto& t : report.timings) {
            j["timings"].push_back(ordered_json{{"step", t.step}, {"microseconds", t.microseconds}});
        }
    }
    return j;
}

// ----------------------------------------------------------------- JSON in

class report_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const ordered_json& field(const ordered_json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw report_format_error(std::string("report JSON: missing field '") + key + "'");
    }
    return j.at(key);
}

inline TilingWitness witness_from_json(const ordered_json& j)
{
    const auto type = field(j, "type").get<std::string>();
    if (type == "size") {
        return SizeWitness{field(j, "expected").get<std::uint64_t>(), field(j, "actual").get<std::uint64_t>()};
    }
    if (type == "pair") {
        return PairWitness{ResidueVector::parse(field(j, "u").get<std::string>()),
                           ResidueVector::parse(field(j, "v").get<std::string>())};
    }
    if (type == "voxel") {
        return VoxelWitness{field(j, "voxel").get<std::vector<int>>(), field(j, "count").get<std::uint32_t>()};
    }
    throw report_format_error("report JSON: unknown witness type '" + type + "'");
}

inline IdentityReport identity_from_json(const ordered_json& j)
{
    IdentityReport r;
    r.id = field(j, "id").get<int>();
    r.n = field(j, "n").get<int>();
    r.lhs = from_decimal(field(j, "lhs").get<std::string>());
    r.rhs = from_decimal(field(j, "rhs").get<std::string>());
    const auto path = identity_path_from_string(field(j, "path").get<std::string>());
    if (!path) {
        throw report_format_error("report JSON: unknown identity path");
    }
    r.path = *path;
    r.ok = field(j, "ok").get<bool>();
    if (j.contains("aux_n")) {
        r.aux_n = j.at("aux_n").get<int>();
    }
    return r;
}

inline Verdict verdict_from_json(const ordered_json& j)
{
    const auto kind = field(j, "kind").get<std::string>();
    if (kind == "tiling") {
        TilingVerdict t;
        const auto method = field(j, "method").get<std::string>();
        if (method != "twin_pair" && method != "voxel_cover") {
            throw report_format_error("report JSON: unknown tiling method '" + method + "'");
        }
        t.method = method == "twin_pair" ? TilingMethod::TwinPair : TilingMethod::VoxelCover;
        t.dimension = field(j, "n").get<int>();
        t.code_size = field(j, "size").get<std::uint64_t>();
        t.ok = field(j, "ok").get<bool>();
        if (j.contains("witness")) {
            t.witness = witness_from_json(j.at("witness"));
        }
        return t;
    }
    if (kind == "identity") {
        return identity_from_json(j);
    }
    if (kind == "check") {
        return CheckVerdict{field(j, "name").get<std::string>(), field(j, "ok").get<bool>(),
                            field(j, "detail").get<std::string>()};
    }
    throw report_format_error("report JSON: unknown verdict kind '" + kind + "'");
}

} // namespace detail

inline RunReport parse_report_json(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw report_format_error(std::string("report JSON: ") + e.what());
    }
    try {
        if (detail::field(j, "schema").get<std::string>() != schema_id) {
            throw report_format_error("report JSON: unsupported schema");
        }
        RunReport report;
        report.version = detail::field(j, "version").get<std::string>();
        report.command = detail::field(j, "command").get<std::string>();
        for (const auto& [key, value] : detail::field(j, "parameters").items()) {
            report.parameters.emplace_back(key, value.get<std::string>());
        }
        for (const auto& v : detail::field(j, "verdicts")) {
            report.verdicts.push_back(detail::verdict_from_json(v));
        }
        for (const auto& t : detail::field(j, "tables")) {
            report.tables.push_back({detail::field(t, "name").get<std::string>(),
                                     detail::field(t, "columns").get<std::vector<std::string>>(),
                                     detail::field(t, "rows").get<std::vector<std::vector<std::string>>>()});
        }
        if (j.contains("timings")) {
            for (const auto& t : j.at("timings")) {
                report.timings.push_back(
                    {detail::field(t, "step").get<std::string>(), detail::field(t, "microseconds").get<std::int64_t>()});
            }
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw report_format_error(std::string("report JSON: ") + e.what());
    }
}

// ------------------------------------------------------------ text formats

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

inline void write_csv_line(std::ostream& os, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        os << (i == 0 ? "" : ",") << csv_field(fields[i]);
    }
    os << '\n';
}

inline std::string verdict_subject(const Verdict& v)
{
    if (const auto* t = std::get_if<TilingVerdict>(&v)) {
        std::string s = std::string(to_string(t->method)) + " n=" + std::to_string(t->dimension) +
                        " size=" + std::to_string(t->code_size);
        if (const auto* p = std::get_if<PairWitness>(&t->witness)) {
            s += " overlapping pair " + p->u.to_string() + " " + p->v.to_string();
        } else if (const auto* w = std::get_if<SizeWitness>(&t->witness)) {
            s += " expected size " + std::to_string(w->expected);
        } else if (const auto* x = std::get_if<VoxelWitness>(&t->witness)) {
            s += " voxel (";
            for (std::size_t i = 0; i < x->voxel.size(); ++i) {
                s += (i ? "," : "") + std::to_string(x->voxel[i]);
            }
            s += ") covered " + std::to_string(x->count) + " times";
        }
        return s;
    }
    if (const auto* r = std::get_if<IdentityReport>(&v)) {
        std::string s = "identity (" + std::to_string(r->id) + ") n=" + std::to_string(r->n) + " " +
                        std::string(to_string(r->path)) + ": " + to_decimal(r->lhs) + " = " + to_decimal(r->rhs);
        if (r->aux_n) {
            s += " via F(" + std::to_string(*r->aux_n) + ")";
        }
        return s;
    }
    const auto& c = std::get<CheckVerdict>(v);
    return c.detail.empty() ? c.name : c.name + ": " + c.detail;
}

inline std::string_view verdict_kind(const Verdict& v)
{
    switch (v.index()) {
    case 0: return "tiling";
    case 1: return "identity";
    default: return "check";
    }
}

inline void write_aligned(std::ostream& os, const Table& t)
{
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        width[c] = t.columns[c].size();
    }
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
            width[c] = std::max(width[c], row[c].size());
        }
    }
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::string cell = cells[c];
            if (c + 1 < cells.size()) {
                cell.resize(std::max(cell.size(), width[c]) + 2, ' ');
            }
            s += cell;
        }
        os << "  " << s << '\n';
    };
    line(t.columns);
    for (const auto& row : t.rows) {
        line(row);
    }
}

} // namespace detail

inline std::string serialize(const RunReport& report, Format format)
{
    if (report.verdicts.empty()) {
        throw serialization_error("report for '" + report.command + "' has no verdicts");
    }
    std::ostringstream os;
    switch (format) {
    case Format::Json:
        os << report_to_json(report).dump(2) << '\n';
        break;
    case Format::Csv: {
        // One block per table, blank line between blocks. Reports without
        // tables fall back to a verdict listing.
        if (report.tables.empty()) {
            detail::write_csv_line(os, {"kind", "subject", "ok"});
            for (const auto& v : report.verdicts) {
                detail::write_csv_line(
                    os, {std::string(detail::verdict_kind(v)), detail::verdict_subject(v), verdict_ok(v) ? "true" : "false"});
            }
            break;
        }
        for (std::size_t i = 0; i < report.tables.size(); ++i) {
            if (i != 0) {
                os << '\n';
            }
            detail::write_csv_line(os, report.tables[i].columns);
            for (const auto& row : report.tables[i].rows) {
                detail::write_csv_line(os, row);
            }
        }
        break;
    }
    case Format::Table: {
        os << "lucastile " << report.version << "  " << report.command << '\n';
        for (const auto& [key, value] : report.parameters) {
            os << "  " << key << " = " << value << '\n';
        }
        for (const auto& t : report.tables) {
            os << '\n' << t.name << '\n';
            detail::write_aligned(os, t);
        }
        os << "\nverdicts\n";
        for (const auto& v : report.verdicts) {
            os << "  " << (verdict_ok(v) ? "ok    " : "FAIL  ") << detail::verdict_subject(v) << '\n';
        }
        if (!report.timings.empty()) {
            os << "\ntimings\n";
            for (const auto& t : report.timings) {
                os << "  " << t.step << ": " << t.microseconds << " us\n";
            }
        }
        os << "\noverall: " << (report.ok() ? "ok" : "FAIL") << '\n';
        break;
    }
    }
    return os.str();
}

} // namespace lucastile

#endif
