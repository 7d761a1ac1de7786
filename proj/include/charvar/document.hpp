#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "charvar/gl.hpp"
#include "charvar/mc.hpp"
#include "charvar/quad.hpp"
#include "charvar/verify.hpp"

namespace charvar {

using json = nlohmann::ordered_json;

/// A parsed configuration file. Exactly one of the payloads is set,
/// matching kind.
struct ConfigDocument {
    enum class Kind { Gl, Quad, QuadOverlapping, MonodromyTuple };

    Kind kind = Kind::Gl;
    std::optional<GlConfiguration> gl;
    std::optional<QuadConfiguration> quad;
    std::optional<OverlappingConfiguration> overlapping;
    std::optional<MonodromyTuple> tuple;
};

namespace detail {

inline void reject_unknown(const json& obj, const std::vector<std::string>& keys,
                           const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ParseError(path + ": unknown field \"" + key + "\"");
    }
}

inline const json& require_field(const json& obj, const std::string& key,
                                 const std::string& path) {
    if (!obj.is_object() || !obj.contains(key))
        throw ParseError(path + ": missing field \"" + key + "\"");
    return obj.at(key);
}

inline int require_int(const json& value, const std::string& path) {
    if (!value.is_number_integer())
        throw ParseError(path + ": expected an integer");
    return value.get<int>();
}

inline std::string require_string(const json& value, const std::string& path) {
    if (!value.is_string()) throw ParseError(path + ": expected a string");
    return value.get<std::string>();
}

inline Partition parse_partition(const json& value, const std::string& path) {
    if (!value.is_array()) throw ParseError(path + ": expected an array of parts");
    std::vector<int> parts;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const int p = require_int(value[i], path + "[" + std::to_string(i) + "]");
        if (p < 1)
            throw ParseError(path + "[" + std::to_string(i) +
                             "]: parts must be positive");
        parts.push_back(p);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

inline PartKind parse_kind_letter(const std::string& text,
                                  const std::string& path) {
    if (text == "e") return PartKind::e;
    if (text == "f") return PartKind::f;
    if (text == "m") return PartKind::m;
    throw ParseError(path + ": type must be \"e\", \"f\", or \"m\"");
}

inline QuadColumn parse_quad_column(const json& value, const std::string& path,
                                    bool bounded) {
    reject_unknown(value, {"width", "parts"}, path);
    const int width = require_int(require_field(value, "width", path),
                                  path + ".width");
    const json& parts_json = require_field(value, "parts", path);
    if (!parts_json.is_array())
        throw ParseError(path + ".parts: expected an array");
    std::vector<TypedPart> parts;
    for (std::size_t i = 0; i < parts_json.size(); ++i) {
        const std::string part_path =
            path + ".parts[" + std::to_string(i) + "]";
        const json& part = parts_json[i];
        reject_unknown(part, {"size", "type"}, part_path);
        TypedPart tp;
        tp.size = require_int(require_field(part, "size", part_path),
                              part_path + ".size");
        tp.kind = parse_kind_letter(
            require_string(require_field(part, "type", part_path),
                           part_path + ".type"),
            part_path + ".type");
        parts.push_back(tp);
    }
    QuadColumn col{width, std::move(parts)};
    std::sort(col.parts.begin(), col.parts.end());
    col.validate(bounded);
    return col;
}

inline std::string kind_name(ConfigDocument::Kind kind) {
    switch (kind) {
        case ConfigDocument::Kind::Gl: return "gl";
        case ConfigDocument::Kind::Quad: return "quad";
        case ConfigDocument::Kind::QuadOverlapping: return "quad-overlapping";
        default: return "monodromy-tuple";
    }
}

} // namespace detail

inline ConfigDocument parse_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("document must be a JSON object");
    const std::string kind =
        detail::require_string(detail::require_field(root, "kind", "document"),
                               "kind");

    ConfigDocument doc;
    if (kind == "gl") {
        doc.kind = ConfigDocument::Kind::Gl;
        detail::reject_unknown(root, {"kind", "rank", "columns"}, "document");
        const int rank =
            detail::require_int(detail::require_field(root, "rank", "document"),
                                "rank");
        const json& cols = detail::require_field(root, "columns", "document");
        if (!cols.is_array() || cols.size() != 3)
            throw ParseError("columns: expected exactly 3 entries");
        std::array<int, 3> widths{};
        std::array<Partition, 3> parts{};
        for (std::size_t i = 0; i < 3; ++i) {
            const std::string path = "columns[" + std::to_string(i) + "]";
            detail::reject_unknown(cols[i], {"width", "parts"}, path);
            widths[i] = detail::require_int(
                detail::require_field(cols[i], "width", path), path + ".width");
            parts[i] = detail::parse_partition(
                detail::require_field(cols[i], "parts", path), path + ".parts");
        }
        doc.gl = GlConfiguration::make(rank, widths, std::move(parts));
    } else if (kind == "quad" || kind == "quad-overlapping") {
        detail::reject_unknown(root,
                               kind == "quad"
                                   ? std::vector<std::string>{"kind", "rank",
                                                              "epsilon",
                                                              "columns"}
                                   : std::vector<std::string>{"kind", "rank",
                                                              "epsilon",
                                                              "columns", "mu",
                                                              "overlap-pair"},
                               "document");
        const int rank =
            detail::require_int(detail::require_field(root, "rank", "document"),
                                "rank");
        const int epsilon = detail::require_int(
            detail::require_field(root, "epsilon", "document"), "epsilon");
        const json& cols = detail::require_field(root, "columns", "document");
        if (!cols.is_array() || cols.size() != 3)
            throw ParseError("columns: expected exactly 3 entries");
        std::array<QuadColumn, 3> columns;
        for (std::size_t i = 0; i < 3; ++i)
            columns[i] = detail::parse_quad_column(
                cols[i], "columns[" + std::to_string(i) + "]",
                /*bounded=*/kind == "quad");
        if (kind == "quad") {
            doc.kind = ConfigDocument::Kind::Quad;
            doc.quad = QuadConfiguration::make(rank, epsilon, std::move(columns));
        } else {
            doc.kind = ConfigDocument::Kind::QuadOverlapping;
            const int mu = detail::require_int(
                detail::require_field(root, "mu", "document"), "mu");
            const json& pair =
                detail::require_field(root, "overlap-pair", "document");
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError("overlap-pair: expected two column numbers");
            std::array<int, 2> overlap{};
            for (std::size_t i = 0; i < 2; ++i) {
                const int v = detail::require_int(
                    pair[i], "overlap-pair[" + std::to_string(i) + "]");
                if (v < 1 || v > 3)
                    throw ParseError("overlap-pair: column numbers are 1..3");
                overlap[i] = v - 1;
            }
            if (overlap[0] > overlap[1]) std::swap(overlap[0], overlap[1]);
            doc.overlapping = OverlappingConfiguration::make(
                rank, epsilon, std::move(columns), overlap, mu);
        }
    } else if (kind == "monodromy-tuple") {
        doc.kind = ConfigDocument::Kind::MonodromyTuple;
        detail::reject_unknown(root, {"kind", "rank", "points"}, "document");
        const int rank =
            detail::require_int(detail::require_field(root, "rank", "document"),
                                "rank");
        const json& points_json =
            detail::require_field(root, "points", "document");
        if (!points_json.is_array())
            throw ParseError("points: expected an array");
        std::vector<std::vector<EigenBlock>> points;
        for (std::size_t i = 0; i < points_json.size(); ++i) {
            const std::string path = "points[" + std::to_string(i) + "]";
            if (!points_json[i].is_array())
                throw ParseError(path + ": expected an array of blocks");
            std::vector<EigenBlock> point;
            for (std::size_t b = 0; b < points_json[i].size(); ++b) {
                const std::string block_path =
                    path + "[" + std::to_string(b) + "]";
                const json& block = points_json[i][b];
                detail::reject_unknown(block, {"eigenvalue", "parts"},
                                       block_path);
                EigenBlock eb;
                eb.eigenvalue = Exponent::parse(detail::require_string(
                    detail::require_field(block, "eigenvalue", block_path),
                    block_path + ".eigenvalue"));
                eb.dual_parts = detail::parse_partition(
                    detail::require_field(block, "parts", block_path),
                    block_path + ".parts");
                point.push_back(std::move(eb));
            }
            points.push_back(std::move(point));
        }
        doc.tuple = MonodromyTuple::make(rank, std::move(points));
    } else {
        throw ParseError("kind must be one of \"gl\", \"quad\", "
                         "\"quad-overlapping\", \"monodromy-tuple\"");
    }
    return doc;
}

inline json column_to_json(const QuadColumn& col) {
    json parts = json::array();
    for (const auto& p : col.parts)
        parts.push_back({{"size", p.size},
                         {"type", std::string(1, kind_letter(p.kind))}});
    return {{"width", col.width}, {"parts", std::move(parts)}};
}

inline std::string serialize_document(const ConfigDocument& doc) {
    json root;
    root["kind"] = detail::kind_name(doc.kind);
    switch (doc.kind) {
        case ConfigDocument::Kind::Gl: {
            const auto& cfg = *doc.gl;
            root["rank"] = cfg.rank;
            json cols = json::array();
            for (int i = 0; i < 3; ++i)
                cols.push_back({{"width", cfg.widths[i]},
                                {"parts", cfg.columns[i].parts()}});
            root["columns"] = std::move(cols);
            break;
        }
        case ConfigDocument::Kind::Quad: {
            const auto& cfg = *doc.quad;
            root["rank"] = cfg.rank;
            root["epsilon"] = cfg.epsilon;
            json cols = json::array();
            for (const auto& col : cfg.columns) cols.push_back(column_to_json(col));
            root["columns"] = std::move(cols);
            break;
        }
        case ConfigDocument::Kind::QuadOverlapping: {
            const auto& cfg = *doc.overlapping;
            root["rank"] = cfg.rank;
            root["epsilon"] = cfg.epsilon;
            json cols = json::array();
            for (const auto& col : cfg.columns) cols.push_back(column_to_json(col));
            root["columns"] = std::move(cols);
            root["mu"] = cfg.mu;
            root["overlap-pair"] = {cfg.overlap[0] + 1, cfg.overlap[1] + 1};
            break;
        }
        case ConfigDocument::Kind::MonodromyTuple: {
            const auto& tuple = *doc.tuple;
            root["rank"] = tuple.rank;
            json points = json::array();
            for (const auto& point : tuple.points) {
                json blocks = json::array();
                for (const auto& block : point)
                    blocks.push_back({{"eigenvalue", block.eigenvalue.str()},
                                      {"parts", block.dual_parts.parts()}});
                points.push_back(std::move(blocks));
            }
            root["points"] = std::move(points);
            break;
        }
    }
    return root.dump(2) + "\n";
}

/// Kernel files share the document format: {"kind": "kernel", ...}.
inline ConvolutionKernel parse_kernel(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("kernel must be a JSON object");
    detail::reject_unknown(root, {"kind", "betaH", "betaV", "betaT"}, "kernel");
    if (detail::require_string(detail::require_field(root, "kind", "kernel"),
                               "kind") != "kernel")
        throw ParseError("kind must be \"kernel\"");
    auto parse_list = [&](const std::string& key) {
        const json& arr = detail::require_field(root, key, "kernel");
        if (!arr.is_array()) throw ParseError(key + ": expected an array");
        std::vector<Exponent> out;
        for (std::size_t i = 0; i < arr.size(); ++i)
            out.push_back(Exponent::parse(detail::require_string(
                arr[i], key + "[" + std::to_string(i) + "]")));
        return out;
    };
    auto betaH = parse_list("betaH");
    auto betaV = parse_list("betaV");
    const Exponent betaT = Exponent::parse(detail::require_string(
        detail::require_field(root, "betaT", "kernel"), "betaT"));
    return ConvolutionKernel::make(std::move(betaH), std::move(betaV), betaT);
}

inline json sweep_entry_to_json(const SweepEntry& entry) {
    json columns = json::array();
    for (const auto& col : entry.columns) columns.push_back(col.parts());
    return {{"rank", entry.rank},       {"epsilon", entry.epsilon},
            {"widths", entry.widths},   {"columns", std::move(columns)},
            {"column_dims", entry.column_dims}, {"delta", entry.delta},
            {"note", entry.note}};
}

inline json report_to_json(const VerificationReport& report) {
    json witnesses = json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(sweep_entry_to_json(w));
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(sweep_entry_to_json(v));
    return {{"theorem", report.theorem},
            {"range", {report.lo, report.hi}},
            {"epsilon", report.epsilons},
            {"status", report.pass ? "pass" : "fail"},
            {"witnesses", std::move(witnesses)},
            {"violations", std::move(violations)},
            {"elapsed_ms", report.elapsed_ms}};
}

} // namespace charvar
