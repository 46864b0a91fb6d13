#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "trv/error.hpp"
#include "trv/group.hpp"
#include "trv/quasigroup.hpp"

namespace trv {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json parse_json(const std::string& text, const std::string& what) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw IoError("malformed JSON in " + what);
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

inline std::vector<std::vector<int>> table_field(const ordered_json& j, const std::string& what) {
    if (!j.contains("table") || !j["table"].is_array()) {
        throw IoError(what + ": missing table");
    }
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) {
        if (!row.is_array()) throw IoError(what + ": table rows must be arrays");
        table.push_back(row.get<std::vector<int>>());
    }
    return table;
}

inline std::vector<std::string> labels_field(const ordered_json& j) {
    if (j.contains("labels")) return j["labels"].get<std::vector<std::string>>();
    return {};
}

} // namespace detail

// File formats, all canonical: keys in the order written below, identity
// normalized to 0 on read so that write(read(f)) is byte-stable.

inline std::string quasigroup_to_json(const RightQuasigroup& q) {
    ordered_json j;
    j["labels"] = q.labels();
    j["identity"] = q.identity();
    j["table"] = q.table();
    return j.dump(2) + "\n";
}

inline RightQuasigroup quasigroup_from_json(const std::string& text) {
    ordered_json j = detail::parse_json(text, "quasigroup file");
    try {
        return RightQuasigroup::validated(detail::table_field(j, "quasigroup file"),
                                          j.value("identity", 0), detail::labels_field(j));
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("quasigroup file: ") + e.what());
    }
}

inline std::string group_to_json(const FiniteGroup& G) {
    ordered_json j;
    j["labels"] = G.labels();
    j["identity"] = G.identity();
    j["table"] = G.table();
    return j.dump(2) + "\n";
}

inline FiniteGroup group_from_json(const std::string& text,
                                   FiniteGroup::Check check = FiniteGroup::Check::Full) {
    ordered_json j = detail::parse_json(text, "group file");
    try {
        return FiniteGroup::from_table(detail::table_field(j, "group file"),
                                       j.value("identity", 0), detail::labels_field(j), check);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("group file: ") + e.what());
    }
}

inline std::string subgroup_to_json(const Subgroup& H) {
    ordered_json j;
    j["members"] = H.members;
    return j.dump(2) + "\n";
}

inline Subgroup subgroup_from_json(const FiniteGroup& G, const std::string& text) {
    ordered_json j = detail::parse_json(text, "subgroup file");
    if (!j.contains("members")) throw IoError("subgroup file: missing members");
    try {
        return subgroup_from_members(G, j["members"].get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("subgroup file: ") + e.what());
    }
}

inline std::string transversal_to_json(const Transversal& t) {
    ordered_json j;
    j["reps"] = t.reps;
    return j.dump(2) + "\n";
}

inline Transversal transversal_from_json(const FiniteGroup& G, const Subgroup& H,
                                         const std::string& text) {
    ordered_json j = detail::parse_json(text, "transversal file");
    if (!j.contains("reps")) throw IoError("transversal file: missing reps");
    try {
        return transversal_from_reps(G, H, j["reps"].get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("transversal file: ") + e.what());
    }
}

inline RightQuasigroup load_quasigroup(const std::string& path) {
    return quasigroup_from_json(detail::read_file(path));
}

inline FiniteGroup load_group(const std::string& path,
                              FiniteGroup::Check check = FiniteGroup::Check::Full) {
    return group_from_json(detail::read_file(path), check);
}

inline void save_quasigroup(const std::string& path, const RightQuasigroup& q) {
    detail::write_file(path, quasigroup_to_json(q));
}

inline void save_group(const std::string& path, const FiniteGroup& G) {
    detail::write_file(path, group_to_json(G));
}

} // namespace trv
