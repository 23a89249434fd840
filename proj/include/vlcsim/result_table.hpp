// SPDX-License-Identifier: Apache-2.0
//
// vlcsim: stochastic channel simulator for indoor visible light communication
// Copyright (C) 2026 The vlcsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vlcsim/error.hpp"

namespace vlcsim {

inline constexpr const char *kVersion = "1.0.0";

using Cell = std::variant<double, std::int64_t, std::string>;

struct Column
{
    std::string name;
    std::string unit; // empty for dimensionless or labels
};

class ResultTable
{
public:
    ResultTable() = default;
    ResultTable(std::string name, std::vector<Column> columns) : name_(std::move(name)), columns_(std::move(columns)) {}

    const std::string &name() const { return name_; }
    const std::vector<Column> &columns() const { return columns_; }
    const std::vector<std::vector<Cell>> &rows() const { return rows_; }

    void add_row(std::vector<Cell> row)
    {
        if (row.size() != columns_.size())
            throw Error(Errc::InvalidArgument, "table '" + name_ + "': row has " + std::to_string(row.size()) + " cells, expected " +
                                                   std::to_string(columns_.size()));
        rows_.push_back(std::move(row));
    }

private:
    std::string name_;
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
};

struct Provenance
{
    std::string version = kVersion;
    std::string experiment;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
};

enum class ExportFormat { Csv, Json };

inline std::string hash_hex(std::uint64_t h)
{
    char buf[17];
    auto [end, ec] = std::to_chars(buf, buf + 16, h, 16);
    std::string s(buf, end);
    return std::string(16 - s.size(), '0') + s;
}

// Shortest round-trip form; non-finite values print as inf, -inf or nan.
inline std::string format_number(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline std::string format_cell(const Cell &c)
{
    if (const auto *d = std::get_if<double>(&c))
        return format_number(*d);
    if (const auto *i = std::get_if<std::int64_t>(&c))
        return std::to_string(*i);
    const auto &s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s)
    {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + '"';
}

inline std::string column_header(const Column &c) { return c.unit.empty() ? c.name : c.name + " [" + c.unit + "]"; }

inline void write_csv(std::ostream &out, const ResultTable &t, const Provenance &p)
{
    out << "# vlcsim " << p.version << '\n';
    out << "# experiment: " << p.experiment << '\n';
    out << "# table: " << t.name() << '\n';
    out << "# config_hash: " << hash_hex(p.config_hash) << '\n';
    out << "# seed: " << p.seed << '\n';
    for (std::size_t k = 0; k < t.columns().size(); ++k)
        out << (k ? "," : "") << format_cell(column_header(t.columns()[k]));
    out << '\n';
    for (const auto &row : t.rows())
    {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "," : "") << format_cell(row[k]);
        out << '\n';
    }
}

// JSON numbers cannot carry inf/nan, so those are written as strings.
inline nlohmann::ordered_json table_to_json(const ResultTable &t, const Provenance &p)
{
    nlohmann::ordered_json j;
    j["provenance"] = {{"version", p.version}, {"experiment", p.experiment}, {"table", t.name()},
                       {"config_hash", hash_hex(p.config_hash)}, {"seed", p.seed}};
    auto cols = nlohmann::ordered_json::array();
    for (const auto &c : t.columns())
        cols.push_back({{"name", c.name}, {"unit", c.unit}});
    j["columns"] = cols;
    auto rows = nlohmann::ordered_json::array();
    for (const auto &row : t.rows())
    {
        auto r = nlohmann::ordered_json::array();
        for (const auto &c : row)
        {
            if (const auto *d = std::get_if<double>(&c))
                r.push_back(std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(format_number(*d)));
            else if (const auto *i = std::get_if<std::int64_t>(&c))
                r.push_back(*i);
            else
                r.push_back(std::get<std::string>(c));
        }
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

inline void write_json(std::ostream &out, const ResultTable &t, const Provenance &p) { out << table_to_json(t, p).dump(2) << '\n'; }

inline std::filesystem::path export_table(const ResultTable &t, const Provenance &p, const std::filesystem::path &dir,
                                          ExportFormat format)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw Error(Errc::IoError, "cannot create '" + dir.string() + "': " + ec.message());
    const auto path = dir / (p.experiment + "_" + t.name() + (format == ExportFormat::Csv ? ".csv" : ".json"));
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
    if (format == ExportFormat::Csv)
        write_csv(out, t, p);
    else
        write_json(out, t, p);
    out.flush();
    if (!out)
        throw Error(Errc::IoError, "failed writing '" + path.string() + "'");
    return path;
}

} // namespace vlcsim
