// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#include "switchsim/csv.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace switchsim {

CsvWriter::CsvWriter(const std::string& path, bool json_mirror)
    : path_(path), out_(path), mirror_(json_mirror) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
}

CsvWriter::~CsvWriter() {
    if (!mirror_) return;
    try {
        nlohmann::json doc;
        doc["comments"] = comments_;
        doc["columns"] = columns_;
        doc["rows"] = rows_;
        std::ofstream js(path_ + ".json");
        js << doc.dump(1) << "\n";
    } catch (...) {
        // mirror failures must not mask the primary output
    }
}

void CsvWriter::comment(const std::string& text) {
    if (header_written_)
        throw std::logic_error("CsvWriter: comments must precede the header");
    out_ << "# " << text << "\n";
    if (mirror_) comments_.push_back(text);
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    header_written_ = true;
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    if (mirror_) columns_ = columns;
}

std::string CsvWriter::format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << format_double(values[i]) << (i + 1 < values.size() ? "," : "\n");
    if (mirror_) rows_.push_back(values);
}

} // namespace switchsim
