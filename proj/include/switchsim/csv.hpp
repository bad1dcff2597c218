// Copyright (c) 2026 The switchsim developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace switchsim {

/// RFC-4180 style writer with '#'-prefixed metadata comments ahead of the
/// header row. Doubles are printed with 17 significant digits so identical
/// runs produce byte-identical files. With mirror enabled, a .json twin
/// carrying {comments, columns, rows} is written alongside.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path, bool json_mirror = false);
    ~CsvWriter();

    void comment(const std::string& text);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);

    static std::string format_double(double v);

private:
    std::string path_;
    std::ofstream out_;
    bool header_written_ = false;
    bool mirror_ = false;
    std::vector<std::string> comments_;
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

} // namespace switchsim
