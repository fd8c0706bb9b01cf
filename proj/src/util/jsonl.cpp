#include "apbench/util/jsonl.hpp"

#include "apbench/errors.hpp"

#include <fstream>

namespace apbench::jsonl {

std::vector<json> read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::vector<json> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json row = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (row.is_discarded()) {
            throw Error(ErrorCode::IoError,
                        path.string() + ":" + std::to_string(lineno) + ": invalid JSON");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_file(const std::filesystem::path& path, const std::vector<json>& rows) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
    for (const auto& row : rows) {
        out << row.dump() << '\n';
    }
}

void append_line(const std::filesystem::path& path, const json& row) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::app);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot append to " + path.string());
    }
    out << row.dump() << '\n';
    out.flush();
}

}  // namespace apbench::jsonl
