#include "tpkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tpkit {

namespace {

using nlohmann::json;

std::vector<std::string> splitCommas(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

ExactMatrix parseJsonMatrix(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data")) {
        throw ParseError("matrix JSON needs rows, cols, data");
    }
    int rows = doc["rows"].get<int>();
    int cols = doc["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
    const json& data = doc["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != rows) {
        throw ShapeError("data must hold exactly `rows` arrays");
    }
    std::vector<Rational> entries;
    entries.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = data[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw ShapeError("ragged row at index " + std::to_string(i + 1));
        }
        for (int j = 0; j < cols; ++j) {
            const json& cell = row[static_cast<size_t>(j)];
            if (cell.is_number_integer()) {
                entries.emplace_back(static_cast<long>(cell.get<long long>()));
            } else if (cell.is_string()) {
                entries.push_back(parseRational(cell.get<std::string>()));
            } else {
                throw ParseError("entry (" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + ") must be a string");
            }
        }
    }
    return ExactMatrix(rows, cols, std::move(entries));
}

ExactMatrix parseCsvMatrix(std::istream& in) {
    std::vector<std::vector<Rational>> rows;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        int col = 0;
        for (const std::string& tok : splitCommas(line)) {
            ++col;
            try {
                row.push_back(parseRational(tok));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(lineNo) + ", column " +
                                 std::to_string(col) + ": " + e.what());
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix input");
    const size_t cols = rows.front().size();
    std::vector<Rational> entries;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw ShapeError("ragged row at line " + std::to_string(i + 1));
        }
        for (auto& v : rows[i]) entries.push_back(std::move(v));
    }
    return ExactMatrix(static_cast<int>(rows.size()), static_cast<int>(cols),
                       std::move(entries));
}

} // namespace

ExactMatrix parseMatrix(std::istream& in, MatrixFormat format) {
    return format == MatrixFormat::Json ? parseJsonMatrix(in) : parseCsvMatrix(in);
}

ExactMatrix parseMatrixString(const std::string& text, MatrixFormat format) {
    std::istringstream in(text);
    return parseMatrix(in, format);
}

ExactMatrix parseMatrixFile(const std::string& path, MatrixFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parseMatrix(in, format);
}

std::string emitMatrix(const ExactMatrix& a, MatrixFormat format) {
    if (format == MatrixFormat::Csv) {
        std::string out;
        for (int i = 1; i <= a.rows(); ++i) {
            for (int j = 1; j <= a.cols(); ++j) {
                if (j > 1) out += ",";
                out += toString(a.at(i, j));
            }
            out += "\n";
        }
        return out;
    }
    json doc;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    json data = json::array();
    for (int i = 1; i <= a.rows(); ++i) {
        json row = json::array();
        for (int j = 1; j <= a.cols(); ++j) row.push_back(toString(a.at(i, j)));
        data.push_back(std::move(row));
    }
    doc["data"] = std::move(data);
    return doc.dump(2) + "\n";
}

FactorizationParams parseParams(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    FactorizationParams params;
    params.n = doc.at("n").get<int>();
    auto readSide = [&](const char* key) {
        std::vector<BidiagonalParam> side;
        for (const json& pair : doc.at(key)) {
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("parameter entries must be [\"i\", \"p/q\"] pairs");
            }
            BidiagonalParam p;
            p.position = std::stoi(pair[0].get<std::string>());
            p.value = parseRational(pair[1].get<std::string>());
            side.push_back(std::move(p));
        }
        return side;
    };
    params.lowers = readSide("lowers");
    params.uppers = readSide("uppers");
    for (const json& d : doc.at("diag")) {
        params.diag.push_back(parseRational(d.get<std::string>()));
    }
    params.validate();
    return params;
}

FactorizationParams parseParamsFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parseParams(in);
}

std::string emitParams(const FactorizationParams& params) {
    json doc;
    doc["n"] = params.n;
    auto writeSide = [&](const std::vector<BidiagonalParam>& side) {
        json arr = json::array();
        for (const auto& p : side) {
            arr.push_back(json::array({std::to_string(p.position), toString(p.value)}));
        }
        return arr;
    };
    doc["lowers"] = writeSide(params.lowers);
    doc["uppers"] = writeSide(params.uppers);
    json diag = json::array();
    for (const auto& d : params.diag) diag.push_back(toString(d));
    doc["diag"] = std::move(diag);
    return doc.dump(2) + "\n";
}

IndexSet parseIndexList(const std::string& text, int bound) {
    std::vector<int> out;
    for (const std::string& tok : splitCommas(text)) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ParseError("bad index '" + tok + "'");
        }
    }
    return IndexSet(std::move(out), bound);
}

std::vector<Rational> parseRationalList(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& tok : splitCommas(text)) out.push_back(parseRational(tok));
    return out;
}

} // namespace tpkit
