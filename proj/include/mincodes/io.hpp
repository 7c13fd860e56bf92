#pragma once

// Matrix text format:
//   line 1: q rows cols
//   then `rows` lines of `cols` integer encodings
// Any whitespace separates tokens; a line whose first non-blank character is '#' is a comment.

#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>
#include <string>

#include "analysis.hpp"
#include "code.hpp"
#include "linalg.hpp"
#include "sss.hpp"

namespace mincodes {

using Json = nlohmann::ordered_json;

inline Matrix read_matrix(std::istream& in) {
    std::ostringstream body;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first != std::string::npos && line[first] == '#') continue;
        body << line << '\n';
    }
    std::istringstream tokens(body.str());
    auto next = [&](const char* what) {
        long long v;
        if (!(tokens >> v)) throw Error(ErrorKind::Parse, std::string("expected ") + what);
        if (v < 0) throw Error(ErrorKind::Parse, std::string("negative ") + what);
        return static_cast<std::uint64_t>(v);
    };
    const std::uint64_t q = next("field order");
    const std::uint64_t rows = next("row count");
    const std::uint64_t cols = next("column count");
    FieldRef field = build_field(q);
    Vec data;
    data.reserve(rows * cols);
    for (std::uint64_t i = 0; i < rows * cols; ++i) {
        const std::uint64_t e = next("matrix entry");
        if (e >= q) throw Error(ErrorKind::Parse, "entry " + std::to_string(e) + " outside GF(" + std::to_string(q) + ")");
        data.push_back(FieldElement{static_cast<std::uint32_t>(e)});
    }
    std::string extra;
    if (tokens >> extra) throw Error(ErrorKind::Parse, "trailing data after matrix: '" + extra + "'");
    return Matrix(field, rows, cols, std::move(data));
}

inline Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.field().q() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).enc;
        out << '\n';
    }
}

inline std::string matrix_to_string(const Matrix& m) {
    std::ostringstream s;
    write_matrix(s, m);
    return s.str();
}

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (auto e : v) a.push_back(e.enc);
    return a;
}

inline Json to_json(const Codeword& c) {
    return Json{{"coeffs", to_json(c.coeffs)}, {"values", to_json(c.values)}, {"weight", c.weight}};
}

inline Json to_json(const WeightDistribution& wd) {
    Json counts = Json::object();
    for (const auto& [w, c] : wd.counts) counts[std::to_string(w)] = c;
    return Json{{"q", wd.q}, {"n", wd.n}, {"k", wd.k}, {"counts", counts}};
}

inline std::string to_csv(const WeightDistribution& wd) {
    std::ostringstream s;
    s << "weight,count\n";
    for (const auto& [w, c] : wd.counts) s << w << ',' << c << '\n';
    return s.str();
}

inline Json to_json(const MinimalityReport& r) {
    Json j{{"is_minimal", r.is_minimal}, {"checked_pairs", r.checked_pairs}};
    if (r.witness) j["witness"] = Json{{"covered", to_json(r.witness->covered)}, {"covering", to_json(r.witness->covering)}};
    else j["witness"] = nullptr;
    return j;
}

inline Json to_json(const AbReport& r) {
    return Json{{"w_min", r.w_min},
                {"w_max", r.w_max},
                {"ratio", std::to_string(r.ratio_num) + "/" + std::to_string(r.ratio_den)},
                {"threshold", std::to_string(r.threshold_num) + "/" + std::to_string(r.threshold_den)},
                {"sufficient", r.sufficient}};
}

inline Json to_json(const FullValueReport& r) {
    Json j{{"holds", r.holds}};
    if (r.witness) {
        j["witness"] = to_json(*r.witness);
        j["witness_values"] = to_json(r.witness_values);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline Json to_json(const std::vector<AccessSet>& sets) {
    Json a = Json::array();
    for (const auto& s : sets) a.push_back(s.indices);
    return a;
}

}  // namespace mincodes
