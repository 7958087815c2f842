// SPDX-License-Identifier: Apache-2.0
//
// mimoic: bounds for the two-user MIMO interference channel with limited
// receiver cooperation.
// ------------------------------------------------------------------------

#include "mimoic/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mimoic/errors.hpp"

namespace mimoic {

using nlohmann::json;

namespace {

json matrix_to_json(const CMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json& j, const char* name) {
    if (!j.is_array() || j.empty()) {
        throw ParseError(std::string(name) + ": expected a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) {
        throw ParseError(std::string(name) + ": rows must be nonempty arrays");
    }
    const std::size_t cols = j[0].size();
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError(std::string(name) + ": ragged rows");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            const json& e = j[i][k];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError(std::string(name) + ": entries must be [re, im] number pairs");
            }
            m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ParseError(std::string(key) + ": expected a nonnegative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

json number_or_inf(double v) {
    if (std::isinf(v) && v > 0) {
        return "inf";
    }
    return v;
}

double parse_number_or_inf(const json& j, const char* what) {
    if (j.is_string() && j.get<std::string>() == "inf") {
        return std::numeric_limits<double>::infinity();
    }
    if (!j.is_number()) {
        throw ParseError(std::string(what) + ": expected a number or \"inf\"");
    }
    return j.get<double>();
}

json channel_to_json(const ChannelInstance& ch) {
    json j;
    j["m1"] = ch.m1;
    j["n1"] = ch.n1;
    j["m2"] = ch.m2;
    j["n2"] = ch.n2;
    j["h11"] = matrix_to_json(ch.h11);
    j["h12"] = matrix_to_json(ch.h12);
    j["h21"] = matrix_to_json(ch.h21);
    j["h22"] = matrix_to_json(ch.h22);
    j["rho"] = {{"11", ch.rho11}, {"12", ch.rho12}, {"21", ch.rho21}, {"22", ch.rho22}};
    j["c"] = {{"12", number_or_inf(ch.c12)}, {"21", number_or_inf(ch.c21)}};
    return j;
}

ChannelInstance channel_from_json(const json& j) {
    ChannelInstance ch;
    ch.m1 = count_field(j, "m1");
    ch.n1 = count_field(j, "n1");
    ch.m2 = count_field(j, "m2");
    ch.n2 = count_field(j, "n2");
    ch.h11 = matrix_from_json(field(j, "h11"), "h11");
    ch.h12 = matrix_from_json(field(j, "h12"), "h12");
    ch.h21 = matrix_from_json(field(j, "h21"), "h21");
    ch.h22 = matrix_from_json(field(j, "h22"), "h22");
    const json& rho = field(j, "rho");
    auto gain = [&](const char* key) {
        const json& v = field(rho, key);
        if (!v.is_number()) {
            throw ParseError(std::string("rho.") + key + ": expected a number");
        }
        return v.get<double>();
    };
    ch.rho11 = gain("11");
    ch.rho12 = gain("12");
    ch.rho21 = gain("21");
    ch.rho22 = gain("22");
    const json& c = field(j, "c");
    ch.c12 = parse_number_or_inf(field(c, "12"), "c.12");
    ch.c21 = parse_number_or_inf(field(c, "21"), "c.21");
    return ch;
}

json region_to_json(const RateRegion2D& r) {
    json cs = json::array();
    for (const auto& c : r.constraints()) {
        cs.push_back({{"a", c.a}, {"b", c.b}, {"c", number_or_inf(c.c)}});
    }
    json vs = json::array();
    for (const auto& v : r.vertices()) {
        vs.push_back(json::array({v.r1, v.r2}));
    }
    return {{"constraints", cs}, {"vertices", vs}, {"empty", r.empty()}};
}

RateRegion2D region_from_json(const json& j) {
    std::vector<RateConstraint> cs;
    const json& jc = field(j, "constraints");
    if (!jc.is_array()) {
        throw ParseError("constraints: expected an array");
    }
    for (const auto& e : jc) {
        const json& a = field(e, "a");
        const json& b = field(e, "b");
        if (!a.is_number() || !b.is_number()) {
            throw ParseError("constraint direction must be numeric");
        }
        cs.push_back({a.get<double>(), b.get<double>(), parse_number_or_inf(field(e, "c"), "c")});
    }
    std::vector<Point> vs;
    const json& jv = field(j, "vertices");
    if (!jv.is_array()) {
        throw ParseError("vertices: expected an array");
    }
    for (const auto& e : jv) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("vertices: entries must be [r1, r2]");
        }
        vs.push_back({e[0].get<double>(), e[1].get<double>()});
    }
    const json& empty = field(j, "empty");
    if (!empty.is_boolean()) {
        throw ParseError("empty: expected a boolean");
    }
    try {
        return region_from_parts(std::move(cs), std::move(vs), empty.get<bool>());
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

json slopes_to_json(const std::vector<SlopeEstimate>& slopes) {
    json out = json::array();
    for (const auto& s : slopes) {
        out.push_back({{"term", s.term},
                       {"predicted", s.predicted},
                       {"estimated", s.estimated},
                       {"abs_err", s.abs_err}});
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error("write failed for " + path);
    }
}

}  // namespace mimoic
