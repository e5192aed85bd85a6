#include "mext/json_io.hpp"

namespace mext {

namespace {

uint32_t get_modulus(const json& j) {
    if (!j.contains("q")) throw ParseError("missing field \"q\"");
    return j.at("q").get<uint32_t>();
}

}  // namespace

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"q", m.field().modulus()}, {"data", rows}};
}

Mat mat_from_json(const json& j) {
    const PrimeField f(get_modulus(j));
    const auto rows = j.at("rows").get<size_t>();
    const auto cols = j.at("cols").get<size_t>();
    const auto data = j.at("data").get<std::vector<std::vector<uint32_t>>>();
    if (data.size() != rows) throw ParseError("matrix row count mismatch");
    Mat m = Mat::from_rows(f, data);
    if (m.rows() != rows || m.cols() != cols) throw ParseError("matrix shape mismatch");
    return m;
}

json poly_to_json(const Poly& p) { return json(p.coeffs()); }

Poly poly_from_json(PrimeField f, const json& j) {
    if (j.is_string()) return parse_poly(f, j.get<std::string>());
    return {f, j.get<std::vector<uint32_t>>()};
}

json multiseq_to_json(const MultiseqState& s) {
    return {{"q", s.field().modulus()},
            {"minpoly", poly_to_json(s.minpoly())},
            {"state", mat_to_json(s.state())}};
}

MultiseqState multiseq_from_json(const json& j) {
    const PrimeField f(get_modulus(j));
    return {mat_from_json(j.at("state")), poly_from_json(f, j.at("minpoly"))};
}

json lfsr_to_json(const LfsrSpec& spec) {
    json blocks = json::array();
    for (const auto& b : spec.blocks) blocks.push_back(mat_to_json(b));
    return {{"q", spec.field().modulus()}, {"m", spec.m}, {"b", spec.b}, {"blocks", blocks}};
}

LfsrSpec lfsr_from_json(const json& j) {
    const auto m = j.at("m").get<size_t>();
    std::vector<Mat> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(mat_from_json(b));
    LfsrSpec spec(m, std::move(blocks));
    if (j.contains("b") && j.at("b").get<size_t>() != spec.b) {
        throw ParseError("block count mismatch");
    }
    if (get_modulus(j) != spec.field().modulus()) throw ParseError("field mismatch");
    return spec;
}

json choices_to_json(const ChoiceScript& c) {
    return {{"initial_state", mat_to_json(c.initial_state)}, {"appended", c.appended}};
}

ChoiceScript choices_from_json(const json& j) {
    return {mat_from_json(j.at("initial_state")),
            j.at("appended").get<std::vector<std::vector<uint32_t>>>()};
}

json ladder_to_json(const PolyLadder& ladder) {
    json polys = json::object();
    for (const auto& [degree, poly] : ladder.polys()) {
        polys[std::to_string(degree)] = poly_to_json(poly);
    }
    return {{"polys", polys}};
}

PolyLadder ladder_from_json(PrimeField f, const json& j) {
    PolyLadder ladder;
    const json& polys = j.contains("polys") ? j.at("polys") : j;
    for (const auto& [key, value] : polys.items()) {
        Poly p = poly_from_json(f, value);
        if (p.degree() != std::stoi(key)) {
            throw ParseError("ladder entry degree does not match its key");
        }
        ladder.set(std::move(p));
    }
    return ladder;
}

json biguint_to_json(const BigUint& v) {
    if (v.fits_uint64()) return v.to_uint64();
    return v.to_string();
}

json count_report_to_json(const CountReport& report) {
    json j{{"formula", biguint_to_json(report.formula_value)},
           {"oracle", nullptr},
           {"match", nullptr},
           {"parameters", report.parameters}};
    if (report.oracle_value) j["oracle"] = *report.oracle_value;
    if (auto m = report.match()) j["match"] = *m;
    return j;
}

json lfsr_report_to_json(const LfsrReport& report) {
    json j{{"structure_ok", report.structure_ok},
           {"charpoly", format_poly(report.charpoly)},
           {"charpoly_coeffs", poly_to_json(report.charpoly)},
           {"charpoly_matches", report.charpoly_matches},
           {"is_primitive", report.primitive},
           {"period", nullptr},
           {"ok", report.passed()}};
    if (report.period_checked) j["period"] = *report.period_checked;
    return j;
}

}  // namespace mext
