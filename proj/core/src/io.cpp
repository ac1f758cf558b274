#include "slicebergman/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slicebergman {

namespace {

using nlohmann::json;

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("not a number: '" + s + "'");
    }
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw ParseError("trailing characters in number: '" + s + "'");
    return v;
}

json quat_to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion JSON must be an array of four numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::vector<double> doubles_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of numbers");
    return j.get<std::vector<double>>();
}

}  // namespace

Quaternion parse_quaternion(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (parts.size() == 1) return Quaternion{parse_double(parts[0])};
    if (parts.size() == 4)
        return {parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]),
                parse_double(parts[3])};
    throw ParseError("quaternion must be 'w,x,y,z' or a single real: '" + text + "'");
}

std::string format_quaternion(const Quaternion& q) {
    std::ostringstream out;
    out.precision(17);
    out << q.w << ',' << q.x << ',' << q.y << ',' << q.z;
    return out.str();
}

std::string to_json(const SeriesFunction& f) {
    json coeffs = json::array();
    for (const Quaternion& c : f.coeffs) coeffs.push_back(quat_to_json(c));
    return json{{"radius", f.radius}, {"coeffs", coeffs}}.dump();
}

std::string to_json(const LaguerreCoefficients& phi) {
    json coeffs = json::array();
    for (const Quaternion& c : phi.coeffs) coeffs.push_back(quat_to_json(c));
    return json{{"alpha", phi.alpha}, {"coeffs", coeffs}}.dump();
}

std::string to_json(const HalfLineRule& rule) {
    return json{{"alpha", rule.alpha}, {"nodes", rule.nodes}, {"weights", rule.weights}}.dump();
}

std::string to_json(const DiskRule& rule) {
    return json{{"alpha", rule.alpha},
                {"R", rule.R},
                {"unit", {rule.unit.x(), rule.unit.y(), rule.unit.z()}},
                {"radial_nodes", rule.radial_nodes},
                {"radial_weights", rule.radial_weights},
                {"angular_count", rule.angular_count}}
        .dump();
}

SeriesFunction series_function_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.contains("radius") || !j.contains("coeffs"))
        throw ParseError("series function JSON needs 'radius' and 'coeffs'");
    SeriesFunction f;
    f.radius = j["radius"].get<double>();
    for (const json& c : j["coeffs"]) f.coeffs.push_back(quat_from_json(c));
    return f;
}

LaguerreCoefficients laguerre_coefficients_from_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.contains("alpha") || !j.contains("coeffs"))
        throw ParseError("coefficient JSON needs 'alpha' and 'coeffs'");
    LaguerreCoefficients phi;
    phi.alpha = j["alpha"].get<double>();
    for (const json& c : j["coeffs"]) phi.coeffs.push_back(quat_from_json(c));
    return phi;
}

HalfLineRule halfline_rule_from_json(const std::string& text) {
    const json j = parse_json(text);
    HalfLineRule rule;
    rule.alpha = j.at("alpha").get<double>();
    rule.nodes = doubles_from_json(j.at("nodes"));
    rule.weights = doubles_from_json(j.at("weights"));
    if (rule.nodes.size() != rule.weights.size())
        throw ParseError("rule JSON: nodes/weights size mismatch");
    return rule;
}

DiskRule disk_rule_from_json(const std::string& text) {
    const json j = parse_json(text);
    const json& u = j.at("unit");
    if (!u.is_array() || u.size() != 3) throw ParseError("disk rule JSON: bad 'unit'");
    DiskRule rule{j.at("alpha").get<double>(),
                  j.at("R").get<double>(),
                  ImaginaryUnit(u[0].get<double>(), u[1].get<double>(), u[2].get<double>()),
                  doubles_from_json(j.at("radial_nodes")),
                  doubles_from_json(j.at("radial_weights")),
                  j.at("angular_count").get<std::size_t>()};
    if (rule.radial_nodes.size() != rule.radial_weights.size())
        throw ParseError("disk rule JSON: nodes/weights size mismatch");
    return rule;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw FileError("error reading file: " + path);
    return buf.str();
}

}  // namespace slicebergman
