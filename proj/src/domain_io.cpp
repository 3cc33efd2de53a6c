#include "slicepl/domain_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slicepl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw InputError("domain spec: " + what); }

double number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
        fail(std::string("expected a number in field \"") + key + "\"");
    }
    return j[key].get<double>();
}

UnitImaginary axis_of(const json& j) {
    if (!j.contains("axis") || !j["axis"].is_array() || j["axis"].size() != 3) {
        fail("profile axis must be [x,y,z]");
    }
    const auto& a = j["axis"];
    for (const auto& c : a) {
        if (!c.is_number()) fail("profile axis components must be numbers");
    }
    return UnitImaginary::normalized(a[0].get<double>(), a[1].get<double>(), a[2].get<double>());
}

std::string profile_label(const json& j) { return j.dump(); }

ScalarProfile profile(const json& j) {
    if (j.is_number()) {
        const double v = j.get<double>();
        return [v](const UnitImaginary&) { return v; };
    }
    if (j.is_string()) {
        if (j.get<std::string>() == "zero") {
            return [](const UnitImaginary&) { return 0.0; };
        }
        fail("unknown profile \"" + j.get<std::string>() + "\"");
    }
    if (!j.is_object() || !j.contains("name") || !j["name"].is_string()) {
        fail("profile must be a number, \"zero\" or an object with a \"name\"");
    }
    const std::string name = j["name"].get<std::string>();
    if (name == "constant") {
        const double v = number(j, "value");
        return [v](const UnitImaginary&) { return v; };
    }
    if (name == "odd_harmonic") {
        const double a = number(j, "amplitude");
        const UnitImaginary axis = axis_of(j);
        return [a, axis](const UnitImaginary& I) { return a * dot(I, axis); };
    }
    if (name == "even_harmonic") {
        const double b = number(j, "base");
        const double a = number(j, "amplitude");
        const UnitImaginary axis = axis_of(j);
        return [a, b, axis](const UnitImaginary& I) {
            const double c = dot(I, axis);
            return b + a * c * c;
        };
    }
    fail("unknown profile \"" + name + "\"");
}

LineProfile line(const json& j) {
    if (j.is_string() && j.get<std::string>() == "real_axis") {
        return [](const UnitImaginary&) { return SliceLine{{0.0, 0.0}, {1.0, 0.0}}; };
    }
    auto pair = [&](const char* key) {
        if (!j.is_object() || !j.contains(key) || !j[key].is_array() || j[key].size() != 2 ||
            !j[key][0].is_number() || !j[key][1].is_number()) {
            fail(std::string("line needs \"") + key + "\": [a,b]");
        }
        return std::complex<double>(j[key][0].get<double>(), j[key][1].get<double>());
    };
    const SliceLine l{pair("point"), pair("direction")};
    return [l](const UnitImaginary&) { return l; };
}

Quaternion quaternion(const json& j) {
    if (j.is_number()) return Quaternion(j.get<double>());
    if (!j.is_array() || j.size() != 4) fail("center must be [w,x,y,z]");
    for (const auto& c : j) {
        if (!c.is_number()) fail("center components must be numbers");
    }
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Domain domain(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail("expected an object with a string \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "cone") return Domain::cone(number(j, "phi"));
    if (type == "ball") {
        if (!j.contains("center")) fail("ball needs a \"center\"");
        return Domain::ball(quaternion(j["center"]), number(j, "radius"));
    }
    if (type == "angular") {
        if (!j.contains("zeta") || !j.contains("phi")) fail("angular needs \"zeta\" and \"phi\"");
        return Domain::angular(profile(j["zeta"]), profile(j["phi"]),
                               "zeta=" + profile_label(j["zeta"]) + ", phi=" + profile_label(j["phi"]));
    }
    if (type == "strip") {
        if (!j.contains("gamma")) fail("strip needs \"gamma\"");
        const json l = j.contains("line") ? j["line"] : json("real_axis");
        return Domain::strip(line(l), profile(j["gamma"]),
                             "line=" + l.dump() + ", gamma=" + profile_label(j["gamma"]));
    }
    if (type == "space") return Domain::whole_space();
    fail("unknown domain type \"" + type + "\"");
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }
}

}  // namespace

Domain parse_domain_json(std::string_view text) { return domain(parse(text)); }

Domain load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open domain spec '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_domain_json(buf.str());
}

ScalarProfile parse_profile_json(std::string_view text) { return profile(parse(text)); }

}  // namespace slicepl
