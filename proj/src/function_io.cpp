#include "slicepl/function_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace slicepl {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw InputError("function spec " + path + ": " + what);
}

double number(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key)) {
        fail(path, "missing field \"" + key + "\"");
    }
    if (!j[key].is_number()) {
        fail(path + "." + key, "expected a number");
    }
    return j[key].get<double>();
}

Quaternion quaternion(const json& j, const std::string& path) {
    if (j.is_number()) {
        return Quaternion(j.get<double>());
    }
    if (!j.is_array() || j.size() != 4) {
        fail(path, "expected [w,x,y,z] or a real number");
    }
    double c[4];
    for (std::size_t m = 0; m < 4; ++m) {
        if (!j[m].is_number()) {
            fail(path, "quaternion components must be numbers");
        }
        c[m] = j[m].get<double>();
    }
    return {c[0], c[1], c[2], c[3]};
}

Function node(const json& j, const std::string& path);

Function child(const json& j, const std::string& key, const std::string& path, bool optional) {
    if (!j.contains(key)) {
        if (optional) {
            return Function::identity();
        }
        fail(path, "missing field \"" + key + "\"");
    }
    return node(j[key], path + "." + key);
}

Function node(const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail(path, "expected an object with a string \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "power_series") {
            if (!j.contains("coeffs") || !j["coeffs"].is_array()) {
                fail(path, "power_series needs a \"coeffs\" array");
            }
            std::vector<Quaternion> coeffs;
            for (std::size_t m = 0; m < j["coeffs"].size(); ++m) {
                coeffs.push_back(quaternion(j["coeffs"][m], path + ".coeffs[" + std::to_string(m) + "]"));
            }
            std::optional<GeometricTail> tail;
            if (j.contains("tail")) {
                const auto& t = j["tail"];
                tail = GeometricTail{number(t, "constant", path + ".tail"), number(t, "ratio", path + ".tail")};
            }
            return Function::power_series(std::move(coeffs), tail);
        }
        if (type == "identity") return Function::identity();
        if (type == "constant") {
            if (!j.contains("c")) fail(path, "missing field \"c\"");
            return Function::constant(quaternion(j["c"], path + ".c"));
        }
        if (type == "real_constant") return Function::real_constant(number(j, "t", path));
        if (type == "sum") {
            if (!j.contains("terms") || !j["terms"].is_array()) {
                fail(path, "sum needs a \"terms\" array");
            }
            std::vector<Function> terms;
            for (std::size_t m = 0; m < j["terms"].size(); ++m) {
                terms.push_back(node(j["terms"][m], path + ".terms[" + std::to_string(m) + "]"));
            }
            return Function::sum(std::move(terms));
        }
        if (type == "exp") return Function::exp(child(j, "arg", path, true));
        if (type == "log") return Function::log(child(j, "arg", path, true));
        if (type == "branch_log") return Function::branch_log(child(j, "arg", path, true));
        if (type == "negate") return Function::negate(child(j, "arg", path, true));
        if (type == "pow") return Function::pow(number(j, "gamma", path), child(j, "arg", path, true));
        if (type == "shift") return Function::shift(number(j, "t", path), child(j, "arg", path, true));
        if (type == "right_scale") {
            if (!j.contains("c")) fail(path, "missing field \"c\"");
            return Function::right_scale(child(j, "arg", path, true), quaternion(j["c"], path + ".c"));
        }
        if (type == "product") {
            return product(child(j, "left", path, false), child(j, "right", path, false));
        }
        if (type == "compose") {
            return compose(child(j, "outer", path, false), child(j, "inner", path, false));
        }
    } catch (const CompositionError& e) {
        // Keep the type so callers can tell rejected constructions apart.
        if (std::string(e.what()).rfind("function spec", 0) == 0) throw;
        throw CompositionError("function spec " + path + ": " + e.what());
    } catch (const InputError& e) {
        if (std::string(e.what()).rfind("function spec", 0) == 0) throw;
        fail(path, e.what());
    }
    fail(path, "unknown node type \"" + type + "\"");
}

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const Function& f) {
    const FunctionNode& n = f.node();
    auto arg = [&](std::size_t m = 0) { return to_json(n.children.at(m)); };
    switch (n.kind) {
        case NodeKind::PowerSeries: {
            json coeffs = json::array();
            for (const auto& c : n.coeffs) coeffs.push_back(quaternion_json(c));
            json out{{"type", "power_series"}, {"coeffs", coeffs}};
            if (n.tail) out["tail"] = {{"constant", n.tail->constant}, {"ratio", n.tail->ratio}};
            return out;
        }
        case NodeKind::Identity: return {{"type", "identity"}};
        case NodeKind::RealConstant: return {{"type", "real_constant"}, {"t", n.scalar}};
        case NodeKind::QuatConstant: return {{"type", "constant"}, {"c", quaternion_json(n.coeffs[0])}};
        case NodeKind::Negate: return {{"type", "negate"}, {"arg", arg()}};
        case NodeKind::ShiftByReal: return {{"type", "shift"}, {"t", n.scalar}, {"arg", arg()}};
        case NodeKind::PrincipalLog: return {{"type", "log"}, {"arg", arg()}};
        case NodeKind::BranchLog: return {{"type", "branch_log"}, {"arg", arg()}};
        case NodeKind::Exp: return {{"type", "exp"}, {"arg", arg()}};
        case NodeKind::Pow: return {{"type", "pow"}, {"gamma", n.scalar}, {"arg", arg()}};
        case NodeKind::Sum: {
            json terms = json::array();
            for (const auto& t : n.children) terms.push_back(to_json(t));
            return {{"type", "sum"}, {"terms", terms}};
        }
        case NodeKind::RightScale:
            return {{"type", "right_scale"}, {"c", quaternion_json(n.coeffs[0])}, {"arg", arg()}};
        case NodeKind::Product: return {{"type", "product"}, {"left", arg(0)}, {"right", arg(1)}};
        case NodeKind::Compose: return {{"type", "compose"}, {"outer", arg(0)}, {"inner", arg(1)}};
        case NodeKind::ConjugateTestOnly: break;
    }
    throw InputError("function_to_json: the conjugation test node has no file representation");
}

}  // namespace

Function parse_function_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("function spec: ") + e.what());
    }
    return node(j, "$");
}

Function load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open function spec '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_function_json(buf.str());
}

std::string function_to_json(const Function& f) { return to_json(f).dump(); }

}  // namespace slicepl
