#include "symsep/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace symsep {

using nlohmann::json;

json toJson(const CoordVector& x) {
    json j = json::object();
    for (const auto& [index, value] : x.entries()) j[std::to_string(index)] = value;
    return j;
}

CoordVector coordVectorFromJson(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("vector JSON must be an object");
    CoordVector x;
    for (const auto& [key, value] : j.items()) {
        std::size_t consumed = 0;
        int index = 0;
        try {
            index = std::stoi(key, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("vector JSON: non-numeric index '" + key + "'");
        }
        if (consumed != key.size() || index < 1)
            throw std::invalid_argument("vector JSON: invalid index '" + key + "'");
        if (x.coeff(index) != 0.0)
            throw std::invalid_argument("vector JSON: duplicate index '" + key + "'");
        if (!value.is_number()) throw std::invalid_argument("vector JSON: non-numeric value");
        x.set(index, value.get<double>());
    }
    return x;
}

json toJson(const BiorthogonalSystem& s) {
    json pairs = json::array();
    for (const auto& [x, f] : s.pairs) pairs.push_back({{"x", toJson(x)}, {"f", toJson(f)}});
    return {{"auerbach", s.auerbach}, {"pairs", pairs}};
}

BiorthogonalSystem biorthogonalSystemFromJson(const json& j) {
    BiorthogonalSystem s;
    s.auerbach = j.value("auerbach", false);
    for (const auto& pair : j.at("pairs"))
        s.pairs.emplace_back(coordVectorFromJson(pair.at("x")), coordVectorFromJson(pair.at("f")));
    s.validateBiorthogonality();
    return s;
}

json toJson(const NormDescriptor& d) {
    switch (d.kind()) {
        case NormDescriptor::Kind::Lp: return {{"kind", "lp"}, {"p", d.p()}};
        case NormDescriptor::Kind::Sup: return {{"kind", "sup"}};
        case NormDescriptor::Kind::Tsirelson: return {{"kind", "tsirelson"}};
        case NormDescriptor::Kind::AuerbachRenorm:
            return {{"kind", "auerbach_renorm"},
                    {"base", toJson(d.base())},
                    {"system", toJson(d.system())}};
        case NormDescriptor::Kind::PhiRenorm:
            return {{"kind", "phi_renorm"},
                    {"base", toJson(d.base())},
                    {"system", toJson(d.system())},
                    {"eps", d.eps()}};
        case NormDescriptor::Kind::MaxOf: {
            json parts = json::array();
            for (const auto& part : d.parts()) parts.push_back(toJson(part));
            return {{"kind", "max_of"}, {"parts", parts}};
        }
    }
    throw std::logic_error("toJson: unknown norm kind");
}

NormDescriptor normDescriptorFromJson(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "lp") return NormDescriptor::lp(j.at("p").get<double>());
    if (kind == "sup") return NormDescriptor::sup();
    if (kind == "tsirelson") return NormDescriptor::tsirelson();
    if (kind == "auerbach_renorm")
        return NormDescriptor::auerbachRenorm(normDescriptorFromJson(j.at("base")),
                                              biorthogonalSystemFromJson(j.at("system")));
    if (kind == "phi_renorm")
        return NormDescriptor::phiRenorm(normDescriptorFromJson(j.at("base")),
                                         biorthogonalSystemFromJson(j.at("system")),
                                         j.at("eps").get<double>());
    if (kind == "max_of") {
        std::vector<NormDescriptor> parts;
        for (const auto& part : j.at("parts")) parts.push_back(normDescriptorFromJson(part));
        return NormDescriptor::maxOf(std::move(parts));
    }
    throw std::invalid_argument("unknown norm kind: " + kind);
}

json toJson(const SeparationReport& r) {
    json points = json::array();
    for (const auto& p : r.points) points.push_back(toJson(p));
    return {{"points", points},
            {"norm", toJson(r.norm)},
            {"value", r.value},
            {"witness", {{"i", r.witness.i}, {"j", r.witness.j}, {"sign", r.witness.sign}}},
            {"sphere_residual", r.sphereResidual},
            {"strict_at_1e-12", r.strictAtExactTol},
            {"strict_at_1e-6", r.strictAtSearchTol}};
}

json toJson(const TsirelsonCertificate& c) {
    json intervals = json::array();
    for (const auto& interval : c.partition)
        intervals.push_back({{"first", interval.first}, {"last", interval.last}});
    return {{"value", c.value}, {"partition", intervals}};
}

NormDescriptor parseNormSpec(const std::string& spec) {
    auto loadFile = [](const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open norm file: " + path);
        return json::parse(in);
    };
    if (spec == "sup") return NormDescriptor::sup();
    if (spec == "tsirelson") return NormDescriptor::tsirelson();
    if (spec.rfind("lp:", 0) == 0) return NormDescriptor::lp(std::stod(spec.substr(3)));
    if (spec.rfind("auerbach:", 0) == 0) {
        const json j = loadFile(spec.substr(9));
        return NormDescriptor::auerbachRenorm(normDescriptorFromJson(j.at("base")),
                                              biorthogonalSystemFromJson(j.at("system")));
    }
    if (spec.rfind("phi:", 0) == 0) {
        const std::string rest = spec.substr(4);
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("phi norm spec needs phi:<file>:<eps>");
        const json j = loadFile(rest.substr(0, colon));
        return NormDescriptor::phiRenorm(normDescriptorFromJson(j.at("base")),
                                         biorthogonalSystemFromJson(j.at("system")),
                                         std::stod(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("unknown norm spec: " + spec);
}

}  // namespace symsep
