#include "recimap/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace recimap {

using nlohmann::json;

SystemConfig config_from_json(const json& j) {
    SystemConfig cfg;
    cfg.name = j.value("name", std::string("unnamed"));
    cfg.field_d = j.value("field_d", std::int64_t{0});
    if (!j.contains("lengths") || !j.contains("permutation") || !j.contains("involution_s"))
        throw std::invalid_argument("config: requires lengths, permutation, involution_s");
    cfg.lengths = j.at("lengths").get<std::vector<std::string>>();
    cfg.permutation = j.at("permutation").get<std::vector<std::size_t>>();
    cfg.involution_s = j.at("involution_s").get<std::string>();
    if (j.contains("zeta")) {
        std::vector<std::pair<std::string, std::string>> z;
        for (const auto& entry : j.at("zeta")) {
            if (!entry.is_array() || entry.size() != 2)
                throw std::invalid_argument("config: zeta entries must be [re, im] pairs");
            z.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
        }
        cfg.zeta = std::move(z);
    }
    return cfg;
}

json config_to_json(const SystemConfig& cfg) {
    json j;
    j["schema_version"] = 1;
    j["name"] = cfg.name;
    j["field_d"] = cfg.field_d;
    j["lengths"] = cfg.lengths;
    j["permutation"] = cfg.permutation;
    j["involution_s"] = cfg.involution_s;
    if (cfg.zeta) {
        json z = json::array();
        for (const auto& [re, im] : *cfg.zeta) z.push_back(json::array({re, im}));
        j["zeta"] = std::move(z);
    }
    return j;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    return config_from_json(j);
}

namespace {

Scalar parse_in_field(const std::string& text, std::int64_t field_d, const char* what) {
    Scalar v = parse_scalar(text);
    if (v.field_d() != 0 && v.field_d() != field_d)
        throw std::invalid_argument(std::string("config: ") + what + " \"" + text +
                                    "\" lies outside Q(sqrt(" + std::to_string(field_d) + "))");
    return v;
}

}  // namespace

ReciprocalSystem build_system(const SystemConfig& cfg) {
    IETSpec spec;
    spec.permutation = cfg.permutation;
    spec.lengths.reserve(cfg.lengths.size());
    for (const auto& text : cfg.lengths)
        spec.lengths.push_back(parse_in_field(text, cfg.field_d, "length"));
    const Scalar s = parse_in_field(cfg.involution_s, cfg.field_d, "involution_s");
    return make_reciprocal(spec, s);
}

SuspensionData build_suspension(const SystemConfig& cfg) {
    if (!cfg.zeta) throw std::invalid_argument("config: suspension requires a zeta block");
    SuspensionData data;
    data.iet.permutation = cfg.permutation;
    for (const auto& text : cfg.lengths)
        data.iet.lengths.push_back(parse_in_field(text, cfg.field_d, "length"));
    for (const auto& [re, im] : *cfg.zeta)
        data.zeta.emplace_back(parse_in_field(re, cfg.field_d, "zeta re"),
                               parse_in_field(im, cfg.field_d, "zeta im"));
    return data;
}

}  // namespace recimap
