#include "icsec/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace icsec {

std::string role_string(const BitRole& role) {
    switch (role.kind) {
    case BitRole::Kind::Zero:
        return "0";
    case BitRole::Kind::Message:
        return "m" + std::to_string(role.index);
    case BitRole::Kind::Jam:
        return "j" + std::to_string(role.index);
    }
    throw std::logic_error("unreachable");
}

std::string verdict_string(OptimalityKind kind) {
    switch (kind) {
    case OptimalityKind::OptimalPositive:
        return "OptimalPositive";
    case OptimalityKind::OptimalZero:
        return "OptimalZero";
    case OptimalityKind::Suboptimal:
        return "Suboptimal";
    case OptimalityKind::Unknown:
        return "Unknown";
    }
    throw std::logic_error("unreachable");
}

nlohmann::json to_json(const DetChannelParams& p) {
    return {{"m11", p.m11}, {"m12", p.m12}, {"m21", p.m21}, {"m22", p.m22}, {"q", p.q}};
}

nlohmann::json to_json(const DetRegion& r) {
    return {{"b_R1", r.b_r1},
            {"b_R2", r.b_r2},
            {"b_sum", r.b_sum},
            {"b_2R1_R2", r.b_2r1_r2},
            {"b_2R2_R1", r.b_2r2_r1}};
}

nlohmann::json to_json(const OptimalityVerdict& v) {
    nlohmann::json j{{"kind", verdict_string(v.kind)}};
    if (v.kind == OptimalityKind::OptimalPositive) j["c_sum"] = v.c_sum;
    return j;
}

nlohmann::json to_json(const ExactRatio& r) {
    return {{"numerator", r.numerator}, {"denominator", r.denominator}};
}

nlohmann::json to_json(const AuditReport& r) {
    return {{"leakage_1to2", r.leakage_1to2}, {"leakage_2to1", r.leakage_2to1},
            {"error_1", to_json(r.error_1)},  {"error_2", to_json(r.error_2)},
            {"rate_1", r.rate_1},             {"rate_2", r.rate_2}};
}

nlohmann::json to_json(const OneShotScheme& s) {
    auto layout_json = [](const std::vector<BitRole>& layout) {
        nlohmann::json arr = nlohmann::json::array();
        for (const BitRole& role : layout) arr.push_back(role_string(role));
        return arr;
    };
    auto read_map_json = [](const ReadMap& rm) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ReadStep& step : rm)
            arr.push_back({{"position", step.position},
                           {"message", step.msg_index},
                           {"cancel", step.cancel_indices}});
        return arr;
    };
    return {{"params", to_json(s.params)},
            {"layout1", layout_json(s.layout1)},
            {"layout2", layout_json(s.layout2)},
            {"msg_bits1", s.msg_bits1},
            {"msg_bits2", s.msg_bits2},
            {"jam_bits1", s.jam_bits1},
            {"jam_bits2", s.jam_bits2},
            {"read_map1", read_map_json(s.read_map1)},
            {"read_map2", read_map_json(s.read_map2)}};
}

nlohmann::json to_json(const GwcTinDesign& d) {
    return {{"beta1", d.beta1}, {"beta2", d.beta2}, {"R1", d.r1},
            {"R2", d.r2},       {"Rp1", d.rp1},     {"Rp2", d.rp2}};
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

}  // namespace icsec
