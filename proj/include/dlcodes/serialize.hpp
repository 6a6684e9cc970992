#pragma once

#include <json.hpp>

#include "ball_bounds.hpp"
#include "balls.hpp"
#include "certificates.hpp"
#include "channel.hpp"
#include "code_bounds.hpp"
#include "conflict_graph.hpp"
#include "sequence.hpp"

namespace dlcodes {

using json = nlohmann::json;

inline json to_json(const ChannelSpec& c) {
    json j;
    j["kind"] = to_string(c.kind);
    switch (c.kind) {
        case ChannelKind::DelTrans:
            j["s"] = c.s;
            j["t"] = c.t;
            break;
        case ChannelKind::Asymmetric:
            j["s"] = c.s;
            j["t_plus"] = c.t_plus;
            j["t_minus"] = c.t_minus;
            break;
        case ChannelKind::Block:
            j["s"] = c.s;
            j["t"] = c.t;
            j["b"] = c.b;
            break;
        case ChannelKind::Damerau:
            j["s_del"] = c.s_del;
            j["s_ins"] = c.s_ins;
            j["t_trans"] = c.t_trans;
            j["t_sub"] = c.t_sub;
            break;
    }
    return j;
}

inline json to_json(const Ball& b) {
    json j;
    j["channel"] = to_json(b.channel);
    j["center"] = format_sequence(b.center);
    j["size"] = b.size();
    json members = json::array();
    for (const auto& y : b.members) members.push_back(format_sequence(y));
    j["members"] = std::move(members);
    return j;
}

inline json to_json(const RunStats& st) {
    json j;
    j["n"] = st.n;
    j["r"] = st.r;
    j["r1_prime"] = st.r1_prime;
    j["r1_dprime"] = st.r1_dprime;
    j["r1_side"] = st.r1_side;
    j["r_ge2"] = st.r_ge2;
    j["r1_pair"] = st.r1_pair;
    j["r2_in"] = st.r2_in;
    j["r1_rot"] = st.r1_rot;
    return j;
}

inline json to_json(const SizeBounds& b) {
    json j;
    j["upper"] = to_string(b.upper);
    j["lower"] = b.lower_applicable ? json(to_string(b.lower)) : json(nullptr);
    j["lower_crude"] =
        b.lower_crude_applicable ? json(to_string(b.lower_crude)) : json(nullptr);
    j["bound_applicable"] = b.lower_applicable || b.lower_crude_applicable;
    if (b.has_exact) j["exact"] = to_string(b.exact);
    return j;
}

inline json to_json(const BoundValue& b) {
    json j;
    j["coefficient"] = to_string(b.coefficient);
    j["denominator"] = to_string(b.denominator);
    j["base"] = b.base;
    j["exponent"] = b.exponent;
    j["bound"] = to_string(b.value());
    j["valid"] = b.valid;
    j["threshold_n"] = b.threshold;
    return j;
}

inline json to_json(const RedundancyBits& r) {
    json j;
    j["lo_bits"] = r.lo;
    j["hi_bits"] = r.hi;
    return j;
}

inline json to_json(const CertificateReport& r) {
    json j;
    j["channel"] = to_json(r.channel);
    j["n"] = r.n;
    j["q"] = r.q;
    j["scheme"] = to_string(r.kind);
    j["min_cover"] = to_string(r.min_cover);
    j["total_weight"] = to_string(r.total);
    j["feasible"] = r.feasible;
    j["centers_checked"] = r.centers_checked;
    j["witness"] = r.witness ? json(format_sequence(*r.witness)) : json(nullptr);
    return j;
}

inline json to_json(const Code& c) {
    json j;
    j["channel"] = to_json(c.channel);
    j["n"] = c.n;
    j["q"] = c.q;
    j["size"] = c.size();
    json words = json::array();
    for (const auto& x : c.codewords) words.push_back(format_sequence(x));
    j["codewords"] = std::move(words);
    return j;
}

inline json to_json(const SearchResult& r) {
    json j = to_json(r.code);
    j["optimal"] = r.optimal;
    return j;
}

inline json to_json(const VerifyResult& r) {
    json j;
    j["valid"] = r.valid;
    if (!r.valid) {
        j["first"] = format_sequence(*r.first);
        j["second"] = format_sequence(*r.second);
        j["common"] = format_sequence(*r.common);
    }
    return j;
}

} // namespace dlcodes
