#pragma once

#include <nlohmann/json.hpp>

#include "aqlink/invariants.hpp"
#include "aqlink/polytext.hpp"

namespace aqlink {

using json = nlohmann::json;

inline json witness_json(const Witness& w) {
    return json{{"p", w.p}, {"h", to_text(w.h)}, {"z", w.z}, {"a_x", w.a_x}};
}

inline json report_json(const InvariantReport& r) {
    json j;
    j["input"] = r.input_name;
    j["aq_lower_bound"] = r.aq_lower_bound;
    j["exact"] = r.exact;
    j["certificate"] = to_string(r.certificate);
    json ws = json::array();
    for (auto& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
    if (r.aq_lower_bound > 0) {
        j["delta_hat"] = r.delta_hat;
        j["theta_hat"] = r.theta_hat;
    } else {
        j["delta_hat"] = nullptr;
        j["theta_hat"] = nullptr;
    }
    j["delta_theta_scope"] = "relative to the searched witness set";
    if (r.has_A_upper) j["A_upper"] = r.A_upper; else j["A_upper"] = nullptr;
    j["genus_lower"] = r.genus_lower;
    j["tunnel_lower"] = r.tunnel_lower;
    j["alpha"] = r.alpha;
    j["k"] = r.k;
    j["search"] = json{{"pmax", r.config.pmax}, {"z", 1}};
    return j;
}

inline std::string report_text(const InvariantReport& r) {
    std::string s;
    s += "input            " + r.input_name + "\n";
    s += "aq_lower_bound   " + std::to_string(r.aq_lower_bound) + "\n";
    s += std::string("exact            ") + (r.exact ? "yes" : "no") +
         " (certificate: " + to_string(r.certificate) + ")\n";
    s += "witnesses        ";
    if (r.witnesses.empty()) s += "-";
    for (size_t i = 0; i < r.witnesses.size(); ++i) {
        const Witness& w = r.witnesses[i];
        if (i) s += "; ";
        s += "(p=" + std::to_string(w.p) + ", h=" + to_text(w.h) + ", z=" +
             std::to_string(w.z) + ", a=" + std::to_string(w.a_x) + ")";
    }
    s += "\n";
    if (r.aq_lower_bound > 0) {
        s += "delta_hat        " + std::to_string(r.delta_hat) + "   (searched witness set)\n";
        s += "theta_hat        " + std::to_string(r.theta_hat) + "   (searched witness set)\n";
    } else {
        s += "delta_hat        -\n";
        s += "theta_hat        -\n";
    }
    s += "A_upper          " + (r.has_A_upper ? std::to_string(r.A_upper) : std::string("-")) + "\n";
    s += "genus_lower      " + std::to_string(r.genus_lower) + "\n";
    s += "tunnel_lower     " + std::to_string(r.tunnel_lower) + "\n";
    s += "alpha            " + std::to_string(r.alpha) + "\n";
    s += "k                " + std::to_string(r.k) + "\n";
    s += "search           pmax=" + std::to_string(r.config.pmax) + " z=1\n";
    return s;
}

inline json genus1_json(const Genus1Report& r) {
    json j;
    j["W"] = r.W;
    j["det_K"] = r.det_K;
    j["aq_exact"] = r.aq_exact;
    j["realizing_primes"] = r.realizing_primes;
    return j;
}

inline std::string genus1_text(const Genus1Report& r) {
    std::string s;
    s += "W            " + std::to_string(r.W) + "\n";
    s += "det_K        " + std::to_string(r.det_K) + "\n";
    s += "aq_exact     " + std::to_string(r.aq_exact) + "\n";
    s += "primes       ";
    if (r.realizing_primes.empty()) s += "-";
    for (size_t i = 0; i < r.realizing_primes.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.realizing_primes[i]);
    s += "\n";
    return s;
}

} // namespace aqlink
