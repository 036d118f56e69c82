#include "cfcon/serialize.hpp"

#include <cstdio>
#include <cstdlib>

namespace cfcon {

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

double round6(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

nlohmann::json to_json(const CheckReport& report) {
    nlohmann::json j;
    j["check_name"] = report.check_name;
    j["pass"] = report.pass;
    j["applicable"] = report.applicable;
    j["sampled"] = report.sampled;
    j["trials"] = report.trials;
    j["violations"] = report.violations;
    j["witnesses"] = report.witnesses;
    if (!report.detail.empty()) j["detail"] = report.detail;
    return j;
}

nlohmann::json to_json(const CfcCertificate& cert) {
    nlohmann::json j;
    j["status"] = cert.certified() ? "certified" : "refuted";
    if (cert.failing_pair) j["failing_pair"] = {cert.failing_pair->first, cert.failing_pair->second};
    j["witness_count"] = cert.witness_count;
    j["complete_witnesses"] = cert.complete_witnesses;
    nlohmann::json sampled = nlohmann::json::array();
    // The full witness list can be large; a bounded prefix goes into JSON.
    constexpr std::size_t kEmit = 32;
    for (std::size_t i = 0; i < cert.witnesses.size() && i < kEmit; ++i) {
        const Witness& w = cert.witnesses[i];
        sampled.push_back({{"pair", {w.u, w.v}}, {"path", w.path}});
    }
    j["sampled_witnesses"] = std::move(sampled);
    return j;
}

}  // namespace cfcon
