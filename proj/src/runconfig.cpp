#include "em/runconfig.hpp"

#include <cstdio>

#include "json.hpp"

namespace em {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string run_config_to_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["case"] = c.moment_case;
    j["z"] = c.z;
    j["Q"] = c.Q;
    j["A_exponent"] = c.A_exponent;
    j["split"] = c.split;
    j["weight"] = c.weight;
    j["v_eps"] = c.v_eps;
    j["euler_P"] = c.euler_P;
    j["scan"] = c.scan;
    j["output_path"] = c.output_path;
    j["format"] = c.format;
    j["seed"] = c.seed;
    j["threads"] = c.threads;
    j["report_wallclock"] = c.report_wallclock;
    return j.dump(2);
}

RunConfig run_config_from_json(const std::string& text) {
    json j = json::parse(text);
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    c.moment_case = j.at("case").get<std::string>();
    c.z = j.at("z").get<double>();
    c.Q = j.at("Q").get<double>();
    c.A_exponent = j.at("A_exponent").get<double>();
    c.split = j.at("split").get<bool>();
    c.weight = j.at("weight").get<std::string>();
    c.v_eps = j.at("v_eps").get<double>();
    c.euler_P = j.at("euler_P").get<double>();
    c.scan = j.at("scan").get<int>();
    c.output_path = j.at("output_path").get<std::string>();
    c.format = j.at("format").get<std::string>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.threads = j.at("threads").get<int>();
    c.report_wallclock = j.at("report_wallclock").get<bool>();
    return c;
}

std::string moment_csv_header() {
    return "case,z,Q,A,B,computed_re,computed_im,predicted_main,predicted_secondary,"
           "residual,family_size,wallclock_s";
}

std::string moment_csv_row(const MomentReport& rep, bool with_wallclock) {
    std::string s;
    s += rep.family;
    s += ',' + fmt17(rep.z);
    s += ',' + fmt17(rep.Q);
    s += ',' + fmt17(rep.A);
    s += ',' + fmt17(rep.B);
    s += ',' + fmt17(rep.computed.real());
    s += ',' + fmt17(rep.computed.imag());
    s += ',' + fmt17(rep.predicted_main);
    s += ',' + fmt17(rep.predicted_secondary);
    s += ',' + fmt17(rep.residual);
    s += ',' + std::to_string(rep.family_size);
    s += ',' + fmt17(with_wallclock ? rep.wallclock_s : 0.0);
    return s;
}

std::string moment_json(const std::vector<MomentReport>& reps, bool with_wallclock) {
    json arr = json::array();
    for (const auto& rep : reps) {
        json j;
        j["case"] = rep.family;
        j["z"] = rep.z;
        j["Q"] = rep.Q;
        j["A"] = rep.A;
        j["B"] = rep.B;
        j["computed_re"] = rep.computed.real();
        j["computed_im"] = rep.computed.imag();
        j["predicted_main"] = rep.predicted_main;
        j["predicted_secondary"] = rep.predicted_secondary;
        j["residual"] = rep.residual;
        j["family_size"] = rep.family_size;
        j["wallclock_s"] = with_wallclock ? rep.wallclock_s : 0.0;
        j["weight"] = rep.weight_id;
        j["est_error"] = rep.est_error;
        arr.push_back(j);
    }
    return arr.dump(2);
}

}  // namespace em
