#include "combwalk/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace combwalk {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::info: return "info";
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
    }
    return "info";
}

}  // namespace

std::string report_to_csv(const std::vector<ExperimentReport>& reports) {
    std::string out = "# combwalk-csv-v" + std::to_string(kCsvSchemaVersion) + "\n";
    out += kCsvHeader;
    out += "\n";
    char line[256];
    for (const auto& rep : reports) {
        for (const auto& row : rep.rows) {
            std::snprintf(line, sizeof line, "%s,%" PRId64 ",%" PRId64 ",%s",
                          rep.experiment.c_str(), row.checkpoint_n,
                          row.replicate_count, row.statistic.c_str());
            out += line;
            out += ',' + format_double(row.value);
            out += ',' + format_double(row.target);
            out += ',' + format_double(row.tolerance);
            out += ',';
            out += verdict_name(row.verdict);
            out += '\n';
        }
    }
    return out;
}

std::string report_to_json(const std::vector<ExperimentReport>& reports,
                           const std::string& config_canonical,
                           const std::string& claim_tag) {
    nlohmann::ordered_json root;
    root["schema"] = "combwalk-json-v1";
    root["claim"] = claim_tag;
    root["config"] = config_canonical;
    bool all_pass = true;
    nlohmann::ordered_json experiments = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json e;
        e["experiment"] = rep.experiment;
        e["config_hash"] = rep.config_hash;
        e["master_seed"] = rep.master_seed;
        e["wall_time_s"] = rep.wall_time_s;
        nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
        for (const auto& row : rep.rows) {
            if (row.verdict == Verdict::info) continue;
            nlohmann::ordered_json v;
            v["name"] = row.statistic;
            v["checkpoint_n"] = row.checkpoint_n;
            v["value"] = row.value;
            v["target"] = row.target;
            v["tolerance"] = row.tolerance;
            v["pass"] = row.verdict == Verdict::pass;
            verdicts.push_back(std::move(v));
        }
        e["verdicts"] = std::move(verdicts);
        e["all_pass"] = rep.all_pass();
        all_pass = all_pass && rep.all_pass();
        experiments.push_back(std::move(e));
    }
    root["experiments"] = std::move(experiments);
    root["all_pass"] = all_pass;
    return root.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace combwalk
