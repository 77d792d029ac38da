#include "cimeans/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "cimeans/errors.hpp"

namespace cimeans {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string reports_to_csv(const std::vector<InequalityReport>& reports) {
    std::string out =
        "theorem,n,r,s,alpha,gamma,R,f_label,b_label,lhs,rhs,constant,ratio,verdict\n";
    for (const InequalityReport& rep : reports) {
        const TheoremCase& tc = rep.tc;
        out += theorem_name(tc.theorem);
        out += ',' + std::to_string(tc.n);
        out += ',' + format_number(tc.r);
        out += ',' + format_number(tc.s);
        out += ',' + format_number(tc.alpha);
        out += ',' + format_number(tc.gamma);
        out += ',' + format_number(tc.R);
        out += ',' + tc.f_label;
        out += ',' + tc.b_label;
        out += ',' + format_number(rep.lhs);
        out += ',' + format_number(rep.rhs);
        out += ',' + format_number(rep.constant);
        out += ',' + format_number(rep.ratio);
        out += ',' + verdict_name(rep.verdict);
        out += '\n';
    }
    return out;
}

std::string summary_to_json(const SweepResult& result) {
    nlohmann::ordered_json doc;
    int passes = 0, failures = 0, degenerates = 0, skipped = 0;
    double max_ratio = 0.0;
    for (const TheoremSummary& row : result.summary) {
        passes += row.passes;
        failures += row.failures;
        degenerates += row.degenerates;
        skipped += row.skipped;
        max_ratio = std::max(max_ratio, row.max_ratio);
    }
    doc["cases"] = static_cast<int>(result.reports.size());
    doc["passes"] = passes;
    doc["failures"] = failures;
    doc["degenerates"] = degenerates;
    doc["skipped"] = skipped;
    doc["max_ratio"] = max_ratio;
    doc["theorems"] = nlohmann::ordered_json::array();
    for (const TheoremSummary& row : result.summary) {
        nlohmann::ordered_json t;
        t["theorem"] = row.theorem;
        t["passes"] = row.passes;
        t["failures"] = row.failures;
        t["degenerates"] = row.degenerates;
        t["skipped"] = row.skipped;
        t["max_ratio"] = row.max_ratio;
        doc["theorems"].push_back(std::move(t));
    }
    return doc.dump(2) + "\n";
}

std::string resolve_output_path(const std::string& filename, const std::string& dir_flag) {
    const std::filesystem::path file(filename);
    if (file.is_absolute()) return filename;
    if (!dir_flag.empty()) return (std::filesystem::path(dir_flag) / file).string();
    const char* env = std::getenv("CIMEANS_OUTPUT_DIR");
    if (env != nullptr && env[0] != '\0') return (std::filesystem::path(env) / file).string();
    return filename;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameterError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw InvalidParameterError("failed while writing '" + path + "'");
}

} // namespace cimeans
