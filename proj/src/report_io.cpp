#include "skillcoach/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "skillcoach/errors.hpp"

namespace skillcoach::report_io {

std::string fmt_sig4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string fmt_pct1(double fraction) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.1f", fraction * 100.0);
    return buf;
}

namespace {

std::string fmt_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_summary_csv(std::ostream& out, const std::vector<engine::SummaryRow>& rows,
                       const std::string& run_ref) {
    out << "# run=" << run_ref << "\n";
    out << "policy,skill_count,mean_actions,std_actions,success_rate_pct\n";
    for (const auto& row : rows) {
        out << curriculum::to_string(row.policy) << ',' << row.skill_count << ','
            << fmt_sig4(row.mean_actions) << ','
            << (row.degenerate ? std::string("undefined") : fmt_sig4(row.std_actions)) << ','
            << fmt_pct1(row.success_rate) << "\n";
    }
}

void write_raw_csv(std::ostream& out, const std::vector<engine::RawRecord>& rows,
                   const std::string& run_ref) {
    out << "# run=" << run_ref << "\n";
    out << "policy,skill_count,learner_id,actions_used,success\n";
    for (const auto& row : rows) {
        out << curriculum::to_string(row.policy) << ',' << row.skill_count << ','
            << row.learner_id << ',' << row.actions_used << ',' << (row.success ? 1 : 0) << "\n";
    }
}

void write_significance_csv(std::ostream& out, const std::vector<engine::SignificanceRow>& rows,
                            const std::string& run_ref) {
    out << "# run=" << run_ref << "\n";
    out << "skill_count,comparison,t,p,cohens_d\n";
    for (const auto& row : rows) {
        out << row.skill_count << ',' << row.comparison << ',' << fmt_sig6(row.t) << ','
            << fmt_sig6(row.p) << ',' << fmt_sig6(row.cohens_d) << "\n";
    }
}

std::string summary_csv(const std::vector<engine::SummaryRow>& rows, const std::string& run_ref) {
    std::ostringstream out;
    write_summary_csv(out, rows, run_ref);
    return out.str();
}

std::string raw_csv(const std::vector<engine::RawRecord>& rows, const std::string& run_ref) {
    std::ostringstream out;
    write_raw_csv(out, rows, run_ref);
    return out.str();
}

std::string significance_csv(const std::vector<engine::SignificanceRow>& rows,
                             const std::string& run_ref) {
    std::ostringstream out;
    write_significance_csv(out, rows, run_ref);
    return out.str();
}

std::vector<engine::RawRecord> read_raw_csv(std::istream& in) {
    std::vector<engine::RawRecord> records;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "policy,skill_count,learner_id,actions_used,success")
                throw ValidationError("raw records: unexpected header at line " +
                                      std::to_string(line_no));
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw ValidationError("raw records: truncated row at line " + std::to_string(line_no));
        engine::RawRecord rec;
        try {
            rec.policy = curriculum::policy_kind_from_string(fields[0]);
            rec.skill_count = std::stoi(fields[1]);
            rec.learner_id = std::stoi(fields[2]);
            rec.actions_used = std::stoi(fields[3]);
            const int success = std::stoi(fields[4]);
            if (success != 0 && success != 1) throw std::invalid_argument("success");
            rec.success = success == 1;
        } catch (const std::exception&) {
            throw ValidationError("raw records: malformed row at line " + std::to_string(line_no));
        }
        records.push_back(rec);
    }
    if (!header_seen) throw ValidationError("raw records: missing header");
    return records;
}

std::vector<engine::RawRecord> load_raw_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open raw records file: " + path.string());
    return read_raw_csv(in);
}

}  // namespace skillcoach::report_io
