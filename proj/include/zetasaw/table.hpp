#pragma once

// Deterministic CSV/JSON emission for scan and eval output. CSV carries
// `# key=value` comment headers, a column header row, then data rows; the
// JSON mirror holds the same fields. Numbers are printed with 17 significant
// digits so identical configurations produce byte-identical files.

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zetasaw {

struct run_config {
    int N = 100;
    long terms = 100000;
    double radius = 0.1;
    int samples = 256;
    double tol = 1e-10;
    std::string format = "csv";  // csv | json
    std::string out;             // empty -> stdout
};

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

class table {
public:
    void meta(std::string key, std::string value) {
        meta_.emplace_back(std::move(key), std::move(value));
    }
    void meta(std::string key, double value) { meta(std::move(key), fmt17(value)); }
    void meta(std::string key, long long value) {
        meta(std::move(key), std::to_string(value));
    }

    void columns(std::vector<std::string> names) { columns_ = std::move(names); }

    class row_builder {
    public:
        explicit row_builder(table& t) : t_(t) {}
        row_builder& num(double v) {
            cells_.push_back(fmt17(v));
            return *this;
        }
        row_builder& integer(long long v) {
            cells_.push_back(std::to_string(v));
            return *this;
        }
        row_builder& text(std::string v) {
            cells_.push_back(std::move(v));
            return *this;
        }
        ~row_builder() { t_.rows_.push_back(std::move(cells_)); }

    private:
        table& t_;
        std::vector<std::string> cells_;
    };

    row_builder row() { return row_builder(*this); }

    void write_csv(std::ostream& os) const {
        for (const auto& [k, v] : meta_) os << "# " << k << "=" << v << "\n";
        for (std::size_t i = 0; i < columns_.size(); ++i)
            os << columns_[i] << (i + 1 < columns_.size() ? "," : "");
        os << "\n";
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i)
                os << r[i] << (i + 1 < r.size() ? "," : "");
            os << "\n";
        }
    }

    void write_json(std::ostream& os) const {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : meta_) j["meta"][k] = v;
        j["columns"] = columns_;
        j["rows"] = nlohmann::ordered_json::array();
        for (const auto& r : rows_) j["rows"].push_back(r);
        os << j.dump(2) << "\n";
    }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json")
            write_json(os);
        else
            write_csv(os);
    }

private:
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace zetasaw
