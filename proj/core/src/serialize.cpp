#include "gpce/serialize.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gpce/errors.hpp"

namespace gpce {

using json = nlohmann::ordered_json;

std::string format_double(double value) {
    char buf[32];
    // %.17g always round-trips; prefer the shorter %.15g / %.16g when exact
    for (int prec : {15, 16, 17}) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
        if (std::strtod(buf, nullptr) == value) {
            break;
        }
    }
    return buf;
}

Eigen::MatrixXd read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        int col = 0;
        while (std::getline(ss, cell, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                const double v = std::stod(cell, &used);
                while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) {
                    ++used;
                }
                if (used != cell.size()) {
                    throw std::invalid_argument(cell);
                }
                row.push_back(v);
            } catch (const std::exception&) {
                throw SchemaError("covariance CSV: bad number at row " + std::to_string(line_no) +
                                  ", column " + std::to_string(col));
            }
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw SchemaError("covariance CSV: row " + std::to_string(line_no) + " has " +
                              std::to_string(row.size()) + " columns, expected " +
                              std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw SchemaError("covariance CSV: no rows");
    }
    Eigen::MatrixXd m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return m;
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) {
                out << ',';
            }
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

namespace {

Eigen::MatrixXd matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw SchemaError("covariance JSON: expected a nonempty nested array");
    }
    const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
    if (cols == 0) {
        throw SchemaError("covariance JSON: rows must be nonempty arrays");
    }
    Eigen::MatrixXd m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != cols) {
            throw SchemaError("covariance JSON: ragged row " + std::to_string(r));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[r][c].is_number()) {
                throw SchemaError("covariance JSON: non-numeric entry at (" + std::to_string(r) +
                                  ", " + std::to_string(c) + ")");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = j[r][c].get<double>();
        }
    }
    return m;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string index_key(const MultiIndex& j) {
    std::string key;
    for (int i = 0; i < j.size(); ++i) {
        if (i) {
            key += ',';
        }
        key += std::to_string(j[i]);
    }
    return key;
}

MultiIndex index_from_key(const std::string& key, int dimension) {
    std::vector<int> entries;
    std::stringstream ss(key);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            entries.push_back(std::stoi(cell));
        } catch (const std::exception&) {
            throw SchemaError("bad multi-index key '" + key + "'");
        }
    }
    if (static_cast<int>(entries.size()) != dimension) {
        throw SchemaError("multi-index key '" + key + "' does not have " +
                          std::to_string(dimension) + " entries");
    }
    return MultiIndex(std::move(entries));
}

json parse_json(std::istream& in, const char* what) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

} // namespace

Eigen::MatrixXd read_matrix_json(std::istream& in) {
    return matrix_from_json(parse_json(in, "covariance JSON"));
}

void write_matrix_json(std::ostream& out, const Eigen::MatrixXd& m) {
    out << matrix_to_json(m).dump(2) << '\n';
}

Eigen::MatrixXd read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return path.extension() == ".json" ? read_matrix_json(in) : read_matrix_csv(in);
}

void write_matrix_file(const std::filesystem::path& path, const Eigen::MatrixXd& m) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    if (path.extension() == ".json") {
        write_matrix_json(out, m);
    } else {
        write_matrix_csv(out, m);
    }
}

std::string polynomial_to_json(const SparsePolynomial& p) {
    json obj = json::object();
    for (const auto& [j, c] : p.terms()) {
        obj[index_key(j)] = c;
    }
    return obj.dump(2);
}

SparsePolynomial polynomial_from_json(const std::string& text, int dimension) {
    std::stringstream ss(text);
    const json obj = parse_json(ss, "polynomial JSON");
    if (!obj.is_object()) {
        throw SchemaError("polynomial JSON: expected an object");
    }
    SparsePolynomial p(dimension);
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_number()) {
            throw SchemaError("polynomial JSON: non-numeric coefficient for '" + key + "'");
        }
        p.set_term(index_from_key(key, dimension), value.get<double>());
    }
    return p;
}

namespace {

// Grammar: polynomial := term (('+'|'-') term)*
//          term := factor ('*' factor)*
//          factor := number | var; var := 'x' digits ('^' digits)?
class PolynomialParser {
public:
    PolynomialParser(const std::string& text, int dimension)
        : text_(text), dimension_(dimension) {}

    SparsePolynomial parse() {
        SparsePolynomial out(dimension_);
        skip_ws();
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1.0 : 1.0;
        }
        while (true) {
            out += term(sign);
            skip_ws();
            if (pos_ >= text_.size()) {
                break;
            }
            const char op = take();
            if (op == '+') {
                sign = 1.0;
            } else if (op == '-') {
                sign = -1.0;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return out;
    }

private:
    SparsePolynomial term(double sign) {
        double coeff = sign;
        std::vector<int> exponents(static_cast<std::size_t>(dimension_), 0);
        bool any = false;
        while (true) {
            skip_ws();
            if (peek() == 'x') {
                take();
                const int var = integer();
                if (var < 1 || var > dimension_) {
                    fail("variable x" + std::to_string(var) + " outside dimension " +
                         std::to_string(dimension_));
                }
                int power = 1;
                if (peek() == '^') {
                    take();
                    power = integer();
                }
                exponents[static_cast<std::size_t>(var - 1)] += power;
            } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
                coeff *= number();
            } else {
                fail("expected a number or a variable");
            }
            any = true;
            skip_ws();
            if (peek() == '*') {
                take();
                continue;
            }
            break;
        }
        if (!any) {
            fail("empty term");
        }
        return SparsePolynomial::monomial(MultiIndex(std::move(exponents)), coeff);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    int integer() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::stoi(text_.substr(start, pos_ - start));
    }
    double number() {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(text_.substr(pos_), &used);
        } catch (const std::exception&) {
            fail("bad number");
        }
        pos_ += used;
        return v;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw SchemaError("polynomial literal: " + message + " at position " +
                          std::to_string(pos_));
    }

    const std::string& text_;
    int dimension_;
    std::size_t pos_ = 0;
};

} // namespace

SparsePolynomial parse_polynomial(const std::string& text, int dimension) {
    return PolynomialParser(text, dimension).parse();
}

void save_model(const std::filesystem::path& path, const PceModel& model) {
    json doc;
    doc["N"] = model.dimension();
    doc["m"] = model.order();
    doc["covariance"] = matrix_to_json(model.measure().covariance());
    json coeffs = json::array();
    std::size_t offset = 0;
    for (int l = 0; l <= model.order(); ++l) {
        for (const auto& entry : model.basis().degree(l)) {
            coeffs.push_back({{"index", index_key(entry.index)},
                              {"value", model.coefficients()[offset++]}});
        }
    }
    doc["coefficients"] = std::move(coeffs);
    doc["build"] = {{"method", model.meta().method == RhsMethod::exact ? "exact" : "qmc"},
                    {"qmc_size", model.meta().qmc_size},
                    {"residuals", model.meta().residuals}};
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << doc.dump(2) << '\n';
}

PceModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    const json doc = parse_json(in, "model JSON");
    for (const char* field : {"N", "m", "covariance", "coefficients", "build"}) {
        if (!doc.contains(field)) {
            throw SchemaError(std::string("model JSON: missing field '") + field + "'");
        }
    }
    const int n = doc["N"].get<int>();
    const int m = doc["m"].get<int>();
    if (n < 1 || m < 0) {
        throw SchemaError("model JSON: invalid N or m");
    }
    GaussianMeasure measure(matrix_from_json(doc["covariance"]));
    if (measure.dimension() != n) {
        throw SchemaError("model JSON: covariance size does not match N");
    }
    const auto& coeffs = doc["coefficients"];
    if (!coeffs.is_array() ||
        static_cast<std::int64_t>(coeffs.size()) != count_total(n, m)) {
        throw SchemaError("model JSON: expected " + std::to_string(count_total(n, m)) +
                          " coefficients");
    }
    HermiteBasis basis(measure, m);
    std::vector<double> values;
    values.reserve(coeffs.size());
    std::size_t pos = 0;
    for (int l = 0; l <= m; ++l) {
        for (const auto& entry : basis.degree(l)) {
            const auto& item = coeffs[pos++];
            if (!item.contains("index") || !item.contains("value")) {
                throw SchemaError("model JSON: coefficient entries need 'index' and 'value'");
            }
            const MultiIndex j = index_from_key(item["index"].get<std::string>(), n);
            if (!(j == entry.index)) {
                throw SchemaError("model JSON: coefficient " + std::to_string(pos - 1) +
                                  " is out of rank order");
            }
            values.push_back(item["value"].get<double>());
        }
    }
    BuildMeta meta;
    const auto& build = doc["build"];
    if (build.contains("method")) {
        meta.method = build["method"] == "qmc" ? RhsMethod::qmc : RhsMethod::exact;
    }
    if (build.contains("qmc_size")) {
        meta.qmc_size = build["qmc_size"].get<std::int64_t>();
    }
    if (build.contains("residuals")) {
        meta.residuals = build["residuals"].get<std::vector<double>>();
    }
    std::vector<GramMatrix> grams;
    grams.reserve(static_cast<std::size_t>(m) + 1);
    for (int l = 0; l <= m; ++l) {
        grams.emplace_back(measure, l);
    }
    return PceModel(measure, std::move(basis), std::move(values), std::move(grams),
                    std::move(meta));
}

std::string moment_report_json(const MomentReport& report) {
    json doc;
    doc["mean"] = report.mean;
    doc["variance"] = report.variance;
    doc["degree_contributions"] = report.degree_contributions;
    return doc.dump(2);
}

std::string moment_report_csv(const MomentReport& report) {
    std::string out = "mean," + format_double(report.mean) + "\n";
    out += "variance," + format_double(report.variance) + "\n";
    for (std::size_t l = 0; l < report.degree_contributions.size(); ++l) {
        out += "degree_" + std::to_string(l + 1) + "," +
               format_double(report.degree_contributions[l]) + "\n";
    }
    return out;
}

void write_samples_csv(std::ostream& out, const std::vector<double>& values) {
    for (double v : values) {
        out << format_double(v) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const Histogram& hist, std::int64_t sample_count) {
    out << "bin_left,bin_right,count,density\n";
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        const double left = hist.edges[b];
        const double right = hist.edges[b + 1];
        const double width = right - left;
        const double density =
            width > 0.0 ? static_cast<double>(hist.counts[b]) /
                              (static_cast<double>(sample_count) * width)
                        : 0.0;
        out << format_double(left) << ',' << format_double(right) << ',' << hist.counts[b] << ','
            << format_double(density) << '\n';
    }
}

} // namespace gpce
