#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

#include "gpce/pce.hpp"

namespace gpce {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

// Covariance matrices: CSV is one row per line, comma-separated, no header;
// JSON is a nested array, row-major.  Writers emit full 17-digit precision so
// a write/read round trip reproduces every bit.
Eigen::MatrixXd read_matrix_csv(std::istream& in);
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix_json(std::istream& in);
void write_matrix_json(std::ostream& out, const Eigen::MatrixXd& m);

/// Dispatch on the file extension (".json" vs anything else = CSV).
Eigen::MatrixXd read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Eigen::MatrixXd& m);

// Polynomials: a JSON object mapping "j1,j2,...,jN" to the coefficient.
std::string polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const std::string& text, int dimension);

/// Parse a polynomial literal such as "12 + 4*x1 - 2*x2^2 + x1*x3".
SparsePolynomial parse_polynomial(const std::string& text, int dimension);

// Model files: {"N", "m", "covariance", "coefficients": [{"index", "value"}],
// "build": {"method", "qmc_size", "residuals"}}.
void save_model(const std::filesystem::path& path, const PceModel& model);
PceModel load_model(const std::filesystem::path& path);

std::string moment_report_json(const MomentReport& report);
std::string moment_report_csv(const MomentReport& report);

void write_samples_csv(std::ostream& out, const std::vector<double>& values);
void write_histogram_csv(std::ostream& out, const Histogram& hist, std::int64_t sample_count);

} // namespace gpce
