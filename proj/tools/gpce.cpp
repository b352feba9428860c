// gpce: generalized polynomial chaos expansions for dependent Gaussian
// inputs.  Subcommands: build, stats, sample, validate, gram, hermite.
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpce/scenarios.hpp"
#include "gpce/serialize.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

std::string fmt12(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

struct BuildArgs {
    std::string config_path;
    std::string sigma_path;
    std::string function;
    int order = -1;
    std::string method; // "", "exact", "qmc"
    std::int64_t qmc_size = 0;
    std::int64_t skip = 0;
    std::uint64_t seed = 0;
    std::string out;
};

// --config JSON supplies defaults; explicit flags override
void merge_config(BuildArgs& args) {
    if (args.config_path.empty()) {
        return;
    }
    std::ifstream in(args.config_path);
    if (!in) {
        throw gpce::IoError("cannot open config '" + args.config_path + "'");
    }
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw gpce::SchemaError(std::string("config JSON: ") + e.what());
    }
    if (args.sigma_path.empty() && cfg.contains("sigma")) {
        args.sigma_path = cfg["sigma"].get<std::string>();
    }
    if (args.function.empty() && cfg.contains("function")) {
        args.function = cfg["function"].get<std::string>();
    }
    if (args.order < 0 && cfg.contains("order")) {
        args.order = cfg["order"].get<int>();
    }
    if (args.method.empty() && cfg.contains("method")) {
        args.method = cfg["method"].get<std::string>();
    }
    if (args.qmc_size == 0 && cfg.contains("qmc")) {
        args.qmc_size = cfg["qmc"].get<std::int64_t>();
    }
    if (args.skip == 0 && cfg.contains("skip")) {
        args.skip = cfg["skip"].get<std::int64_t>();
    }
    if (args.seed == 0 && cfg.contains("seed")) {
        args.seed = cfg["seed"].get<std::uint64_t>();
    }
    if (args.out.empty() && cfg.contains("out")) {
        args.out = cfg["out"].get<std::string>();
    }
}

int cmd_build(BuildArgs args) {
    merge_config(args);
    if (args.function.empty()) {
        throw gpce::SchemaError("build needs --function (builtin name or polynomial literal)");
    }
    if (args.order < 0) {
        throw gpce::SchemaError("build needs --order");
    }

    Eigen::MatrixXd covariance;
    std::optional<gpce::OutputFunction> output;
    const bool builtin = args.function.rfind("example", 0) == 0;
    if (builtin) {
        gpce::scenarios::Builtin b = gpce::scenarios::builtin_output(args.function);
        covariance = b.covariance;
        output = std::move(b.output);
    }
    if (!args.sigma_path.empty()) {
        covariance = gpce::read_matrix_file(args.sigma_path);
    } else if (!builtin) {
        throw gpce::SchemaError("a polynomial-literal build needs --sigma");
    }
    gpce::GaussianMeasure measure(covariance);
    if (!output) {
        output = gpce::OutputFunction::from_polynomial(
            gpce::parse_polynomial(args.function, measure.dimension()));
    }

    gpce::RhsMethod method = gpce::RhsMethod::exact;
    if (args.method == "qmc" || (args.method.empty() && !output->exact_integrable())) {
        method = gpce::RhsMethod::qmc;
    } else if (!args.method.empty() && args.method != "exact") {
        throw gpce::SchemaError("--method must be 'exact' or 'qmc'");
    }
    gpce::QmcConfig qmc{args.qmc_size, args.skip, measure.dimension()};
    if (method == gpce::RhsMethod::qmc && qmc.sample_count == 0) {
        qmc.sample_count = 4096;
    }

    const gpce::PceModel model = gpce::build_pce(measure, *output, args.order, method, qmc);
    const gpce::MomentReport report = model.moments();
    std::cout << "N " << model.dimension() << " order " << model.order() << " method "
              << (method == gpce::RhsMethod::exact ? "exact" : "qmc") << "\n";
    std::cout << "mean " << fmt12(report.mean) << "\n";
    std::cout << "variance " << fmt12(report.variance) << "\n";
    if (!args.out.empty()) {
        gpce::save_model(args.out, model);
        std::cout << "model " << args.out << "\n";
    }
    return kExitOk;
}

int cmd_stats(const std::string& model_path, const std::string& format, const std::string& out) {
    const gpce::PceModel model = gpce::load_model(model_path);
    const gpce::MomentReport report = model.moments();
    const std::string text =
        format == "csv" ? gpce::moment_report_csv(report) : gpce::moment_report_json(report) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            throw gpce::IoError("cannot open '" + out + "' for writing");
        }
        f << text;
    }
    return kExitOk;
}

int cmd_sample(const std::string& model_path, std::int64_t n, std::uint64_t seed,
               const std::string& out) {
    const gpce::PceModel model = gpce::load_model(model_path);
    const gpce::SampleSummary summary = gpce::sample_surrogate(model, n, seed);
    std::filesystem::path samples_path(out);
    std::filesystem::path hist_path(out);
    hist_path.replace_extension(".hist.csv");
    {
        std::ofstream f(samples_path);
        if (!f) {
            throw gpce::IoError("cannot open '" + samples_path.string() + "' for writing");
        }
        gpce::write_samples_csv(f, summary.values);
    }
    {
        std::ofstream f(hist_path);
        if (!f) {
            throw gpce::IoError("cannot open '" + hist_path.string() + "' for writing");
        }
        gpce::write_histogram_csv(f, summary.histogram, n);
    }
    std::cout << "samples " << samples_path.string() << "\n";
    std::cout << "histogram " << hist_path.string() << "\n";
    return kExitOk;
}

int cmd_validate(const std::string& suite, const std::string& out) {
    std::vector<gpce::scenarios::CheckResult> checks;
    if (suite == "example1") {
        checks = gpce::scenarios::validate_example1();
    } else if (suite == "example2") {
        checks = gpce::scenarios::validate_example2();
    } else if (suite == "properties") {
        checks = gpce::scenarios::validate_properties();
    } else {
        throw gpce::SchemaError("unknown suite '" + suite +
                                "' (choose example1, example2, or properties)");
    }
    json verdicts = json::array();
    const gpce::scenarios::CheckResult* first_failure = nullptr;
    int failures = 0;
    for (const auto& check : checks) {
        verdicts.push_back({{"name", check.name},
                            {"passed", check.passed},
                            {"expected", check.expected},
                            {"got", check.got},
                            {"tolerance", check.tolerance}});
        if (!check.passed) {
            ++failures;
            if (!first_failure) {
                first_failure = &check;
            }
        }
    }
    json doc = {{"suite", suite},
                {"checks", std::move(verdicts)},
                {"passed", static_cast<int>(checks.size()) - failures},
                {"failed", failures}};
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) {
            throw gpce::IoError("cannot open '" + out + "' for writing");
        }
        f << doc.dump(2) << "\n";
    }
    if (failures > 0) {
        std::cerr << "FAILED " << first_failure->name << ": expected "
                  << fmt12(first_failure->expected) << ", got " << fmt12(first_failure->got)
                  << ", tolerance " << fmt12(first_failure->tolerance) << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_gram(const std::string& sigma_path, int degree, const std::string& out) {
    gpce::GaussianMeasure measure(gpce::read_matrix_file(sigma_path));
    const gpce::GramMatrix gram = gpce::gram_matrix(measure, degree);
    std::ostringstream text;
    for (std::size_t p = 0; p < gram.index_map().size(); ++p) {
        if (p) {
            text << ',';
        }
        text << '"';
        const gpce::MultiIndex& j = gram.index_map()[p];
        for (int i = 0; i < j.size(); ++i) {
            if (i) {
                text << ',';
            }
            text << j[i];
        }
        text << '"';
    }
    text << '\n';
    for (int p = 0; p < gram.order(); ++p) {
        for (int q = 0; q < gram.order(); ++q) {
            if (q) {
                text << ',';
            }
            text << gpce::format_double(gram.entries()(p, q));
        }
        text << '\n';
    }
    if (out.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream f(out);
        if (!f) {
            throw gpce::IoError("cannot open '" + out + "' for writing");
        }
        f << text.str();
    }
    return kExitOk;
}

int cmd_hermite(const std::string& sigma_path, const std::string& index_text,
                const std::string& out) {
    gpce::GaussianMeasure measure(gpce::read_matrix_file(sigma_path));
    std::vector<int> entries;
    std::stringstream ss(index_text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            entries.push_back(std::stoi(cell));
        } catch (const std::exception&) {
            throw gpce::SchemaError("bad --index '" + index_text + "'");
        }
    }
    if (static_cast<int>(entries.size()) != measure.dimension()) {
        throw gpce::DimensionError("--index must have one entry per input dimension");
    }
    const gpce::MultiIndex j(std::move(entries));
    const gpce::SparsePolynomial h = gpce::hermite_polynomial(measure, j);
    const double norm_sq = gpce::norm_sq_h(measure, j);
    const gpce::SparsePolynomial psi = h * (1.0 / std::sqrt(norm_sq));
    json doc = {{"index", index_text},
                {"norm_sq", norm_sq},
                {"h", json::parse(gpce::polynomial_to_json(h))},
                {"psi", json::parse(gpce::polynomial_to_json(psi))}};
    if (out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) {
            throw gpce::IoError("cannot open '" + out + "' for writing");
        }
        f << doc.dump(2) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized polynomial chaos expansions for dependent Gaussian inputs"};
    app.require_subcommand(1);

    BuildArgs build_args;
    CLI::App* build = app.add_subcommand("build", "build an expansion and write a model file");
    build->add_option("--config", build_args.config_path, "JSON config with defaults");
    build->add_option("--sigma", build_args.sigma_path, "covariance file (CSV or JSON)");
    build->add_option("--function", build_args.function,
                      "builtin name (example1_case1..4, example2(t,rho), example3_synthetic) "
                      "or polynomial literal");
    build->add_option("--order", build_args.order, "expansion order m");
    build->add_option("--method", build_args.method, "exact or qmc");
    build->add_option("--qmc", build_args.qmc_size, "QMC sample count");
    build->add_option("--skip", build_args.skip, "leading QMC points to drop");
    build->add_option("--seed", build_args.seed, "seed for sampling-based outputs");
    build->add_option("--out", build_args.out, "model output path");

    std::string model_path, format = "json", out_path;
    CLI::App* stats = app.add_subcommand("stats", "print moments of a model file");
    stats->add_option("model", model_path, "model JSON path")->required();
    stats->add_option("--format", format, "json or csv");
    stats->add_option("--out", out_path, "write the report here instead of stdout");

    std::int64_t sample_n = 0;
    std::uint64_t sample_seed = 0;
    std::string sample_model, sample_out;
    CLI::App* sample = app.add_subcommand("sample", "sample the surrogate");
    sample->add_option("model", sample_model, "model JSON path")->required();
    sample->add_option("--n", sample_n, "sample count")->required();
    sample->add_option("--seed", sample_seed, "random seed");
    sample->add_option("--out", sample_out, "samples CSV path (histogram lands next to it)")
        ->required();

    std::string suite, validate_out;
    CLI::App* validate = app.add_subcommand("validate", "run a reproduction suite");
    validate->add_option("suite", suite, "example1, example2, or properties")->required();
    validate->add_option("--out", validate_out, "write the JSON verdict here");

    std::string gram_sigma, gram_out;
    int gram_order = 0;
    CLI::App* gram = app.add_subcommand("gram", "emit a degree's Gram matrix as CSV");
    gram->add_option("--sigma", gram_sigma, "covariance file (CSV or JSON)")->required();
    gram->add_option("--order", gram_order, "polynomial degree l")->required();
    gram->add_option("--out", gram_out, "CSV output path");

    std::string hermite_sigma, hermite_index, hermite_out;
    CLI::App* hermite = app.add_subcommand("hermite", "print one basis polynomial as JSON");
    hermite->add_option("--sigma", hermite_sigma, "covariance file (CSV or JSON)")->required();
    hermite->add_option("--index", hermite_index, "multi-index, e.g. 1,0,0")->required();
    hermite->add_option("--out", hermite_out, "JSON output path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) {
            return cmd_build(build_args);
        }
        if (stats->parsed()) {
            return cmd_stats(model_path, format, out_path);
        }
        if (sample->parsed()) {
            return cmd_sample(sample_model, sample_n, sample_seed, sample_out);
        }
        if (validate->parsed()) {
            return cmd_validate(suite, validate_out);
        }
        if (gram->parsed()) {
            return cmd_gram(gram_sigma, gram_order, gram_out);
        }
        if (hermite->parsed()) {
            return cmd_hermite(hermite_sigma, hermite_index, hermite_out);
        }
    } catch (const gpce::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const gpce::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
