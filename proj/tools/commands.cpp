#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "hermitrig/eval.hpp"
#include "hermitrig/functions.hpp"
#include "hermitrig/hermite.hpp"
#include "hermitrig/io.hpp"
#include "hermitrig/oracle.hpp"

namespace hermitrig::cli {

namespace {

BuildMode resolve_mode(const SampleFile& file, const std::optional<std::string>& override_name) {
    if (override_name.has_value()) {
        return mode_from_name(*override_name);
    }
    return file.has_mode ? file.mode : BuildMode::paper_H_terms;
}

// Largest condition estimate across the 2n per-harmonic systems.
double max_condition_estimate(const HermiteSamples& samples) {
    const MeanReport report = center_rows(samples);
    std::vector<FourierLayer> layers;
    for (int m = 0; m <= samples.p; ++m) {
        layers.push_back(trig_interp_coeffs(report.centered_rows[static_cast<std::size_t>(m)],
                                            samples.grid, m));
    }
    double worst = 0.0;
    for (int k = 1; k <= samples.grid.n; ++k) {
        for (Family family : {Family::cosine, Family::sine}) {
            worst = std::max(worst, condition_estimate(assemble_system(samples.grid, samples.p,
                                                                       k, family, layers)));
        }
    }
    return worst;
}

struct ResidualTable {
    std::vector<double> raw;         // per order
    std::vector<double> normalized;  // raw / max|row| (overall)
};

ResidualTable node_residuals(const HermiteTrigPoly& poly, const HermiteSamples& samples) {
    const std::vector<double> ts = nodes(samples.grid);
    double scale = 0.0;
    for (const std::vector<double>& row : samples.rows) {
        for (double v : row) {
            scale = std::max(scale, std::abs(v));
        }
    }
    const double denom = scale > 0.0 ? scale : 1.0;

    ResidualTable table;
    for (int m = 0; m <= samples.p; ++m) {
        double worst = 0.0;
        for (int j = 0; j < samples.grid.N; ++j) {
            const double got = evaluate(poly, ts[static_cast<std::size_t>(j)], m);
            const double want =
                samples.rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
            worst = std::max(worst, std::abs(got - want));
        }
        table.raw.push_back(worst);
        table.normalized.push_back(worst / denom);
    }
    return table;
}

void print_residual_table(std::ostream& out, const std::string& label,
                          const ResidualTable& table) {
    out << label << "\n";
    out << "  order  max_residual           normalized\n";
    for (std::size_t m = 0; m < table.raw.size(); ++m) {
        out << "  " << std::left << std::setw(6) << m << " " << std::setw(22)
            << format_double(table.raw[m]) << "  " << format_double(table.normalized[m]) << "\n";
    }
}

double max_coeff_gap(const HermiteTrigPoly& a, const HermiteTrigPoly& b) {
    double gap = std::abs(a.const_term - b.const_term);
    auto compare_maps = [&gap](const std::map<int, double>& lhs, const std::map<int, double>& rhs) {
        for (const auto& [omega, value] : lhs) {
            const auto it = rhs.find(omega);
            const double other = (it == rhs.end()) ? 0.0 : it->second;
            gap = std::max(gap, std::abs(value - other));
        }
        for (const auto& [omega, value] : rhs) {
            if (lhs.find(omega) == lhs.end()) {
                gap = std::max(gap, std::abs(value));
            }
        }
    };
    compare_maps(a.cos_coeffs, b.cos_coeffs);
    compare_maps(a.sin_coeffs, b.sin_coeffs);
    const std::size_t terms = std::max(a.mean_terms.size(), b.mean_terms.size());
    for (std::size_t m = 0; m < terms; ++m) {
        const double av = m < a.mean_terms.size() ? a.mean_terms[m] : 0.0;
        const double bv = m < b.mean_terms.size() ? b.mean_terms[m] : 0.0;
        gap = std::max(gap, std::abs(av - bv));
    }
    return gap;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> ns;
    if (text.empty()) {
        return ns;
    }
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(token, &used);
            if (used != token.size() || n < 1) {
                throw std::invalid_argument("bad n");
            }
            ns.push_back(n);
        } catch (const std::exception&) {
            throw io_error("bad n-list entry \"" + token + "\": want positive integers");
        }
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

// Writes `text` to opts-style optional path, or to `fallback` when absent.
int write_or_stream(const std::optional<std::string>& path, const std::string& text,
                    std::ostream& fallback, std::ostream& err) {
    if (!path.has_value()) {
        fallback << text;
        return kExitOk;
    }
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    if (!out) {
        err << "error: cannot open " << *path << " for writing\n";
        return kExitInputError;
    }
    out << text;
    return kExitOk;
}

}  // namespace

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const SampleFile file = read_sample_file(opts.input);
        const BuildMode mode = resolve_mode(file, opts.mode);
        HermiteTrigPoly poly;
        try {
            poly = build_hermite(file.samples, mode);
        } catch (const std::runtime_error& solver_err) {
            err << "error: " << solver_err.what() << "\n";
            return kExitVerifyFailed;
        }
        write_poly_file(poly, mode, opts.output);
        if (opts.verbose) {
            out << "wrote " << opts.output << " (p = " << poly.p << ", N = " << poly.grid.N
                << ", mode = " << mode_name(mode) << ")\n";
            out << "max harmonic-system condition estimate: "
                << format_double(max_condition_estimate(file.samples)) << "\n";
        }
        return kExitOk;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        if (opts.order < 0) {
            err << "error: --order must be >= 0\n";
            return kExitInputError;
        }
        const PolyFile file = read_poly_file(opts.coeffs);
        const std::vector<double> points = parse_points_spec(opts.points);
        const std::vector<double> values = evaluate_many(file.poly, points, opts.order);

        std::ostringstream csv;
        csv << "t,value\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            csv << format_double(points[i]) << "," << format_double(values[i]) << "\n";
        }
        return write_or_stream(opts.output, csv.str(), out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    constexpr double kResidualGate = 1e-7;
    try {
        const SampleFile file = read_sample_file(opts.input);
        const BuildMode mode = resolve_mode(file, opts.mode);

        HermiteTrigPoly fast;
        HermiteTrigPoly reference;
        try {
            fast = build_hermite(file.samples, mode);
            reference = collocation_solve(file.samples, mode);
        } catch (const std::runtime_error& solver_err) {
            err << "error: " << solver_err.what() << "\n";
            return kExitVerifyFailed;
        }

        const ResidualTable fast_table = node_residuals(fast, file.samples);
        const ResidualTable ref_table = node_residuals(reference, file.samples);
        print_residual_table(out, "per-harmonic method", fast_table);
        print_residual_table(out, "collocation reference", ref_table);

        const double gap = max_coeff_gap(fast, reference);
        out << "max coefficient gap (fast vs reference): " << format_double(gap) << "\n";
        if (opts.verbose) {
            out << "max harmonic-system condition estimate: "
                << format_double(max_condition_estimate(file.samples)) << "\n";
        }

        double worst = 0.0;
        for (double v : fast_table.normalized) {
            worst = std::max(worst, v);
        }
        for (double v : ref_table.normalized) {
            worst = std::max(worst, v);
        }
        if (worst > kResidualGate) {
            out << "FAIL: max normalized residual " << format_double(worst) << " exceeds "
                << format_double(kResidualGate) << "\n";
            return kExitVerifyFailed;
        }
        out << "OK: max normalized residual " << format_double(worst) << "\n";
        return kExitOk;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

int cmd_convergence(const ConvergenceOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        const AnalyticFunction* fn = find_function(opts.function);
        if (fn == nullptr) {
            std::string names;
            for (const AnalyticFunction& candidate : builtin_functions()) {
                names += (names.empty() ? "" : ", ") + candidate.name;
            }
            err << "error: unknown function \"" << opts.function << "\" (available: " << names
                << ")\n";
            return kExitInputError;
        }
        if (opts.p < 0 || opts.p > kMaxDerivativeOrder) {
            err << "error: --p must be in [0, " << kMaxDerivativeOrder << "]\n";
            return kExitInputError;
        }
        if (opts.family != 0 && opts.family != 1) {
            err << "error: --grid must be 0 or 1\n";
            return kExitInputError;
        }
        const std::vector<int> ns = parse_n_list(opts.n_list);

        std::ostringstream csv;
        csv << "function,p,family,n,fine_grid_max_error,wall_time_s";
        for (int m = 0; m <= opts.p; ++m) {
            csv << ",node_residual_m" << m;
        }
        csv << "\n";

        constexpr int kFinePoints = 2048;
        for (int n : ns) {
            const GridSpec grid = make_grid(opts.family, n);
            const auto started = std::chrono::steady_clock::now();
            const HermiteSamples samples = sample_function(grid, opts.p, *fn);
            const HermiteTrigPoly poly = build_hermite(samples, BuildMode::paper_H_terms);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - started;

            double fine_error = 0.0;
            for (int i = 0; i < kFinePoints; ++i) {
                const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(kFinePoints);
                fine_error = std::max(fine_error, std::abs(evaluate(poly, t, 0) -
                                                           fn->deriv(t, 0)));
            }
            const ResidualTable table = node_residuals(poly, samples);

            csv << fn->name << "," << opts.p << "," << opts.family << "," << n << ","
                << format_double(fine_error) << "," << format_double(elapsed.count());
            for (double v : table.raw) {
                csv << "," << format_double(v);
            }
            csv << "\n";
        }
        return write_or_stream(opts.output, csv.str(), out, err);
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace hermitrig::cli
