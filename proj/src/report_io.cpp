#include "hsholevo/report_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace hsholevo {

namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson config_json(const RunConfig& config) {
    OrderedJson j;
    j["seed"] = config.seed;
    j["trials"] = config.trials;
    j["dims_p"] = config.dims_p;
    j["dims_q"] = config.dims_q;
    j["mode"] = to_string(config.mode);
    j["tol_ineq"] = config.tol_ineq;
    j["threads"] = config.threads;
    j["inject_violation"] = config.inject_violation;
    return j;
}

OrderedJson matrix_json(const ComplexMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

OrderedJson payload_value_json(const PayloadValue& value) {
    return std::visit(
        [](const auto& v) -> OrderedJson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return v;
            } else if constexpr (std::is_same_v<T, std::vector<double>>) {
                return v;
            } else if constexpr (std::is_same_v<T, ComplexMatrix>) {
                return matrix_json(v);
            } else {
                OrderedJson arr = OrderedJson::array();
                for (const auto& m : v) {
                    arr.push_back(matrix_json(m));
                }
                return arr;
            }
        },
        value);
}

OrderedJson margin_json(const NamedMargin& named) {
    OrderedJson j;
    j["name"] = named.name;
    j["class"] = to_string(named.klass);
    j["lhs"] = named.margin.lhs;
    j["rhs"] = named.margin.rhs;
    j["margin"] = named.margin.margin;
    j["satisfied"] = named.margin.satisfied;
    return j;
}

OrderedJson counterexample_json(const TrialRecord& record) {
    OrderedJson j;
    j["trial"] = record.trial_index;
    j["n"] = record.n;
    j["q"] = record.q;
    j["blocks"] = record.blocks;
    j["mode"] = to_string(record.mode);
    OrderedJson margins = OrderedJson::array();
    for (const auto& named : record.margins) {
        margins.push_back(margin_json(named));
    }
    j["margins"] = std::move(margins);
    OrderedJson payload;
    if (record.counterexample.has_value()) {
        for (const auto& [key, value] : *record.counterexample) {
            payload[key] = payload_value_json(value);
        }
    }
    j["payload"] = std::move(payload);
    return j;
}

void write_margin_row(std::ostream& out, const std::string& check,
                      const TrialRecord& record, const NamedMargin& named) {
    out << csv_escape(check) << ',' << record.trial_index << ',' << record.n
        << ',' << record.q << ',' << record.blocks << ','
        << csv_escape(to_string(record.mode)) << ',' << csv_escape(named.name)
        << ',' << to_string(named.klass) << ',' << format_double(named.margin.lhs)
        << ',' << format_double(named.margin.rhs) << ','
        << format_double(named.margin.margin) << ','
        << (named.margin.satisfied ? '1' : '0') << '\n';
}

} // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string csv_escape(const std::string& field) {
    const bool needs_quotes =
        field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

void write_verification_csv(std::ostream& out,
                            const VerificationReport& report) {
    out << "check,trial,n,q,blocks,mode,quantity,class,lhs,rhs,margin,"
           "satisfied\n";
    for (const auto& check : report.checks) {
        for (const auto& record : check.trials) {
            for (const auto& named : record.margins) {
                write_margin_row(out, check.name, record, named);
            }
        }
    }
}

void write_verification_json(std::ostream& out,
                             const VerificationReport& report) {
    OrderedJson j;
    j["schema"] = "hs-holevo-report/1";
    j["version"] = report.version;
    j["config"] = config_json(report.config);

    OrderedJson checks = OrderedJson::array();
    for (const auto& check : report.checks) {
        OrderedJson cj;
        cj["name"] = check.name;
        OrderedJson margins = OrderedJson::array();
        for (const auto& summary : check.margins) {
            OrderedJson mj;
            mj["name"] = summary.name;
            mj["class"] = to_string(summary.klass);
            mj["count"] = summary.count;
            mj["violations"] = summary.violations;
            mj["min_margin"] = summary.min_margin;
            mj["mean_margin"] = summary.mean_margin;
            margins.push_back(std::move(mj));
        }
        cj["margins"] = std::move(margins);
        OrderedJson ces = OrderedJson::array();
        for (std::size_t idx : check.counterexamples) {
            ces.push_back(counterexample_json(check.trials[idx]));
        }
        cj["counterexamples"] = std::move(ces);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);

    OrderedJson summary;
    summary["proven_violations"] = report.violation_count(MarginClass::Proven);
    summary["empirical_violations"] =
        report.violation_count(MarginClass::Empirical);
    summary["identity_violations"] =
        report.violation_count(MarginClass::Identity);
    summary["exit_code"] = report.exit_code();
    j["summary"] = std::move(summary);

    OrderedJson timing;
    timing["wall_seconds"] = report.wall_seconds;
    j["timing"] = std::move(timing);

    out << j.dump(2) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepReport& report) {
    out << "theta,eig_hi,eig_lo,l_rho_q,d_classical,d_quantum,"
           "bound_quarter_sin2,margin_a,margin_b,margin_c,margin_d,"
           "holevo_chi,shannon_mutual\n";
    for (const auto& row : report.rows) {
        out << format_double(row.theta) << ',' << format_double(row.eig_hi)
            << ',' << format_double(row.eig_lo) << ','
            << format_double(row.l_rho_q) << ','
            << format_double(row.d_classical) << ','
            << format_double(row.d_quantum) << ','
            << format_double(row.bound_quarter_sin2) << ','
            << format_double(row.margin_a) << ','
            << format_double(row.margin_b) << ','
            << format_double(row.margin_c) << ','
            << format_double(row.margin_d) << ','
            << format_double(row.holevo_chi_bits) << ','
            << format_double(row.shannon_mutual_bits) << '\n';
    }
}

void write_sweep_json(std::ostream& out, const SweepReport& report) {
    OrderedJson j;
    j["schema"] = "hs-holevo-example/1";
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : report.rows) {
        OrderedJson rj;
        rj["theta"] = row.theta;
        rj["eig_hi"] = row.eig_hi;
        rj["eig_lo"] = row.eig_lo;
        rj["l_rho_q"] = row.l_rho_q;
        rj["d_classical"] = row.d_classical;
        rj["d_quantum"] = row.d_quantum;
        rj["bound_quarter_sin2"] = row.bound_quarter_sin2;
        rj["margin_a"] = row.margin_a;
        rj["margin_b"] = row.margin_b;
        rj["margin_c"] = row.margin_c;
        rj["margin_d"] = row.margin_d;
        rj["holevo_chi"] = row.holevo_chi_bits;
        rj["shannon_mutual"] = row.shannon_mutual_bits;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);

    OrderedJson analytics;
    analytics["max_eigenvalue_dev"] = report.max_eigenvalue_dev;
    analytics["max_entropy_dev"] = report.max_entropy_dev;
    analytics["max_classical_dev"] = report.max_classical_dev;
    analytics["max_quantum_dev"] = report.max_quantum_dev;
    analytics["max_residual_dev"] = report.max_residual_dev;
    analytics["bound_violations"] = report.bound_violations;
    analytics["analytic_ok"] = report.analytic_ok;
    j["analytics"] = std::move(analytics);

    out << j.dump(2) << '\n';
}

void write_compare_csv(std::ostream& out, const CompareReport& report) {
    out << "trial,n,q,blocks,mode,hs_lhs,hs_rhs,hs_margin,hs_satisfied,"
           "shannon_lhs,shannon_rhs,shannon_margin,shannon_satisfied\n";
    const std::string mode = to_string(report.config.mode);
    for (const auto& row : report.rows) {
        out << row.trial << ',' << row.n << ',' << row.q << ',' << row.blocks
            << ',' << csv_escape(mode) << ','
            << format_double(row.hs_scaled_classical) << ','
            << format_double(row.hs_quantum) << ','
            << format_double(row.hs_quantum - row.hs_scaled_classical) << ','
            << (row.hs_satisfied ? '1' : '0') << ','
            << format_double(row.shannon_bits) << ','
            << format_double(row.holevo_bits) << ','
            << format_double(row.holevo_bits - row.shannon_bits) << ','
            << (row.shannon_satisfied ? '1' : '0') << '\n';
    }
}

void write_compare_json(std::ostream& out, const CompareReport& report) {
    OrderedJson j;
    j["schema"] = "hs-holevo-compare/1";
    j["version"] = report.version;
    j["config"] = config_json(report.config);
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : report.rows) {
        OrderedJson rj;
        rj["trial"] = row.trial;
        rj["n"] = row.n;
        rj["q"] = row.q;
        rj["blocks"] = row.blocks;
        rj["hs_lhs"] = row.hs_scaled_classical;
        rj["hs_rhs"] = row.hs_quantum;
        rj["hs_satisfied"] = row.hs_satisfied;
        rj["shannon_lhs"] = row.shannon_bits;
        rj["shannon_rhs"] = row.holevo_bits;
        rj["shannon_satisfied"] = row.shannon_satisfied;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);

    OrderedJson summary;
    summary["hs_violations"] = report.hs_violations;
    summary["shannon_violations"] = report.shannon_violations;
    summary["exit_code"] = report.exit_code();
    j["summary"] = std::move(summary);

    OrderedJson timing;
    timing["wall_seconds"] = report.wall_seconds;
    j["timing"] = std::move(timing);

    out << j.dump(2) << '\n';
}

} // namespace hsholevo
