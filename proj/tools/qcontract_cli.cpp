// qcontract_cli.cpp — command-line front end over the qcontract C API.
// Commands: contraction | mixing | correlation | verify. Reports are JSON on
// stdout (or -o file); a human-readable table goes to stderr on a terminal.
// Exit codes: 0 ok, 1 parse error, 2 precondition failure, 3 numeric failure.

#include "qcontract.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

using nlohmann::json;

int exit_code(qc_status status) { return static_cast<int>(status); }

[[noreturn]] void die(qc_status status, const std::string& context) {
    std::cerr << "qcontract: " << context << ": " << qc_last_error() << "\n";
    std::exit(exit_code(status));
}

void require_ok(qc_status status, const std::string& context) {
    if (status != QC_OK) die(status, context);
}

struct MatrixDeleter {
    void operator()(qc_matrix* m) const { qc_matrix_free(m); }
};
struct ChannelDeleter {
    void operator()(qc_channel* e) const { qc_channel_free(e); }
};
using MatrixPtr = std::unique_ptr<qc_matrix, MatrixDeleter>;
using ChannelPtr = std::unique_ptr<qc_channel, ChannelDeleter>;

MatrixPtr load_matrix(const std::string& path) {
    qc_matrix* raw = nullptr;
    require_ok(qc_matrix_from_json_file(path.c_str(), &raw), "reading '" + path + "'");
    return MatrixPtr(raw);
}

ChannelPtr load_channel(const std::string& path) {
    qc_channel* raw = nullptr;
    require_ok(qc_channel_from_json_file(path.c_str(), &raw), "reading '" + path + "'");
    return ChannelPtr(raw);
}

std::string take_string(char* owned) {
    std::string out = owned == nullptr ? "" : owned;
    qc_string_free(owned);
    return out;
}

void apply_tolerance_overrides(const std::vector<std::string>& overrides) {
    for (const std::string& entry : overrides) {
        const size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            std::cerr << "qcontract: --tol-override expects key=value, got '" << entry << "'\n";
            std::exit(1);
        }
        const std::string key = entry.substr(0, eq);
        double value = 0.0;
        try {
            value = std::stod(entry.substr(eq + 1));
        } catch (const std::exception&) {
            std::cerr << "qcontract: bad tolerance value in '" << entry << "'\n";
            std::exit(1);
        }
        require_ok(qc_set_tolerance(key.c_str(), value), "--tol-override " + entry);
    }
}

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump();
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "qcontract: cannot write '" << out_path << "'\n";
            std::exit(1);
        }
        out << text << "\n";
    }
}

bool stderr_is_terminal() { return isatty(fileno(stderr)) != 0; }

int cmd_contraction(const std::string& channel_path, const std::string& state_path, std::vector<std::string> fs,
                    const std::string& out_path) {
    if (fs.empty()) fs = {"am", "gm", "hm", "lm"};
    ChannelPtr channel = load_channel(channel_path);
    MatrixPtr state = load_matrix(state_path);

    json reports = json::array();
    for (const std::string& f : fs) {
        char* text = nullptr;
        require_ok(qc_contraction_report(f.c_str(), channel.get(), state.get(), &text), "contraction --f " + f);
        reports.push_back(json::parse(take_string(text)));
    }
    if (stderr_is_terminal()) {
        std::cerr << "f          eta            lambda1        onb_condition  imag_residual\n";
        for (const json& r : reports)
            std::fprintf(stderr, "%-10s %-14.10g %-14.10g %-14.4g %-14.4g\n", r["f"].get<std::string>().c_str(),
                         r["eta"].get<double>(), r["lambda1"].get<double>(), r["onb_condition"].get<double>(),
                         r["imag_residual"].get<double>());
    }
    emit(reports.size() == 1 ? reports[0] : reports, out_path);
    return 0;
}

int cmd_mixing(const std::string& channel_path, double delta, const std::string& metric, std::vector<std::string> fs,
               const std::string& out_path) {
    if (fs.empty()) fs = metric == "relative_entropy" ? std::vector<std::string>{"gm", "hm", "lm"}
                                                      : std::vector<std::string>{"am", "gm", "hm", "lm"};
    ChannelPtr channel = load_channel(channel_path);

    qc_matrix* pi_raw = nullptr;
    require_ok(qc_channel_fixed_point(channel.get(), &pi_raw), "locating the fixed point");
    MatrixPtr pi(pi_raw);

    json bounds = json::array();
    bool any_finite = false;
    bool gm_infinite = false;
    long long best = 0;
    for (const std::string& f : fs) {
        double eta = 0.0;
        long long n = 0;
        require_ok(qc_mixing_bound(f.c_str(), channel.get(), pi.get(), delta, metric.c_str(), &eta, &n),
                   "mixing --f " + f);
        json entry{{"f", f}, {"eta", eta}};
        if (n < 0) {
            entry["n"] = nullptr;
            if (f == "gm") gm_infinite = true;
        } else {
            entry["n"] = n;
            best = any_finite ? std::min(best, n) : n;
            any_finite = true;
        }
        bounds.push_back(std::move(entry));
    }

    char* pi_text = nullptr;
    require_ok(qc_matrix_to_json(pi.get(), &pi_text), "serializing the fixed point");
    json report{{"metric", metric}, {"delta", delta}, {"fixed_point", json::parse(take_string(pi_text))},
                {"bounds", bounds}};
    report["min_n"] = any_finite ? json(best) : json(nullptr);
    if (gm_infinite)
        report["note"] = "eta_gm = 1: no contraction-coefficient bound exists for any divergence on this input";

    if (stderr_is_terminal()) {
        std::cerr << "f          eta            n\n";
        for (const json& b : bounds) {
            if (b["n"].is_null())
                std::fprintf(stderr, "%-10s %-14.10g inf\n", b["f"].get<std::string>().c_str(),
                             b["eta"].get<double>());
            else
                std::fprintf(stderr, "%-10s %-14.10g %lld\n", b["f"].get<std::string>().c_str(),
                             b["eta"].get<double>(), b["n"].get<long long>());
        }
    }
    emit(report, out_path);
    return 0;
}

int cmd_correlation(const std::string& state_path, const std::vector<std::string>& fs, const std::vector<double>& ks,
                    const std::string& dims, bool with_spectrum, const std::string& out_path) {
    // classical tables short-circuit to the classical coefficient
    {
        std::ifstream probe(state_path, std::ios::binary);
        if (!probe) {
            std::cerr << "qcontract: cannot open '" << state_path << "'\n";
            return 1;
        }
        std::string text((std::istreambuf_iterator<char>(probe)), std::istreambuf_iterator<char>());
        json parsed = json::parse(text, nullptr, false);
        if (!parsed.is_discarded() && parsed.is_object() && parsed.contains("p")) {
            double mu = 0.0;
            require_ok(qc_classical_mu_from_table_json(text.c_str(), &mu), "classical table");
            json report{{"f", "classical"}, {"mu", mu}};
            if (stderr_is_terminal()) std::fprintf(stderr, "classical mu = %.10g\n", mu);
            emit(report, out_path);
            return 0;
        }
    }

    size_t dim_a = 0, dim_b = 0;
    if (std::sscanf(dims.c_str(), "%zu,%zu", &dim_a, &dim_b) != 2 || dim_a == 0 || dim_b == 0) {
        std::cerr << "qcontract: --dims expects dA,dB\n";
        return 1;
    }
    MatrixPtr state = load_matrix(state_path);
    if (qc_matrix_rows(state.get()) != dim_a * dim_b) {
        std::cerr << "qcontract: --dims " << dim_a << "," << dim_b << " does not factor a "
                  << qc_matrix_rows(state.get()) << "-dimensional state\n";
        return 2;
    }

    std::vector<std::string> f_list = fs;
    if (f_list.empty() && ks.empty()) f_list = {"gm"};

    json reports = json::array();
    for (const std::string& f : f_list) {
        char* text = nullptr;
        require_ok(qc_correlation_report_f(f.c_str(), state.get(), dim_a, dim_b, with_spectrum ? 1 : 0, &text),
                   "correlation --f " + f);
        reports.push_back(json::parse(take_string(text)));
    }
    for (double k : ks) {
        char* text = nullptr;
        require_ok(qc_correlation_report_k(k, state.get(), dim_a, dim_b, &text),
                   "correlation --k " + std::to_string(k));
        reports.push_back(json::parse(take_string(text)));
    }
    if (stderr_is_terminal()) {
        std::cerr << "f/k        mu             lambda1\n";
        for (const json& r : reports)
            std::fprintf(stderr, "%-10s %-14.10g %-14.10g\n", r["f"].get<std::string>().c_str(),
                         r["mu"].get<double>(), r["lambda1"].get<double>());
    }
    emit(reports.size() == 1 ? reports[0] : reports, out_path);
    return 0;
}

int cmd_verify(const std::string& suite, uint64_t seed, int trials) {
    char* text = nullptr;
    require_ok(qc_verify_suite(suite.c_str(), seed, trials, &text), "verify " + suite);
    const std::string summary = take_string(text);
    std::cout << summary << "\n";
    const json parsed = json::parse(summary);
    return parsed["passed"].get<bool>() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator-monotone contraction and correlation coefficients"};
    app.require_subcommand(1);
    app.fallthrough(); // parent options may appear after the subcommand
    std::vector<std::string> tol_overrides;
    app.add_option("--tol-override", tol_overrides, "tolerance override key=value")->take_all();

    std::string channel_path, state_path, out_path, metric = "trace_distance", dims, suite;
    std::vector<std::string> fs;
    std::vector<double> ks;
    double delta = 0.0;
    bool with_spectrum = false;
    uint64_t seed = 1;
    int trials = 50;

    CLI::App* contraction = app.add_subcommand("contraction", "contraction coefficient of a channel at a state");
    contraction->add_option("channel", channel_path, "channel JSON file")->required();
    contraction->add_option("state", state_path, "state JSON file")->required();
    contraction->add_option("--f", fs, "monotone function (am|gm|hm|lm|power:<k>), repeatable");
    contraction->add_option("-o,--output", out_path, "write the report here instead of stdout");

    CLI::App* mixing = app.add_subcommand("mixing", "certified mixing-time bounds for a channel");
    mixing->add_option("channel", channel_path, "channel JSON file")->required();
    mixing->add_option("--delta", delta, "target accuracy")->required();
    mixing->add_option("--metric", metric, "trace_distance|relative_entropy")
        ->check(CLI::IsMember({"trace_distance", "relative_entropy"}));
    mixing->add_option("--f", fs, "monotone functions to scan, repeatable");
    mixing->add_option("-o,--output", out_path, "write the report here instead of stdout");

    CLI::App* correlation = app.add_subcommand("correlation", "maximal correlation coefficients of a joint state");
    correlation->add_option("state", state_path, "state JSON file, or a classical table {\"p\": [[..]]}")->required();
    correlation->add_option("--f", fs, "monotone function, repeatable");
    correlation->add_option("--k", ks, "power-function exponent in [0,1], repeatable");
    correlation->add_option("--dims", dims, "subsystem dimensions dA,dB");
    correlation->add_flag("--spectrum", with_spectrum, "include the full GM Schmidt spectrum");
    correlation->add_option("-o,--output", out_path, "write the report here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a randomized property suite");
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--trials", trials, "number of trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    apply_tolerance_overrides(tol_overrides);

    if (contraction->parsed()) return cmd_contraction(channel_path, state_path, fs, out_path);
    if (mixing->parsed()) return cmd_mixing(channel_path, delta, metric, fs, out_path);
    if (correlation->parsed()) return cmd_correlation(state_path, fs, ks, dims, with_spectrum, out_path);
    if (verify->parsed()) return cmd_verify(suite, seed, trials);
    return 1;
}
