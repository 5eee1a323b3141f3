#include "cli.hpp"

#include "awggn/capacity.hpp"
#include "awggn/secrecy.hpp"
#include "awggn/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace awggn::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_number(const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
    if (used != text.size()) throw UsageError("not a number: '" + text + "'");
    return value;
}

double snap(double x) { return std::round(x * 1e12) / 1e12; }

}  // namespace

Sweep Sweep::parse(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.empty() || parts.size() > 3) throw UsageError("range must look like start:stop[:step], got '" + text + "'");
    Sweep sweep;
    sweep.start = parse_number(parts[0]);
    sweep.stop = parts.size() > 1 ? parse_number(parts[1]) : sweep.start;
    sweep.step = parts.size() > 2 ? std::abs(parse_number(parts[2])) : 1.0;
    if (!std::isfinite(sweep.start) || !std::isfinite(sweep.stop)) throw UsageError("range bounds must be finite");
    if (!(sweep.step > 0.0) || !std::isfinite(sweep.step)) throw UsageError("range step must be positive");
    if (sweep.start > sweep.stop) std::swap(sweep.start, sweep.stop);
    return sweep;
}

std::vector<double> Sweep::values() const {
    const double span = stop - start;
    const auto count = static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
    if (count > 10'000'000) throw UsageError("range has too many points");
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(snap(start + static_cast<double>(i) * step));
    return out;
}

std::string format_value(double value) {
    if (value == 0.0) return "0";  // no "-0"
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

namespace {

struct GlobalOptions {
    SimConfig config;
    std::string units = "bits";
    std::string out = "stdout";
    double quad_rtol = QuadratureSpec{}.relative_tolerance;
    int quad_max_subdivisions = QuadratureSpec{}.max_subdivisions;
};

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void row(std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            if (!first) os_ << ',';
            os_ << c;
            first = false;
        }
        os_ << '\n';
    }

private:
    std::ostream& os_;
};

// ---------------------------------------------------------------------------

void cmd_gap(const std::vector<double>& betas_in, const std::string& range, std::ostream& os) {
    std::vector<double> betas = betas_in;
    if (!range.empty()) {
        const auto swept = Sweep::parse(range).values();
        betas.insert(betas.end(), swept.begin(), swept.end());
    }
    if (betas.empty()) throw UsageError("gap: give at least one shape via --betas or --range");
    for (double b : betas)
        if (!(b > 0.0) || !std::isfinite(b)) throw UsageError("gap: every beta must be positive");
    std::sort(betas.begin(), betas.end());
    CsvWriter csv(os);
    csv.row({"beta", "gap_bits", "gap_nats"});
    for (double b : betas)
        csv.row({format_value(b), format_value(gap(b, Units::bits)), format_value(gap(b, Units::nats))});
}

void cmd_capacity(double beta, const std::string& range, const GlobalOptions& g, std::ostream& os) {
    if (!(beta > 0.0)) throw UsageError("capacity: beta must be positive");
    const auto snr_db = Sweep::parse(range).values();
    const GGNoise noise = GGNoise::with_variance(beta, 1.0);
    CsvWriter csv(os);
    csv.row({"snr_db", "lower", "upper"});
    for (double db : snr_db) {
        const CapacityBounds b = awggn_bounds(ChannelConfig(db_to_linear(db), noise), g.config.units);
        csv.row({format_value(db), format_value(b.lower), format_value(b.upper)});
    }
}

void cmd_ergodic(double beta, double alpha, double mu, const std::string& range, const GlobalOptions& g,
                 std::ostream& os) {
    if (!(beta > 0.0) || !(alpha > 0.0) || !(mu > 0.0))
        throw UsageError("ergodic: beta, alpha and mu must be positive");
    const auto snr_db = Sweep::parse(range).values();
    const AlphaMuFading fading = AlphaMuFading::unit_power(alpha, mu);
    std::vector<CapacityBounds> rows(snr_db.size());
    parallel_for(snr_db.size(), g.config.threads, [&](std::size_t i) {
        rows[i] = ergodic_bounds(db_to_linear(snr_db[i]), fading, beta, g.config.quadrature, g.config.units);
    });
    CsvWriter csv(os);
    csv.row({"snr_db", "lower", "upper"});
    for (std::size_t i = 0; i < rows.size(); ++i)
        csv.row({format_value(snr_db[i]), format_value(rows[i].lower), format_value(rows[i].upper)});
}

void cmd_secrecy(double beta_sd, double beta_se, double snr_se_db, const std::string& range, bool as_printed,
                 const GlobalOptions& g, std::ostream& os, std::ostream& err) {
    if (!(beta_sd > 0.0) || !(beta_se > 0.0)) throw UsageError("secrecy: shapes must be positive");
    const double snr_se = db_to_linear(snr_se_db);
    const auto snr_sd_db = Sweep::parse(range).values();
    CsvWriter csv(os);
    csv.row({"snr_sd_db", "secrecy_rate", "positive"});
    for (double db : snr_sd_db) {
        const SecrecyScenario s{db_to_linear(db), snr_se, beta_sd, beta_se};
        const bool positive = as_printed ? secrecy_positive_as_printed(s) : secrecy_positive(s);
        csv.row({format_value(db), format_value(secrecy_rate_awggn(s, g.config.units)), positive ? "1" : "0"});
    }
    const double threshold = secrecy_threshold(beta_sd, beta_se, snr_se);
    err << "secrecy threshold: snr_sd = " << format_value(threshold) << " linear ("
        << (threshold > 0.0 ? format_value(linear_to_db(threshold)) : std::string("-inf")) << " dB)";
    err << "; condition " << (as_printed ? "as printed (e^{1-1/beta})" : "derived (e^{1-2/beta})") << '\n';
}

bool cmd_verify(const GlobalOptions& g, std::ostream& os) {
    const auto results = run_verification(g.config);
    bool all = true;
    os << std::left << std::setw(6) << "status" << std::setw(36) << "check" << std::setw(18) << "measured"
       << std::setw(18) << "reference" << std::setw(16) << "tolerance" << "std_error\n";
    for (const auto& r : results) {
        all = all && r.passed;
        os << std::left << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(36) << r.name << std::setw(18)
           << format_value(r.measured) << std::setw(18) << format_value(r.reference) << std::setw(16)
           << format_value(r.tolerance) << format_value(r.std_error) << '\n';
    }
    const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    os << results.size() - failed << "/" << results.size() << " checks passed\n";
    return all;
}

struct SampleOptions {
    std::string law = "gg";
    double beta = 2.0;
    std::optional<double> scale;
    std::optional<double> variance;
    double mean = 0.0;
    double alpha = 2.0;
    double mu = 1.0;
    std::optional<double> h_root;
    std::optional<std::size_t> count;
};

void cmd_sample(const SampleOptions& o, const GlobalOptions& g, std::ostream& os) {
    const std::size_t count = o.count.value_or(g.config.samples);
    if (count < 1) throw UsageError("sample: count must be positive");
    std::vector<double> draws;
    if (o.law == "gg") {
        if (o.scale && o.variance) throw UsageError("sample: give either --scale or --variance, not both");
        const GGNoise law = o.scale ? GGNoise(o.beta, *o.scale, o.mean)
                                    : GGNoise::with_variance(o.beta, o.variance.value_or(1.0), o.mean);
        draws = law.sample(g.config.seed, count, g.config.chunks, g.config.threads);
    } else if (o.law == "alpha-mu") {
        const AlphaMuFading law =
            o.h_root ? AlphaMuFading(o.alpha, o.mu, *o.h_root) : AlphaMuFading::unit_power(o.alpha, o.mu);
        draws = law.sample(g.config.seed, count, g.config.chunks, g.config.threads);
    } else {
        throw UsageError("sample: --law must be gg or alpha-mu");
    }
    os << "value\n";
    for (double x : draws) os << format_value(x) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Capacity bounds, ergodic capacity and secrecy rates for generalized Gaussian noise channels",
                 "awggn"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.config.seed, "Random seed")->capture_default_str();
    app.add_option("--samples", g.config.samples, "Monte-Carlo sample count")->capture_default_str();
    app.add_option("--chunks", g.config.chunks, "Independent random substreams")->capture_default_str();
    app.add_option("--threads", g.config.threads, "Worker threads (results do not depend on this)")
        ->capture_default_str();
    app.add_option("--units", g.units, "Rate units")->check(CLI::IsMember({"bits", "nats"}))->capture_default_str();
    app.add_option("--out", g.out, "Output file, or stdout")->capture_default_str();
    app.add_option("--quad-rtol", g.quad_rtol, "Quadrature relative tolerance")->capture_default_str();
    app.add_option("--quad-max-subdivisions", g.quad_max_subdivisions, "Quadrature subdivision budget")
        ->capture_default_str();

    std::vector<double> gap_betas;
    std::string gap_range;
    auto* gap_cmd = app.add_subcommand("gap", "Capacity gap f(beta) as CSV");
    gap_cmd->add_option("--betas", gap_betas, "Shape parameters")->delimiter(',');
    gap_cmd->add_option("--range", gap_range, "Shape sweep start:stop:step");

    double cap_beta = 1.0;
    std::string cap_range = "-10:30:1";
    auto* cap_cmd = app.add_subcommand("capacity", "AWGGN capacity bounds versus SNR as CSV");
    cap_cmd->add_option("--beta", cap_beta, "Noise shape")->required();
    cap_cmd->add_option("--snr-db", cap_range, "SNR sweep in dB, start:stop:step")->capture_default_str();

    double erg_beta = 1.0, erg_alpha = 2.0, erg_mu = 1.0;
    std::string erg_range = "-10:30:1";
    auto* erg_cmd = app.add_subcommand("ergodic", "Ergodic capacity bounds under alpha-mu fading as CSV");
    erg_cmd->add_option("--beta", erg_beta, "Noise shape")->capture_default_str();
    erg_cmd->add_option("--alpha", erg_alpha, "Fading alpha")->required();
    erg_cmd->add_option("--mu", erg_mu, "Fading mu")->capture_default_str();
    erg_cmd->add_option("--snr-db", erg_range, "Average SNR sweep in dB")->capture_default_str();

    double sec_beta_sd = 2.0, sec_beta_se = 2.0, sec_snr_se_db = -5.0;
    std::string sec_range = "-10:10:0.5";
    bool as_printed = false;
    auto* sec_cmd = app.add_subcommand("secrecy", "Secrecy rate versus legitimate SNR as CSV");
    sec_cmd->add_option("--beta-sd", sec_beta_sd, "Destination noise shape")->capture_default_str();
    sec_cmd->add_option("--beta-se", sec_beta_se, "Eavesdropper noise shape")->capture_default_str();
    sec_cmd->add_option("--snr-se-db", sec_snr_se_db, "Eavesdropper SNR in dB")->capture_default_str();
    sec_cmd->add_option("--snr-sd-db", sec_range, "Legitimate SNR sweep in dB")->capture_default_str();
    sec_cmd->add_flag("--as-printed", as_printed, "Evaluate the existence condition with e^{1-1/beta}");

    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite");

    SampleOptions so;
    auto* sample_cmd = app.add_subcommand("sample", "Raw draws from a noise or fading law");
    sample_cmd->add_option("--law", so.law, "gg or alpha-mu")->check(CLI::IsMember({"gg", "alpha-mu"}));
    sample_cmd->add_option("--beta", so.beta, "GG shape");
    sample_cmd->add_option("--scale", so.scale, "GG scale");
    sample_cmd->add_option("--variance", so.variance, "GG variance (default 1)");
    sample_cmd->add_option("--mean", so.mean, "GG mean");
    sample_cmd->add_option("--alpha", so.alpha, "Fading alpha");
    sample_cmd->add_option("--mu", so.mu, "Fading mu");
    sample_cmd->add_option("--h-root", so.h_root, "Fading h-root (default: unit power)");
    sample_cmd->add_option("--count", so.count, "Number of draws (default --samples)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &out;
    try {
        g.config.units = g.units == "nats" ? Units::nats : Units::bits;
        g.config.quadrature.relative_tolerance = g.quad_rtol;
        g.config.quadrature.max_subdivisions = g.quad_max_subdivisions;
        g.config.validate();
        if (g.out != "stdout" && g.out != "-") {
            file = std::make_unique<std::ofstream>(g.out, std::ios::binary);
            if (!*file) throw UsageError("cannot open output file '" + g.out + "'");
            os = file.get();
        }

        if (*gap_cmd) {
            cmd_gap(gap_betas, gap_range, *os);
        } else if (*cap_cmd) {
            cmd_capacity(cap_beta, cap_range, g, *os);
        } else if (*erg_cmd) {
            cmd_ergodic(erg_beta, erg_alpha, erg_mu, erg_range, g, *os);
        } else if (*sec_cmd) {
            cmd_secrecy(sec_beta_sd, sec_beta_se, sec_snr_se_db, sec_range, as_printed, g, *os, err);
        } else if (*verify_cmd) {
            if (!cmd_verify(g, *os)) return kVerificationFailure;
        } else if (*sample_cmd) {
            cmd_sample(so, g, *os);
        }
        os->flush();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << '\n';
        return kNonConvergence;
    }
    return kSuccess;
}

}  // namespace awggn::cli
