#include "pbphase/cli.hpp"

#include "pbphase/equivalence.hpp"
#include "pbphase/errors.hpp"
#include "pbphase/figures.hpp"
#include "pbphase/oracle.hpp"
#include "pbphase/output.hpp"
#include "pbphase/phase.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

namespace pbphase::cli {

namespace {

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct FamilyOptions
{
    std::string family;
    std::optional<double> eta, L, gamma, alpha, beta_h, beta;
    std::optional<int> M, s;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--family", family, "binomial | hgs | polya | hahn | nhgs")
            ->required()
            ->check(CLI::IsMember({"binomial", "hgs", "polya", "hahn", "nhgs"}));
        cmd->add_option("--M", M, "photon-number cutoff");
        cmd->add_option("--eta", eta);
        cmd->add_option("--L", L);
        cmd->add_option("--gamma", gamma);
        cmd->add_option("--alpha", alpha);
        cmd->add_option("--beta-h", beta_h);
        cmd->add_option("--beta", beta);
        cmd->add_option("--s", s);
    }

    template <typename T>
    T need(const std::optional<T>& value, const char* flag) const
    {
        if (!value)
            throw UsageError("family " + family + " requires " + flag);
        return *value;
    }

    StateSpec spec() const
    {
        const int m = need(M, "--M");
        if (family == "binomial")
            return Binomial{need(eta, "--eta"), m};
        if (family == "hgs")
            return Hypergeometric{need(L, "--L"), m, need(eta, "--eta")};
        if (family == "polya")
            return Polya{m, need(gamma, "--gamma"), need(eta, "--eta")};
        if (family == "hahn")
            return Hahn{need(alpha, "--alpha"), need(beta_h, "--beta-h"), m};
        return NegHypergeometric{m, need(beta, "--beta"), need(s, "--s")};
    }
};

struct OutputOptions
{
    std::string format = "csv";
    std::string path;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", path, "write to PATH instead of stdout");
    }
};

void describe(const StateSpec& spec, OutputRecord& record)
{
    record.add_parameter("family", std::string(family_name(spec)));
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            record.add_parameter("M", std::to_string(p.M));
            if constexpr (std::is_same_v<T, Binomial> || std::is_same_v<T, Polya>)
                record.add_parameter("eta", p.eta);
            if constexpr (std::is_same_v<T, Hypergeometric>) {
                record.add_parameter("L", p.L);
                record.add_parameter("eta", p.eta);
            }
            if constexpr (std::is_same_v<T, Polya>)
                record.add_parameter("gamma", p.gamma);
            if constexpr (std::is_same_v<T, Hahn>) {
                record.add_parameter("alpha", p.alpha);
                record.add_parameter("beta_h", p.beta_h);
            }
            if constexpr (std::is_same_v<T, NegHypergeometric>) {
                record.add_parameter("beta", p.beta);
                record.add_parameter("s", std::to_string(p.s_nhg));
            }
        },
        spec);
}

void serialize(std::ostream& out, const OutputRecord& record, const std::string& format)
{
    if (format == "json")
        write_json(out, record);
    else
        write_csv(out, record);
}

void emit(const OutputRecord& record, const OutputOptions& opts, std::ostream& out)
{
    if (opts.path.empty()) {
        serialize(out, record, opts.format);
        return;
    }
    std::ofstream file(opts.path, std::ios::binary);
    if (!file)
        throw OutputError("cannot open " + opts.path + " for writing");
    serialize(file, record, opts.format);
    if (!file)
        throw OutputError("failed writing " + opts.path);
}

OutputRecord amplitudes_record(const StateSpec& spec)
{
    const FockAmplitudes amps = amplitudes(spec);
    OutputRecord record;
    record.command = "amplitudes";
    describe(spec, record);
    record.columns = {"n", "amplitude", "probability"};
    for (Eigen::Index n = 0; n < amps.size(); ++n)
        record.add_row({static_cast<double>(n), amps[n], amps[n] * amps[n]});
    return record;
}

OutputRecord phase_stats_record(const StateSpec& spec, double mu, std::optional<int> oracle_s)
{
    const PartialPhaseState state{amplitudes(spec), mu};
    const PhaseStatistics stats = phase_statistics(state);
    OutputRecord record;
    record.command = "phase-stats";
    describe(spec, record);
    record.add_parameter("mu", mu);
    record.columns = {"mean", "variance"};
    std::vector<double> row{stats.mean, stats.variance};
    if (oracle_s) {
        record.add_parameter("oracle_s_pb", std::to_string(*oracle_s));
        const PhaseStatistics finite = finite_moments(FiniteWindow::centered(*oracle_s, mu), state);
        record.columns.insert(record.columns.end(), {"oracle_mean", "oracle_variance"});
        row.insert(row.end(), {finite.mean, finite.variance});
    }
    record.add_row(std::move(row));
    return record;
}

OutputRecord phase_dist_record(const StateSpec& spec, double mu, int grid_points)
{
    const PhaseDistribution dist = phase_distribution(PartialPhaseState{amplitudes(spec), mu}, grid_points);
    OutputRecord record;
    record.command = "phase-dist";
    describe(spec, record);
    record.add_parameter("mu", mu);
    record.add_parameter("grid_points", std::to_string(grid_points));
    record.columns = {"theta", "density"};
    for (Eigen::Index k = 0; k < dist.thetas.size(); ++k)
        record.add_row({dist.thetas[k], dist.values[k]});
    return record;
}

struct EquivalenceOutcome
{
    OutputRecord record;
    bool passed = false;
};

EquivalenceOutcome equivalence_record(int M, double beta, int s, double tol, double perturb)
{
    const NegHypergeometric nhg{M, beta, s};
    validate(nhg);
    const PolyaParams polya = polya_from_nhg(M, beta, s);
    const HahnParams hahn = hahn_from_nhg(M, beta, s);

    const FockAmplitudes a = amplitudes(nhg);
    const FockAmplitudes b = amplitudes(polya.spec());
    const FockAmplitudes h_raw = amplitudes(Hahn{hahn.alpha, hahn.beta_h, M});
    Eigen::VectorXd h = h_raw.coefficients();
    h[0] += perturb;
    const FockAmplitudes c(h, h_raw.source());

    const bool passed = coefficients_agree(a, b, tol) && coefficients_agree(a, c, tol) &&
                        coefficients_agree(b, c, tol);

    EquivalenceOutcome outcome;
    OutputRecord& record = outcome.record;
    record.command = "equivalence-check";
    describe(nhg, record);
    record.add_parameter("tol", tol);
    if (perturb != 0.0)
        record.add_parameter("perturb", perturb);
    record.add_parameter("polya_eta", polya.eta);
    record.add_parameter("polya_gamma", polya.gamma);
    record.add_parameter("hahn_alpha", hahn.alpha);
    record.add_parameter("hahn_beta_h", hahn.beta_h);
    record.columns = {"n", "nhgs", "polya", "hahn", "max_pairwise_diff"};
    double worst = 0.0;
    for (int n = 0; n <= M; ++n) {
        const double diff = std::max({std::abs(a[n] - b[n]), std::abs(a[n] - c[n]), std::abs(b[n] - c[n])});
        worst = std::max(worst, diff);
        record.add_row({static_cast<double>(n), a[n], b[n], c[n], diff});
    }
    record.add_parameter("max_diff", worst);
    record.add_parameter("verdict", passed ? "pass" : "fail");
    outcome.passed = passed;
    return outcome;
}

void write_figure(int id, int grid_points, const std::string& directory, std::ostream& out)
{
    const figures::Figure figure = figures::make_figure(id, grid_points);
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec)
        throw OutputError("cannot create " + directory + ": " + ec.message());

    auto write_file = [&](const std::string& name, auto&& body) {
        const std::filesystem::path path = std::filesystem::path(directory) / name;
        std::ofstream file(path, std::ios::binary);
        if (!file)
            throw OutputError("cannot open " + path.string() + " for writing");
        body(file);
        if (!file)
            throw OutputError("failed writing " + path.string());
        out << path.string() << '\n';
    };

    for (const figures::Curve& curve : figure.curves)
        write_file(curve.file, [&](std::ostream& file) { write_csv(file, curve.record); });
    write_file("fig" + std::to_string(id) + "_manifest.json",
               [&](std::ostream& file) { file << figures::figure_manifest(figure, grid_points); });
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Phase statistics of intermediate photon-number states", "pbphase"};
    app.require_subcommand(1);

    FamilyOptions fam_amp, fam_stats, fam_dist;
    OutputOptions out_amp, out_stats, out_dist, out_eq;

    CLI::App* amp = app.add_subcommand("amplitudes", "Fock amplitudes b_n and probabilities b_n^2");
    fam_amp.attach(amp);
    out_amp.attach(amp);

    double stats_mu = 0.0;
    std::optional<int> oracle_s;
    CLI::App* stats = app.add_subcommand("phase-stats", "mean phase and phase variance");
    fam_stats.attach(stats);
    out_stats.attach(stats);
    stats->add_option("--mu", stats_mu, "common phase of the partial phase state");
    stats->add_option("--oracle", oracle_s, "also evaluate a finite window of dimension S+1")
        ->check(CLI::PositiveNumber);

    double dist_mu = 0.0;
    int grid_points = kDefaultGridPoints;
    CLI::App* dist = app.add_subcommand("phase-dist", "phase probability density on a uniform grid");
    fam_dist.attach(dist);
    out_dist.attach(dist);
    dist->add_option("--mu", dist_mu);
    dist->add_option("--grid-points", grid_points)->capture_default_str();

    int figure_id = 0;
    int figure_grid = kDefaultGridPoints;
    std::string figure_dir;
    CLI::App* fig = app.add_subcommand("figure", "write the tables behind one figure");
    fig->add_option("--id", figure_id)->required()->check(CLI::Range(1, 4));
    fig->add_option("--out", figure_dir, "output directory")->required();
    fig->add_option("--grid-points", figure_grid)->capture_default_str();

    int eq_M = 0;
    double eq_beta = 0.0;
    int eq_s = 0;
    double eq_tol = kDefaultAgreementTolerance;
    double eq_perturb = 0.0;
    CLI::App* eq = app.add_subcommand("equivalence-check",
                                      "compare negative hypergeometric, Polya and Hahn amplitudes");
    eq->add_option("--M", eq_M)->required();
    eq->add_option("--beta", eq_beta)->required();
    eq->add_option("--s", eq_s)->required();
    eq->add_option("--tol", eq_tol)->check(CLI::PositiveNumber)->capture_default_str();
    eq->add_option("--perturb", eq_perturb, "offset added to the Hahn amplitude b_0 (comparator self-test)");
    out_eq.attach(eq);

    std::vector<const char*> argv{"pbphase"};
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*amp) {
            emit(amplitudes_record(fam_amp.spec()), out_amp, out);
        } else if (*stats) {
            emit(phase_stats_record(fam_stats.spec(), stats_mu, oracle_s), out_stats, out);
        } else if (*dist) {
            emit(phase_dist_record(fam_dist.spec(), dist_mu, grid_points), out_dist, out);
        } else if (*fig) {
            write_figure(figure_id, figure_grid, figure_dir, out);
        } else if (*eq) {
            const EquivalenceOutcome outcome = equivalence_record(eq_M, eq_beta, eq_s, eq_tol, eq_perturb);
            emit(outcome.record, out_eq, out);
            if (!outcome.passed) {
                err << "equivalence check failed: max pairwise difference exceeds " << format_number(eq_tol)
                    << '\n';
                return kCheckFailed;
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kSuccess;
}

} // namespace pbphase::cli
