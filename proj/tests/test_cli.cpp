#include "pbphase/cli.hpp"
#include "pbphase/figures.hpp"
#include "pbphase/output.hpp"
#include "pbphase/phase.hpp"

#include "support/exact_oracle.hpp"
#include "support/process.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace pbphase;
using std::numbers::pi;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;

    OutputRecord record() const
    {
        std::istringstream in(out);
        return read_csv(in);
    }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

PhaseDistribution as_distribution(const OutputRecord& rec)
{
    PhaseDistribution d;
    d.thetas.resize(static_cast<Eigen::Index>(rec.rows.size()));
    d.values.resize(static_cast<Eigen::Index>(rec.rows.size()));
    const std::size_t t = rec.column("theta");
    const std::size_t v = rec.column("density");
    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        d.thetas[static_cast<Eigen::Index>(i)] = rec.rows[i][t];
        d.values[static_cast<Eigen::Index>(i)] = rec.rows[i][v];
    }
    return d;
}

} // namespace

TEST_CASE("format_number round-trips")
{
    for (const double x : {0.1, 1.0 / 3.0, pi, 1e-300, -2.5e17, 0.0, 3.0}) {
        const std::string s = format_number(x);
        CHECK(std::stod(s) == x);
    }
    CHECK(format_number(3.0) == "3");
    CHECK(format_number(0.25) == "0.25");
}

TEST_CASE("amplitudes command")
{
    const Run r = run({"amplitudes", "--family", "binomial", "--eta", "0.5", "--M", "2", "--format", "csv"});
    REQUIRE(r.code == cli::kSuccess);
    const OutputRecord rec = r.record();
    CHECK(rec.schema_version == "1");
    CHECK(rec.command == "amplitudes");
    CHECK(rec.columns == std::vector<std::string>{"n", "amplitude", "probability"});
    REQUIRE(rec.rows.size() == 3);
    CHECK(rec.rows[0][2] == doctest::Approx(0.25));
    CHECK(rec.rows[1][2] == doctest::Approx(0.5));
    CHECK(rec.rows[2][2] == doctest::Approx(0.25));

    const Run bad = run({"amplitudes", "--family", "hgs", "--L", "9", "--M", "5", "--eta", "0.5"});
    CHECK(bad.code == cli::kDomain);
    CHECK(bad.err.find("L >= max(M/eta, M/(1-eta))") != std::string::npos);

    const Run nhg = run({"amplitudes", "--family", "nhgs", "--M", "4", "--beta", "0.5", "--s", "1"});
    REQUIRE(nhg.code == cli::kSuccess);
    const OutputRecord n = nhg.record();
    REQUIRE(n.rows.size() == 5);
    const auto expected = exact::neg_hypergeometric_state(4, exact::Q(1, 2), 1);
    double total = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        total += n.rows[i][2];
        CHECK(n.rows[i][2] == doctest::Approx(exact::to_double(expected[i])).epsilon(1e-13));
    }
    CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("csv round trip reproduces derived columns exactly")
{
    const Run r = run({"amplitudes", "--family", "hahn", "--alpha", "0.3", "--beta-h", "2.7", "--M", "9"});
    REQUIRE(r.code == 0);
    const OutputRecord rec = r.record();
    for (const auto& row : rec.rows)
        CHECK(row[1] * row[1] == row[2]);
    std::ostringstream again;
    write_csv(again, rec);
    CHECK(again.str() == r.out);
}

TEST_CASE("json output")
{
    const Run r = run({"amplitudes", "--family", "polya", "--M", "3", "--gamma", "0.5", "--eta", "0.25",
                       "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["command"] == "amplitudes");
    CHECK(doc["parameters"]["family"] == "polya");
    CHECK(doc["rows"].size() == 4);
    CHECK(doc["columns"].size() == 3);
}

TEST_CASE("usage errors exit 1")
{
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"amplitudes", "--family", "binomial", "--M", "2"}).code == cli::kUsage);
    CHECK(run({"amplitudes", "--family", "squeezed", "--M", "2"}).code == cli::kUsage);
    CHECK(run({"amplitudes", "--family", "binomial", "--eta", "x", "--M", "2"}).code == cli::kUsage);
    CHECK(run({"phase-dist", "--family", "binomial", "--eta", "0.5", "--M", "2", "--bogus"}).code == cli::kUsage);
    CHECK(run({"figure", "--id", "5", "--out", "/tmp"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("phase-stats command")
{
    const Run number = run({"phase-stats", "--family", "binomial", "--eta", "1", "--M", "3"});
    REQUIRE(number.code == 0);
    const OutputRecord n = number.record();
    CHECK(n.rows[0][n.column("mean")] == 0.0);
    CHECK(std::abs(n.rows[0][n.column("variance")] - pi * pi / 3) < 1e-12);

    const OutputRecord b = run({"phase-stats", "--family", "binomial", "--eta", "0.5", "--M", "1"}).record();
    CHECK(std::abs(b.rows[0][1] - (pi * pi / 3 - 2.0)) < 1e-12);

    const Run oracle = run({"phase-stats", "--family", "hgs", "--L", "30", "--M", "6", "--eta", "0.4",
                            "--mu", "0.5", "--oracle", "16384"});
    REQUIRE(oracle.code == 0);
    const OutputRecord o = oracle.record();
    CHECK(o.columns == std::vector<std::string>{"mean", "variance", "oracle_mean", "oracle_variance"});
    CHECK(o.rows[0][0] == 0.5);
    CHECK(std::abs(o.rows[0][2] - o.rows[0][0]) < 1e-3);
    CHECK(std::abs(o.rows[0][3] - o.rows[0][1]) < 1e-3);

    CHECK(run({"phase-stats", "--family", "binomial", "--eta", "0.5", "--M", "5", "--oracle", "3"}).code ==
          cli::kDomain);
}

TEST_CASE("phase-dist command")
{
    const OutputRecord vac = run({"phase-dist", "--family", "binomial", "--eta", "0", "--M", "3",
                                  "--grid-points", "32"}).record();
    REQUIRE(vac.rows.size() == 32);
    for (const auto& row : vac.rows)
        CHECK(row[1] == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-15));
    for (std::size_t i = 1; i < vac.rows.size(); ++i)
        CHECK(vac.rows[i][0] > vac.rows[i - 1][0]);

    const Run hgs = run({"phase-dist", "--family", "hgs", "--L", "20", "--M", "5", "--eta", "0.5"});
    REQUIRE(hgs.code == 0);
    CHECK(count_peaks(as_distribution(hgs.record())) == 1);

    const Run nhg = run({"phase-dist", "--family", "nhgs", "--M", "3", "--beta", "0.5", "--s", "0"});
    REQUIRE(nhg.code == 0);
    CHECK(count_peaks(as_distribution(nhg.record())) == 3);

    CHECK(run({"phase-dist", "--family", "binomial", "--eta", "0.5", "--M", "3", "--grid-points", "8"}).code ==
          cli::kDomain);
}

TEST_CASE("equivalence-check command")
{
    const Run ok = run({"equivalence-check", "--M", "4", "--beta", "0.5", "--s", "1", "--tol", "1e-12"});
    CHECK(ok.code == cli::kSuccess);
    const OutputRecord rec = ok.record();
    CHECK(rec.columns == std::vector<std::string>{"n", "nhgs", "polya", "hahn", "max_pairwise_diff"});
    CHECK(rec.rows.size() == 5);

    const Run bad = run({"equivalence-check", "--M", "4", "--beta", "0.5", "--s", "1", "--perturb", "1e-9"});
    CHECK(bad.code == cli::kCheckFailed);
    CHECK(bad.record().rows[0][4] >= 1e-9);

    // M = 1: every column is the binomial state at eta = (s + 1)/(M beta/(1 - beta) + 1)
    const OutputRecord m1 = run({"equivalence-check", "--M", "1", "--beta", "0.75", "--s", "1"}).record();
    const double eta = 2.0 / 4.0;
    for (std::size_t col = 1; col <= 3; ++col) {
        CHECK(std::abs(m1.rows[0][col] - std::sqrt(1.0 - eta)) < 1e-12);
        CHECK(std::abs(m1.rows[1][col] - std::sqrt(eta)) < 1e-12);
    }

    CHECK(run({"equivalence-check", "--M", "4", "--beta", "0.5", "--s", "4"}).code == cli::kDomain);
    CHECK(run({"equivalence-check", "--M", "4", "--beta", "0.5", "--s", "1", "--tol", "-1"}).code == cli::kUsage);
}

TEST_CASE("output file and unwritable paths")
{
    const auto dir = proc::scratch_dir("cli");
    const auto path = (dir / "amps.csv").string();
    const Run r = run({"amplitudes", "--family", "binomial", "--eta", "0.5", "--M", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(proc::slurp(path) == run({"amplitudes", "--family", "binomial", "--eta", "0.5", "--M", "2"}).out);

    CHECK(run({"amplitudes", "--family", "binomial", "--eta", "0.5", "--M", "2", "--out",
               (dir / "missing" / "x.csv").string()})
              .code == cli::kDomain);
    CHECK(run({"figure", "--id", "3", "--out", path + "/sub"}).code == cli::kDomain);
    std::filesystem::remove_all(dir);
}

TEST_CASE("figure command")
{
    const auto dir = proc::scratch_dir("fig");

    SUBCASE("figure 1")
    {
        REQUIRE(run({"figure", "--id", "1", "--out", dir.string()}).code == 0);
        for (int M = 1; M <= 8; ++M)
            CHECK(std::filesystem::exists(dir / ("fig1_M" + std::to_string(M) + ".csv")));
        const auto manifest = nlohmann::json::parse(proc::slurp(dir / "fig1_manifest.json"));
        CHECK(manifest["figure"] == 1);
        CHECK(manifest["curves"].size() == 9);
    }
    SUBCASE("figure 2")
    {
        REQUIRE(run({"figure", "--id", "2", "--out", dir.string()}).code == 0);
        CHECK(std::filesystem::exists(dir / "fig2_L1200.csv"));
        CHECK(std::filesystem::exists(dir / "fig2_binomial.csv"));
        std::ifstream in(dir / "fig2_L1200.csv");
        const OutputRecord rec = read_csv(in);
        CHECK(rec.rows.size() == static_cast<std::size_t>(kDefaultGridPoints));
    }
    SUBCASE("figure 3")
    {
        REQUIRE(run({"figure", "--id", "3", "--out", dir.string()}).code == 0);
        std::ifstream in(dir / "fig3_gamma0.3.csv");
        const OutputRecord rec = read_csv(in);
        REQUIRE(rec.rows.size() == 91);
        for (std::size_t i = 0; i < rec.rows.size(); ++i)
            CHECK(rec.rows[i][0] + rec.rows[rec.rows.size() - 1 - i][0] == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(rec.rows[45][0] == 0.5);
    }
    SUBCASE("figure 4 is deterministic")
    {
        const auto other = proc::scratch_dir("fig_b");
        REQUIRE(run({"figure", "--id", "4", "--out", dir.string()}).code == 0);
        REQUIRE(run({"figure", "--id", "4", "--out", other.string()}).code == 0);
        for (const auto* name : {"fig4_M2.csv", "fig4_M3.csv", "fig4_M5.csv", "fig4_manifest.json"})
            CHECK(proc::slurp(dir / name) == proc::slurp(other / name));
        std::filesystem::remove_all(other);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("end-to-end exit codes through the executable")
{
    CHECK(proc::run_exe("amplitudes --family binomial --eta 0.5 --M 2").exit_code == 0);
    CHECK(proc::run_exe("amplitudes --family binomial --M 2").exit_code == 1);
    CHECK(proc::run_exe("amplitudes --family hgs --L 9 --M 5 --eta 0.5").exit_code == 2);
    CHECK(proc::run_exe("equivalence-check --M 4 --beta 0.5 --s 1 --perturb 1e-6").exit_code == 3);

    const auto a = proc::run_exe("phase-dist --family polya --M 6 --gamma 0.2 --eta 0.35 --mu 0.4");
    const auto b = proc::run_exe("phase-dist --family polya --M 6 --gamma 0.2 --eta 0.35 --mu 0.4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}
