#include "pbphase/figures.hpp"

#include "pbphase/phase.hpp"

#include <json.hpp>

#include <stdexcept>

namespace pbphase::figures {

namespace {

OutputRecord curve_record(int id, const std::string& curve, std::vector<std::string> columns)
{
    OutputRecord record;
    record.command = "figure";
    record.add_parameter("figure", std::to_string(id));
    record.add_parameter("curve", curve);
    record.columns = std::move(columns);
    return record;
}

void add_distribution_rows(OutputRecord& record, const StateSpec& spec, int grid_points)
{
    const PhaseDistribution dist = phase_distribution(PartialPhaseState{amplitudes(spec), 0.0}, grid_points);
    record.add_parameter("grid_points", std::to_string(grid_points));
    for (Eigen::Index k = 0; k < dist.thetas.size(); ++k)
        record.add_row({dist.thetas[k], dist.values[k]});
}

double variance_of(const StateSpec& spec)
{
    return phase_variance(PartialPhaseState{amplitudes(spec), 0.0});
}

Figure figure1()
{
    Figure fig{1, {}};
    for (int M = 1; M <= kFig1MaxM; ++M) {
        const std::string name = "M" + std::to_string(M);
        OutputRecord rec = curve_record(1, name, {"L", "variance"});
        rec.add_parameter("family", "hgs");
        rec.add_parameter("eta", kFig1Eta);
        rec.add_parameter("M", std::to_string(M));
        for (const double L : kFig1LGrid)
            rec.add_row({L, variance_of(fig1_state(M, L))});
        fig.curves.push_back({"fig1_" + name + ".csv", std::move(rec)});
    }
    OutputRecord rec = curve_record(1, "vs_M", {"M", "variance"});
    rec.add_parameter("family", "hgs");
    rec.add_parameter("eta", kFig1Eta);
    rec.add_parameter("L", kFig1L);
    for (int M = 1; M <= kFig1MaxM; ++M)
        rec.add_row({static_cast<double>(M), variance_of(fig1_state(M))});
    fig.curves.push_back({"fig1_vs_M.csv", std::move(rec)});
    return fig;
}

Figure figure2(int grid_points)
{
    Figure fig{2, {}};
    for (const double L : kFig2L) {
        const std::string name = "L" + format_number(L);
        OutputRecord rec = curve_record(2, name, {"theta", "density"});
        rec.add_parameter("family", "hgs");
        rec.add_parameter("L", L);
        rec.add_parameter("M", std::to_string(kFig2M));
        rec.add_parameter("eta", kFig2Eta);
        add_distribution_rows(rec, fig2_state(L), grid_points);
        fig.curves.push_back({"fig2_" + name + ".csv", std::move(rec)});
    }
    OutputRecord rec = curve_record(2, "binomial", {"theta", "density"});
    rec.add_parameter("family", "binomial");
    rec.add_parameter("M", std::to_string(kFig2M));
    rec.add_parameter("eta", kFig2Eta);
    add_distribution_rows(rec, fig2_reference(), grid_points);
    fig.curves.push_back({"fig2_binomial.csv", std::move(rec)});
    return fig;
}

Figure figure3()
{
    Figure fig{3, {}};
    const std::vector<double> etas = fig3_eta_grid();
    for (const double gamma : kFig3Gamma) {
        const std::string name = "gamma" + format_number(gamma);
        OutputRecord rec = curve_record(3, name, {"eta", "variance"});
        rec.add_parameter("family", "polya");
        rec.add_parameter("M", std::to_string(kFig3M));
        rec.add_parameter("gamma", gamma);
        for (const double eta : etas)
            rec.add_row({eta, variance_of(fig3_state(gamma, eta))});
        fig.curves.push_back({"fig3_" + name + ".csv", std::move(rec)});
    }
    return fig;
}

Figure figure4(int grid_points)
{
    Figure fig{4, {}};
    for (const int M : kFig4M) {
        const NegHypergeometric spec = fig4_state(M);
        const std::string name = "M" + std::to_string(M);
        OutputRecord rec = curve_record(4, name, {"theta", "density"});
        rec.add_parameter("family", "nhgs");
        rec.add_parameter("M", std::to_string(M));
        rec.add_parameter("beta", spec.beta);
        rec.add_parameter("s", std::to_string(spec.s_nhg));
        add_distribution_rows(rec, spec, grid_points);
        fig.curves.push_back({"fig4_" + name + ".csv", std::move(rec)});
    }
    return fig;
}

} // namespace

Hypergeometric fig1_state(int M, double L)
{
    return Hypergeometric{L, M, kFig1Eta};
}

Hypergeometric fig2_state(double L)
{
    return Hypergeometric{L, kFig2M, kFig2Eta};
}

Binomial fig2_reference()
{
    return Binomial{kFig2Eta, kFig2M};
}

Polya fig3_state(double gamma, double eta)
{
    return Polya{kFig3M, gamma, eta};
}

std::vector<double> fig3_eta_grid()
{
    std::vector<double> etas;
    for (int k = kFig3EtaFirstPercent; k <= kFig3EtaLastPercent; ++k)
        etas.push_back(k / 100.0);
    return etas;
}

NegHypergeometric fig4_state(int M)
{
    return NegHypergeometric{M, 1.0 / (M + 1.0), 0};
}

Figure make_figure(int id, int grid_points)
{
    switch (id) {
    case 1:
        return figure1();
    case 2:
        return figure2(grid_points);
    case 3:
        return figure3();
    case 4:
        return figure4(grid_points);
    default:
        throw std::invalid_argument("figure id must be 1..4, got " + std::to_string(id));
    }
}

std::string figure_manifest(const Figure& figure, int grid_points)
{
    nlohmann::ordered_json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["manifest_version"] = kFigureManifestVersion;
    doc["figure"] = figure.id;
    if (figure.id == 2 || figure.id == 4)
        doc["grid_points"] = grid_points;
    nlohmann::ordered_json curves = nlohmann::ordered_json::array();
    for (const Curve& curve : figure.curves) {
        nlohmann::ordered_json entry;
        entry["file"] = curve.file;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [key, value] : curve.record.parameters)
            params[key] = value;
        entry["parameters"] = params;
        entry["columns"] = curve.record.columns;
        entry["rows"] = curve.record.rows.size();
        curves.push_back(entry);
    }
    doc["curves"] = curves;
    return doc.dump(2) + "\n";
}

} // namespace pbphase::figures
