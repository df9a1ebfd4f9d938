#include "logconcave/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logconcave/csv_io.hpp"
#include "logconcave/extremal.hpp"
#include "logconcave/generators.hpp"
#include "logconcave/orlicz.hpp"
#include "logconcave/report.hpp"
#include "logconcave/stochastic_order.hpp"
#include "logconcave/suites.hpp"

namespace logconcave {

namespace {

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
}

int run_verify(const std::string& suite, const SuiteConfig& cfg, const std::string& format,
               const std::string& out_path, bool reproducible, std::ostream& out, std::ostream& err) {
    const auto reports = run_suite(suite, cfg);
    emit(format == "csv" ? to_csv(reports) : to_json(reports, reproducible), out_path, out);
    const ReportSummary s = summarize(reports);
    err << suite << ": " << s.total << " checks, " << s.failures << " failures, " << s.equalities
        << " equalities\n";
    return s.failures == 0 ? 0 : 1;
}

int run_majorize(const std::string& input, double point, const std::string& out_path,
                 std::ostream& out) {
    const auto dist = read_distribution_file(input);
    nlohmann::ordered_json doc;
    Verdict verdict = Verdict::inconclusive;
    if (std::holds_alternative<GridDensity>(dist)) {
        const auto& f = std::get<GridDensity>(dist);
        const AsymLaplaceC maj = majorant(f, point);
        const auto cert = certify_order(f, to_grid(maj, 1e-14), 2, 1e-7);
        verdict = cert.verdict;
        doc["family"] = "continuous";
        doc["lambda1"] = maj.lambda1();
        doc["lambda2"] = maj.lambda2();
        doc["mode"] = maj.mode();
        doc["density_at_point"] = maj.pdf(point);
        doc["mean"] = maj.mean();
        doc["variance"] = maj.variance();
        doc["crossings"] = cert.crossings.count();
        doc["certificate"] = cert.verdict == Verdict::certified ? "certified"
                             : cert.verdict == Verdict::refuted ? "refuted"
                                                                : "inconclusive";
    } else {
        const auto& g = std::get<DiscretePMF>(dist);
        const std::int64_t n = static_cast<std::int64_t>(std::llround(point));
        if (static_cast<double>(n) != point)
            throw std::invalid_argument("majorize: --point must be an integer for a pmf input");
        const AsymLaplaceD maj = majorant(g, n);
        const auto cert = certify_order(g, to_pmf(maj, 1e-15), 2, 1e-7);
        verdict = cert.verdict;
        doc["family"] = "discrete";
        doc["p"] = maj.p();
        doc["q"] = maj.q();
        doc["mode"] = maj.mode();
        doc["mass_at_point"] = maj.pmf(n);
        doc["mean"] = maj.mean();
        doc["variance"] = maj.variance();
        doc["crossings"] = cert.crossings.count();
        doc["certificate"] = cert.verdict == Verdict::certified ? "certified"
                             : cert.verdict == Verdict::refuted ? "refuted"
                                                                : "inconclusive";
    }
    emit(doc.dump(2) + "\n", out_path, out);
    return verdict == Verdict::certified ? 0 : 1;
}

int run_orlicz(const std::string& input, const std::string& psi_spec, double tol,
               const std::string& out_path, std::ostream& out) {
    if (psi_spec.rfind("p=", 0) != 0)
        throw std::invalid_argument("orlicz: --psi expects the form p=<value>");
    double p = 0.0;
    try {
        size_t pos = 0;
        p = std::stod(psi_spec.substr(2), &pos);
        if (pos != psi_spec.size() - 2) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("orlicz: cannot parse '" + psi_spec + "'");
    }
    const YoungFunction psi = YoungFunction::power(p);
    const auto dist = read_distribution_file(input);
    nlohmann::ordered_json doc;
    doc["psi"] = psi.descriptor();
    if (std::holds_alternative<GridDensity>(dist)) {
        const auto& g = std::get<GridDensity>(dist);
        const double mu = moments(g, 1.0).mean;
        doc["family"] = "continuous";
        doc["mean"] = mu;
        doc["norm"] = orlicz_norm(g, psi, tol);
        doc["centered_norm"] = orlicz_norm(g, psi, tol, mu);
    } else {
        const auto& g = std::get<DiscretePMF>(dist);
        const double mu = moments(g, 1.0).mean;
        doc["family"] = "discrete";
        doc["mean"] = mu;
        doc["norm"] = orlicz_norm(g, psi, tol);
        doc["centered_norm"] = orlicz_norm(g, psi, tol, mu);
    }
    emit(doc.dump(2) + "\n", out_path, out);
    return 0;
}

int run_gen(const std::string& kind, std::uint64_t seed, int knots, int support_len,
            const std::string& out_path, std::ostream& out) {
    std::ostringstream buf;
    if (kind == "c") {
        ContinuousGenConfig cfg;
        if (knots > 0) cfg.knot_count = knots;
        write_grid_density_csv(buf, gen_logconcave(seed, cfg));
    } else if (kind == "d") {
        DiscreteGenConfig cfg;
        if (support_len > 0) cfg.support_len = support_len;
        write_discrete_pmf_csv(buf, gen_logconcave_pmf(seed, cfg));
    } else {
        throw std::invalid_argument("gen: --kind must be c or d");
    }
    emit(buf.str(), out_path, out);
    return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"verification toolkit for sharp anti-concentration inequalities of log-concave distributions"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite and emit a report");
    std::string suite = "all";
    SuiteConfig cfg;
    std::string format = "json", out_path;
    bool reproducible = false;
    verify->add_option("suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember([] {
            std::vector<std::string> v = suite_names();
            v.push_back("all");
            return v;
        }()));
    verify->add_option("--trials", cfg.trials, "random trials per suite");
    verify->add_option("--seed", cfg.seed, "base seed");
    verify->add_option("--tol", cfg.num_tol, "violation tolerance");
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "output path (default stdout)");
    verify->add_flag("--reproducible", reproducible, "suppress the timestamp field");

    // majorize
    auto* majorize = app.add_subcommand("majorize", "fit the convex-order majorant matched at a point");
    std::string input;
    double point = 0.0;
    std::string maj_out;
    majorize->add_option("--input", input, "csv file (x,logf or n,p)")->required();
    majorize->add_option("--point", point, "matching point t (real) or n (integer)")->required();
    majorize->add_option("--out", maj_out, "output path (default stdout)");

    // orlicz
    auto* orlicz = app.add_subcommand("orlicz", "compute an Orlicz norm of a distribution file");
    std::string orl_input, psi_spec = "p=2", orl_out;
    double orl_tol = 1e-9;
    orlicz->add_option("--input", orl_input, "csv file (x,logf or n,p)")->required();
    orlicz->add_option("--psi", psi_spec, "Young function, p=<value>");
    orlicz->add_option("--tol", orl_tol, "bisection tolerance on E psi");
    orlicz->add_option("--out", orl_out, "output path (default stdout)");

    // gen
    auto* gen = app.add_subcommand("gen", "emit a seeded random log-concave instance as csv");
    std::string kind = "c", gen_out;
    std::uint64_t gen_seed = 1;
    int gen_knots = 0, gen_len = 0;
    gen->add_option("--kind", kind, "c (density) or d (pmf)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--knots", gen_knots, "knot count for --kind c");
    gen->add_option("--support-len", gen_len, "support length for --kind d");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;  // --help exits 0; any parse failure is a usage error
    }

    try {
        if (verify->parsed()) return run_verify(suite, cfg, format, out_path, reproducible, out, err);
        if (majorize->parsed()) return run_majorize(input, point, maj_out, out);
        if (orlicz->parsed()) return run_orlicz(orl_input, psi_spec, orl_tol, orl_out, out);
        if (gen->parsed()) return run_gen(kind, gen_seed, gen_knots, gen_len, gen_out, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace logconcave
