// Command-line runner: samplers, verification suites and simulators.
#include "gfv/estimate.hpp"
#include "gfv/fv_simulator.hpp"
#include "gfv/mbi.hpp"
#include "gfv/random_measures.hpp"
#include "gfv/stationary1d.hpp"
#include "gfv/suites.hpp"
#include "gfv/types.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;
constexpr int exit_io = 3;

constexpr std::uint64_t default_seed = 20240611;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = default_seed;
    int threads = 0;
    std::string config;
    std::string format = "csv";
    std::string out;
};

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string quoted(const std::string& s)
{
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json row_json(const gfv::CheckRow& r)
{
    return {{"name", r.name},
            {"value", number_or_null(r.value)},
            {"std_error", number_or_null(r.std_error)},
            {"target", number_or_null(r.target)},
            {"tolerance", number_or_null(r.tolerance)},
            {"pass", r.pass}};
}

json rows_json(const std::vector<gfv::CheckRow>& rows)
{
    json a = json::array();
    for (const auto& r : rows) a.push_back(row_json(r));
    return a;
}

bool all_pass(const std::vector<gfv::CheckRow>& rows)
{
    return std::all_of(rows.begin(), rows.end(), [](const gfv::CheckRow& r) { return r.pass; });
}

/// Destination for data: the --out file or stdout.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw IoError("cannot open output file: " + path);
    }

    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    bool to_file() const { return file_.is_open(); }

    void finish()
    {
        stream().flush();
        if (!stream()) throw IoError("write failed");
    }

private:
    std::ofstream file_;
};

json document(const std::string& command, const json& config, const std::vector<gfv::CheckRow>& rows,
              const Globals& g, double seconds)
{
    return {{"command", command},
            {"config", config},
            {"results", rows_json(rows)},
            {"seed", g.seed},
            {"runtime_seconds", seconds}};
}

/// In csv mode the data goes to the sink and the summary document to
/// stdout, or to stderr when the data already occupies stdout.
void emit_summary(const json& doc, const Sink& sink)
{
    (sink.to_file() ? std::cout : std::cerr) << doc.dump(2) << "\n";
}

gfv::Vector parse_vector(const std::vector<double>& xs)
{
    gfv::Vector v(static_cast<gfv::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<gfv::Index>(i)] = xs[i];
    return v;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
    double alpha = 0.5;
    double c1 = 1.0;
    double c2 = 1.0;
    std::vector<double> m;
    std::string rep = "tilted";
    std::int64_t n = 100000;
};

int cmd_sample(const SampleArgs& a, const Globals& g)
{
    const auto t0 = std::chrono::steady_clock::now();
    Sink sink(g.out);
    gfv::RngStream rng(g.seed, 0);
    json config = {{"alpha", a.alpha}, {"samples", a.n}, {"format", g.format}, {"threads", g.threads}};
    std::vector<gfv::CheckRow> rows;
    const bool as_json = g.format == "json";
    json data = json::array();
    std::ostringstream csv;

    gfv::require(a.n >= 2, "need at least two samples");
    if (!a.m.empty()) {
        const gfv::FiniteMeasure m(parse_vector(a.m));
        gfv::require(!m.is_null(), "m must be nonnull");
        config["m"] = a.m;
        const auto draws = gfv::sample_P_alpha_m(a.alpha, m, a.n, rng);
        const gfv::Index k = m.size();
        std::vector<gfv::RatioAccumulator> acc(static_cast<std::size_t>(k));
        for (gfv::Index i = 0; i < k; ++i) csv << "w_" << i + 1 << ",";
        csv << "weight\n";
        for (const auto& d : draws) {
            for (gfv::Index i = 0; i < k; ++i) acc[static_cast<std::size_t>(i)].add(d.value[i], d.weight);
            if (as_json) {
                json row(std::vector<double>(d.value.begin(), d.value.end()));
                row.push_back(d.weight);
                data.push_back(std::move(row));
            } else {
                for (gfv::Index i = 0; i < k; ++i) csv << num(d.value[i]) << ",";
                csv << num(d.weight) << "\n";
            }
        }
        for (gfv::Index i = 0; i < k; ++i) {
            const gfv::EstimateWithError e = acc[static_cast<std::size_t>(i)].result();
            rows.push_back(gfv::make_row("mean w_" + std::to_string(i + 1), e.mean, m[i] / m.total(),
                                         4.0 * e.std_error, e.std_error));
        }
    } else {
        const gfv::ModelParams1D p{a.alpha, a.c1, a.c2};
        p.validate();
        config["c1"] = a.c1;
        config["c2"] = a.c2;
        config["rep"] = a.rep;
        std::vector<gfv::WeightedSample> draws;
        if (a.rep == "tilted")
            draws = gfv::sample_P_tilted(p, a.n, rng);
        else if (a.rep == "linnik")
            draws = gfv::sample_P_linnik(p, a.n, rng);
        else
            throw gfv::InvalidParameter("rep must be tilted or linnik");
        gfv::RatioAccumulator m1, m2;
        csv << "value,weight\n";
        for (const auto& d : draws) {
            if (as_json)
                data.push_back({d.value, d.weight});
            else
                csv << num(d.value) << "," << num(d.weight) << "\n";
            m1.add(d.value, d.weight);
            m2.add(d.value * d.value, d.weight);
        }
        const gfv::Vector exact = gfv::moment_recursion(p, 2);
        const auto e1 = m1.result();
        const auto e2 = m2.result();
        rows.push_back(gfv::make_row("mean", e1.mean, exact[0], 4.0 * e1.std_error, e1.std_error));
        rows.push_back(gfv::make_row("second moment", e2.mean, exact[1], 4.0 * e2.std_error, e2.std_error));
    }

    json doc = document("sample", config, rows, g, seconds_since(t0));
    if (as_json) {
        doc["samples"] = std::move(data);
        sink.stream() << doc.dump(2) << "\n";
    } else {
        sink.stream() << csv.str();
        emit_summary(doc, sink);
    }
    sink.finish();
    return all_pass(rows) ? 0 : exit_fail;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> alpha;
    std::optional<double> theta;
    std::int64_t n = 1'000'000;
};

int cmd_verify(const VerifyArgs& a, const Globals& g)
{
    const auto t0 = std::chrono::steady_clock::now();
    Sink sink(g.out);
    gfv::SuiteOptions opt;
    opt.seed = g.seed;
    opt.samples = a.n;
    opt.alpha = a.alpha;
    opt.theta = a.theta;
    if (a.alpha) gfv::require_alpha(*a.alpha);
    if (a.theta) gfv::require(*a.theta > 0.0, "theta must be positive");
    gfv::require(a.n >= 100, "need at least 100 samples");
    const std::vector<gfv::CheckRow> rows = gfv::run_suite(a.suite, opt);

    json config = {{"suite", a.suite}, {"samples", a.n}, {"format", g.format}, {"threads", g.threads}};
    if (a.alpha) config["alpha"] = *a.alpha;
    if (a.theta) config["theta"] = *a.theta;

    if (g.format == "json") {
        sink.stream() << document("verify", config, rows, g, seconds_since(t0)).dump(2) << "\n";
    } else {
        std::ostream& os = sink.stream();
        os << "name,value,target,gap,tolerance,std_error,status\n";
        for (const auto& r : rows)
            os << quoted(r.name) << "," << num(r.value) << "," << num(r.target) << "," << num(std::abs(r.value - r.target))
               << "," << num(r.tolerance) << "," << num(r.std_error) << "," << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    sink.finish();
    const auto failed = std::count_if(rows.begin(), rows.end(), [](const gfv::CheckRow& r) { return !r.pass; });
    std::cerr << rows.size() - static_cast<std::size_t>(failed) << "/" << rows.size() << " checks passed\n";
    return failed == 0 ? 0 : exit_fail;
}

// ---------------------------------------------------------------- simulate fv

struct FvArgs {
    double alpha = 0.5;
    double c1 = 1.0;
    double c2 = 1.0;
    std::optional<double> theta;
    std::vector<double> nu;
    std::vector<double> mu0;
    double eps = 1e-4;
    double t_end = 100.0;
    double dt = 0.1;
    std::optional<double> burn_in;
};

int cmd_simulate_fv(const FvArgs& a, const Globals& g)
{
    const auto t0 = std::chrono::steady_clock::now();
    Sink sink(g.out);
    gfv::require_alpha(a.alpha);
    // θν is either (c1, c2) or given by --theta and --nu
    gfv::ProbabilityVector nu;
    double theta;
    if (!a.nu.empty()) {
        nu = gfv::ProbabilityVector(parse_vector(a.nu));
        theta = a.theta.value_or(1.0);
    } else {
        gfv::require(a.c1 > 0.0 && a.c2 > 0.0, "c1 and c2 must be positive");
        theta = a.theta.value_or(a.c1 + a.c2);
        nu = gfv::ProbabilityVector{a.c1 / (a.c1 + a.c2), a.c2 / (a.c1 + a.c2)};
    }
    gfv::require(theta >= 0.0, "theta must be nonnegative");
    const gfv::ProbabilityVector mu0 = a.mu0.empty() ? nu : gfv::ProbabilityVector(parse_vector(a.mu0));
    gfv::require(mu0.size() == nu.size(), "mu0 and nu must have the same number of types");

    gfv::SimConfig cfg;
    cfg.epsilon = a.eps;
    cfg.t_end = a.t_end;
    cfg.record_dt = a.dt;
    cfg.validate();
    const double burn_in = a.burn_in.value_or(0.02 * a.t_end);
    gfv::require(burn_in >= 0.0 && burn_in < a.t_end, "burn-in must lie in [0, t_end)");

    gfv::RngStream rng(g.seed, 0);
    const gfv::PathRecord path = gfv::simulate_path(mu0, theta, nu, a.alpha, cfg, rng);
    const gfv::Index k = nu.size();

    std::vector<gfv::CheckRow> rows;
    const bool point_mass = (mu0.weights().array() == 1.0).any();
    if (theta == 0.0) {
        if (point_mass) {
            const double drift = (path.states.rowwise() - mu0.weights().transpose()).cwiseAbs().maxCoeff();
            rows.push_back(gfv::make_row("largest deviation from the initial point mass", drift, 0.0, 1e-12));
        }
    } else {
        for (gfv::Index i = 0; i < k; ++i) {
            const gfv::EstimateWithError e =
                gfv::ergodic_moment_estimate(path, gfv::MomentFunction::power(gfv::Vector::Unit(k, i), 1), burn_in);
            rows.push_back(gfv::make_row("time average of w_" + std::to_string(i + 1), e.mean, nu[i], 4.0 * e.std_error,
                                         e.std_error));
        }
        if (k == 2) {
            const gfv::ModelParams1D p{a.alpha, theta * nu[0], theta * nu[1]};
            const gfv::Vector f = gfv::Vector::Unit(2, 0);
            const gfv::EstimateWithError e = gfv::ergodic_control_variate_estimate(
                path, gfv::MomentFunction::power(f, 2), gfv::MomentFunction::power(f, 1), nu[0], burn_in);
            rows.push_back(
                gfv::make_row("time average of w_1^2", e.mean, gfv::moment_recursion(p, 2)[1], 2e-2, e.std_error));
        }
    }

    json config = {{"alpha", a.alpha},   {"theta", theta},          {"nu", std::vector<double>(nu.weights().begin(), nu.weights().end())},
                   {"mu0", std::vector<double>(mu0.weights().begin(), mu0.weights().end())},
                   {"eps", a.eps},       {"t_end", a.t_end},        {"dt", a.dt},
                   {"burn_in", burn_in}, {"format", g.format},      {"threads", g.threads}};

    json doc = document("simulate fv", config, rows, g, seconds_since(t0));
    if (g.format == "json") {
        json times = json::array(), states = json::array();
        for (gfv::Index i = 0; i < path.size(); ++i) {
            times.push_back(path.times[i]);
            states.push_back(std::vector<double>(path.states.row(i).begin(), path.states.row(i).end()));
        }
        doc["path"] = {{"times", times}, {"states", states}};
        sink.stream() << doc.dump(2) << "\n";
    } else {
        std::ostream& os = sink.stream();
        os << "time";
        for (gfv::Index i = 0; i < k; ++i) os << ",w_" << i + 1;
        os << "\n";
        for (gfv::Index i = 0; i < path.size(); ++i) {
            os << num(path.times[i]);
            for (gfv::Index j = 0; j < k; ++j) os << "," << num(path.states(i, j));
            os << "\n";
        }
        emit_summary(doc, sink);
    }
    sink.finish();
    return all_pass(rows) ? 0 : exit_fail;
}

// ---------------------------------------------------------------- simulate gwi

struct GwiArgs {
    double alpha = 0.5;
    double c = 0.5;
    double d = 0.5;
    double N = 1e4;
    double horizon = 2000.0;
    std::vector<double> lambdas{0.5, 1.0, 2.0};
};

int cmd_simulate_gwi(const GwiArgs& a, const Globals& g)
{
    const auto t0 = std::chrono::steady_clock::now();
    Sink sink(g.out);
    gfv::GWIConfig cfg;
    cfg.c = a.c;
    cfg.d = a.d;
    cfg.N = a.N;
    cfg.validate(a.alpha);
    gfv::require(a.horizon > 0.0, "horizon must be positive");
    gfv::require(a.lambdas.size() == 3, "the fit uses exactly three lambdas");
    const double unit = cfg.time_unit(a.alpha);
    cfg.steps = static_cast<std::int64_t>(std::ceil(a.horizon * unit));
    cfg.thin = std::max<std::int64_t>(1, static_cast<std::int64_t>(unit / 10.0));

    gfv::RngStream rng(g.seed, 0);
    const gfv::EmpiricalLaplace laplace = gfv::gwi_chain(cfg, a.alpha, rng);
    const gfv::Vector lambdas = parse_vector(a.lambdas);

    std::vector<gfv::CheckRow> rows;
    std::ostringstream csv;
    csv << "lambda,empirical,std_error,fitted\n";
    json table = json::array();
    json fit_json;
    if (a.d == 0.0) {
        // no immigration: the chain is absorbed at 0
        for (gfv::Index i = 0; i < 3; ++i) {
            const double v = laplace(lambdas[i]);
            rows.push_back(gfv::make_row("empirical laplace at lambda=" + num(lambdas[i]), v, 1.0, 0.0));
            csv << num(lambdas[i]) << "," << num(v) << ",0,1\n";
        }
    } else {
        const gfv::LinnikFit fit = gfv::fit_linnik(laplace, a.alpha, lambdas);
        fit_json = {{"kappa", fit.kappa}, {"gamma", fit.gamma}, {"converged", fit.converged}};
        for (gfv::Index i = 0; i < 3; ++i) {
            const gfv::EstimateWithError e = laplace.estimate(lambdas[i]);
            rows.push_back(gfv::make_row("fitted vs empirical laplace at lambda=" + num(lambdas[i]),
                                         fit.fitted[i], fit.empirical[i], 5e-3, e.std_error));
            csv << num(lambdas[i]) << "," << num(fit.empirical[i]) << "," << num(e.std_error) << ","
                << num(fit.fitted[i]) << "\n";
            table.push_back({{"lambda", lambdas[i]},
                             {"empirical", fit.empirical[i]},
                             {"std_error", e.std_error},
                             {"fitted", number_or_null(fit.fitted[i])}});
        }
    }

    json config = {{"alpha", a.alpha}, {"c", a.c},         {"d", a.d},       {"N", a.N},
                   {"horizon", a.horizon}, {"steps", cfg.steps}, {"thin", cfg.thin}, {"lambdas", a.lambdas},
                   {"format", g.format}, {"threads", g.threads}};
    json doc = document("simulate gwi", config, rows, g, seconds_since(t0));
    if (!fit_json.is_null()) doc["fit"] = fit_json;
    if (g.format == "json") {
        doc["laplace"] = table;
        sink.stream() << doc.dump(2) << "\n";
    } else {
        sink.stream() << csv.str();
        emit_summary(doc, sink);
    }
    sink.finish();
    return all_pass(rows) ? 0 : exit_fail;
}

// ---------------------------------------------------------------- config file

/// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw gfv::InvalidParameter("config line " + std::to_string(lineno) + " lacks '='");
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        kv[trim(line.substr(0, eq))] = value;
    }
    return kv;
}

bool mentioned(const std::vector<std::string>& args, const CLI::Option* opt)
{
    for (const std::string& a : args) {
        for (const std::string& n : opt->get_lnames())
            if (a == "--" + n || a.rfind("--" + n + "=", 0) == 0) return true;
        for (const std::string& n : opt->get_snames())
            if (a == "-" + n) return true;
    }
    return false;
}

/// Appends config-file values for options not given on the command line.
/// Keys are matched against the deepest selected subcommand first.
void merge_config(std::vector<std::string>& args, const std::vector<CLI::App*>& chain)
{
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;
    std::vector<std::string> extra;
    for (const auto& [key, value] : read_config(path)) {
        if (key == "config") continue;
        const CLI::Option* opt = nullptr;
        for (auto it = chain.rbegin(); it != chain.rend() && !opt; ++it) {
            opt = (*it)->get_option_no_throw("--" + key);
            if (!opt) opt = (*it)->get_option_no_throw("-" + key);
        }
        if (!opt) throw gfv::InvalidParameter("unknown config key: " + key);
        if (mentioned(args, opt)) continue;
        const std::string name = opt->get_lnames().empty() ? "-" + opt->get_snames().front() : "--" + opt->get_lnames().front();
        extra.push_back(name);
        if (opt->get_type_size() != 0) {
            // list values are comma separated in the file
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ',')) extra.push_back(item);
        }
    }
    args.insert(args.end(), extra.begin(), extra.end());
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Fleming-Viot and branching measure toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
    app.add_option("--config", g.config, "Flat key = value file; command-line flags take precedence");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", g.out, "Output path, stdout when absent");

    SampleArgs sa;
    CLI::App* sample = app.add_subcommand("sample", "Draw from a stationary law");
    sample->fallthrough();
    sample->add_option("--alpha", sa.alpha)->capture_default_str();
    sample->add_option("--c1", sa.c1)->capture_default_str();
    sample->add_option("--c2", sa.c2)->capture_default_str();
    sample->add_option("--m", sa.m, "Mutation measure over k types; selects the k-type sampler")->delimiter(',');
    sample->add_option("--rep", sa.rep, "tilted or linnik")->capture_default_str();
    sample->add_option("-n,--samples", sa.n)->capture_default_str();

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->fallthrough();
    std::vector<std::string> suites = gfv::suite_names();
    suites.push_back("all");
    verify->add_option("suite", va.suite, "Suite name")->check(CLI::IsMember(suites))->capture_default_str();
    verify->add_option("--alpha", va.alpha, "Irreversibility suite alpha");
    verify->add_option("--theta", va.theta, "Irreversibility suite theta");
    verify->add_option("-n,--samples", va.n, "Monte Carlo draws per case")->capture_default_str();

    CLI::App* simulate = app.add_subcommand("simulate", "Run a simulator");
    simulate->fallthrough();
    simulate->require_subcommand(1);

    FvArgs fa;
    CLI::App* fv = simulate->add_subcommand("fv", "Truncated jump simulation of the measure-valued process");
    fv->fallthrough();
    fv->add_option("--alpha", fa.alpha)->capture_default_str();
    fv->add_option("--c1", fa.c1)->capture_default_str();
    fv->add_option("--c2", fa.c2)->capture_default_str();
    fv->add_option("--theta", fa.theta, "Mutation rate; defaults to c1 + c2");
    fv->add_option("--nu", fa.nu, "Mutation law over k types")->delimiter(',');
    fv->add_option("--mu0", fa.mu0, "Initial state; defaults to nu")->delimiter(',');
    fv->add_option("--eps", fa.eps)->capture_default_str();
    fv->add_option("--t-end", fa.t_end)->capture_default_str();
    fv->add_option("--dt", fa.dt, "Record spacing")->capture_default_str();
    fv->add_option("--burn-in", fa.burn_in, "Defaults to 2% of t-end");

    GwiArgs ga;
    CLI::App* gwi = simulate->add_subcommand("gwi", "Galton-Watson chain with immigration");
    gwi->fallthrough();
    gwi->add_option("--alpha", ga.alpha)->capture_default_str();
    gwi->add_option("--c", ga.c)->capture_default_str();
    gwi->add_option("--d", ga.d)->capture_default_str();
    gwi->add_option("-N,--population", ga.N)->capture_default_str();
    gwi->add_option("--horizon", ga.horizon, "Length in units of the limiting time scale")->capture_default_str();
    gwi->add_option("--lambdas", ga.lambdas)->delimiter(',');

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::vector<CLI::App*> chain{&app};
        for (const std::string& a : args) {
            CLI::App* next = chain.back()->get_subcommand_no_throw(a);
            if (next) chain.push_back(next);
        }
        merge_config(args, chain);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const gfv::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        gfv::set_thread_count(g.threads);
        if (*sample) return cmd_sample(sa, g);
        if (*verify) return cmd_verify(va, g);
        if (*fv) return cmd_simulate_fv(fa, g);
        if (*gwi) return cmd_simulate_gwi(ga, g);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    } catch (const gfv::InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
