#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trotterkit/eig.hpp"
#include "trotterkit/expm.hpp"
#include "trotterkit/hamiltonians.hpp"
#include "trotterkit/matrix.hpp"
#include "trotterkit/schrodinger.hpp"
#include "trotterkit/trotter.hpp"

namespace {

using namespace trotterkit;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad number: " + tok);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

// Step-count ranges: "a:b:xK" geometric (factor K), "a:b:+K" arithmetic,
// "a:b" geometric with factor 2, plain comma lists, or a single value.
std::vector<unsigned> parse_step_range(const std::string& text) {
    std::vector<unsigned> out;
    if (text.find(':') == std::string::npos) {
        for (double v : parse_real_list(text)) {
            if (v < 1.0) throw std::invalid_argument("step counts must be >= 1");
            out.push_back(static_cast<unsigned>(v));
        }
        return out;
    }
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    if (parts.size() != 2 && parts.size() != 3)
        throw std::invalid_argument("bad range syntax: " + text);
    const unsigned a = static_cast<unsigned>(std::stoul(parts[0]));
    const unsigned b = static_cast<unsigned>(std::stoul(parts[1]));
    bool geometric = true;
    double k = 2.0;
    if (parts.size() == 3) {
        if (parts[2].empty()) throw std::invalid_argument("bad range step: " + text);
        if (parts[2][0] == 'x') {
            k = std::stod(parts[2].substr(1));
        } else if (parts[2][0] == '+') {
            geometric = false;
            k = std::stod(parts[2].substr(1));
        } else {
            throw std::invalid_argument("range step must start with 'x' or '+'");
        }
    }
    if (a < 1 || b < a || k <= (geometric ? 1.0 : 0.0))
        throw std::invalid_argument("bad range bounds: " + text);
    double v = a;
    while (static_cast<unsigned>(v + 0.5) <= b) {
        const unsigned n = static_cast<unsigned>(v + 0.5);
        if (out.empty() || out.back() != n) out.push_back(n);
        v = geometric ? v * k : v + k;
    }
    return out;
}

struct SplitSpec {
    std::vector<std::string> paulis;  // "S=1*X" / "T=1*Z"
    std::string s_file, t_file;
    unsigned random_dim = 0;

    SplitHamiltonian build(std::uint64_t seed) const {
        std::optional<ComplexMatrix> s, t;
        for (const auto& p : paulis) {
            const auto eq = p.find('=');
            if (eq == std::string::npos || eq == 0)
                throw std::invalid_argument("--pauli expects S=<spec> or T=<spec>");
            const std::string which = p.substr(0, eq);
            const ComplexMatrix m = build_pauli(parse_pauli(p.substr(eq + 1)));
            if (which == "S") s = m;
            else if (which == "T") t = m;
            else throw std::invalid_argument("--pauli side must be S or T");
        }
        if (!s_file.empty()) s = load_matrix(s_file);
        if (!t_file.empty()) t = load_matrix(t_file);
        if (random_dim > 0) {
            if (!s) s = build_random_hermitian(random_dim, seed);
            if (!t) t = build_random_hermitian(random_dim, seed + 1);
        }
        if (!s || !t)
            throw std::invalid_argument("split Hamiltonian underspecified: need both S and T");
        return make_split(*s, *t);
    }
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

int cmd_expm(const std::string& input, const std::vector<double>& diag, double t,
             bool compare_taylor, unsigned terms, const std::string& output) {
    ComplexMatrix h;
    if (!input.empty())
        h = load_matrix(input);
    else if (!diag.empty())
        h = build_diagonal(diag);
    else
        throw std::invalid_argument("expm: provide --input or --diag");

    const UnitaryOperator u = exact_expm(h, t);
    nlohmann::json j = nlohmann::json::parse(matrix_to_json(u.matrix));
    if (compare_taylor) {
        ComplexMatrix gen = h;
        gen *= Complex(0.0, -t);
        const ComplexMatrix approx = taylor_expm(gen, terms);
        j["taylor_frobenius_diff"] = frobenius_norm(u.matrix - approx);
    }
    write_output(output, j.dump() + "\n");
    return 0;
}

int cmd_trotter_sweep(const SplitSpec& spec, double t, const std::string& range,
                      const std::string& metric_name, unsigned xi_index,
                      std::uint64_t seed, const std::string& output,
                      const std::string& format) {
    const SplitHamiltonian h = spec.build(seed);
    const std::vector<unsigned> counts = parse_step_range(range);
    const ErrorMetric metric = metric_name == "state" ? ErrorMetric::state_vector_norm
                                                      : ErrorMetric::operator_2norm;
    std::optional<StateVector> xi;
    if (metric == ErrorMetric::state_vector_norm)
        xi = basis_state(h.dim(), xi_index);
    const ConvergenceReport report = convergence_study(h, t, counts, metric, xi);
    write_output(output, format == "json" ? report.to_json() + "\n" : report.to_csv());
    return 0;
}

int cmd_defect(const SplitSpec& spec, double t, const std::string& steps,
               unsigned xi_index, unsigned samples, std::uint64_t seed,
               const std::string& output) {
    const SplitHamiltonian h = spec.build(seed);
    const StateVector xi = basis_state(h.dim(), xi_index);
    std::ostringstream os;
    os << "step,defect_supremum\n";
    for (double step : parse_real_list(steps)) {
        os << fmt17(step) << "," << fmt17(defect_supremum(h, step, xi, t, samples)) << "\n";
    }
    write_output(output, os.str());
    return 0;
}

int cmd_splitstep(const std::string& preset, unsigned points, double xmin, double xmax,
                  double mass, double x0, double sigma, double p0, double t,
                  unsigned steps, const std::string& output, unsigned snapshot_stride,
                  const std::string& snapshot_prefix) {
    const GridSpec grid = make_grid(points, xmin, xmax, mass);
    std::vector<double> v;
    if (preset == "linear")
        v = linear_potential(grid);
    else if (preset == "none")
        v.assign(points, 0.0);
    else
        throw std::invalid_argument("unknown potential preset: " + preset);

    WaveFunction psi = gaussian_packet(grid, x0, sigma, p0);
    const double dt = t / static_cast<double>(steps);

    std::ostringstream os;
    os << "step,time,norm,mean_x,mean_p,energy_kinetic\n";
    auto emit = [&](unsigned s) {
        const Observables obs = observables(psi);
        os << s << "," << fmt17(dt * s) << "," << fmt17(obs.norm) << ","
           << fmt17(obs.mean_x) << "," << fmt17(obs.mean_p) << ","
           << fmt17(obs.energy_kinetic) << "\n";
    };
    auto snapshot = [&](unsigned s) {
        if (snapshot_stride == 0 || snapshot_prefix.empty()) return;
        if (s % snapshot_stride != 0) return;
        nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
        for (const auto& a : psi.values) {
            re.push_back(a.real());
            im.push_back(a.imag());
        }
        nlohmann::json j{{"points", points}, {"re", re}, {"im", im}};
        std::ofstream snap(snapshot_prefix + "." + std::to_string(s) + ".json");
        snap << j.dump() << "\n";
    };

    emit(0);
    snapshot(0);
    for (unsigned s = 1; s <= steps; ++s) {
        psi = split_step_evolve(psi, v, dt, 1);
        emit(s);
        snapshot(s);
    }
    write_output(output, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trotterkit: operator exponentials, Trotter sweeps, and split-step runs"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "RNG seed (TROTTERKIT_SEED overrides)");

    // expm
    auto* expm_cmd = app.add_subcommand("expm", "exponentiate a Hermitian matrix");
    std::string expm_input, expm_output;
    std::string expm_diag;
    double expm_t = 1.0;
    bool expm_compare = false;
    unsigned expm_terms = 30;
    expm_cmd->add_option("--input", expm_input, "matrix JSON file");
    expm_cmd->add_option("--diag", expm_diag, "comma-separated diagonal energies");
    expm_cmd->add_option("--t", expm_t, "evolution time");
    expm_cmd->add_flag("--compare-taylor", expm_compare, "report series-route difference");
    expm_cmd->add_option("--terms", expm_terms, "series terms for the comparison");
    expm_cmd->add_option("--output,-o", expm_output, "output path (default stdout)");

    auto add_split_options = [](CLI::App* cmd, SplitSpec& spec) {
        cmd->add_option("--pauli", spec.paulis, "S=<coef*letters> or T=<coef*letters>");
        cmd->add_option("--s-file", spec.s_file, "matrix JSON for S");
        cmd->add_option("--t-file", spec.t_file, "matrix JSON for T");
        cmd->add_option("--random-dim", spec.random_dim, "seeded random Hermitian parts");
    };

    // trotter-sweep
    auto* sweep_cmd = app.add_subcommand("trotter-sweep", "convergence study over n");
    SplitSpec sweep_spec;
    add_split_options(sweep_cmd, sweep_spec);
    double sweep_t = 1.0;
    std::string sweep_range = "4:512:x2";
    std::string sweep_metric = "operator";
    unsigned sweep_xi = 0;
    std::string sweep_output, sweep_format = "csv";
    sweep_cmd->add_option("--t", sweep_t, "evolution time");
    sweep_cmd->add_option("--n", sweep_range, "step counts: a:b:xK, a:b:+K, or list");
    sweep_cmd->add_option("--metric", sweep_metric, "operator | state")
        ->check(CLI::IsMember({"operator", "state"}));
    sweep_cmd->add_option("--xi-basis", sweep_xi, "basis index for the state metric");
    sweep_cmd->add_option("--output,-o", sweep_output, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    // defect
    auto* defect_cmd = app.add_subcommand("defect", "defect supremum over a step grid");
    SplitSpec defect_spec;
    add_split_options(defect_cmd, defect_spec);
    double defect_t = 1.0;
    std::string defect_steps = "0.1,0.01,0.001";
    unsigned defect_xi = 0, defect_samples = 41;
    std::string defect_output;
    defect_cmd->add_option("--t", defect_t, "supremum interval half-width");
    defect_cmd->add_option("--steps", defect_steps, "comma-separated step sizes");
    defect_cmd->add_option("--xi-basis", defect_xi, "basis index for xi");
    defect_cmd->add_option("--samples", defect_samples, "grid points on [-|t|, |t|]");
    defect_cmd->add_option("--output,-o", defect_output, "output path (default stdout)");

    // splitstep
    auto* ss_cmd = app.add_subcommand("splitstep", "1D split-step trajectory");
    std::string ss_preset = "linear", ss_output, ss_snapshot_prefix;
    unsigned ss_points = 1024, ss_steps = 256, ss_stride = 0;
    double ss_xmin = -20.0, ss_xmax = 20.0, ss_mass = 1.0;
    double ss_x0 = 0.0, ss_sigma = 1.0, ss_p0 = 0.0, ss_t = 1.0;
    ss_cmd->add_option("--preset", ss_preset, "potential preset: linear | none");
    ss_cmd->add_option("--points", ss_points, "grid points (power of two)");
    ss_cmd->add_option("--xmin", ss_xmin, "left edge");
    ss_cmd->add_option("--xmax", ss_xmax, "right edge");
    ss_cmd->add_option("--mass", ss_mass, "particle mass");
    ss_cmd->add_option("--x0", ss_x0, "packet center");
    ss_cmd->add_option("--sigma", ss_sigma, "packet width");
    ss_cmd->add_option("--p0", ss_p0, "packet momentum");
    ss_cmd->add_option("--t", ss_t, "total time");
    ss_cmd->add_option("--steps", ss_steps, "number of split steps");
    ss_cmd->add_option("--output,-o", ss_output, "observables CSV (default stdout)");
    ss_cmd->add_option("--snapshot-stride", ss_stride, "wavefunction snapshot stride");
    ss_cmd->add_option("--snapshot-prefix", ss_snapshot_prefix, "snapshot file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (const char* env = std::getenv("TROTTERKIT_SEED")) seed = std::strtoull(env, nullptr, 10);

    try {
        if (expm_cmd->parsed())
            return cmd_expm(expm_input,
                            expm_diag.empty() ? std::vector<double>{} : parse_real_list(expm_diag),
                            expm_t, expm_compare, expm_terms, expm_output);
        if (sweep_cmd->parsed())
            return cmd_trotter_sweep(sweep_spec, sweep_t, sweep_range, sweep_metric,
                                     sweep_xi, seed, sweep_output, sweep_format);
        if (defect_cmd->parsed())
            return cmd_defect(defect_spec, defect_t, defect_steps, defect_xi,
                              defect_samples, seed, defect_output);
        if (ss_cmd->parsed())
            return cmd_splitstep(ss_preset, ss_points, ss_xmin, ss_xmax, ss_mass, ss_x0,
                                 ss_sigma, ss_p0, ss_t, ss_steps, ss_output, ss_stride,
                                 ss_snapshot_prefix);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
