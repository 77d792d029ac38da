#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cimeans/cmo.hpp"
#include "cimeans/commutators.hpp"
#include "cimeans/constants.hpp"
#include "cimeans/dyadic.hpp"
#include "cimeans/errors.hpp"
#include "cimeans/harness.hpp"
#include "cimeans/means.hpp"
#include "cimeans/profiles.hpp"
#include "cimeans/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitDivergent = 3;

void print_value(double v) { std::printf("%.7g\n", v); }

struct QuadFlags {
    double rel_tol = -1.0;
    double abs_tol = -1.0;
    int max_panels = -1;
    double cutoff = -1.0;

    cimeans::QuadratureSpec spec() const {
        cimeans::QuadratureSpec q;
        if (rel_tol > 0.0) q.rel_tol = rel_tol;
        if (abs_tol > 0.0) q.abs_tol = abs_tol;
        if (max_panels > 0) q.max_panels = max_panels;
        if (cutoff > 0.0) q.cutoff_radius = cutoff;
        return q;
    }
};

void add_quadrature_flags(CLI::App* sub, QuadFlags& qf) {
    sub->add_option("--rel-tol", qf.rel_tol, "relative quadrature tolerance");
    sub->add_option("--abs-tol", qf.abs_tol, "absolute quadrature tolerance");
    sub->add_option("--max-panels", qf.max_panels, "adaptive panel budget");
    sub->add_option("--cutoff", qf.cutoff, "hard cutoff radius for tails");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cimeans::InvalidParameterError("cannot read grid file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

cimeans::TheoremSummary summarize_one(const cimeans::InequalityReport& rep) {
    cimeans::TheoremSummary row;
    row.theorem = theorem_name(rep.tc.theorem);
    switch (rep.verdict) {
    case cimeans::Verdict::Pass: row.passes = 1; break;
    case cimeans::Verdict::Fail: row.failures = 1; break;
    case cimeans::Verdict::Degenerate: row.degenerates = 1; break;
    }
    if (rep.verdict != cimeans::Verdict::Degenerate) row.max_ratio = rep.ratio;
    return row;
}

} // namespace

int main(int argc, char** argv) {
    using namespace cimeans;

    CLI::App app{"Workbench for integral mean inequalities on radial profiles"};
    app.require_subcommand(1);
    QuadFlags qf;

    std::string f_label = "const:c=1";
    std::string b_label;
    int n = 1;
    double r = 1.0, s = 2.0, alpha = 1.0, gamma = 1.0, R = 1.0, x = 1.0;
    double p = 1.0, tol = 1e-12;
    bool companion = false, bracket = false, upper = false;
    bool want_c1 = false, want_c2 = false, want_c0 = false, want_series = false,
         want_theorem2 = false;
    int theorem = 1;
    std::string grid_path, csv_name, json_name, out_dir;

    CLI::App* eval_mean = app.add_subcommand("eval-mean", "evaluate a central or companion mean");
    eval_mean->add_option("--f", f_label, "profile label");
    eval_mean->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    eval_mean->add_option("--r", r, "mean order")->required();
    eval_mean->add_option("--alpha", alpha, "weight exponent")->required();
    eval_mean->add_option("--R", R, "radius")->required();
    eval_mean->add_flag("--companion", companion, "exterior variant");
    add_quadrature_flags(eval_mean, qf);

    CLI::App* eval_comm = app.add_subcommand("eval-commutator", "evaluate a commutator mean");
    eval_comm->add_option("--f", f_label, "profile label");
    eval_comm->add_option("--b", b_label, "symbol label")->required();
    eval_comm->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    eval_comm->add_option("--r", r, "mean order")->required();
    eval_comm->add_option("--alpha", alpha, "weight exponent")->required();
    eval_comm->add_option("--R", R, "radius")->required();
    eval_comm->add_flag("--companion", companion, "exterior variant");
    eval_comm->add_flag("--bracket", bracket, "inner-difference form");
    add_quadrature_flags(eval_comm, qf);

    CLI::App* cmo = app.add_subcommand("cmo-norm", "estimate a symbol's mean oscillation");
    cmo->add_option("--b", b_label, "symbol label")->required();
    cmo->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    cmo->add_option("--p", p, "oscillation exponent (grid lower bound)");
    cmo->add_flag("--upper", upper, "sup-based upper bound instead of the grid estimate");
    add_quadrature_flags(cmo, qf);

    CLI::App* consts = app.add_subcommand("constants", "evaluate the catalogued constants");
    consts->add_flag("--c1", want_c1, "shell-decomposition constant, exponent 1/r");
    consts->add_flag("--c2", want_c2, "full-space constant, exponent s/r");
    consts->add_flag("--c0", want_c0, "bracket^(s/r) without the prefactor");
    consts->add_flag("--series", want_series, "underlying shell series");
    consts->add_flag("--theorem2", want_theorem2, "norm-comparison constant");
    consts->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    consts->add_option("--alpha", alpha, "weight exponent");
    consts->add_option("--r", r, "mean order");
    consts->add_option("--s", s, "outer order");
    consts->add_option("--gamma", gamma, "outer weight exponent");
    consts->add_option("--tol", tol, "series tail tolerance");
    consts->add_flag("--companion", companion, "companion variant of --theorem2");

    CLI::App* proof = app.add_subcommand("proof-path", "dyadic shell decomposition at one radius");
    proof->add_option("--f", f_label, "profile label");
    proof->add_option("--b", b_label, "symbol label")->required();
    proof->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    proof->add_option("--r", r, "mean order")->required();
    proof->add_option("--alpha", alpha, "weight exponent")->required();
    proof->add_option("--x", x, "evaluation radius")->required();
    add_quadrature_flags(proof, qf);

    CLI::App* check = app.add_subcommand("check", "verify one inequality instance");
    check->add_option("--theorem", theorem, "inequality number")->required()->check(CLI::Range(1, 4));
    check->add_flag("--companion", companion, "exterior variant");
    check->add_option("--n", n, "dimension")->check(CLI::Range(1, 64));
    check->add_option("--r", r, "inner order");
    check->add_option("--s", s, "outer order");
    check->add_option("--alpha", alpha, "inner weight exponent");
    check->add_option("--gamma", gamma, "outer weight exponent");
    check->add_option("--R", R, "radius (ignored by the full-space variants)");
    check->add_option("--f", f_label, "profile label");
    check->add_option("--b", b_label, "symbol label (third and fourth inequalities)");
    check->add_option("--csv", csv_name, "also write the CSV row to this file");
    check->add_option("--json", json_name, "also write a summary document to this file");
    check->add_option("--output-dir", out_dir, "directory for report files");
    add_quadrature_flags(check, qf);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid and emit reports");
    sweep_cmd->add_option("--grid", grid_path, "grid file (key = value list per line)");
    sweep_cmd->add_option("--csv", csv_name, "CSV report name")->capture_default_str();
    sweep_cmd->add_option("--json", json_name, "JSON summary name")->capture_default_str();
    sweep_cmd->add_option("--output-dir", out_dir, "directory for report files");
    add_quadrature_flags(sweep_cmd, qf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        const QuadratureSpec q = qf.spec();
        if (app.got_subcommand(eval_mean)) {
            const CorpusEntry e = parse_label(f_label);
            const MeanResult m = companion ? companion_mean(e.profile, n, r, alpha, R, q)
                                           : central_mean(e.profile, n, r, alpha, R, q);
            print_value(m.value);
            return kExitOk;
        }
        if (app.got_subcommand(eval_comm)) {
            const CorpusEntry fe = parse_label(f_label);
            const CorpusEntry be = parse_label(b_label);
            const CommutatorParams cp{n, r, alpha, be.profile};
            const MeanResult m = bracket      ? bracket_commutator(fe.profile, cp, R, companion, q)
                                 : companion ? companion_commutator_mean(fe.profile, cp, R, q)
                                             : commutator_mean(fe.profile, cp, R, q);
            print_value(m.value);
            return kExitOk;
        }
        if (app.got_subcommand(cmo)) {
            const CorpusEntry be = parse_label(b_label);
            const OscillationEstimate est =
                upper ? cmo_norm_upper(be.profile, n) : cmo_p_norm(be.profile, p, n);
            print_value(est.value);
            return kExitOk;
        }
        if (app.got_subcommand(consts)) {
            const int picked = static_cast<int>(want_c1) + static_cast<int>(want_c2) +
                               static_cast<int>(want_c0) + static_cast<int>(want_series) +
                               static_cast<int>(want_theorem2);
            if (picked != 1)
                throw InvalidParameterError(
                    "choose exactly one of --c1 --c2 --c0 --series --theorem2");
            double v = 0.0;
            if (want_c1) v = c1(n, alpha, r, tol);
            if (want_c2) v = c2(n, alpha, r, s, gamma, tol);
            if (want_c0) v = c0(n, alpha, r, s, tol);
            if (want_series) v = shell_series(n, alpha, r, tol).value;
            if (want_theorem2) v = theorem2_constant(alpha, gamma, r, s, companion);
            print_value(v);
            return kExitOk;
        }
        if (app.got_subcommand(proof)) {
            const CorpusEntry fe = parse_label(f_label);
            const CorpusEntry be = parse_label(b_label);
            const CommutatorParams cp{n, r, alpha, be.profile};
            const ShellDecompositionReport rep = decompose_I(x, fe.profile, cp, q);
            nlohmann::ordered_json doc;
            doc["x"] = rep.x;
            doc["h"] = rep.h_value;
            doc["I1"] = rep.I1;
            doc["I2"] = rep.I2;
            doc["I3"] = rep.I3;
            doc["bound_constant"] = rep.bound_constant;
            doc["bound_value"] = rep.bound_constant * (rep.I1 + rep.I2 + rep.I3);
            doc["direct_value"] = rep.direct_value;
            doc["reference_index"] = rep.reference_index;
            doc["shells"] = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < rep.shell_indices.size(); ++i) {
                nlohmann::ordered_json sh;
                sh["index"] = rep.shell_indices[i];
                sh["gap"] = rep.shell_gaps[i];
                doc["shells"].push_back(std::move(sh));
            }
            std::printf("%s\n", doc.dump(2).c_str());
            return kExitOk;
        }
        if (app.got_subcommand(check)) {
            if (theorem >= 3 && b_label.empty())
                throw InvalidParameterError("--b is required for the third and fourth inequalities");
            TheoremCase tc;
            tc.theorem = make_theorem(theorem, companion);
            tc.n = n;
            tc.r = r;
            tc.s = s;
            tc.alpha = alpha;
            tc.gamma = gamma;
            tc.R = theorem == 2 || theorem == 4 ? 0.0 : R;
            tc.f_label = f_label;
            tc.b_label = theorem >= 3 ? b_label : "";
            const InequalityReport rep = check_case(tc, q);
            SweepResult res;
            res.reports.push_back(rep);
            res.summary.push_back(summarize_one(rep));
            const std::string csv = reports_to_csv(res.reports);
            std::fputs(csv.c_str(), stdout);
            if (!rep.note.empty()) std::fprintf(stderr, "note: %s\n", rep.note.c_str());
            if (!csv_name.empty()) write_text_file(resolve_output_path(csv_name, out_dir), csv);
            if (!json_name.empty())
                write_text_file(resolve_output_path(json_name, out_dir), summary_to_json(res));
            return rep.verdict == Verdict::Fail ? kExitFail : kExitOk;
        }
        if (app.got_subcommand(sweep_cmd)) {
            const ParameterGrid grid =
                grid_path.empty() ? default_grid() : parse_grid_text(read_file(grid_path));
            const SweepResult res = sweep(grid, q);
            const std::string json = summary_to_json(res);
            if (csv_name.empty()) csv_name = "sweep.csv";
            if (json_name.empty()) json_name = "sweep.json";
            write_text_file(resolve_output_path(csv_name, out_dir), reports_to_csv(res.reports));
            write_text_file(resolve_output_path(json_name, out_dir), json);
            std::fputs(json.c_str(), stdout);
            int failures = 0;
            for (const TheoremSummary& row : res.summary) failures += row.failures;
            return failures > 0 ? kExitFail : kExitOk;
        }
    } catch (const DivergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDivergent;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitBadInput;
    }
    return kExitBadInput;
}
