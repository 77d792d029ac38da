#include "cimeans/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <map>
#include <memory>
#include <set>
#include <unordered_map>
#include <utility>

#include "cimeans/cmo.hpp"
#include "cimeans/commutators.hpp"
#include "cimeans/constants.hpp"
#include "cimeans/errors.hpp"
#include "cimeans/means.hpp"

namespace cimeans {

namespace {

constexpr double kReportTol = 1e-6;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_number(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end == nullptr || *end != '\0')
        throw InvalidParameterError("bad numeric value '" + s + "'");
    return v;
}

/// Radius-keyed cache so repeated outer quadratures share inner evaluations.
std::function<double(double)> memoized(std::function<double(double)> fn) {
    auto cache = std::make_shared<std::unordered_map<std::uint64_t, double>>();
    return [cache, fn = std::move(fn)](double t) {
        std::uint64_t bits = 0;
        std::memcpy(&bits, &t, sizeof bits);
        const auto it = cache->find(bits);
        if (it != cache->end()) return it->second;
        const double v = fn(t);
        cache->emplace(bits, v);
        return v;
    };
}

/// Shared lookups for one run: parsed labels, inner-mean profiles (closed
/// forms when the corpus supplies them), commutator profiles, symbol norms,
/// and the weighted norms / nested means that repeat across grid cases.
struct Workspace {
    std::map<std::string, CorpusEntry> entries;
    std::map<std::string, RadialProfile> mean_profiles;
    std::map<std::string, RadialProfile> comm_profiles;
    std::map<std::string, double> cmo_uppers;
    std::map<std::string, std::optional<MeanResult>> f_norms;
    std::map<std::string, std::optional<MeanResult>> nested_means;

    const CorpusEntry& entry(const std::string& label) {
        auto it = entries.find(label);
        if (it == entries.end()) it = entries.emplace(label, parse_label(label)).first;
        return it->second;
    }

    const RadialProfile& inner_mean(const CorpusEntry& e, int n, double r, double alpha,
                                    bool companion, const QuadratureSpec& inner_spec) {
        const std::string key = e.profile.label + "|" + std::to_string(n) + "|" + fmt(r) + "|" +
                                fmt(alpha) + (companion ? "|c" : "|i");
        auto it = mean_profiles.find(key);
        if (it == mean_profiles.end()) {
            RadialProfile prof = mean_profile(e.profile, n, r, alpha, companion, inner_spec);
            if (e.closed_form_mean) {
                const auto cf = e.closed_form_mean;
                prof.eval_fn = [cf, n, r, alpha, companion](double t) {
                    const std::optional<double> v = cf(MeanQuery{n, r, alpha, t, companion});
                    if (!v) throw DivergenceError("inner mean undefined at radius " + fmt(t));
                    return *v;
                };
            } else {
                prof.eval_fn = memoized(std::move(prof.eval_fn));
            }
            it = mean_profiles.emplace(key, std::move(prof)).first;
        }
        return it->second;
    }

    const RadialProfile& commutator(const CorpusEntry& fe, const CorpusEntry& be, int n, double r,
                                    double alpha, bool companion,
                                    const QuadratureSpec& inner_spec) {
        const std::string key = fe.profile.label + "|" + be.profile.label + "|" +
                                std::to_string(n) + "|" + fmt(r) + "|" + fmt(alpha) +
                                (companion ? "|c" : "|i");
        auto it = comm_profiles.find(key);
        if (it == comm_profiles.end()) {
            const CommutatorParams cp{n, r, alpha, be.profile};
            RadialProfile prof = commutator_profile(fe.profile, cp, companion, inner_spec);
            prof.eval_fn = memoized(std::move(prof.eval_fn));
            it = comm_profiles.emplace(key, std::move(prof)).first;
        }
        return it->second;
    }

    double cmo_upper(const CorpusEntry& be, int n) {
        const std::string key = be.profile.label + "|" + std::to_string(n);
        auto it = cmo_uppers.find(key);
        if (it == cmo_uppers.end()) {
            double value = cmo_norm_upper(be.profile, n).value;
            // Constant symbols report quadrature dust (~1e-11) instead of an
            // exact zero; every genuinely oscillating symbol in the corpus sits
            // above 0.1, so anything this small is noise.
            if (value < 1e-9) value = 0.0;
            it = cmo_uppers.emplace(key, value).first;
        }
        return it->second;
    }

    MeanResult f_norm(const CorpusEntry& fe, int n, double s, double gamma,
                      const QuadratureSpec& q) {
        const std::string key =
            fe.profile.label + "|" + std::to_string(n) + "|" + fmt(s) + "|" + fmt(gamma);
        auto it = f_norms.find(key);
        if (it == f_norms.end()) {
            std::optional<MeanResult> res;
            try {
                if (fe.closed_form_weighted_norm) {
                    const std::optional<double> v =
                        fe.closed_form_weighted_norm(NormQuery{n, s, gamma});
                    if (!v) throw DivergenceError("weighted norm diverges");
                    res = MeanResult{*v, 0.0};
                } else {
                    res = weighted_norm(fe.profile, n, s, gamma, q);
                }
            } catch (const DivergenceError&) {
                res = std::nullopt;
            }
            it = f_norms.emplace(key, res).first;
        }
        if (!it->second) throw DivergenceError("weighted norm of f diverges");
        return *it->second;
    }

    MeanResult nested(const CorpusEntry& e, int n, double inner_r, double inner_alpha,
                      double outer_r, double outer_alpha, double R, bool companion,
                      const QuadratureSpec& q) {
        const std::string key = e.profile.label + "|" + std::to_string(n) + "|" + fmt(inner_r) +
                                "|" + fmt(inner_alpha) + "|" + fmt(outer_r) + "|" +
                                fmt(outer_alpha) + "|" + fmt(R) + (companion ? "|c" : "|i");
        auto it = nested_means.find(key);
        if (it == nested_means.end()) {
            std::optional<MeanResult> res;
            try {
                const RadialProfile& prof =
                    inner_mean(e, n, inner_r, inner_alpha, companion, q.inner());
                res = companion ? companion_mean(prof, n, outer_r, outer_alpha, R, q)
                                : central_mean(prof, n, outer_r, outer_alpha, R, q);
            } catch (const DivergenceError&) {
                res = std::nullopt;
            }
            it = nested_means.emplace(key, res).first;
        }
        if (!it->second) throw DivergenceError("nested mean diverges");
        return *it->second;
    }
};

/// value^s with first-order error propagation (s > 0 in every caller).
std::pair<double, double> pow_s(const MeanResult& m, double s) {
    if (m.value <= 0.0) return {0.0, std::pow(std::max(m.abs_err, 0.0), s)};
    const double v = std::pow(m.value, s);
    return {v, s * v / m.value * m.abs_err};
}

InequalityReport degenerate_report(const TheoremCase& tc, double constant,
                                   const std::string& note, std::optional<double> cmo = {}) {
    InequalityReport rep;
    rep.tc = tc;
    rep.constant = constant;
    rep.verdict = Verdict::Degenerate;
    rep.note = note;
    rep.cmo_bound_used = cmo;
    return rep;
}

InequalityReport finish(const TheoremCase& tc, double lhs, double lhs_err, double rhs,
                        double rhs_err, double constant, const QuadratureSpec& q,
                        std::optional<double> cmo) {
    InequalityReport rep;
    rep.tc = tc;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.constant = constant;
    rep.quadrature_error = lhs_err + constant * rhs_err;
    rep.cmo_bound_used = cmo;
    const double denom = constant * rhs;
    rep.ratio = denom > 0.0 ? lhs / denom : 0.0;
    if (!std::isfinite(denom) || denom < q.abs_tol) {
        rep.verdict = Verdict::Degenerate;
        rep.note = "right side below tolerance";
        return rep;
    }
    const double safe_rhs = constant * std::max(rhs - rhs_err, 0.0);
    if (lhs + lhs_err <= (1.0 + kReportTol) * safe_rhs) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        rep.note = "conservative ratio above 1 + report tolerance";
    }
    return rep;
}

InequalityReport run_theorem1(Workspace& ws, const TheoremCase& tc, const QuadratureSpec& q) {
    const bool comp = theorem_is_companion(tc.theorem);
    const CorpusEntry& fe = ws.entry(tc.f_label);
    MeanResult rhs;
    try {
        rhs = ws.nested(fe, tc.n, tc.s, tc.gamma, tc.r, tc.alpha, tc.R, comp, q);
    } catch (const DivergenceError& e) {
        return degenerate_report(tc, 1.0, std::string("right side diverges: ") + e.what());
    }
    try {
        const MeanResult lhs = ws.nested(fe, tc.n, tc.r, tc.alpha, tc.s, tc.gamma, tc.R, comp, q);
        return finish(tc, lhs.value, lhs.abs_err, rhs.value, rhs.abs_err, 1.0, q, {});
    } catch (const DivergenceError& e) {
        InequalityReport rep =
            degenerate_report(tc, 1.0, std::string("left side did not converge: ") + e.what());
        rep.rhs = rhs.value;
        return rep;
    }
}

InequalityReport run_theorem2(Workspace& ws, const TheoremCase& tc, const QuadratureSpec& q) {
    const bool comp = theorem_is_companion(tc.theorem);
    const CorpusEntry& fe = ws.entry(tc.f_label);
    const double constant = theorem2_constant(tc.alpha, tc.gamma, tc.r, tc.s, comp);
    std::pair<double, double> rhs;
    try {
        rhs = pow_s(ws.f_norm(fe, tc.n, tc.s, tc.gamma, q), tc.s);
    } catch (const DivergenceError& e) {
        return degenerate_report(tc, constant, std::string("right side diverges: ") + e.what());
    }
    try {
        const RadialProfile& prof = ws.inner_mean(fe, tc.n, tc.r, tc.alpha, comp, q.inner());
        const std::pair<double, double> lhs = pow_s(weighted_norm(prof, tc.n, tc.s, tc.gamma, q),
                                                    tc.s);
        return finish(tc, lhs.first, lhs.second, rhs.first, rhs.second, constant, q, {});
    } catch (const DivergenceError& e) {
        InequalityReport rep = degenerate_report(
            tc, constant, std::string("left side did not converge: ") + e.what());
        rep.rhs = rhs.first;
        return rep;
    }
}

InequalityReport run_theorem3(Workspace& ws, const TheoremCase& tc, const QuadratureSpec& q) {
    const bool comp = theorem_is_companion(tc.theorem);
    const CorpusEntry& fe = ws.entry(tc.f_label);
    const CorpusEntry& be = ws.entry(tc.b_label);
    if (!be.profile.sup_bound)
        throw UnboundedSymbolError("symbol '" + tc.b_label + "' has no sup bound");
    const double cmo = ws.cmo_upper(be, tc.n);
    const double constant = c1(tc.n, tc.alpha, tc.r);
    MeanResult mix{0.0, 0.0};
    if (cmo > 0.0) {
        try {
            mix = ws.nested(fe, tc.n, tc.s, tc.gamma, tc.r, 1.0, tc.R, comp, q);
        } catch (const DivergenceError& e) {
            return degenerate_report(tc, constant,
                                     std::string("right side diverges: ") + e.what(), cmo);
        }
    }
    const double rhs = cmo * mix.value;
    const double rhs_err = cmo * mix.abs_err;
    const RadialProfile& cprof = ws.commutator(fe, be, tc.n, tc.r, tc.alpha, comp, q.inner());
    try {
        const MeanResult lhs = comp ? companion_mean(cprof, tc.n, tc.s, tc.gamma, tc.R, q)
                                    : central_mean(cprof, tc.n, tc.s, tc.gamma, tc.R, q);
        return finish(tc, lhs.value, lhs.abs_err, rhs, rhs_err, constant, q, cmo);
    } catch (const DivergenceError& e) {
        InequalityReport rep = degenerate_report(
            tc, constant, std::string("left side did not converge: ") + e.what(), cmo);
        rep.rhs = rhs;
        return rep;
    }
}

InequalityReport run_theorem4(Workspace& ws, const TheoremCase& tc, const QuadratureSpec& q) {
    const bool comp = theorem_is_companion(tc.theorem);
    const CorpusEntry& fe = ws.entry(tc.f_label);
    const CorpusEntry& be = ws.entry(tc.b_label);
    if (!be.profile.sup_bound)
        throw UnboundedSymbolError("symbol '" + tc.b_label + "' has no sup bound");
    const double cmo = ws.cmo_upper(be, tc.n);
    const double constant = c2(tc.n, tc.alpha, tc.r, tc.s, tc.gamma);
    std::pair<double, double> fs{0.0, 0.0};
    if (cmo > 0.0) {
        try {
            fs = pow_s(ws.f_norm(fe, tc.n, tc.s, tc.gamma, q), tc.s);
        } catch (const DivergenceError& e) {
            return degenerate_report(tc, constant,
                                     std::string("right side diverges: ") + e.what(), cmo);
        }
    }
    const double cmo_s = std::pow(cmo, tc.s);
    const double rhs = cmo_s * fs.first;
    const double rhs_err = cmo_s * fs.second;
    const RadialProfile& cprof = ws.commutator(fe, be, tc.n, tc.r, tc.alpha, comp, q.inner());
    try {
        const std::pair<double, double> lhs =
            pow_s(weighted_norm(cprof, tc.n, tc.s, tc.gamma, q), tc.s);
        return finish(tc, lhs.first, lhs.second, rhs, rhs_err, constant, q, cmo);
    } catch (const DivergenceError& e) {
        InequalityReport rep = degenerate_report(
            tc, constant, std::string("left side did not converge: ") + e.what(), cmo);
        rep.rhs = rhs;
        return rep;
    }
}

InequalityReport run_case(Workspace& ws, const TheoremCase& tc, const QuadratureSpec& q) {
    switch (theorem_number(tc.theorem)) {
    case 1: return run_theorem1(ws, tc, q);
    case 2: return run_theorem2(ws, tc, q);
    case 3: return run_theorem3(ws, tc, q);
    default: return run_theorem4(ws, tc, q);
    }
}

void require(const TheoremCase& tc, int number) {
    if (theorem_number(tc.theorem) != number)
        throw InvalidParameterError("case names a different inequality");
    const HypothesisResult h = hypothesis_check(tc);
    if (!h.ok) throw HypothesisViolationError(h.reason);
}

const TheoremId kAllTheorems[] = {
    TheoremId::T1Central, TheoremId::T1Companion, TheoremId::T2Central, TheoremId::T2Companion,
    TheoremId::T3Central, TheoremId::T3Companion, TheoremId::T4Central, TheoremId::T4Companion,
};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
        if (end > pos) out.push_back(s.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

} // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
    case TheoremId::T1Central: return "T1-central";
    case TheoremId::T1Companion: return "T1-companion";
    case TheoremId::T2Central: return "T2-central";
    case TheoremId::T2Companion: return "T2-companion";
    case TheoremId::T3Central: return "T3-central";
    case TheoremId::T3Companion: return "T3-companion";
    case TheoremId::T4Central: return "T4-central";
    default: return "T4-companion";
    }
}

TheoremId parse_theorem(const std::string& name) {
    for (TheoremId id : kAllTheorems)
        if (theorem_name(id) == name) return id;
    throw InvalidParameterError("unknown theorem '" + name + "'");
}

TheoremId make_theorem(int number, bool companion) {
    if (number < 1 || number > 4)
        throw InvalidParameterError("theorem number must be between 1 and 4");
    return static_cast<TheoremId>((number - 1) * 2 + (companion ? 1 : 0));
}

int theorem_number(TheoremId id) { return static_cast<int>(id) / 2 + 1; }

bool theorem_is_companion(TheoremId id) { return static_cast<int>(id) % 2 == 1; }

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "degenerate";
    }
}

std::string case_key(const TheoremCase& tc) {
    return theorem_name(tc.theorem) + "|n=" + std::to_string(tc.n) + "|r=" + fmt(tc.r) +
           "|s=" + fmt(tc.s) + "|alpha=" + fmt(tc.alpha) + "|gamma=" + fmt(tc.gamma) +
           "|R=" + fmt(tc.R) + "|f=" + tc.f_label + "|b=" + tc.b_label;
}

HypothesisResult hypothesis_check(const TheoremCase& tc) {
    const int num = theorem_number(tc.theorem);
    const bool comp = theorem_is_companion(tc.theorem);
    if (tc.n < 1) return {false, "n >= 1 required"};
    if (!std::isfinite(tc.r) || !std::isfinite(tc.s) || !std::isfinite(tc.alpha) ||
        !std::isfinite(tc.gamma))
        return {false, "parameters must be finite"};
    switch (num) {
    case 1:
        if (tc.r == 0.0 || tc.s == 0.0) return {false, "r and s must be nonzero"};
        if (!(tc.r < tc.s)) return {false, "r < s required"};
        if (!(tc.R > 0.0) || std::isinf(tc.R)) return {false, "R > 0 required"};
        return {true, ""};
    case 2: {
        if (tc.r == 0.0) return {false, "r must be nonzero"};
        if (!(tc.s > 0.0)) return {false, "s > 0 required"};
        const double d = tc.alpha - tc.gamma * tc.r / tc.s;
        if (!comp && !(d > 0.0)) return {false, "alpha - gamma*r/s > 0 required"};
        if (comp && !(d < 0.0)) return {false, "gamma*r/s - alpha > 0 required"};
        return {true, ""};
    }
    default: {
        if (!(tc.r > 0.0) || !(tc.s > tc.r)) return {false, "s > r > 0 required"};
        if (!comp && !(tc.alpha > 1.0)) return {false, "alpha > 1 required"};
        if (comp && !(tc.alpha < 1.0)) return {false, "alpha < 1 required"};
        if (num == 3) {
            if (!(tc.R > 0.0) || std::isinf(tc.R)) return {false, "R > 0 required"};
        } else {
            if (!comp && !(tc.gamma < tc.s / tc.r)) return {false, "gamma < s/r required"};
            if (comp && !(tc.gamma > tc.s / tc.r)) return {false, "gamma > s/r required"};
        }
        try {
            if (!parse_label(tc.f_label).profile.locally_bounded)
                return {false, "f must be locally bounded"};
        } catch (const InvalidParameterError&) {
            return {false, "unknown f label '" + tc.f_label + "'"};
        }
        return {true, ""};
    }
    }
}

InequalityReport check_theorem1(const TheoremCase& tc, const QuadratureSpec& q) {
    require(tc, 1);
    Workspace ws;
    return run_theorem1(ws, tc, q);
}

InequalityReport check_theorem2(const TheoremCase& tc, const QuadratureSpec& q) {
    require(tc, 2);
    Workspace ws;
    return run_theorem2(ws, tc, q);
}

InequalityReport check_theorem3(const TheoremCase& tc, const QuadratureSpec& q) {
    require(tc, 3);
    Workspace ws;
    return run_theorem3(ws, tc, q);
}

InequalityReport check_theorem4(const TheoremCase& tc, const QuadratureSpec& q) {
    require(tc, 4);
    Workspace ws;
    return run_theorem4(ws, tc, q);
}

InequalityReport check_case(const TheoremCase& tc, const QuadratureSpec& q) {
    require(tc, theorem_number(tc.theorem));
    Workspace ws;
    return run_case(ws, tc, q);
}

ParameterGrid default_grid() { return ParameterGrid{}; }

double parse_s_token(const std::string& token, double r) {
    const std::string t = trim(token);
    if (t.empty()) throw InvalidParameterError("empty s token");
    if (t == "r") return r;
    if (t.rfind("r+", 0) == 0) return r + parse_number(t.substr(2));
    if (t.size() > 1 && t.back() == 'r') return parse_number(t.substr(0, t.size() - 1)) * r;
    return parse_number(t);
}

ParameterGrid parse_grid_text(const std::string& text) {
    ParameterGrid g;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidParameterError("grid line " + std::to_string(lineno) + " has no '='");
        const std::string key = trim(line.substr(0, eq));
        const std::vector<std::string> vals = split_ws(line.substr(eq + 1));
        auto doubles = [&vals]() {
            std::vector<double> out;
            for (const std::string& v : vals) out.push_back(parse_number(v));
            return out;
        };
        if (key == "n") {
            g.n.clear();
            for (const std::string& v : vals) {
                const double d = parse_number(v);
                if (d != std::floor(d) || d < 1)
                    throw InvalidParameterError("n values must be positive integers");
                g.n.push_back(static_cast<int>(d));
            }
        } else if (key == "r") {
            g.r = doubles();
        } else if (key == "s") {
            g.s = vals;
        } else if (key == "alpha") {
            g.alpha = doubles();
        } else if (key == "gamma") {
            g.gamma = doubles();
        } else if (key == "R") {
            g.R = doubles();
        } else if (key == "negative_r") {
            g.negative_r = doubles();
        } else if (key == "theorems") {
            g.theorems = vals;
        } else if (key == "f") {
            g.f_labels = vals;
        } else if (key == "b") {
            g.b_labels = vals;
        } else {
            throw InvalidParameterError("unknown grid key '" + key + "'");
        }
    }
    return g;
}

std::vector<TheoremCase> expand_grid(const ParameterGrid& grid) {
    std::vector<std::string> theorems = grid.theorems;
    if (theorems.empty())
        for (TheoremId id : kAllTheorems) theorems.push_back(theorem_name(id));
    std::vector<std::string> fs = grid.f_labels;
    if (fs.empty())
        for (const CorpusEntry& e : default_corpus()) fs.push_back(e.profile.label);
    std::vector<std::string> bs = grid.b_labels;
    if (bs.empty())
        for (const CorpusEntry& e : default_symbols()) bs.push_back(e.profile.label);

    std::map<std::string, bool> positive;
    for (const std::string& lab : fs) positive[lab] = parse_label(lab).profile.positive_everywhere();

    std::vector<TheoremCase> out;
    std::set<std::string> seen;
    auto push = [&out, &seen](TheoremCase tc) {
        if (seen.insert(case_key(tc)).second) out.push_back(std::move(tc));
    };

    for (const std::string& tname : theorems) {
        const TheoremId id = parse_theorem(tname);
        const int num = theorem_number(id);
        std::vector<double> rs = grid.r;
        if (num <= 2) rs.insert(rs.end(), grid.negative_r.begin(), grid.negative_r.end());
        const bool needs_R = num == 1 || num == 3;
        const bool needs_b = num >= 3;
        const std::vector<double> Rs = needs_R ? grid.R : std::vector<double>{0.0};
        for (int n : grid.n)
            for (double r : rs) {
                std::vector<double> ss;
                for (const std::string& tok : grid.s) ss.push_back(parse_s_token(tok, r));
                std::sort(ss.begin(), ss.end());
                ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
                for (double s : ss)
                    for (double alpha : grid.alpha)
                        for (double gamma : grid.gamma)
                            for (double R : Rs)
                                for (const std::string& f : fs) {
                                    if (r < 0.0 && !positive[f]) continue;
                                    if (!needs_b) {
                                        push(TheoremCase{id, n, r, s, alpha, gamma, R, f, ""});
                                    } else {
                                        for (const std::string& b : bs)
                                            push(TheoremCase{id, n, r, s, alpha, gamma, R, f, b});
                                    }
                                }
            }
    }
    return out;
}

SweepResult sweep(const std::vector<TheoremCase>& cases, const QuadratureSpec& q) {
    std::vector<const TheoremCase*> order;
    order.reserve(cases.size());
    for (const TheoremCase& tc : cases) order.push_back(&tc);
    std::sort(order.begin(), order.end(), [](const TheoremCase* a, const TheoremCase* b) {
        return case_key(*a) < case_key(*b);
    });

    Workspace ws;
    SweepResult out;
    std::map<std::string, TheoremSummary> agg;
    for (const TheoremCase* tcp : order) {
        const TheoremCase& tc = *tcp;
        TheoremSummary& row = agg[theorem_name(tc.theorem)];
        row.theorem = theorem_name(tc.theorem);
        const HypothesisResult h = hypothesis_check(tc);
        if (!h.ok) {
            ++row.skipped;
            continue;
        }
        InequalityReport rep;
        try {
            rep = run_case(ws, tc, q);
        } catch (const std::exception& e) {
            rep = degenerate_report(tc, 0.0, std::string("not evaluated: ") + e.what());
        }
        switch (rep.verdict) {
        case Verdict::Pass: ++row.passes; break;
        case Verdict::Fail: ++row.failures; break;
        case Verdict::Degenerate: ++row.degenerates; break;
        }
        if (rep.verdict != Verdict::Degenerate) row.max_ratio = std::max(row.max_ratio, rep.ratio);
        out.reports.push_back(std::move(rep));
    }
    for (TheoremId id : kAllTheorems) {
        const auto it = agg.find(theorem_name(id));
        if (it != agg.end()) out.summary.push_back(it->second);
    }
    return out;
}

SweepResult sweep(const ParameterGrid& grid, const QuadratureSpec& q) {
    return sweep(expand_grid(grid), q);
}

} // namespace cimeans
