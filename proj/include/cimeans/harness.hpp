#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cimeans/profiles.hpp"
#include "cimeans/quadrature.hpp"

namespace cimeans {

enum class TheoremId {
    T1Central,
    T1Companion,
    T2Central,
    T2Companion,
    T3Central,
    T3Companion,
    T4Central,
    T4Companion,
};

std::string theorem_name(TheoremId id); // "T1-central", "T3-companion", ...
TheoremId parse_theorem(const std::string& name);
TheoremId make_theorem(int number, bool companion);
int theorem_number(TheoremId id);
bool theorem_is_companion(TheoremId id);

/// One parameterized instance of an inequality.  R is ignored by the
/// full-space variants (2 and 4); b_label is empty for the symbol-free ones
/// (1 and 2).
struct TheoremCase {
    TheoremId theorem = TheoremId::T1Central;
    int n = 1;
    double r = 1.0;
    double s = 2.0;
    double alpha = 1.0;
    double gamma = 1.0;
    double R = 1.0;
    std::string f_label = "const:c=1";
    std::string b_label;
};

std::string case_key(const TheoremCase& tc); // stable ordering / dedup key

struct HypothesisResult {
    bool ok = false;
    std::string reason; // names the violated condition when not ok
};

HypothesisResult hypothesis_check(const TheoremCase& tc);

enum class Verdict { Pass, Fail, Degenerate };
std::string verdict_name(Verdict v);

/// Both sides of one inequality instance.  ratio = lhs / (constant * rhs);
/// the verdict is decided conservatively: lhs inflated by its quadrature
/// error, rhs deflated, so a pass means the inequality held numerically.
struct InequalityReport {
    TheoremCase tc;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;
    double ratio = 0.0;
    Verdict verdict = Verdict::Degenerate;
    double quadrature_error = 0.0;
    std::optional<double> cmo_bound_used;
    std::string note;
};

InequalityReport check_theorem1(const TheoremCase& tc, const QuadratureSpec& q = {});
InequalityReport check_theorem2(const TheoremCase& tc, const QuadratureSpec& q = {});
InequalityReport check_theorem3(const TheoremCase& tc, const QuadratureSpec& q = {});
InequalityReport check_theorem4(const TheoremCase& tc, const QuadratureSpec& q = {});
InequalityReport check_case(const TheoremCase& tc, const QuadratureSpec& q = {});

/// Cartesian sweep description.  s entries may reference r ("r+0.5", "2r")
/// or stand alone ("3"); negative_r adds extra r values for the first two
/// inequalities, paired only with strictly positive profiles.  Empty label
/// or theorem lists fall back to the defaults.
struct ParameterGrid {
    std::vector<int> n{1, 2, 3};
    std::vector<double> r{0.5, 1.0, 2.0};
    std::vector<std::string> s{"r+0.5", "2r", "3"};
    std::vector<double> alpha{0.25, 0.5, 1.5, 2.0, 3.0};
    std::vector<double> gamma{-1.0, 0.0, 0.5, 1.0, 2.0};
    std::vector<double> R{0.5, 1.0, 5.0};
    std::vector<double> negative_r{-1.0};
    std::vector<std::string> theorems;
    std::vector<std::string> f_labels;
    std::vector<std::string> b_labels;
};

ParameterGrid default_grid();
double parse_s_token(const std::string& token, double r);
/// Key-value grid text: one "key = v1 v2 ..." per line, '#' comments.
ParameterGrid parse_grid_text(const std::string& text);
std::vector<TheoremCase> expand_grid(const ParameterGrid& grid);

struct TheoremSummary {
    std::string theorem;
    int passes = 0;
    int failures = 0;
    int degenerates = 0;
    int skipped = 0; // hypothesis filter
    double max_ratio = 0.0;
};

struct SweepResult {
    std::vector<InequalityReport> reports; // sorted by case_key
    std::vector<TheoremSummary> summary;   // canonical theorem order
};

SweepResult sweep(const std::vector<TheoremCase>& cases, const QuadratureSpec& q = {});
SweepResult sweep(const ParameterGrid& grid, const QuadratureSpec& q = {});

} // namespace cimeans
