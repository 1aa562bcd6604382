#pragma once

#include <vector>

#include "jsrlab/jsr/bracket.hpp"
#include "jsrlab/matset/matrix_set.hpp"

namespace jsrlab {

struct SemigroupOptions {
    NormKind norm = NormKind::InducedInf;
    double dedup_tol = 1e-12;       // relative, per enumeration level
    size_t budget = 200000;         // total products formed
    double unbounded_guard = 1e8;   // norm ceiling before limit machinery bails
};

/// Products of the generators grouped by word length 1..max_len, each level
/// deduplicated canonically.
struct SemigroupSlice {
    std::vector<std::vector<Matrix>> by_length;
    size_t total = 0;
};

SemigroupSlice enumerate_semigroup(const MatrixSet& m, int max_len,
                                   const SemigroupOptions& opt = {});

/// Length-n elements whose norm reaches the sup over all strictly shorter
/// lengths (ties count: the comparison is >=). These are the candidates from
/// which norm-leading sequences are drawn.
struct LeadingReport {
    std::vector<double> level_sup;            // sup of norms at each length
    std::vector<double> shorter_sup;          // sup over lengths < n (0 for n = 1)
    std::vector<std::vector<Matrix>> leading; // per length
    bool every_length_has_leading = false;
};

LeadingReport leading_elements(const MatrixSet& m, int max_len, const SemigroupOptions& opt = {});

/// Growth classification for the norm sups: compares the cumulative sup at
/// max_len against the one at max_len/2.
enum class GrowthVerdict { Found, Bounded, Inconclusive };

struct LeadingSequenceReport {
    GrowthVerdict verdict = GrowthVerdict::Inconclusive;
    std::vector<double> cumulative_sup; // by length 1..max_len
    double growth_ratio = 0.0;          // cum_sup(max_len) / cum_sup(max_len/2)
};

LeadingSequenceReport leading_sequence_probe(const MatrixSet& m, int max_len,
                                             const SemigroupOptions& opt = {});

/// Cluster of long products that stay within tol of each other: a finite-run
/// stand-in for a limit element of the semigroup. Only clusters witnessed by
/// at least two distinct word lengths survive.
struct LimPoint {
    Matrix rep;          // member with the longest word length
    size_t cluster_size = 0;
    int min_length = 0;
    int max_length = 0;
};

std::vector<LimPoint> lim_points(const MatrixSet& m, int max_len, double tol,
                                 const SemigroupOptions& opt = {});

/// Products e with ||e^2 - e|| <= tol and ||e|| >= 1/2 (near-idempotents;
/// the norm floor rules out the zero matrix).
std::vector<Matrix> idempotent_scan(const MatrixSet& m, int max_len, double tol,
                                    const SemigroupOptions& opt = {});

/// Rescale the set so its joint spectral radius brackets 1: divides every
/// member by the bracket midpoint. Fails on sets with zero radius.
struct ScaleReport {
    MatrixSet scaled;
    double factor = 0.0;   // multiplier applied to every member
    double rho_mid = 0.0;  // bracket midpoint of the original set
    Bracket bracket;
};

ScaleReport scale_to_unit_rho(const MatrixSet& m, double delta, const JsrOptions& opt = {});

} // namespace jsrlab
