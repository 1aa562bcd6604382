#pragma once

#include <map>
#include <string>
#include <vector>

#include "jsrlab/matset/matrix.hpp"
#include "jsrlab/ops/tail_seq.hpp"

namespace jsrlab::ops {

/// One stored diagonal: entries T[j + offset][j] = pattern(j) for the valid
/// columns (j >= 0 and j + offset >= 0). offset > 0 lies below the main
/// diagonal (a forward shift), offset < 0 above it.
struct Diagonal {
    int offset = 0;
    TailSeq pattern;
};

struct ComposeOptions {
    size_t max_cycle = 4096;   // lcm budget for composed cycles
    int max_correction = 4096; // guard on the dense window size
};

/// Banded operator on the space of absolutely summable sequences: eventually
/// periodic diagonals plus a finite square correction block added at the
/// top-left. The model stays exactly closed under composition.
class BandedOperator {
public:
    BandedOperator() = default;
    BandedOperator(std::vector<Diagonal> diagonals, std::vector<std::vector<double>> correction);

    int bandwidth() const { return bandwidth_; }
    int correction_size() const { return static_cast<int>(correction_.size()); }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    const std::vector<std::vector<double>>& correction() const { return correction_; }

    /// Entry at (row i, column j), i,j >= 0.
    double entry(long long i, long long j) const;

    bool operator==(const BandedOperator& rhs) const;

    /// Entrywise scaling (used to keep norm iterations inside double range).
    BandedOperator scaled(double s) const;

    /// Upper-left d x d dense truncation.
    Matrix truncate(int d) const;

private:
    int bandwidth_ = 0;
    std::vector<Diagonal> diagonals_;               // sorted by offset, non-zero, normalized
    std::vector<std::vector<double>> correction_;   // square, possibly empty
};

/// Exact composition a*b (apply b first). Throws BudgetError when composed
/// cycle lengths exceed the lcm budget.
BandedOperator compose(const BandedOperator& a, const BandedOperator& b,
                       const ComposeOptions& opt = {});

/// sup over columns of the column absolute sum (the operator norm for
/// column-summable spaces). Exact: finite scan + one full cycle.
double op_norm(const BandedOperator& t);

/// Distance to the compact operators: the periodic tail's max column sum
/// (prefix and correction are compact perturbations here).
double essential_norm(const BandedOperator& t);

/// Distance to the finite-rank operators, computed as the inf over column
/// cutoffs n of sup_{j>=n} colsum(j). Coincides with essential_norm.
double f_norm(const BandedOperator& t);

/// Hausdorff measure of noncompactness of the image of the unit ball; for this
/// class the escaping column supports force it to equal the tail column-sum
/// max, so it is read directly off the reduced tail cycle.
double chi_norm(const BandedOperator& t);

struct ChiSubmultReport {
    double chi_ab = 0.0;
    double chi_a_op_b = 0.0;
    double op_a_chi_b = 0.0;
    bool ok = false; // chi_ab <= min of the two mixed bounds
};

ChiSubmultReport chi_submult_check(const BandedOperator& a, const BandedOperator& b,
                                   const ComposeOptions& opt = {});

/// Parse {"bandwidth": b, "diagonals": [{"offset": o, "prefix": [...],
/// "cycle": [...]}], "correction": [[...]]}. Errors carry JSON paths.
BandedOperator parse_operator(const std::string& json_text);
std::vector<BandedOperator> parse_operator_set(const std::string& json_text);
std::string operator_to_json(const BandedOperator& t);

} // namespace jsrlab::ops
