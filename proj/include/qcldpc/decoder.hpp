#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/bitvec.hpp"
#include "qcldpc/qc_code.hpp"
#include "qcldpc/quantize.hpp"

namespace qcldpc {

enum class Arithmetic { float_ref, fixed };

struct DecoderConfig {
    int t_max = 13;
    Arithmetic arith = Arithmetic::float_ref;
    FixedFormat fmt;             // used when arith == fixed
    bool early_exit = true;      // hardware runs fixed t_max; see --fixed-iterations
};

struct DecodeResult {
    BitVector u_hat;
    bool success = false;        // syndrome(u_hat) == target, recomputed via qc_code
    int iterations_used = 0;
    std::vector<double> reliabilities;  // |L_q| per bit; integer codes in fixed mode

    // Instrumentation: every layer once per iteration, every edge rewritten.
    int layers_per_iteration = 0;
    int64_t edges_per_iteration = 0;
};

/// Layered syndrome decoder. Per layer: variable-to-check (L_q - L_r_old),
/// check update with the (1-2s_m) syndrome sign and Phi-sum magnitude, then
/// the total update with the freshly computed check message. Hard decision
/// and early termination are checked after each full iteration.
DecodeResult decode(const QCCode& code, const std::vector<double>& llr, const BitVector& s,
                    const DecoderConfig& cfg);

/// Eq.-level operations, exposed for direct testing.
double vnu_message(double l_q, double l_r_prev);
QValue vnu_message(const QValue& l_q, const QValue& l_r_prev);
double cnu_message(const std::vector<double>& other_neighbors, int syndrome_bit);
QValue cnu_message(const std::vector<QValue>& other_neighbors, int syndrome_bit,
                   const PhiTable& tbl);
double total_update(double l_q_nm, double l_r_new);
QValue total_update(const QValue& l_q_nm, const QValue& l_r_new);
BitVector hard_decision(const std::vector<double>& l_q);

// Message-update kernels shared with the datapath model; both sides calling
// the same code is what makes the bit-exact equivalence checks meaningful.
namespace kernels {

/// Check-to-variable magnitudes cap here (Phi^-1 of an empty/zero sum is
/// unbounded); everything below the cap is exact IEEE arithmetic.
inline constexpr double llr_cap = 300.0;

double phi_float(double x);

/// msgs: the row's variable-to-check messages in ascending block order.
/// Writes the per-edge check-to-variable messages to out.
void check_row_update_float(const double* msgs, int deg, int syndrome_bit, double* out);
void check_row_update_fixed(const int32_t* msgs, int deg, int syndrome_bit, const PhiTable& tbl,
                            int32_t* out);

}  // namespace kernels

}  // namespace qcldpc
