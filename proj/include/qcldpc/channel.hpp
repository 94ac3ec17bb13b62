#pragma once

#include <cstdint>
#include <vector>

#include "qcldpc/bitvec.hpp"
#include "qcldpc/qc_code.hpp"

namespace qcldpc {

/// BIAWGN channel at linear SNR (unit-energy antipodal signalling, so
/// sigma^2 = 1/snr). SNR values follow the simulation axis convention
/// (e.g. 0.37), not dB.
struct ChannelParams {
    double snr = 1.0;
    double sigma2 = 1.0;

    static ChannelParams from_snr(double snr);
};

double sigma_from_snr(double snr);

/// One reconciliation trial: random word, its noisy BPSK observation and the
/// syndrome the decoder must hit. Fully determined by the seed.
struct Trial {
    BitVector u;
    std::vector<double> r;
    BitVector s;
    uint64_t seed = 0;
};

/// u uniform, x = 1-2u, r = x + N(0, sigma^2), s = u H^T.
Trial run_trial(const QCCode& code, const ChannelParams& params, uint64_t seed);

/// Initial variable LLRs: 2 r_n / sigma^2 per element.
std::vector<double> init_llr(const std::vector<double>& r, double sigma2);

}  // namespace qcldpc
