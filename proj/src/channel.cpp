#include "qcldpc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "qcldpc/rng.hpp"

namespace qcldpc {

double sigma_from_snr(double snr) {
    if (!(snr > 0.0)) throw std::invalid_argument("sigma_from_snr: snr must be positive");
    return std::sqrt(1.0 / snr);
}

ChannelParams ChannelParams::from_snr(double snr) {
    double sigma = sigma_from_snr(snr);
    return {snr, sigma * sigma};
}

Trial run_trial(const QCCode& code, const ChannelParams& params, uint64_t seed) {
    if (!(params.sigma2 > 0.0)) throw std::invalid_argument("run_trial: sigma2 must be positive");
    Trial t;
    t.seed = seed;
    t.u = BitVector(code.n);
    t.r.resize(code.n);
    double sigma = std::sqrt(params.sigma2);
    // Separate substreams for word and noise keep the pair reproducible.
    Prng word_rng = Prng::derive(seed, {0});
    Prng noise_rng = Prng::derive(seed, {1});
    for (int i = 0; i < code.n; ++i)
        if (word_rng.next_bit()) t.u.set(i, true);
    for (int i = 0; i < code.n; ++i) {
        double x = t.u.get(i) ? -1.0 : 1.0;  // BPSK: 0 -> +1, 1 -> -1
        t.r[i] = x + sigma * noise_rng.next_gaussian();
    }
    t.s = syndrome(code, t.u);
    return t;
}

std::vector<double> init_llr(const std::vector<double>& r, double sigma2) {
    if (!(sigma2 > 0.0)) throw std::invalid_argument("init_llr: sigma2 must be positive");
    std::vector<double> llr(r.size());
    double k = 2.0 / sigma2;
    for (std::size_t i = 0; i < r.size(); ++i) llr[i] = k * r[i];
    return llr;
}

}  // namespace qcldpc
