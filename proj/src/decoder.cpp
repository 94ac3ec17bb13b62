#include "qcldpc/decoder.hpp"

#include <cmath>
#include <stdexcept>

namespace qcldpc {

namespace kernels {

double phi_float(double x) {
    // -ln(tanh(x/2)) for x >= 0. x = 0 gives +inf; x >~ 38 gives exactly +0,
    // both of which the update below relies on for exact zero/certainty
    // propagation.
    return std::fabs(std::log(std::tanh(0.5 * x)));
}

void check_row_update_float(const double* msgs, int deg, int syndrome_bit, double* out) {
    double phi[64];
    double suffix[65];
    int neg_total = 0;
    for (int i = 0; i < deg; ++i) {
        phi[i] = phi_float(std::fabs(msgs[i]));
        neg_total += msgs[i] < 0.0;
    }
    suffix[deg] = 0.0;
    for (int i = deg - 1; i >= 0; --i) suffix[i] = phi[i] + suffix[i + 1];
    double prefix = 0.0;
    for (int i = 0; i < deg; ++i) {
        double sum_excl = prefix + suffix[i + 1];
        int neg_excl = neg_total - (msgs[i] < 0.0 ? 1 : 0);
        bool negative = ((neg_excl & 1) != 0) ^ (syndrome_bit != 0);
        double mag = phi_float(sum_excl);
        if (mag > llr_cap) mag = llr_cap;
        out[i] = negative ? -mag : mag;
        prefix += phi[i];
    }
}

void check_row_update_fixed(const int32_t* msgs, int deg, int syndrome_bit, const PhiTable& tbl,
                            int32_t* out) {
    int32_t phi[64];
    int64_t suffix[65];
    int32_t maxc = tbl.fmt.max_code();
    int neg_total = 0;
    for (int i = 0; i < deg; ++i) {
        int32_t a = msgs[i] < 0 ? -msgs[i] : msgs[i];
        phi[i] = tbl.lookup(a);
        neg_total += msgs[i] < 0;
    }
    suffix[deg] = 0;
    for (int i = deg - 1; i >= 0; --i) suffix[i] = phi[i] + suffix[i + 1];
    int64_t prefix = 0;
    for (int i = 0; i < deg; ++i) {
        int64_t sum_excl = prefix + suffix[i + 1];
        if (sum_excl > maxc) sum_excl = maxc;  // saturate before the inverse lookup
        int neg_excl = neg_total - (msgs[i] < 0 ? 1 : 0);
        bool negative = ((neg_excl & 1) != 0) ^ (syndrome_bit != 0);
        int32_t mag = tbl.lookup(int32_t(sum_excl));
        out[i] = negative ? -mag : mag;
        prefix += phi[i];
    }
}

}  // namespace kernels

double vnu_message(double l_q, double l_r_prev) { return l_q - l_r_prev; }

QValue vnu_message(const QValue& l_q, const QValue& l_r_prev) { return sat_sub(l_q, l_r_prev); }

double cnu_message(const std::vector<double>& other_neighbors, int syndrome_bit) {
    if (other_neighbors.empty()) throw std::invalid_argument("cnu_message: empty neighbor set");
    double sum = 0.0;
    int neg = 0;
    for (double v : other_neighbors) {
        sum += kernels::phi_float(std::fabs(v));
        neg += v < 0.0;
    }
    bool negative = ((neg & 1) != 0) ^ (syndrome_bit != 0);
    double mag = kernels::phi_float(sum);
    if (mag > kernels::llr_cap) mag = kernels::llr_cap;
    return negative ? -mag : mag;
}

QValue cnu_message(const std::vector<QValue>& other_neighbors, int syndrome_bit,
                   const PhiTable& tbl) {
    if (other_neighbors.empty()) throw std::invalid_argument("cnu_message: empty neighbor set");
    int64_t sum = 0;
    int neg = 0;
    for (const QValue& v : other_neighbors) {
        if (v.fmt != tbl.fmt) throw std::invalid_argument("cnu_message: format mismatch");
        int32_t a = v.code < 0 ? -v.code : v.code;
        sum += tbl.lookup(a);
        neg += v.code < 0;
    }
    int32_t maxc = tbl.fmt.max_code();
    if (sum > maxc) sum = maxc;
    bool negative = ((neg & 1) != 0) ^ (syndrome_bit != 0);
    int32_t mag = tbl.lookup(int32_t(sum));
    return {negative ? -mag : mag, tbl.fmt};
}

double total_update(double l_q_nm, double l_r_new) { return l_q_nm + l_r_new; }

QValue total_update(const QValue& l_q_nm, const QValue& l_r_new) {
    return sat_add(l_q_nm, l_r_new);
}

BitVector hard_decision(const std::vector<double>& l_q) {
    BitVector u(l_q.size());
    for (std::size_t i = 0; i < l_q.size(); ++i)
        if (l_q[i] < 0.0) u.set(i, true);  // ties (L >= 0) decode to 0
    return u;
}

namespace {

int max_row_degree(const QCCode& code) {
    int d = 0;
    for (const auto& blocks : code.row_blocks) d = std::max<int>(d, int(blocks.size()));
    return d;
}

template <typename Value, typename RowUpdate>
void process_layer(const QCCode& code, int block_row, std::vector<Value>& l_q,
                   std::vector<Value>& l_r, const BitVector& s, RowUpdate&& row_update,
                   Value* msgs, Value* lr_new) {
    int z = code.base.z;
    for (int i = 0; i < z; ++i) {
        int row = block_row * z + i;
        int64_t base = code.row_ptr[row];
        int deg = int(code.row_ptr[row + 1] - base);
        for (int e = 0; e < deg; ++e) msgs[e] = l_q[code.col_idx[base + e]] - l_r[base + e];
        row_update(msgs, deg, s.get(row) ? 1 : 0, lr_new);
        for (int e = 0; e < deg; ++e) {
            l_q[code.col_idx[base + e]] = msgs[e] + lr_new[e];
            l_r[base + e] = lr_new[e];
        }
    }
}

// Fixed mode needs saturation on both Eq. 2 and Eq. 4, so it gets its own loop.
void process_layer_fixed(const QCCode& code, int block_row, std::vector<int32_t>& l_q,
                         std::vector<int32_t>& l_r, const BitVector& s, const PhiTable& tbl,
                         int32_t* msgs, int32_t* lr_new) {
    int z = code.base.z;
    const FixedFormat& fmt = tbl.fmt;
    for (int i = 0; i < z; ++i) {
        int row = block_row * z + i;
        int64_t base = code.row_ptr[row];
        int deg = int(code.row_ptr[row + 1] - base);
        for (int e = 0; e < deg; ++e)
            msgs[e] = sat_sub_code(l_q[code.col_idx[base + e]], l_r[base + e], fmt);
        kernels::check_row_update_fixed(msgs, deg, s.get(row) ? 1 : 0, tbl, lr_new);
        for (int e = 0; e < deg; ++e) {
            l_q[code.col_idx[base + e]] = sat_add_code(msgs[e], lr_new[e], fmt);
            l_r[base + e] = lr_new[e];
        }
    }
}

BitVector hard_decision_codes(const std::vector<int32_t>& l_q) {
    BitVector u(l_q.size());
    for (std::size_t i = 0; i < l_q.size(); ++i)
        if (l_q[i] < 0) u.set(i, true);
    return u;
}

}  // namespace

DecodeResult decode(const QCCode& code, const std::vector<double>& llr, const BitVector& s,
                    const DecoderConfig& cfg) {
    if (llr.size() != std::size_t(code.n))
        throw std::invalid_argument("decode: llr length does not match code length");
    if (s.size() != std::size_t(code.m))
        throw std::invalid_argument("decode: syndrome length does not match check count");
    if (cfg.t_max < 1) throw std::invalid_argument("decode: t_max must be >= 1");

    int maxdeg = max_row_degree(code);
    if (maxdeg > 64) throw std::invalid_argument("decode: row degree beyond supported limit");

    DecodeResult res;
    res.layers_per_iteration = int(code.layers.size());
    res.edges_per_iteration = code.n_total;

    if (cfg.arith == Arithmetic::float_ref) {
        std::vector<double> l_q = llr;
        std::vector<double> l_r(code.n_total, 0.0);  // L_r = 0 before the first iteration
        double msgs[64], lr_new[64];

        if (cfg.early_exit) {
            res.u_hat = hard_decision(l_q);
            if (syndrome(code, res.u_hat) == s) {
                res.success = true;
                res.iterations_used = 0;
                res.reliabilities.resize(code.n);
                for (int i = 0; i < code.n; ++i) res.reliabilities[i] = std::fabs(l_q[i]);
                return res;
            }
        }
        for (int t = 1; t <= cfg.t_max; ++t) {
            for (int layer : code.layers)
                process_layer<double>(code, layer, l_q, l_r, s,
                                      kernels::check_row_update_float, msgs, lr_new);
            res.iterations_used = t;
            if (cfg.early_exit) {
                res.u_hat = hard_decision(l_q);
                if (syndrome(code, res.u_hat) == s) {
                    res.success = true;
                    break;
                }
            }
        }
        res.u_hat = hard_decision(l_q);
        res.success = syndrome(code, res.u_hat) == s;
        res.reliabilities.resize(code.n);
        for (int i = 0; i < code.n; ++i) res.reliabilities[i] = std::fabs(l_q[i]);
        return res;
    }

    // Fixed mode: quantize the input LLRs, then run every message and update
    // through the saturating integer path.
    cfg.fmt.validate();
    auto tbl = phi_table_for(cfg.fmt);
    std::vector<int32_t> l_q(code.n);
    for (int i = 0; i < code.n; ++i) l_q[i] = quantize_code(llr[i], cfg.fmt);
    std::vector<int32_t> l_r(code.n_total, 0);
    int32_t msgs[64], lr_new[64];

    if (cfg.early_exit) {
        res.u_hat = hard_decision_codes(l_q);
        if (syndrome(code, res.u_hat) == s) {
            res.success = true;
            res.iterations_used = 0;
            res.reliabilities.resize(code.n);
            for (int i = 0; i < code.n; ++i) res.reliabilities[i] = std::abs(l_q[i]);
            return res;
        }
    }
    for (int t = 1; t <= cfg.t_max; ++t) {
        for (int layer : code.layers)
            process_layer_fixed(code, layer, l_q, l_r, s, *tbl, msgs, lr_new);
        res.iterations_used = t;
        if (cfg.early_exit) {
            res.u_hat = hard_decision_codes(l_q);
            if (syndrome(code, res.u_hat) == s) {
                res.success = true;
                break;
            }
        }
    }
    res.u_hat = hard_decision_codes(l_q);
    res.success = syndrome(code, res.u_hat) == s;
    res.reliabilities.resize(code.n);
    for (int i = 0; i < code.n; ++i) res.reliabilities[i] = std::abs(l_q[i]);
    return res;
}

}  // namespace qcldpc
