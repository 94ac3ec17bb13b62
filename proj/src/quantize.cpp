#include "qcldpc/quantize.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qcldpc {

void FixedFormat::validate() const {
    if (w != 1 + i_bits + f_bits)
        throw std::invalid_argument("FixedFormat: w must equal 1 + I + F");
    if (w < 2 || w > 30 || i_bits < 0 || f_bits < 0)
        throw std::invalid_argument("FixedFormat: unsupported width");
}

int32_t quantize_code(double x, const FixedFormat& fmt) {
    double scaled = x * fmt.scale();
    // Ties to even. std::nearbyint honours the default FE_TONEAREST mode;
    // saturate before the int conversion to dodge UB on huge inputs.
    double r = std::nearbyint(scaled);
    double lim = double(fmt.max_code());
    if (r > lim) return fmt.max_code();
    if (r < -lim) return -fmt.max_code();
    return int32_t(r);
}

QValue quantize(double x, const FixedFormat& fmt) {
    fmt.validate();
    return {quantize_code(x, fmt), fmt};
}

double dequantize_code(int32_t code, const FixedFormat& fmt) {
    return double(code) / fmt.scale();
}

double dequantize(const QValue& q) { return dequantize_code(q.code, q.fmt); }

int32_t sat_add_code(int32_t a, int32_t b, const FixedFormat& fmt) {
    int64_t s = int64_t(a) + b;
    int64_t lim = fmt.max_code();
    if (s > lim) return int32_t(lim);
    if (s < -lim) return int32_t(-lim);
    return int32_t(s);
}

int32_t sat_sub_code(int32_t a, int32_t b, const FixedFormat& fmt) {
    return sat_add_code(a, -b, fmt);
}

QValue sat_add(const QValue& a, const QValue& b) {
    if (a.fmt != b.fmt) throw std::invalid_argument("sat_add: format mismatch");
    return {sat_add_code(a.code, b.code, a.fmt), a.fmt};
}

QValue sat_sub(const QValue& a, const QValue& b) {
    if (a.fmt != b.fmt) throw std::invalid_argument("sat_sub: format mismatch");
    return {sat_sub_code(a.code, b.code, a.fmt), a.fmt};
}

PhiTable build_phi_table(const FixedFormat& fmt) {
    fmt.validate();
    PhiTable tbl;
    tbl.fmt = fmt;
    int32_t maxc = fmt.max_code();
    tbl.table.resize(std::size_t(maxc) + 1);
    tbl.table[0] = maxc;  // Phi(0) clamps to the largest representable value
    for (int32_t c = 1; c <= maxc; ++c) {
        double x = dequantize_code(c, fmt);
        double y = -std::log(std::tanh(0.5 * x));
        int32_t q = quantize_code(y, fmt);
        tbl.table[c] = q > 0 ? q : 1;  // floor at 1: never produce an absorbing zero
    }
    return tbl;
}

std::shared_ptr<const PhiTable> phi_table_for(const FixedFormat& fmt) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const PhiTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(fmt.w, fmt.i_bits, fmt.f_bits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto tbl = std::make_shared<const PhiTable>(build_phi_table(fmt));
    cache.emplace(key, tbl);
    return tbl;
}

QValue phi(const QValue& q, const PhiTable& tbl) {
    if (q.fmt != tbl.fmt) throw std::invalid_argument("phi: format mismatch");
    if (q.code < 0) throw std::domain_error("phi: negative input, callers pass magnitudes");
    return {tbl.lookup(q.code), q.fmt};
}

}  // namespace qcldpc
