#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace qcldpc {

/// Fixed-point format w = 1 + I + F: sign bit, I integer bits, F fraction
/// bits. The code range is symmetric, [-(2^(w-1)-1), 2^(w-1)-1]; the most
/// negative two's-complement code is excluded so |L_q| <= 127 for w = 8.
struct FixedFormat {
    int w = 8;
    int i_bits = 4;
    int f_bits = 3;

    int32_t max_code() const { return (int32_t(1) << (w - 1)) - 1; }
    double scale() const { return double(int64_t(1) << f_bits); }

    void validate() const;

    bool operator==(const FixedFormat&) const = default;
};

/// One fixed-point value: integer code plus its format.
struct QValue {
    int32_t code = 0;
    FixedFormat fmt;
};

/// Round-to-nearest-even of x * 2^F, saturated to the format range.
int32_t quantize_code(double x, const FixedFormat& fmt);
QValue quantize(double x, const FixedFormat& fmt);
double dequantize(const QValue& q);
double dequantize_code(int32_t code, const FixedFormat& fmt);

int32_t sat_add_code(int32_t a, int32_t b, const FixedFormat& fmt);
int32_t sat_sub_code(int32_t a, int32_t b, const FixedFormat& fmt);
QValue sat_add(const QValue& a, const QValue& b);
QValue sat_sub(const QValue& a, const QValue& b);

/// Quantized lookup of Phi(x) = -ln(tanh(x/2)), which is its own inverse.
/// Endpoints: code 0 maps to the clamp maximum (the singularity at 0) and
/// large inputs floor at code 1 so the table never absorbs a message to zero.
struct PhiTable {
    FixedFormat fmt;
    std::vector<int32_t> table;  // indexed by non-negative code

    int32_t lookup(int32_t code) const { return table[code]; }
};

PhiTable build_phi_table(const FixedFormat& fmt);

/// Process-wide cache of Phi tables keyed by format (w=24 tables are a few
/// tens of MB; building them once matters). Thread safe.
std::shared_ptr<const PhiTable> phi_table_for(const FixedFormat& fmt);

/// Table lookup; callers pass magnitudes. Negative input throws.
QValue phi(const QValue& q, const PhiTable& tbl);

}  // namespace qcldpc
