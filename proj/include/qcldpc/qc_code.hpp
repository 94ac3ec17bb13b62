#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qcldpc/bitvec.hpp"

namespace qcldpc {

/// Base matrix of a quasi-cyclic code: a rows x cols grid of circulant
/// shifts. Entry -1 is the Z x Z zero block; entry a in [0, Z) is the
/// identity cyclically shifted right by a.
struct BaseMatrix {
    int rows = 0;
    int cols = 0;
    int z = 0;
    std::vector<int> shifts;  // row-major, rows*cols entries

    int at(int r, int c) const { return shifts[std::size_t(r) * cols + c]; }
    int& at(int r, int c) { return shifts[std::size_t(r) * cols + c]; }

    /// Throws std::invalid_argument when any invariant fails: shift range,
    /// grid dimensions, or an all-zero block-row/column.
    void validate() const;

    bool operator==(const BaseMatrix&) const = default;
};

/// Expanded sparse parity-check matrix plus the block structure the layered
/// decoder and the datapath model need. Immutable after construction; safe
/// to share across decode workers.
struct QCCode {
    BaseMatrix base;
    int n = 0;            // code length = cols * z
    int m = 0;            // check count = rows * z
    int64_t n_total = 0;  // number of ones in H
    double rate = 0.0;    // declared rate, defaults to 1 - m/n

    std::vector<int> layers;  // block-rows in processing order

    // CSR over check rows: columns in ascending block order.
    std::vector<int64_t> row_ptr;
    std::vector<int32_t> col_idx;
    // CSC over variable columns.
    std::vector<int64_t> col_ptr;
    std::vector<int32_t> row_idx;

    struct Block {
        int col;    // block-column
        int shift;  // circulant shift
    };
    // Non-negative blocks of each block-row, ascending block-column.
    std::vector<std::vector<Block>> row_blocks;

    int row_weight(int check_row) const {
        return int(row_ptr[check_row + 1] - row_ptr[check_row]);
    }
    int col_weight(int var) const { return int(col_ptr[var + 1] - col_ptr[var]); }
};

/// Expand a base matrix into the full sparse code. `declared_rate` < 0 means
/// use 1 - m/n.
QCCode expand(const BaseMatrix& base, double declared_rate = -1.0);

/// s = word * H^T over GF(2). Throws on length mismatch.
BitVector syndrome(const QCCode& code, const BitVector& word);

struct CodeStats {
    int64_t n_total = 0;
    double n_avr = 0.0;  // mean check-row weight
    std::map<int, int64_t> row_hist;
    std::map<int, int64_t> col_hist;
};

CodeStats stats(const QCCode& code);

/// Text format: first line "rows cols Z", then `rows` lines of `cols`
/// signed integers, -1 for the zero block.
BaseMatrix load_base(std::istream& in);
BaseMatrix load_base_file(const std::string& path);
void save_base(const BaseMatrix& b, std::ostream& out);
void save_base_file(const BaseMatrix& b, const std::string& path);

/// Row-support listing of the expanded H: one line per check row, weight
/// followed by the column indices.
void save_row_support(const QCCode& code, std::ostream& out);

}  // namespace qcldpc
