#include "qcldpc/qc_code.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcldpc {

void BaseMatrix::validate() const {
    if (rows <= 0 || cols <= 0 || z <= 0)
        throw std::invalid_argument("BaseMatrix: rows, cols and Z must be positive");
    if (shifts.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("BaseMatrix: shift grid does not match rows x cols");
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int a = at(r, c);
            if (a < -1 || a >= z)
                throw std::invalid_argument("BaseMatrix: shift at (" + std::to_string(r) + "," +
                                            std::to_string(c) + ") out of range [-1, Z)");
        }
    for (int r = 0; r < rows; ++r) {
        bool nonzero = false;
        for (int c = 0; c < cols; ++c) nonzero |= at(r, c) >= 0;
        if (!nonzero)
            throw std::invalid_argument("BaseMatrix: block-row " + std::to_string(r) +
                                        " has no non-negative entry");
    }
    for (int c = 0; c < cols; ++c) {
        bool nonzero = false;
        for (int r = 0; r < rows; ++r) nonzero |= at(r, c) >= 0;
        if (!nonzero)
            throw std::invalid_argument("BaseMatrix: block-column " + std::to_string(c) +
                                        " has no non-negative entry");
    }
}

QCCode expand(const BaseMatrix& base, double declared_rate) {
    base.validate();
    QCCode code;
    code.base = base;
    int z = base.z;
    code.n = base.cols * z;
    code.m = base.rows * z;

    code.row_blocks.resize(base.rows);
    for (int r = 0; r < base.rows; ++r)
        for (int c = 0; c < base.cols; ++c)
            if (base.at(r, c) >= 0) code.row_blocks[r].push_back({c, base.at(r, c)});

    // Each check row r*Z+i gets, per block (r,c,a), a one in column
    // c*Z + ((i+a) mod Z).
    code.row_ptr.assign(std::size_t(code.m) + 1, 0);
    for (int r = 0; r < base.rows; ++r) {
        int w = int(code.row_blocks[r].size());
        for (int i = 0; i < z; ++i) code.row_ptr[std::size_t(r) * z + i + 1] = w;
    }
    for (std::size_t i = 1; i < code.row_ptr.size(); ++i) code.row_ptr[i] += code.row_ptr[i - 1];
    code.n_total = code.row_ptr.back();
    code.col_idx.resize(code.n_total);
    for (int r = 0; r < base.rows; ++r)
        for (int i = 0; i < z; ++i) {
            int row = r * z + i;
            int64_t at = code.row_ptr[row];
            for (const auto& blk : code.row_blocks[r])
                code.col_idx[at++] = blk.col * z + (i + blk.shift) % z;
        }

    // Column-major view for syndrome-guided bit flipping.
    code.col_ptr.assign(std::size_t(code.n) + 1, 0);
    for (int64_t e = 0; e < code.n_total; ++e) code.col_ptr[code.col_idx[e] + 1]++;
    for (std::size_t i = 1; i < code.col_ptr.size(); ++i) code.col_ptr[i] += code.col_ptr[i - 1];
    code.row_idx.resize(code.n_total);
    {
        std::vector<int64_t> fill(code.col_ptr.begin(), code.col_ptr.end() - 1);
        for (int row = 0; row < code.m; ++row)
            for (int64_t e = code.row_ptr[row]; e < code.row_ptr[row + 1]; ++e)
                code.row_idx[fill[code.col_idx[e]]++] = row;
    }

    code.layers.resize(base.rows);
    for (int r = 0; r < base.rows; ++r) code.layers[r] = r;

    code.rate = declared_rate >= 0 ? declared_rate : 1.0 - double(code.m) / code.n;
    return code;
}

BitVector syndrome(const QCCode& code, const BitVector& word) {
    if (word.size() != std::size_t(code.n))
        throw std::invalid_argument("syndrome: word length does not match code length");
    BitVector s(code.m);
    for (int row = 0; row < code.m; ++row) {
        unsigned acc = 0;
        for (int64_t e = code.row_ptr[row]; e < code.row_ptr[row + 1]; ++e)
            acc ^= unsigned(word.get(code.col_idx[e]));
        if (acc) s.set(row, true);
    }
    return s;
}

CodeStats stats(const QCCode& code) {
    CodeStats st;
    st.n_total = code.n_total;
    st.n_avr = double(code.n_total) / code.m;
    for (int row = 0; row < code.m; ++row) st.row_hist[code.row_weight(row)]++;
    for (int col = 0; col < code.n; ++col) st.col_hist[code.col_weight(col)]++;
    return st;
}

namespace {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] void parse_fail(int line, int col, const std::string& what) {
    throw ParseError("base matrix parse error at line " + std::to_string(line) + ", token " +
                     std::to_string(col) + ": " + what);
}

int read_int(std::istringstream& ss, int line, int col) {
    std::string tok;
    if (!(ss >> tok)) parse_fail(line, col, "missing integer");
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        parse_fail(line, col, "non-integer token '" + tok + "'");
    }
    if (pos != tok.size()) parse_fail(line, col, "non-integer token '" + tok + "'");
    return v;
}

std::string next_content_line(std::istream& in, int& lineno) {
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return line;
    }
    return {};
}

}  // namespace

BaseMatrix load_base(std::istream& in) {
    int lineno = 0;
    std::string header = next_content_line(in, lineno);
    if (header.empty()) throw ParseError("base matrix parse error: empty input");
    std::istringstream hs(header);
    BaseMatrix b;
    b.rows = read_int(hs, lineno, 1);
    b.cols = read_int(hs, lineno, 2);
    b.z = read_int(hs, lineno, 3);
    if (b.rows <= 0 || b.cols <= 0 || b.z <= 0)
        parse_fail(lineno, 1, "rows, cols and Z must be positive");
    b.shifts.resize(std::size_t(b.rows) * b.cols);
    for (int r = 0; r < b.rows; ++r) {
        std::string row = next_content_line(in, lineno);
        if (row.empty()) parse_fail(lineno + 1, 1, "missing row " + std::to_string(r));
        std::istringstream rs(row);
        for (int c = 0; c < b.cols; ++c) {
            int v = read_int(rs, lineno, c + 1);
            if (v < -1 || v >= b.z)
                parse_fail(lineno, c + 1,
                           "shift " + std::to_string(v) + " out of range [-1, " +
                               std::to_string(b.z) + ")");
            b.at(r, c) = v;
        }
        std::string extra;
        if (rs >> extra) parse_fail(lineno, b.cols + 1, "ragged row: extra token '" + extra + "'");
    }
    b.validate();
    return b;
}

BaseMatrix load_base_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open base matrix file: " + path);
    return load_base(in);
}

void save_base(const BaseMatrix& b, std::ostream& out) {
    out << b.rows << ' ' << b.cols << ' ' << b.z << '\n';
    for (int r = 0; r < b.rows; ++r) {
        for (int c = 0; c < b.cols; ++c) {
            if (c) out << ' ';
            out << b.at(r, c);
        }
        out << '\n';
    }
}

void save_base_file(const BaseMatrix& b, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    save_base(b, out);
}

void save_row_support(const QCCode& code, std::ostream& out) {
    for (int row = 0; row < code.m; ++row) {
        out << code.row_weight(row);
        for (int64_t e = code.row_ptr[row]; e < code.row_ptr[row + 1]; ++e)
            out << ' ' << code.col_idx[e];
        out << '\n';
    }
}

}  // namespace qcldpc
