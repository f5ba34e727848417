#include "canonlab/matrix.hpp"

#include <cassert>

#include "canonlab/errors.hpp"

namespace canonlab {

void QMat::append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw Error(ErrorCode::Internal, "row length mismatch in append_row");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<Rational> QMat::row(int r) const {
    std::vector<Rational> out(static_cast<size_t>(cols_));
    for (int c = 0; c < cols_; ++c) out[static_cast<size_t>(c)] = at(r, c);
    return out;
}

std::vector<Rational> QMat::col(int c) const {
    std::vector<Rational> out(static_cast<size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<size_t>(r)] = at(r, c);
    return out;
}

QMat QMat::transposed() const {
    QMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

QMat QMat::augmented(const QMat& right) const {
    if (rows_ != right.rows_) throw Error(ErrorCode::Internal, "augment: row mismatch");
    QMat out(rows_, cols_ + right.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
        for (int c = 0; c < right.cols_; ++c) out.at(r, cols_ + c) = right.at(r, c);
    }
    return out;
}

std::vector<int> QMat::rref_in_place() {
    std::vector<int> pivots;
    int pr = 0;  // next pivot row
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int sel = -1;
        for (int r = pr; r < rows_; ++r) {
            if (at(r, c) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != pr) {
            for (int k = 0; k < cols_; ++k) std::swap(at(sel, k), at(pr, k));
        }
        Rational inv = Rational(1) / at(pr, c);
        for (int k = c; k < cols_; ++k) at(pr, k) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            if (at(r, c) == 0) continue;
            Rational f = at(r, c);
            for (int k = c; k < cols_; ++k) at(r, k) -= f * at(pr, k);
        }
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

namespace {

// Exact rank with the modular cross-check applied when enabled.
int rank_checked(const QMat& m);

struct ModpState {
    std::optional<uint64_t> prime;
    ModpStats stats;
};

ModpState& modp_state() {
    static ModpState s;
    return s;
}

}  // namespace

int QMat::rank() const {
    return rank_checked(*this);
}

std::vector<std::vector<Rational>> QMat::nullspace() const {
    QMat work = *this;
    std::vector<int> pivots = work.rref_in_place();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[static_cast<size_t>(free_c)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols_), Rational(0));
        v[static_cast<size_t>(free_c)] = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            v[static_cast<size_t>(pivots[pi])] = -work.at(static_cast<int>(pi), free_c);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMat> QMat::solve(const QMat& rhs) const {
    if (rhs.rows() != rows_) throw Error(ErrorCode::Internal, "solve: rhs row mismatch");
    QMat aug = augmented(rhs);
    std::vector<int> pivots = aug.rref_in_place();
    // Consistent iff no pivot falls in the rhs block.
    for (int c : pivots) {
        if (c >= cols_) return std::nullopt;
    }
    QMat x(cols_, rhs.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        int pc = pivots[pi];
        for (int j = 0; j < rhs.cols(); ++j) x.at(pc, j) = aug.at(static_cast<int>(pi), cols_ + j);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Modular cross-check

void modp_enable(uint64_t prime) {
    if (prime < 3 || prime >= (1ull << 31))
        throw Error(ErrorCode::BadParameters, "modp prime must satisfy 3 <= p < 2^31");
    modp_state().prime = prime;
}

void modp_disable() { modp_state().prime.reset(); }

std::optional<uint64_t> modp_prime() { return modp_state().prime; }

const ModpStats& modp_stats() { return modp_state().stats; }

void modp_reset_stats() { modp_state().stats = ModpStats{}; }

namespace {

uint64_t mod_reduce_mpz(const mpz_class& z, uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    long v = r.get_si();
    if (v < 0) v += static_cast<long>(p);
    return static_cast<uint64_t>(v);
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t acc = 1;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

}  // namespace

std::optional<int> modp_rank(const QMat& m, uint64_t p) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<uint64_t> a(static_cast<size_t>(rows) * static_cast<size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const Rational& q = m.at(r, c);
            uint64_t den = mod_reduce_mpz(q.get_den(), p);
            if (den == 0) return std::nullopt;
            uint64_t num = mod_reduce_mpz(q.get_num(), p);
            a[static_cast<size_t>(r) * cols + c] = mulmod(num, powmod(den, p - 2, p), p);
        }
    }
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[static_cast<size_t>(r) * cols + c] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != rank)
            for (int k = c; k < cols; ++k)
                std::swap(a[static_cast<size_t>(sel) * cols + k], a[static_cast<size_t>(rank) * cols + k]);
        uint64_t inv = powmod(a[static_cast<size_t>(rank) * cols + c], p - 2, p);
        for (int k = c; k < cols; ++k)
            a[static_cast<size_t>(rank) * cols + k] = mulmod(a[static_cast<size_t>(rank) * cols + k], inv, p);
        for (int r = rank + 1; r < rows; ++r) {
            uint64_t f = a[static_cast<size_t>(r) * cols + c];
            if (f == 0) continue;
            for (int k = c; k < cols; ++k) {
                uint64_t sub = mulmod(f, a[static_cast<size_t>(rank) * cols + k], p);
                uint64_t& cell = a[static_cast<size_t>(r) * cols + k];
                cell = (cell >= sub) ? cell - sub : cell + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

int rank_checked(const QMat& m) {
    QMat work = m;
    int exact = static_cast<int>(work.rref_in_place().size());
    ModpState& st = modp_state();
    if (st.prime) {
        std::optional<int> mp = modp_rank(m, *st.prime);
        if (!mp) {
            ++st.stats.skipped;
        } else {
            ++st.stats.checked;
            if (*mp != exact) ++st.stats.mismatched;
        }
    }
    return exact;
}

}  // namespace

}  // namespace canonlab
