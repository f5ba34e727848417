#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canonlab/rational.hpp"

namespace canonlab {

// Dense matrix over the rationals. Row-major. All elimination uses exact
// arithmetic with deterministic pivoting: columns are scanned left to
// right and the pivot is the lowest-index unused row with a nonzero entry,
// so ranks, echelon forms and nullspace bases are reproducible.
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);
    std::vector<Rational> row(int r) const;
    std::vector<Rational> col(int c) const;
    QMat transposed() const;

    // Horizontal concatenation [*this | right]; row counts must match.
    QMat augmented(const QMat& right) const;

    int rank() const;
    // Reduced row echelon form; returns pivot column indices.
    std::vector<int> rref_in_place();
    // Basis of the right nullspace (vectors of length cols()), one column
    // vector per free column, in ascending free-column order.
    std::vector<std::vector<Rational>> nullspace() const;

    // Solve A x = b for every column b of `rhs`. Returns nullopt if any
    // system is inconsistent; otherwise the matrix of solutions (one column
    // per rhs column) using the pivot-variable particular solution.
    std::optional<QMat> solve(const QMat& rhs) const;

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Provenance of a computed linear map between section spaces.
enum class MapKind { Mu, Rho, SymPower, Other };

// Matrix of a linear map: codomain_dim x domain_dim; column j is the image
// of the j-th domain basis vector in the codomain basis.
struct LinearMap {
    MapKind kind = MapKind::Other;
    std::string domain_label;
    std::string codomain_label;
    QMat mat;

    int domain_dim() const { return mat.cols(); }
    int codomain_dim() const { return mat.rows(); }
    int rank() const { return mat.rank(); }
    int corank() const { return codomain_dim() - rank(); }
    int kernel_dim() const { return domain_dim() - rank(); }
    bool surjective() const { return corank() == 0; }
};

// Optional modular cross-check of every rank computation
// (CANONLAB_MODP). Ranks are recomputed over F_p and compared with the
// exact value; statistics accumulate per process.
struct ModpStats {
    long checked = 0;
    long mismatched = 0;
    long skipped = 0;  // a denominator vanished mod p
};

void modp_enable(uint64_t prime);
void modp_disable();
std::optional<uint64_t> modp_prime();
const ModpStats& modp_stats();
void modp_reset_stats();

// Rank of the reduction of `m` mod p; nullopt when some entry has a
// denominator divisible by p.
std::optional<int> modp_rank(const QMat& m, uint64_t p);

}  // namespace canonlab
