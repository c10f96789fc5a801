#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mavr {

/// Dense row-major matrix of doubles. Everything here targets desk-scale
/// problems (a few thousand rows at most); there is no sparsity and no
/// attempt at blocking.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0);
    Matrix(int rows, int cols, std::initializer_list<double> row_major);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;
    Matrix transposed() const;

    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

/// Aᵀ·B without materializing the transpose.
Matrix mul_at_b(const Matrix& a, const Matrix& b);
/// A·Bᵀ without materializing the transpose.
Matrix mul_a_bt(const Matrix& a, const Matrix& b);
/// Frobenius inner product ⟨A, B⟩.
double frobenius_dot(const Matrix& a, const Matrix& b);

/// Symmetric matrix. Construction symmetrizes (averages mirrored entries)
/// and rejects non-finite input, so downstream code can rely on exact
/// entry equality across the diagonal. `psd_declared` is a caller-supplied
/// hint (set by Laplacian construction and the P presets), never verified
/// here.
class SymMatrix {
public:
    explicit SymMatrix(Matrix m, bool psd_declared = false);
    SymMatrix(int dim, std::initializer_list<double> row_major, bool psd_declared = false);

    static SymMatrix identity(int n);

    int dim() const { return mat_.rows(); }
    double operator()(int i, int j) const { return mat_(i, j); }
    const Matrix& mat() const { return mat_; }
    bool psd_declared() const { return psd_declared_; }

    /// Content hash for the eigensystem cache.
    std::uint64_t content_hash() const;

private:
    Matrix mat_;
    bool psd_declared_ = false;
};

/// Eigenvalues ascending; column k of `vectors` is the unit eigenvector of
/// values[k]. The sign convention makes the largest-magnitude entry of each
/// column positive (first such entry on magnitude ties).
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors;

    int dim() const { return static_cast<int>(values.size()); }
};

/// Sorted spectrum of P⊗Q. values[k] = eigP.values[j] * eigQ.values[i]
/// where index_map[k] = (j, i); sorted non-decreasing with ties broken by
/// ascending (j, i).
struct KronSpectrum {
    std::vector<double> values;
    std::vector<std::pair<int, int>> index_map;

    int size() const { return static_cast<int>(values.size()); }
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations. Converges
/// when the off-diagonal Frobenius norm drops below 1e-12 * ||A||_F, with a
/// hard cap of 100 sweeps.
EigenSystem sym_eig(const SymMatrix& a);

KronSpectrum kron_spectrum(const EigenSystem& eig_p, const EigenSystem& eig_q);

/// Applies the Kronecker eigenvector basis to an n×c matrix without forming
/// the nc×nc product: returns V_Qᵀ M V_P when `transpose` is set (the matrix
/// form of (V_P⊗V_Q)ᵀ vec(M)), otherwise V_Q M V_Pᵀ.
Matrix kron_eigvec_apply(const EigenSystem& eig_p, const EigenSystem& eig_q, const Matrix& m,
                         bool transpose);

/// Plain numeric CSV (no header), one matrix row per line.
Matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const Matrix& m, const std::string& path);

}  // namespace mavr
