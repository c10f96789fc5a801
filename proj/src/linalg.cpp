#include "mavr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mavr/util.hpp"

namespace mavr {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
}

Matrix::Matrix(int rows, int cols, std::initializer_list<double> row_major) : Matrix(rows, cols) {
    if (static_cast<std::size_t>(rows) * cols != row_major.size())
        throw std::invalid_argument("Matrix: initializer size mismatch");
    std::copy(row_major.begin(), row_major.end(), data_.begin());
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("Matrix multiply: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix add: dimension mismatch");
    Matrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("Matrix subtract: dimension mismatch");
    Matrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
    return c;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) *= s;
    return c;
}

Matrix mul_at_b(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("mul_at_b: dimension mismatch");
    Matrix c(a.cols(), b.cols());
    for (int k = 0; k < a.rows(); ++k) {
        for (int i = 0; i < a.cols(); ++i) {
            const double aki = a(k, i);
            if (aki == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aki * b(k, j);
        }
    }
    return c;
}

Matrix mul_a_bt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_a_bt: dimension mismatch");
    Matrix c(a.rows(), b.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.rows(); ++j) {
            double s = 0.0;
            for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(j, k);
            c(i, j) = s;
        }
    }
    return c;
}

double frobenius_dot(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("frobenius_dot: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(i, j);
    return s;
}

SymMatrix::SymMatrix(Matrix m, bool psd_declared) : mat_(std::move(m)), psd_declared_(psd_declared) {
    if (mat_.rows() != mat_.cols()) throw std::invalid_argument("SymMatrix: matrix is not square");
    if (mat_.rows() == 0) throw std::invalid_argument("SymMatrix: empty matrix");
    for (int i = 0; i < mat_.rows(); ++i) {
        for (int j = 0; j < mat_.cols(); ++j) {
            if (!std::isfinite(mat_(i, j))) {
                throw std::invalid_argument("SymMatrix: non-finite entry at (" + std::to_string(i) +
                                            "," + std::to_string(j) + ")");
            }
        }
    }
    for (int i = 0; i < mat_.rows(); ++i) {
        for (int j = i + 1; j < mat_.cols(); ++j) {
            const double v = 0.5 * (mat_(i, j) + mat_(j, i));
            mat_(i, j) = v;
            mat_(j, i) = v;
        }
    }
}

SymMatrix::SymMatrix(int dim, std::initializer_list<double> row_major, bool psd_declared)
    : SymMatrix(Matrix(dim, dim, row_major), psd_declared) {}

SymMatrix SymMatrix::identity(int n) { return SymMatrix(Matrix::identity(n), true); }

std::uint64_t SymMatrix::content_hash() const {
    const int d = dim();
    std::uint64_t h = fnv1a(&d, sizeof(d));
    return fnv1a(mat_.data(), mat_.size() * sizeof(double), h);
}

namespace {

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// One Jacobi rotation zeroing a(p,q); accumulates the rotation into v.
void jacobi_rotate(Matrix& a, Matrix& v, int p, int q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;

    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e100) {
        t = 1.0 / (2.0 * theta);
    } else if (theta >= 0.0) {
        t = 1.0 / (theta + std::sqrt(1.0 + theta * theta));
    } else {
        t = -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.rows();
    const double app = a(p, p);
    const double aqq = a(q, q);
    a(p, p) = app - t * apq;
    a(q, q) = aqq + t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        const double aip = a(i, p);
        const double aiq = a(i, q);
        a(i, p) = c * aip - s * aiq;
        a(p, i) = a(i, p);
        a(i, q) = s * aip + c * aiq;
        a(q, i) = a(i, q);
    }
    for (int i = 0; i < n; ++i) {
        const double vip = v(i, p);
        const double viq = v(i, q);
        v(i, p) = c * vip - s * viq;
        v(i, q) = s * vip + c * viq;
    }
}

void apply_sign_convention(Matrix& vectors) {
    for (int j = 0; j < vectors.cols(); ++j) {
        int arg = 0;
        double best = -1.0;
        for (int i = 0; i < vectors.rows(); ++i) {
            const double m = std::abs(vectors(i, j));
            if (m > best) {
                best = m;
                arg = i;
            }
        }
        if (vectors(arg, j) < 0.0)
            for (int i = 0; i < vectors.rows(); ++i) vectors(i, j) = -vectors(i, j);
    }
}

}  // namespace

EigenSystem sym_eig(const SymMatrix& sym) {
    const int n = sym.dim();
    Matrix a = sym.mat();
    Matrix v = Matrix::identity(n);

    const double fro = a.frobenius_norm();
    const double tol = 1e-12 * fro;
    constexpr int kMaxSweeps = 100;

    if (fro > 0.0) {
        int sweep = 0;
        while (off_diagonal_norm(a) > tol) {
            if (++sweep > kMaxSweeps)
                throw std::runtime_error("sym_eig: Jacobi iteration did not converge in 100 sweeps");
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) < a(y, y); });

    EigenSystem eig;
    eig.values.resize(n);
    eig.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
        eig.values[k] = a(order[k], order[k]);
        for (int i = 0; i < n; ++i) eig.vectors(i, k) = v(i, order[k]);
    }
    apply_sign_convention(eig.vectors);
    return eig;
}

KronSpectrum kron_spectrum(const EigenSystem& eig_p, const EigenSystem& eig_q) {
    const int c = eig_p.dim();
    const int n = eig_q.dim();
    KronSpectrum ks;
    ks.values.reserve(static_cast<std::size_t>(n) * c);
    ks.index_map.reserve(static_cast<std::size_t>(n) * c);
    // Generated in (j, i) lexicographic order; the stable sort then breaks
    // value ties by ascending (j, i) as required for reproducible k0.
    for (int j = 0; j < c; ++j)
        for (int i = 0; i < n; ++i) ks.index_map.emplace_back(j, i);
    std::stable_sort(ks.index_map.begin(), ks.index_map.end(),
                     [&](const std::pair<int, int>& x, const std::pair<int, int>& y) {
                         return eig_p.values[x.first] * eig_q.values[x.second] <
                                eig_p.values[y.first] * eig_q.values[y.second];
                     });
    for (const auto& [j, i] : ks.index_map) ks.values.push_back(eig_p.values[j] * eig_q.values[i]);
    return ks;
}

Matrix kron_eigvec_apply(const EigenSystem& eig_p, const EigenSystem& eig_q, const Matrix& m,
                         bool transpose) {
    if (m.rows() != eig_q.dim() || m.cols() != eig_p.dim())
        throw std::invalid_argument("kron_eigvec_apply: matrix is not n x c");
    if (transpose) return mul_at_b(eig_q.vectors, m) * eig_p.vectors;  // V_Q' M V_P
    return mul_a_bt(eig_q.vectors * m, eig_p.vectors);                 // V_Q M V_P'
}

Matrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_matrix_csv: cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            std::size_t next = line.find(',', pos);
            if (next == std::string::npos) next = line.size();
            double value = 0.0;
            const char* first = line.data() + pos;
            const char* last = line.data() + next;
            while (first < last && (*first == ' ' || *first == '\t')) ++first;
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc() || ptr != last)
                throw std::runtime_error("read_matrix_csv: bad number in " + path + ": '" +
                                         line.substr(pos, next - pos) + "'");
            row.push_back(value);
            pos = next + 1;
            if (next == line.size()) break;
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("read_matrix_csv: ragged rows in " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("read_matrix_csv: empty file " + path);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    return m;
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_matrix_csv: cannot open " + path);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write_matrix_csv: write failed for " + path);
}

}  // namespace mavr
