#include "cpn/matrix_field.hpp"

#include <algorithm>
#include <utility>

#include "cpn/errors.hpp"

namespace cpn {

namespace {

void check_same_shape(const MatrixField& a, const MatrixField& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix dimension mismatch");
}

}  // namespace

MatrixField MatrixField::identity(int n) {
    MatrixField m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
    return m;
}

bool MatrixField::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

RationalFunction MatrixField::trace() const {
    if (!is_square()) throw ValidationError("trace of non-square matrix");
    RationalFunction t;
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

MatrixField MatrixField::dagger() const {
    MatrixField r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).dagger();
    return r;
}

MatrixField MatrixField::d_plus() const {
    MatrixField r(rows_, cols_);
    for (int i = 0; i < static_cast<int>(e_.size()); ++i) r.e_[i] = e_[i].d_plus();
    return r;
}

MatrixField MatrixField::d_minus() const {
    MatrixField r(rows_, cols_);
    for (int i = 0; i < static_cast<int>(e_.size()); ++i) r.e_[i] = e_[i].d_minus();
    return r;
}

MatrixField MatrixField::invert_variables() const {
    MatrixField r(rows_, cols_);
    for (int i = 0; i < static_cast<int>(e_.size()); ++i) r.e_[i] = e_[i].invert_variables();
    return r;
}

RationalFunction MatrixField::determinant() const {
    if (!is_square()) throw ValidationError("determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return RationalFunction(1);

    // Clear denominators row by row: det(A) = det(B) / prod(row denominators).
    std::vector<std::vector<BiPolynomial>> b(n, std::vector<BiPolynomial>(n));
    BiPolynomial den_prod(1);
    for (int i = 0; i < n; ++i) {
        BiPolynomial row_den(1);
        for (int j = 0; j < n; ++j) {
            const BiPolynomial& d = at(i, j).den();
            row_den = exact_div(row_den * d, poly_gcd(row_den, d));  // lcm
        }
        for (int j = 0; j < n; ++j)
            b[i][j] = at(i, j).num() * exact_div(row_den, at(i, j).den());
        den_prod = den_prod * row_den;
    }

    // One-step fraction-free Bareiss elimination with row pivoting.
    BiPolynomial prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (b[k][k].is_zero()) {
            int p = k + 1;
            while (p < n && b[p][k].is_zero()) ++p;
            if (p == n) return RationalFunction(0);
            std::swap(b[k], b[p]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                b[i][j] = exact_div(b[k][k] * b[i][j] - b[i][k] * b[k][j], prev);
        prev = b[k][k];
    }
    BiPolynomial det = b[n - 1][n - 1];
    if (negate) det = -det;
    return {det, den_prod};
}

std::vector<RationalFunction> MatrixField::char_poly() const {
    if (!is_square()) throw ValidationError("char_poly of non-square matrix");
    int n = rows_;
    // Faddeev–LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... with M_{k+1} = A(M_k + c_k I).
    std::vector<RationalFunction> coeffs(n + 1);
    coeffs[n] = RationalFunction(1);
    MatrixField m = MatrixField::identity(n);
    for (int k = 1; k <= n; ++k) {
        m = *this * m;
        RationalFunction c = -(m.trace() / RationalFunction(k));
        coeffs[n - k] = c;
        for (int i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + c;
    }
    return coeffs;
}

long MatrixField::max_num_degree() const {
    long d = 0;
    for (const auto& x : e_) d = std::max(d, x.num().total_degree());
    return d;
}

long MatrixField::max_den_degree() const {
    long d = 0;
    for (const auto& x : e_) d = std::max(d, x.den().total_degree());
    return d;
}

MatrixField operator+(const MatrixField& a, const MatrixField& b) {
    check_same_shape(a, b);
    MatrixField r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

MatrixField operator-(const MatrixField& a, const MatrixField& b) {
    check_same_shape(a, b);
    MatrixField r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

MatrixField operator-(const MatrixField& a) {
    MatrixField r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = -a.e_[i];
    return r;
}

MatrixField operator*(const MatrixField& a, const MatrixField& b) {
    if (a.cols_ != b.rows_) throw ValidationError("matrix product dimension mismatch");
    MatrixField r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            RationalFunction s;
            for (int k = 0; k < a.cols_; ++k) s = s + a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

MatrixField operator*(const RationalFunction& s, const MatrixField& a) {
    MatrixField r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = s * a.e_[i];
    return r;
}

bool operator==(const MatrixField& a, const MatrixField& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

MatrixField commutator(const MatrixField& a, const MatrixField& b) { return a * b - b * a; }

bool VectorField::is_zero() const {
    return std::all_of(comps.begin(), comps.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

MatrixField outer_product(const VectorField& u, const VectorField& v) {
    MatrixField r(u.size(), v.size());
    for (int i = 0; i < u.size(); ++i)
        for (int j = 0; j < v.size(); ++j) r.at(i, j) = u[i] * v[j].dagger();
    return r;
}

VectorField mat_vec(const MatrixField& a, const VectorField& v) {
    if (a.cols() != v.size()) throw ValidationError("matrix-vector dimension mismatch");
    VectorField r(a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        RationalFunction s;
        for (int j = 0; j < a.cols(); ++j) s = s + a.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

RationalFunction sandwich(const VectorField& v, const MatrixField& a, const VectorField& w) {
    VectorField aw = mat_vec(a, w);
    RationalFunction s;
    for (int i = 0; i < v.size(); ++i) s = s + v[i].dagger() * aw[i];
    return s;
}

}  // namespace cpn
