#pragma once

#include <vector>

#include "cpn/rational_function.hpp"

namespace cpn {

/// Dense matrix over the field of rational functions in (ξ₊, ξ₋).
class MatrixField {
  public:
    MatrixField() = default;
    MatrixField(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static MatrixField identity(int n);
    static MatrixField zero(int rows, int cols) { return {rows, cols}; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RationalFunction& at(int i, int j) { return e_[i * cols_ + j]; }
    const RationalFunction& at(int i, int j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    RationalFunction trace() const;
    MatrixField dagger() const;
    MatrixField d_plus() const;
    MatrixField d_minus() const;
    /// Entrywise ξ± ← 1/w± substitution.
    MatrixField invert_variables() const;

    /// Exact determinant: denominators cleared per row, fraction-free
    /// Bareiss elimination on the polynomial matrix, divided back.
    RationalFunction determinant() const;

    /// Coefficients of det(tI − A), ascending in t (size n+1, monic), via
    /// Faddeev–LeVerrier over the exact field.
    std::vector<RationalFunction> char_poly() const;

    long max_num_degree() const;
    long max_den_degree() const;

    friend MatrixField operator+(const MatrixField& a, const MatrixField& b);
    friend MatrixField operator-(const MatrixField& a, const MatrixField& b);
    friend MatrixField operator-(const MatrixField& a);
    friend MatrixField operator*(const MatrixField& a, const MatrixField& b);
    friend MatrixField operator*(const RationalFunction& s, const MatrixField& a);
    friend bool operator==(const MatrixField& a, const MatrixField& b);

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<RationalFunction> e_;
};

MatrixField commutator(const MatrixField& a, const MatrixField& b);

/// Length-N column of rational functions (a CP^{N-1} representative when
/// not all entries vanish).
struct VectorField {
    std::vector<RationalFunction> comps;

    VectorField() = default;
    explicit VectorField(int n) : comps(n) {}
    explicit VectorField(std::vector<RationalFunction> c) : comps(std::move(c)) {}

    int size() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    RationalFunction& operator[](int i) { return comps[i]; }
    const RationalFunction& operator[](int i) const { return comps[i]; }
};

/// Column · conjugated row:  (u ⊗ v†)_{ij} = u_i · dagger(v_j).
MatrixField outer_product(const VectorField& u, const VectorField& v);
VectorField mat_vec(const MatrixField& a, const VectorField& v);
/// v† A w — a scalar rational function.
RationalFunction sandwich(const VectorField& v, const MatrixField& a, const VectorField& w);

}  // namespace cpn
