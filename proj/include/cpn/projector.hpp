#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cpn/matrix_field.hpp"

namespace cpn {

enum class Dir { Plus, Minus };

/// Rank-1 Hermitian projector: P² = P, P† = P, tr P = 1, all exact.
/// Construction verifies the laws and throws CertificateError on violation.
class Projector {
  public:
    explicit Projector(MatrixField m);

    const MatrixField& mat() const { return mat_; }
    int dim() const { return mat_.rows(); }

  private:
    MatrixField mat_;
};

/// Φ(f) = f ⊗ f† / (f† f); components are reduced by their polynomial GCD
/// first, so equivalent representatives of a CP^{N-1} class give the same
/// matrix.  Throws ValidationError on the zero vector.
Projector projector_from_vector(const VectorField& f);

/// First standard basis vector e_j (then small deterministic Gaussian-integer
/// fallbacks) with P·e ≠ 0 for every projector in the span.
VectorField choose_reference(const Projector& p);
VectorField choose_reference(std::span<const Projector> ps);

/// Sesquilinear product ⟨X,Y⟩ = e† X† Y e / (e† P e).
RationalFunction sesq(const MatrixField& x, const MatrixField& y, const Projector& p,
                      const VectorField& e);

/// Covariant derivative D± X = ∂± X − ⟨P, ∂± P⟩ X.
MatrixField cov_d(Dir mu, const MatrixField& x, const Projector& p, const VectorField& e);

/// (‖D₊P‖², ‖D₋P‖²); the sesquilinear and trace routes are both computed
/// and must agree exactly.
std::pair<RationalFunction, RationalFunction> norms(const Projector& p, const VectorField& e);

/// Lagrangian density L = tr(∂₊P ∂₋P).
RationalFunction lagrangian(const Projector& p);
/// Norm form ‖D₊P‖² + ‖D₋P‖² (equal to the trace form for every projector).
RationalFunction lagrangian_norm_form(const Projector& p, const VectorField& e);

/// Topological charge density q = ‖D₊P‖² − ‖D₋P‖² = tr(P∂₋P∂₊P − P∂₊P∂₋P).
RationalFunction charge_density(const Projector& p);

struct ElReport {
    bool satisfied = false;
    MatrixField residual;  // [∂₊∂₋P, P]
};

/// Euler-Lagrange test: residual [∂₊∂₋P, P], satisfied iff exactly zero.
ElReport is_el_solution(const Projector& p);
/// Same, additionally verifying the covariant form (D₊D₋P + ‖D₋P‖²P)e = 0.
ElReport is_el_solution(const Projector& p, const VectorField& e);

/// Raising/lowering operators Π±X = ∂±X X ∂∓X / tr(∂±X X ∂∓X); empty result
/// marks annihilation (∂±X X ∂∓X = 0).
std::optional<Projector> raise_projector(const Projector& x);
std::optional<Projector> lower_projector(const Projector& x);

/// X holomorphic  ⇔  X ∂₊X = ∂₋X X = 0; antiholomorphic mirrors it.
bool is_holomorphic(const Projector& x);
bool is_antiholomorphic(const Projector& x);

/// Λ = {P₀, Π₊P₀, …, P_{n+m}} with P₀ holomorphic and P_{n+m}
/// anti-holomorphic; the input projector sits at hol_index.
struct ProjectorTower {
    std::vector<Projector> elements;
    VectorField e;
    int hol_index = 0;     // n: lowers applied to reach P₀, Π₊ⁿP₀ = input
    int antihol_index = 0; // m: raises applied from the input to P_{n+m}

    int length() const { return static_cast<int>(elements.size()); }
    int dim() const { return elements.empty() ? 0 : elements.front().dim(); }
};

/// Build the tower from an exact E-L solution (lower to the holomorphic end,
/// raise to termination) and verify every tower invariant.
ProjectorTower build_tower(const Projector& p);

/// A_{ij} = ⟨D₋ⁱP, D₊ʲP⟩ for 0 ≤ i,j ≤ kmax, optionally restricted to
/// i + j ≤ sum_cap (< 0 means no cap; skipped entries stay zero).
std::vector<std::vector<RationalFunction>> orthogonality_table(const Projector& p,
                                                               const VectorField& e, int kmax,
                                                               int sum_cap = -1);

/// Entrywise inversion about the unit sphere; the result is again a rank-1
/// Hermitian projector, and an E-L solution whenever the input is (asserted).
Projector invert_projector(const Projector& p);

}  // namespace cpn
