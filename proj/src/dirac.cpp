#include "epchar/dirac.hpp"

#include "epchar/errors.hpp"

namespace epchar {

namespace {

GaussianMatrix embed(const RationalMatrix& m) {
    GaussianMatrix r(m.rows, m.cols);
    for (std::size_t i = 0; i < m.data.size(); ++i) r.data[i] = GaussianRational(m.data[i]);
    return r;
}

GaussianMatrix kron(const GaussianMatrix& a, const GaussianMatrix& b) {
    GaussianMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l)
                    r(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
        }
    return r;
}

Rational abs_bound(const GaussianRational& z) {
    Rational re = z.re < 0 ? -z.re : z.re;
    Rational im = z.im < 0 ? -z.im : z.im;
    return re > im ? re : im;
}

// Matrix of a Clifford element acting on the spin module basis (vac, {f_1}).
GaussianMatrix spin_matrix(const PolarizedSpace& sp, const CliffordElement& x) {
    GaussianMatrix m(2, 2);
    for (std::uint32_t col = 0; col < 2; ++col) {
        SpinVector out = spin_apply(sp, x, SpinVector::basis(sp, col));
        for (const auto& [subset, c] : out.terms) m(subset, col) = GaussianRational(c);
    }
    return m;
}

}  // namespace

DiracModel sl2_dirac_model(int dim) {
    if (dim < 1) fail(errc::dimension_mismatch, "model dimension must be positive");
    int n = dim;
    DiracModel m;
    m.dim = n;
    m.pi_x1 = RationalMatrix(n, n);
    RationalMatrix e(n, n), f(n, n);
    for (int j = 0; j < n; ++j) {
        m.pi_x1(j, j) = Rational(n - 1 - 2 * j);
        if (j + 1 < n) {
            f(j + 1, j) = 1;                            // F v_j = v_{j+1}
            e(j, j + 1) = Rational((j + 1) * (n - 1 - j));  // E v_{j+1} = (j+1)(n-1-j) v_j
        }
    }
    m.pi_x2 = e + f;
    m.pi_casimir = RationalMatrix::identity(n).scaled(Rational(n * n - 1));
    m.tau_casimir_k = Rational(n) * Rational(n);
    m.b_rho = 1;
    m.b_rho_k = 0;
    return m;
}

DiracReport dirac_square_check(const DiracModel& model, const PolarizedSpace& sp) {
    if (sp.m != 1) fail(errc::dimension_mismatch, "the desk model needs m = 1");
    std::size_t n = static_cast<std::size_t>(model.dim);
    if (model.pi_x1.rows != n || model.pi_x1.cols != n || model.pi_x2.rows != n ||
        model.pi_x2.cols != n || model.pi_casimir.rows != n || model.pi_casimir.cols != n)
        fail(errc::dimension_mismatch, "model matrices must be dim x dim");

    // pi(J) from [X1, X2] = 2J; the commutators with pi(X_i) must close the
    // modeled k-action.
    RationalMatrix pi_j = (model.pi_x1 * model.pi_x2 - model.pi_x2 * model.pi_x1)
                              .scaled(Rational(1, 2));
    RationalMatrix c1 = pi_j * model.pi_x1 - model.pi_x1 * pi_j;  // = -2 X2
    RationalMatrix c2 = pi_j * model.pi_x2 - model.pi_x2 * pi_j;  // = +2 X1
    if (!(c1 == model.pi_x2.scaled(Rational(-2))) || !(c2 == model.pi_x1.scaled(Rational(2))))
        fail(errc::validation_error, "pi matrices do not close under the k-action");

    // Clifford side, from the module action: X1 = e1 - f1/2, X2 = i e1 + (i/2) f1.
    GaussianMatrix ce = spin_matrix(sp, CliffordElement::e(sp, 1));
    GaussianMatrix cf = spin_matrix(sp, CliffordElement::f(sp, 1));
    GaussianMatrix cx1 = ce - cf.scaled(GaussianRational(Rational(1, 2)));
    GaussianMatrix cx2 = ce.scaled(GaussianRational::i_times(1)) +
                         cf.scaled(GaussianRational::i_times(Rational(1, 2)));
    GaussianMatrix s_j = (cx1 * cx2).scaled(GaussianRational(Rational(-1)));

    GaussianMatrix id_n = GaussianMatrix::identity(n);
    GaussianMatrix id_s = GaussianMatrix::identity(2);

    GaussianMatrix dirac = kron(embed(model.pi_x1), cx1) + kron(embed(model.pi_x2), cx2);
    GaussianMatrix lhs = dirac * dirac;

    GaussianMatrix j_total = kron(embed(pi_j), id_s) + kron(id_n, s_j);
    GaussianMatrix ck = (j_total * j_total).scaled(GaussianRational(Rational(-1)));

    GaussianMatrix rhs = ck - kron(embed(model.pi_casimir), id_s);
    GaussianRational shift(model.b_rho - model.b_rho_k);
    for (std::size_t i = 0; i < rhs.rows; ++i) rhs(i, i) = rhs(i, i) - shift;

    GaussianMatrix diff = lhs - rhs;
    DiracReport rep;
    rep.max_defect = 0;
    rep.defect_plus = 0;
    rep.defect_minus = 0;
    for (std::size_t i = 0; i < diff.rows; ++i)
        for (std::size_t j = 0; j < diff.cols; ++j) {
            Rational a = abs_bound(diff(i, j));
            if (a > rep.max_defect) rep.max_defect = a;
            if (i % 2 == 0 && j % 2 == 0 && a > rep.defect_plus) rep.defect_plus = a;
            if (i % 2 == 1 && j % 2 == 1 && a > rep.defect_minus) rep.defect_minus = a;
        }

    // scalar form of the Casimir lemma, checkable when pi(C) is scalar
    rep.lemma_scalar_ok = true;
    Rational pi_c = model.pi_casimir(0, 0);
    bool scalar = model.pi_casimir == RationalMatrix::identity(n).scaled(pi_c);
    if (scalar)
        rep.lemma_scalar_ok =
            (model.tau_casimir_k - pi_c - model.b_rho + model.b_rho_k) == 0;

    rep.ok = rep.max_defect == 0;
    return rep;
}

}  // namespace epchar
