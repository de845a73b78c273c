//! Independent numerical cross-validation against the standard complex
//! spin matrices.
//!
//! The symbolic kernel is the source of truth; this module rebuilds the
//! usual ladder-operator representation in floating point, converts it to
//! the real convention J_a = −i·S_a, evaluates PBW elements as matrices,
//! and compares. Entries involve square roots, so everything here carries a
//! tolerance (1e−10 unless stated otherwise).

use num_complex::Complex64;

use crate::rational::to_f64;
use crate::spinalg::SpinAlgebraTable;
use crate::uea::{Axis, UeaElement};

pub const DEFAULT_TOL: f64 = 1e-10;

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zero(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            data: vec![Complex64::ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ComplexMatrix::zero(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = ComplexMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let t = a * rhs[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim);
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint_conj(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Entries flattened row-major, as a complex vector of length dim².
    pub fn flatten(&self) -> &[Complex64] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Which commutation convention the generator matrices follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Hermitian S_a with [S_x, S_y] = i·S_z.
    Physics,
    /// J_a = −i·S_a with [J_x, J_y] = J_z; what the symbolic kernel uses.
    Real,
}

#[derive(Clone, Copy, Debug)]
pub struct RepConfig {
    pub two_s: u32,
    pub convention: Convention,
}

/// The standard spin-s generator matrices [S_x, S_y, S_z] in the physics
/// convention, built from the ladder construction with Condon–Shortley
/// phases: S_z diagonal with s, s−1, …, −s and (S_+)_{m+1,m} =
/// √(s(s+1) − m(m+1)).
pub fn build_spin_matrices(two_s: u32) -> [ComplexMatrix; 3] {
    let d = two_s as usize + 1;
    let s = two_s as f64 / 2.0;
    let m_of = |row: usize| s - row as f64;

    let mut sz = ComplexMatrix::zero(d);
    for i in 0..d {
        sz[(i, i)] = Complex64::new(m_of(i), 0.0);
    }
    let mut splus = ComplexMatrix::zero(d);
    for i in 1..d {
        // Row i-1 holds eigenvalue m+1 where row i holds m.
        let m = m_of(i);
        splus[(i - 1, i)] = Complex64::new((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
    }
    let sminus = splus.adjoint_conj();
    let sx = splus.add(&sminus).scale(Complex64::new(0.5, 0.0));
    let sy = splus.sub(&sminus).scale(Complex64::new(0.0, -0.5));
    [sx, sy, sz]
}

/// J_a = −i·S_a, the real-convention generators.
pub fn to_real_convention(mats: &[ComplexMatrix; 3]) -> [ComplexMatrix; 3] {
    let minus_i = Complex64::new(0.0, -1.0);
    [
        mats[0].scale(minus_i),
        mats[1].scale(minus_i),
        mats[2].scale(minus_i),
    ]
}

/// A concrete representation ready for evaluation.
pub struct Rep {
    pub config: RepConfig,
    pub generators: [ComplexMatrix; 3],
}

impl Rep {
    pub fn new(config: RepConfig) -> Rep {
        let physics = build_spin_matrices(config.two_s);
        let generators = match config.convention {
            Convention::Physics => physics,
            Convention::Real => to_real_convention(&physics),
        };
        Rep { config, generators }
    }

    pub fn real(two_s: u32) -> Rep {
        Rep::new(RepConfig {
            two_s,
            convention: Convention::Real,
        })
    }

    pub fn dim(&self) -> usize {
        self.config.two_s as usize + 1
    }

    pub fn generator(&self, a: Axis) -> &ComplexMatrix {
        &self.generators[a.index()]
    }
}

/// Evaluates a PBW element as a matrix; linear, and multiplicative up to
/// floating-point error by construction of the normal form.
pub fn evaluate(x: &UeaElement, rep: &Rep) -> ComplexMatrix {
    let mut out = ComplexMatrix::zero(rep.dim());
    for (m, c) in x.terms() {
        let mut term = ComplexMatrix::identity(rep.dim());
        for axis in Axis::ALL {
            for _ in 0..m.exponent(axis) {
                term = term.mul(rep.generator(axis));
            }
        }
        out = out.add(&term.scale(Complex64::new(to_f64(c), 0.0)));
    }
    out
}

/// Result of checking a structure-constant table against its matrix
/// representation.
pub struct ComparisonReport {
    pub max_deviation: f64,
    pub pairs_checked: usize,
    pub tol: f64,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tol
    }
}

/// For every basis pair: ‖ρ(e_i)·ρ(e_j) − Σ_l c_{ij}^l·ρ(e_l)‖_F < tol.
pub fn compare_structure_constants(table: &SpinAlgebraTable, tol: f64) -> ComparisonReport {
    let rep = Rep::real(table.two_s());
    let mats: Vec<ComplexMatrix> = table
        .basis()
        .iter()
        .map(|b| evaluate(&b.expansion, &rep))
        .collect();
    let dim = table.dimension();
    let mut max_deviation: f64 = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let mut expected = ComplexMatrix::zero(rep.dim());
            for (l, c) in table.product_terms(i, j) {
                expected = expected.add(&mats[*l].scale(Complex64::new(to_f64(c), 0.0)));
            }
            let got = mats[i].mul(&mats[j]);
            max_deviation = max_deviation.max(got.sub(&expected).frobenius_norm());
        }
    }
    ComparisonReport {
        max_deviation,
        pairs_checked: dim * dim,
        tol,
    }
}

/// Singular values of a set of complex matrices viewed as real vectors
/// (real and imaginary parts stacked), by one-sided Jacobi orthogonalization.
/// Backs the numerical rank statements about multipole images.
pub fn singular_values_of_flattened(mats: &[ComplexMatrix]) -> Vec<f64> {
    if mats.is_empty() {
        return vec![];
    }
    let width = 2 * mats[0].flatten().len();
    let mut rows: Vec<Vec<f64>> = mats
        .iter()
        .map(|m| {
            let mut row = Vec::with_capacity(width);
            for c in m.flatten() {
                row.push(c.re);
            }
            for c in m.flatten() {
                row.push(c.im);
            }
            row
        })
        .collect();

    let dot = |a: &[f64], b: &[f64]| -> f64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    // Hestenes sweeps: rotate row pairs until all are mutually orthogonal.
    for _ in 0..60 {
        let mut off = 0.0f64;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let (left, right) = rows.split_at_mut(j);
                let (u, v) = (&mut left[i], &mut right[0]);
                let alpha = dot(u, u);
                let beta = dot(v, v);
                let gamma = dot(u, v);
                if gamma.abs() < 1e-300 || alpha < 1e-300 || beta < 1e-300 {
                    continue;
                }
                off = off.max(gamma.abs() / (alpha.sqrt() * beta.sqrt()));
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for k in 0..u.len() {
                    let (a, b) = (u[k], v[k]);
                    u[k] = c * a - s * b;
                    v[k] = s * a + c * b;
                }
            }
        }
        if off < 1e-14 {
            break;
        }
    }
    let mut sv: Vec<f64> = rows.iter().map(|r| dot(r, r).sqrt()).collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

/// Numerical rank: count of singular values above `threshold`.
pub fn numerical_rank(mats: &[ComplexMatrix], threshold: f64) -> usize {
    singular_values_of_flattened(mats)
        .into_iter()
        .filter(|s| *s > threshold)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::{casimir, multiply, normal_form, PbwMonomial};

    fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        a.mul(b).sub(&b.mul(a))
    }

    #[test]
    fn pauli_halves_at_two_s_one() {
        let [sx, sy, sz] = build_spin_matrices(1);
        assert!((sx[(0, 1)] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!((sy[(0, 1)] - Complex64::new(0.0, -0.5)).norm() < 1e-15);
        assert!((sz[(0, 0)] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn physics_convention_postconditions() {
        for two_s in 0..=4u32 {
            let m = build_spin_matrices(two_s);
            let s = two_s as f64 / 2.0;
            // [S_x, S_y] = i S_z cyclically.
            for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                let lhs = commutator(&m[a], &m[b]);
                let rhs = m[c].scale(Complex64::new(0.0, 1.0));
                assert!(lhs.sub(&rhs).frobenius_norm() < 1e-12, "two_s={two_s}");
            }
            // ΣS_a² = s(s+1)·I.
            let mut cas = ComplexMatrix::zero(two_s as usize + 1);
            for mat in &m {
                cas = cas.add(&mat.mul(mat));
            }
            let expected = ComplexMatrix::identity(two_s as usize + 1)
                .scale(Complex64::new(s * (s + 1.0), 0.0));
            assert!(cas.sub(&expected).frobenius_norm() < 1e-12, "two_s={two_s}");
        }
    }

    #[test]
    fn real_convention_postconditions() {
        for two_s in 0..=4u32 {
            let m = to_real_convention(&build_spin_matrices(two_s));
            let s = two_s as f64 / 2.0;
            for (a, b, c) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                let lhs = commutator(&m[a], &m[b]);
                assert!(lhs.sub(&m[c]).frobenius_norm() < 1e-12, "two_s={two_s}");
            }
            let mut cas = ComplexMatrix::zero(two_s as usize + 1);
            for mat in &m {
                cas = cas.add(&mat.mul(mat));
            }
            let expected = ComplexMatrix::identity(two_s as usize + 1)
                .scale(Complex64::new(-s * (s + 1.0), 0.0));
            assert!(cas.sub(&expected).frobenius_norm() < 1e-12, "two_s={two_s}");
        }
    }

    #[test]
    fn evaluate_matches_direct_matrix_product() {
        let rep = Rep::real(3);
        // Jz Jz Jx in normal form evaluates to the literal matrix product.
        let word = [Axis::Z, Axis::Z, Axis::X];
        let symbolic = evaluate(&normal_form(&word), &rep);
        let direct = rep
            .generator(Axis::Z)
            .mul(rep.generator(Axis::Z))
            .mul(rep.generator(Axis::X));
        assert!(symbolic.sub(&direct).frobenius_norm() < 1e-12);
    }

    #[test]
    fn evaluate_identity_and_casimir() {
        let rep = Rep::real(1);
        let one = evaluate(&UeaElement::one(), &rep);
        assert!(one.sub(&ComplexMatrix::identity(2)).frobenius_norm() < 1e-15);
        // C at two_s = 1 is the scalar −3/4.
        let c = evaluate(&casimir(), &rep);
        let expected = ComplexMatrix::identity(2).scale(Complex64::new(-0.75, 0.0));
        assert!(c.sub(&expected).frobenius_norm() < 1e-12);
    }

    #[test]
    fn zero_spin_matrices_vanish() {
        for mat in &build_spin_matrices(0) {
            assert_eq!(mat.frobenius_norm(), 0.0);
        }
    }

    #[test]
    fn singular_values_detect_rank() {
        let rep = Rep::real(2);
        let mats: Vec<_> = Axis::ALL
            .iter()
            .map(|a| evaluate(&UeaElement::generator(*a), &rep))
            .collect();
        assert_eq!(numerical_rank(&mats, 1e-8), 3);
        let dup = vec![mats[0].clone(), mats[0].clone()];
        assert_eq!(numerical_rank(&dup, 1e-8), 1);
        assert_eq!(numerical_rank(&[], 1e-8), 0);
    }

    #[test]
    fn clifford_identity_numeric_physics() {
        // {S_a, S_b} = (1/2)δ_ab·I at spin 1/2.
        let m = build_spin_matrices(1);
        for a in 0..3 {
            for b in 0..3 {
                let anti = m[a].mul(&m[b]).add(&m[b].mul(&m[a]));
                let expected = if a == b {
                    ComplexMatrix::identity(2).scale(Complex64::new(0.5, 0.0))
                } else {
                    ComplexMatrix::zero(2)
                };
                assert!(anti.sub(&expected).frobenius_norm() < 1e-12);
            }
        }
    }

    #[test]
    fn kemmer_identity_numeric_physics() {
        // S_a S_b S_c + S_c S_b S_a = δ_ab S_c + δ_cb S_a at spin 1.
        let m = build_spin_matrices(2);
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    let lhs = m[a].mul(&m[b]).mul(&m[c]).add(&m[c].mul(&m[b]).mul(&m[a]));
                    let mut rhs = ComplexMatrix::zero(3);
                    if a == b {
                        rhs = rhs.add(&m[c]);
                    }
                    if c == b {
                        rhs = rhs.add(&m[a]);
                    }
                    assert!(
                        lhs.sub(&rhs).frobenius_norm() < 1e-12,
                        "failed at ({a},{b},{c})"
                    );
                }
            }
        }
    }

    #[test]
    fn quadrupole_vanishes_in_the_spin_half_representation() {
        // T_2 generates the ideal defining the spin-1/2 quotient, so its
        // components evaluate to the zero matrix at two_s = 1.
        let rep = Rep::real(1);
        for w in crate::multipole::index_multisets(2) {
            let m = evaluate(&crate::multipole::multipole(2, &w).unwrap(), &rep);
            assert!(m.frobenius_norm() < 1e-10, "word {w:?}");
        }
    }

    #[test]
    fn multipole_matrices_alternate_hermiticity() {
        // In the real convention the generators are anti-Hermitian, and the
        // evaluated level-n components come out (-1)^n-Hermitian: Hermitian
        // for even n, anti-Hermitian for odd n.
        let rep = Rep::real(3);
        for n in 0..=3u32 {
            for w in crate::multipole::index_multisets(n) {
                let m = evaluate(&crate::multipole::multipole(n, &w).unwrap(), &rep);
                let dag = m.adjoint_conj();
                let residual = if n % 2 == 0 { m.sub(&dag) } else { m.add(&dag) };
                assert!(residual.frobenius_norm() < 1e-10, "level {n}, word {w:?}");
            }
        }
    }

    #[test]
    fn evaluate_random_products_multiplicative() {
        let rep = Rep::real(2);
        let a = normal_form(&[Axis::Y, Axis::X, Axis::Z]);
        let mut b = UeaElement::monomial(PbwMonomial([0, 2, 1]));
        b.add_term(PbwMonomial([1, 0, 0]), crate::rational::rat(3, 2));
        let lhs = evaluate(&multiply(&a, &b), &rep);
        let rhs = evaluate(&a, &rep).mul(&evaluate(&b, &rep));
        assert!(lhs.sub(&rhs).frobenius_norm() < 1e-10);
    }
}
