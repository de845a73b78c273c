//! Step operators and the non-commutative multipole tensors.
//!
//! On an element annihilated by E_k, left multiplication by a generator
//! lands in the span of three E-sectors. The cubic
//! (x + (k−1)k)(x + k(k+1))(x + (k+1)(k+2)) annihilates E there, so the
//! simple-eigenvalue projectors of the real-operator formalism split L_v
//! into a step-down, a step-level, and a step-up piece. Iterating step-ups
//! from the scalars produces the multipole maps T_k: totally symmetric,
//! traceless, E_k-annihilated images of the k-adic tensors, with image
//! dimension 2k+1.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::RowSpace;
use crate::poly::{apply_poly, Polynomial};
use crate::projector::simple_projector;
use crate::rational::{int, rat};
use crate::uea::{
    adjoint, casimir, e_action, e_factor, left_mul, monomial_support, multiply, right_mul,
    structure_constant, Axis, FreeTensor, UeaElement,
};

/// Which of the three sectors a dressed left multiplication steps into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// Into the E_{k−1} kernel; zero on level 0.
    Down,
    /// Stays at E_k (E_0² at level 0, where the image turns out trivial).
    Level,
    /// Into the E_{k+1} kernel; the multipole recursion.
    Up,
}

impl StepKind {
    pub const ALL: [StepKind; 3] = [StepKind::Down, StepKind::Level, StepKind::Up];
}

/// The polynomial p with step = p(E)∘L_v on the level-k kernel,
/// normalization included. For k ≥ 1 these are the simple-eigenvalue
/// projectors of the cubic annihilator; level 0 keeps its piecewise
/// definitions (the level polynomial there is (4 − x²)/4, carrying the
/// squared factor).
pub fn step_polynomial(kind: StepKind, k: u32) -> Polynomial {
    let factor = |n: i64| Polynomial::from_i64(&[n * (n + 1), 1]); // x + n(n+1)
    if k == 0 {
        return match kind {
            StepKind::Down => Polynomial::zero(),
            StepKind::Level => Polynomial::new(vec![int(1), int(0), rat(-1, 4)]),
            StepKind::Up => Polynomial::monomial(2, rat(1, 4)),
        };
    }
    let k = k as i64;
    let (lambda, q) = match kind {
        StepKind::Down => (-int((k - 1) * k), &factor(k) * &factor(k + 1)),
        StepKind::Level => (-int(k * (k + 1)), &factor(k - 1) * &factor(k + 1)),
        StepKind::Up => (-int((k + 1) * (k + 2)), &factor(k - 1) * &factor(k)),
    };
    simple_projector(&lambda, &q).expect("cubic roots are distinct for k >= 1")
}

fn step_with<F>(kind: StepKind, k: u32, x: &UeaElement, mul: F) -> Result<UeaElement>
where
    F: Fn(&UeaElement) -> UeaElement,
{
    if !e_factor(k, x).is_zero() {
        return Err(Error::StepPrecondition { level: k });
    }
    let p = step_polynomial(kind, k);
    Ok(apply_poly(&p, e_action, &mul(x)))
}

/// Applies the step operator of `kind` by the generator `v` to an element of
/// the level-`k` sector. The level is caller-declared because the projector
/// polynomial depends on it; the precondition E_k(x) = 0 is checked.
pub fn step(kind: StepKind, v: Axis, k: u32, x: &UeaElement) -> Result<UeaElement> {
    let g = UeaElement::generator(v);
    step_with(kind, k, x, |y| left_mul(&g, y))
}

/// The right-multiplication variant: the same projector polynomial composed
/// with R_v instead of L_v. On multipoles these reproduce the left steps up
/// to the sign of the level step.
pub fn right_step(kind: StepKind, v: Axis, k: u32, x: &UeaElement) -> Result<UeaElement> {
    let g = UeaElement::generator(v);
    step_with(kind, k, x, |y| right_mul(&g, y))
}

static MULTIPOLE_CACHE: LazyLock<RwLock<HashMap<Vec<Axis>, Arc<UeaElement>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The multipole map T_k on a word of length k: T_0 = 1 and
/// T_{k+1}(v⊗B) = step-up by v of T_k(B). Results are memoized; inserts of
/// identical values are idempotent, so concurrent builders are safe.
pub fn multipole(k: u32, word: &[Axis]) -> Result<UeaElement> {
    if word.len() != k as usize {
        return Err(Error::WordLengthMismatch {
            expected: k as usize,
            got: word.len(),
        });
    }
    if k == 0 {
        return Ok(UeaElement::one());
    }
    if let Some(hit) = MULTIPOLE_CACHE.read().unwrap().get(word) {
        return Ok((**hit).clone());
    }
    let tail = multipole(k - 1, &word[1..])?;
    let value = step(StepKind::Up, word[0], k - 1, &tail)?;
    MULTIPOLE_CACHE
        .write()
        .unwrap()
        .insert(word.to_vec(), Arc::new(value.clone()));
    Ok(value)
}

/// Linear extension of T_k to rational combinations of words.
pub fn multipole_tensor(k: u32, tensor: &FreeTensor) -> Result<UeaElement> {
    let mut out = UeaElement::zero();
    for (w, c) in tensor.terms() {
        out.add_scaled(&multipole(k, w)?, c);
    }
    Ok(out)
}

/// One canonical component of the level-k multipole image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultipoleComponent {
    pub level: u32,
    /// Canonical representative of the index multiset, nondecreasing.
    pub indices: Vec<Axis>,
    pub expansion: UeaElement,
}

/// A full independent basis of Im T_k; always 2k+1 components.
#[derive(Clone, Debug)]
pub struct MultipoleBasis {
    pub level: u32,
    pub components: Vec<MultipoleComponent>,
}

/// All nondecreasing words of length `k`, lexicographically ordered; the
/// canonical index multisets.
pub fn index_multisets(k: u32) -> Vec<Vec<Axis>> {
    fn rec(k: u32, min: usize, prefix: &mut Vec<Axis>, out: &mut Vec<Vec<Axis>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in min..3 {
            prefix.push(Axis::from_index(i));
            rec(k - 1, i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, 0, &mut Vec::new(), &mut out);
    out
}

/// Deterministic independent component set: walk the index multisets in
/// lexicographic order and keep those that enlarge the exact rank. Total
/// symmetry makes the multisets exhaustive, and tracelessness is what drops
/// the count from (k+1)(k+2)/2 to 2k+1.
pub fn multipole_basis(k: u32) -> MultipoleBasis {
    let multisets = index_multisets(k);
    let expansions: Vec<UeaElement> = multisets
        .iter()
        .map(|w| multipole(k, w).expect("length matches by construction"))
        .collect();
    let support = monomial_support(expansions.iter());
    let mut span = RowSpace::new(support.len());
    let mut components = Vec::new();
    for (indices, expansion) in multisets.into_iter().zip(expansions) {
        if span.try_insert(expansion.coeff_vector(&support)) {
            components.push(MultipoleComponent {
                level: k,
                indices,
                expansion,
            });
        }
    }
    MultipoleBasis {
        level: k,
        components,
    }
}

/// The cubic in E that annihilates L_v on the level-m kernel:
/// (x + m(m+1))(x + (m+1)(m+2))(x + (m−1)m).
pub fn left_action_annihilator(m: u32) -> Polynomial {
    let m = m as i64;
    let f = |n: i64| Polynomial::from_i64(&[n, 1]);
    &(&f(m * (m + 1)) * &f((m + 1) * (m + 2))) * &f((m - 1) * m)
}

/// L_v = D_v + Λ_v + S⁺_v on T_k: the resolution of the identity that makes
/// the step decomposition exhaustive.
pub fn step_resolution_holds(k: u32, v: Axis, word: &[Axis]) -> Result<bool> {
    let t = multipole(k, word)?;
    let mut sum = UeaElement::zero();
    for kind in StepKind::ALL {
        sum = &sum + &step(kind, v, k, &t)?;
    }
    Ok(sum == left_mul(&UeaElement::generator(v), &t))
}

/// Step-down image on the dipole: D_a T_1(J_b) = (1/3)·C·δ_ab.
pub fn verify_step_down_dipole(a: Axis, b: Axis) -> Result<bool> {
    let lhs = step(StepKind::Down, a, 1, &multipole(1, &[b])?)?;
    let rhs = if a == b {
        casimir().scale(&rat(1, 3))
    } else {
        UeaElement::zero()
    };
    Ok(lhs == rhs)
}

/// Step-down image on T_k: for k ≥ 2,
///
///   D_a T_k(⊗ b_j) = L(4C + (k−1)(k+1)) / (4(4k²−1)) applied to
///     Σ_p [ (2k−1)·δ_{a,b_p}·T_{k−1}(⊗_{j≠p} b_j)
///           − Σ_{q≠p} δ_{b_p,b_q}·T_{k−1}(a ⊗ ⊗_{j≠p,q} b_j) ].
///
/// The k = 1 case is the dipole image above.
pub fn verify_step_down_image(k: u32, a: Axis, word: &[Axis]) -> Result<bool> {
    if word.len() != k as usize {
        return Err(Error::WordLengthMismatch {
            expected: k as usize,
            got: word.len(),
        });
    }
    if k == 1 {
        return verify_step_down_dipole(a, word[0]);
    }
    assert!(k >= 2);
    let lhs = step(StepKind::Down, a, k, &multipole(k, word)?)?;

    let ki = k as i64;
    let mut bracket = UeaElement::zero();
    for p in 0..word.len() {
        if word[p] == a {
            let mut dropped = word.to_vec();
            dropped.remove(p);
            bracket.add_scaled(&multipole(k - 1, &dropped)?, &int(2 * ki - 1));
        }
        for q in 0..word.len() {
            if q == p || word[p] != word[q] {
                continue;
            }
            let mut rest: Vec<Axis> = vec![a];
            rest.extend(
                word.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != p && *j != q)
                    .map(|(_, x)| *x),
            );
            bracket.add_scaled(&multipole(k - 1, &rest)?, &int(-1));
        }
    }
    let mut central = casimir().scale(&int(4));
    central.add_scaled(&UeaElement::one(), &int((ki - 1) * (ki + 1)));
    let rhs = multiply(&central, &bracket).scale(&rat(1, 4 * (4 * ki * ki - 1)));
    Ok(lhs == rhs)
}

/// Step-level image on T_k for k ≥ 1:
/// Λ_a T_k(⊗ b_j) = ½ Σ_p Σ_c ε_{a,b_p,c} T_k(… b_p ↦ c …).
pub fn verify_step_level_image(k: u32, a: Axis, word: &[Axis]) -> Result<bool> {
    if word.len() != k as usize {
        return Err(Error::WordLengthMismatch {
            expected: k as usize,
            got: word.len(),
        });
    }
    let lhs = step(StepKind::Level, a, k, &multipole(k, word)?)?;
    let mut rhs = UeaElement::zero();
    for p in 0..word.len() {
        for c in Axis::ALL {
            let eps = structure_constant(a, word[p], c);
            if eps.is_zero() {
                continue;
            }
            let mut rotated = word.to_vec();
            rotated[p] = c;
            rhs.add_scaled(&multipole(k, &rotated)?, &(&eps * &rat(1, 2)));
        }
    }
    Ok(lhs == rhs)
}

/// Right-multiplication step identities on multipoles: D^R = D, S⁺^R = S⁺,
/// and Λ^R = −Λ.
pub fn verify_right_step_identities(k: u32, v: Axis, word: &[Axis]) -> Result<bool> {
    let t = multipole(k, word)?;
    for kind in StepKind::ALL {
        let left = step(kind, v, k, &t)?;
        let right = right_step(kind, v, k, &t)?;
        let expected = match kind {
            StepKind::Level => -&left,
            _ => left,
        };
        if right != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The multipoles intertwine the adjoint action: ad_u ∘ T_k = T_k ∘ ad_u,
/// with ad acting on the free tensor slots as a derivation.
pub fn ad_commutation_check(k: u32, u: &UeaElement, word: &[Axis]) -> Result<bool> {
    let lhs = adjoint(u, &multipole(k, word)?);
    let rhs = multipole_tensor(k, &FreeTensor::word(word).adjoint_elem(u))?;
    Ok(lhs == rhs)
}

/// Exact dimension of Im T_k, computed by rank over all index multisets.
pub fn multipole_image_rank(k: u32) -> usize {
    multipole_basis(k).components.len()
}

/// Contraction over slots (p, q): Σ_a T_k(word with slots p, q ↦ a).
/// Zero for every slot pair when k ≥ 2.
pub fn slot_contraction(k: u32, word: &[Axis], p: usize, q: usize) -> Result<UeaElement> {
    assert!(p != q && p < word.len() && q < word.len());
    let mut out = UeaElement::zero();
    for a in Axis::ALL {
        let mut contracted = word.to_vec();
        contracted[p] = a;
        contracted[q] = a;
        out = &out + &multipole(k, &contracted)?;
    }
    Ok(out)
}
