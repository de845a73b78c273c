//! The finite spin algebras: quotients of U(so(3)) by the ideal generated
//! by all multipoles above level 2s.
//!
//! Construction relies on the multipole decomposition: every element of U is
//! a unique combination of central multiples C^m·T_n(component). Reduction
//! to that basis is exact linear algebra, and it peels degree by degree:
//! the top-degree parts of the entries with 2m+n = d form an invertible
//! square block against the degree-d monomials, so each sector is solved
//! with a small precomputed inverse. In the quotient, T_n with n > 2s is
//! dropped and C becomes the scalar −2s(2s+2)/4; what remains is a closed
//! associative table of dimension (2s+1)².

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::multipole::{index_multisets, multipole, multipole_basis, step, StepKind};
use crate::poly::Polynomial;
use crate::rational::{int, rat, Rational};
use crate::uea::{
    casimir, monomials_of_degree, multiply, structure_constant, Axis, PbwMonomial, UeaElement,
};

/// A spin quantum number, stored doubled so half-integers stay integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinLabel {
    pub two_s: u32,
}

pub const DEFAULT_SPIN_CAP: u32 = 8;

/// Index of one central-multipole basis entry: C^m · T_n(component).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CentralIndex {
    pub casimir_power: u32,
    pub level: u32,
    pub component: usize,
}

struct CentralEntry {
    index: CentralIndex,
    expansion: UeaElement,
}

struct DegreeBlock {
    entries: Vec<CentralEntry>,
    monomials: Vec<PbwMonomial>,
    /// Maps the degree-d coefficient vector of an element to the entry
    /// coefficients of its top part.
    inverse: RatMatrix,
}

/// The change of basis from PBW coordinates to central multiples of
/// multipole components, organized per degree sector up to a cap.
pub struct CentralMultipoleBasis {
    max_degree: u32,
    blocks: Vec<DegreeBlock>,
}

impl CentralMultipoleBasis {
    pub fn new(max_degree: u32) -> Result<Self> {
        let casimir_elem = casimir();
        let mut casimir_powers = vec![UeaElement::one()];
        for _ in 0..max_degree / 2 {
            casimir_powers.push(multiply(casimir_powers.last().unwrap(), &casimir_elem));
        }
        let level_bases: Vec<_> = (0..=max_degree).map(multipole_basis).collect();

        let mut blocks = Vec::with_capacity(max_degree as usize + 1);
        for d in 0..=max_degree {
            let mut entries = Vec::new();
            for m in 0..=d / 2 {
                let n = d - 2 * m;
                for (component, comp) in level_bases[n as usize].components.iter().enumerate() {
                    entries.push(CentralEntry {
                        index: CentralIndex {
                            casimir_power: m,
                            level: n,
                            component,
                        },
                        expansion: multiply(&casimir_powers[m as usize], &comp.expansion),
                    });
                }
            }
            let monomials = monomials_of_degree(d);
            if entries.len() != monomials.len() {
                return Err(Error::SingularReduction { degree: d });
            }
            let mut top = RatMatrix::zero(monomials.len(), entries.len());
            for (j, e) in entries.iter().enumerate() {
                for (i, mono) in monomials.iter().enumerate() {
                    top[(i, j)] = e.expansion.coeff(mono);
                }
            }
            let inverse = top
                .inverse()
                .ok_or(Error::SingularReduction { degree: d })?;
            blocks.push(DegreeBlock {
                entries,
                monomials,
                inverse,
            });
        }
        Ok(CentralMultipoleBasis { max_degree, blocks })
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    /// Number of entries with 2m + n ≤ cap; matches the PBW dimension
    /// (cap+3 choose 3) sector by sector.
    pub fn entry_count_up_to(&self, cap: u32) -> usize {
        self.blocks[..=cap as usize]
            .iter()
            .map(|b| b.entries.len())
            .sum()
    }

    /// Writes `x` exactly as Σ coeff · C^m·T_n(component), peeling the top
    /// degree sector at each round.
    pub fn reduce(&self, x: &UeaElement) -> Result<Vec<(CentralIndex, Rational)>> {
        let mut out: BTreeMap<CentralIndex, Rational> = BTreeMap::new();
        let mut rem = x.clone();
        while let Some(d) = rem.degree() {
            if d > self.max_degree {
                return Err(Error::DegreeCapExceeded {
                    degree: d,
                    cap: self.max_degree,
                });
            }
            let block = &self.blocks[d as usize];
            let top: Vec<Rational> = block.monomials.iter().map(|m| rem.coeff(m)).collect();
            let coeffs = block.inverse.apply(&top);
            for (entry, c) in block.entries.iter().zip(coeffs) {
                if c.is_zero() {
                    continue;
                }
                rem.add_scaled(&entry.expansion, &-c.clone());
                *out.entry(entry.index).or_insert_with(Rational::zero) += c;
            }
            debug_assert!(rem.degree().is_none_or(|d2| d2 < d));
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out.into_iter().collect())
    }

    /// Reconstructs an element from reduction coefficients; inverse of
    /// [`CentralMultipoleBasis::reduce`] by construction, used as an oracle.
    pub fn reconstruct(&self, coeffs: &[(CentralIndex, Rational)]) -> UeaElement {
        let mut out = UeaElement::zero();
        for (idx, c) in coeffs {
            let d = (2 * idx.casimir_power + idx.level) as usize;
            let entry = self.blocks[d]
                .entries
                .iter()
                .find(|e| e.index == *idx)
                .expect("index within cap");
            out.add_scaled(&entry.expansion, c);
        }
        out
    }
}

static CMB_CACHE: LazyLock<RwLock<HashMap<u32, Arc<CentralMultipoleBasis>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Shared, memoized reduction basis for a given degree cap.
pub fn central_basis(max_degree: u32) -> Result<Arc<CentralMultipoleBasis>> {
    if let Some(hit) = CMB_CACHE.read().unwrap().get(&max_degree) {
        return Ok(hit.clone());
    }
    let built = Arc::new(CentralMultipoleBasis::new(max_degree)?);
    CMB_CACHE
        .write()
        .unwrap()
        .entry(max_degree)
        .or_insert_with(|| built.clone());
    Ok(built)
}

/// Convenience entry point: reduce an element against a basis big enough to
/// hold it.
pub fn central_multipole_reduce(x: &UeaElement) -> Result<Vec<(CentralIndex, Rational)>> {
    let cap = x.degree().unwrap_or(0);
    central_basis(cap)?.reduce(x)
}

/// One basis element of a spin algebra: a level-n multipole component.
#[derive(Clone, Debug)]
pub struct SpinBasisElement {
    pub level: u32,
    pub indices: Vec<Axis>,
    pub expansion: UeaElement,
}

/// The structure-constant table of S_s over the central-multipole basis.
pub struct SpinAlgebraTable {
    two_s: u32,
    casimir_scalar: Rational,
    basis: Vec<SpinBasisElement>,
    /// products[i][j] = sparse row of (l, c_{ij}^l), sorted by l.
    products: Vec<Vec<Vec<(usize, Rational)>>>,
    reducer: Arc<CentralMultipoleBasis>,
}

impl SpinAlgebraTable {
    pub fn two_s(&self) -> u32 {
        self.two_s
    }

    /// −k(k+2)/4 for k = 2s: the scalar the Casimir element becomes.
    pub fn casimir_scalar(&self) -> &Rational {
        &self.casimir_scalar
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SpinBasisElement] {
        &self.basis
    }

    /// Flat index of the level-n component `comp`: n² + comp.
    pub fn basis_index(&self, level: u32, component: usize) -> usize {
        (level * level) as usize + component
    }

    pub fn product_terms(&self, i: usize, j: usize) -> impl Iterator<Item = (&usize, &Rational)> {
        self.products[i][j].iter().map(|(l, c)| (l, c))
    }

    /// e_i · e_j as a dense coefficient vector.
    pub fn product_vector(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dimension()];
        for (l, c) in &self.products[i][j] {
            v[*l] = c.clone();
        }
        v
    }

    /// Product of two coefficient vectors through the table.
    pub fn mul_vectors(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dimension()];
        for (i, cu) in u.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (j, cv) in v.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let f = cu * cv;
                for (l, c) in &self.products[i][j] {
                    out[*l] = &out[*l] + &(c * &f);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, index: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dimension()];
        v[index] = Rational::one();
        v
    }

    /// The image of an arbitrary enveloping-algebra element in the quotient,
    /// as a coefficient vector over the table basis.
    pub fn reduce_element(&self, x: &UeaElement) -> Result<Vec<Rational>> {
        let reduction = self.reducer.reduce(x)?;
        Ok(self.fold_to_quotient(&reduction))
    }

    /// Applies the quotient rules to a central-multipole reduction: drop
    /// levels above 2s, replace C^m by the Casimir scalar power.
    fn fold_to_quotient(&self, reduction: &[(CentralIndex, Rational)]) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dimension()];
        for (idx, c) in reduction {
            if idx.level > self.two_s {
                continue;
            }
            let mut scaled = c.clone();
            for _ in 0..idx.casimir_power {
                scaled *= &self.casimir_scalar;
            }
            let flat = self.basis_index(idx.level, idx.component);
            v[flat] = &v[flat] + &scaled;
        }
        v
    }

    /// All nonzero constants as (i, j, l, c) in export order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dimension() {
            for j in 0..self.dimension() {
                for (l, c) in &self.products[i][j] {
                    out.push((i, j, *l, c.clone()));
                }
            }
        }
        out
    }
}

static TABLE_CACHE: LazyLock<RwLock<HashMap<u32, Arc<SpinAlgebraTable>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Builds (or fetches) the spin algebra S_s for 2s = `label.two_s`, under
/// the default cap.
pub fn build_spin_algebra(label: SpinLabel) -> Result<Arc<SpinAlgebraTable>> {
    build_spin_algebra_capped(label, DEFAULT_SPIN_CAP)
}

pub fn build_spin_algebra_capped(label: SpinLabel, cap: u32) -> Result<Arc<SpinAlgebraTable>> {
    let k = label.two_s;
    if k > cap {
        return Err(Error::SpinCapExceeded { two_s: k, cap });
    }
    if let Some(hit) = TABLE_CACHE.read().unwrap().get(&k) {
        return Ok(hit.clone());
    }

    // Products of two degree-≤k basis elements live in degree ≤ 2k; the
    // identity checks push to k+2 (top-multipole sector), so size for both.
    let reducer = central_basis((2 * k).max(k + 2))?;
    let casimir_scalar = rat(-((k as i64) * (k as i64 + 2)), 4);

    let mut basis = Vec::new();
    for n in 0..=k {
        for comp in multipole_basis(n).components {
            basis.push(SpinBasisElement {
                level: n,
                indices: comp.indices,
                expansion: comp.expansion,
            });
        }
    }
    debug_assert_eq!(basis.len(), ((k + 1) * (k + 1)) as usize);

    let dim = basis.len();
    let shell = SpinAlgebraTable {
        two_s: k,
        casimir_scalar,
        basis,
        products: vec![],
        reducer: reducer.clone(),
    };

    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .collect();
    let rows: Vec<Vec<(usize, Rational)>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let product = multiply(&shell.basis[i].expansion, &shell.basis[j].expansion);
            let reduction = reducer.reduce(&product)?;
            let folded = shell.fold_to_quotient(&reduction);
            Ok(folded
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect())
        })
        .collect::<Result<_>>()?;

    let mut products = vec![vec![Vec::new(); dim]; dim];
    for (&(i, j), row) in pairs.iter().zip(rows) {
        products[i][j] = row;
    }
    let table = Arc::new(SpinAlgebraTable { products, ..shell });
    TABLE_CACHE
        .write()
        .unwrap()
        .entry(k)
        .or_insert_with(|| table.clone());
    Ok(table)
}

/// The Casimir element acts as the scalar −k(k+2)/4: its quotient image
/// times every basis element equals that multiple of the element.
pub fn casimir_scalar_check(table: &SpinAlgebraTable) -> Result<bool> {
    let c_vec = table.reduce_element(&casimir())?;
    for j in 0..table.dimension() {
        let lhs = table.mul_vectors(&c_vec, &table.basis_vector(j));
        let rhs: Vec<Rational> = table
            .basis_vector(j)
            .iter()
            .map(|x| x * table.casimir_scalar())
            .collect();
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The generator eigenspectrum polynomial reduces to zero: for k = 2s odd,
/// ∏_{j=0}^{(k−1)/2} (J_a² + (j+½)²); for k even, J_a·∏_{j=1}^{k/2} (J_a² + j²).
pub fn eigenspectrum_check(table: &SpinAlgebraTable, a: Axis) -> Result<bool> {
    let k = table.two_s();
    let square_plus = |c: Rational| Polynomial::new(vec![c, int(0), int(1)]);
    let mut poly = Polynomial::one();
    if k % 2 == 1 {
        for j in 0..=(k - 1) / 2 {
            let half = rat(2 * j as i64 + 1, 2); // j + 1/2
            poly = &poly * &square_plus(&half * &half);
        }
    } else {
        poly = Polynomial::x();
        for j in 1..=k / 2 {
            poly = &poly * &square_plus(int((j * j) as i64));
        }
    }
    // Substitute x ↦ J_a; powers of a single generator are already PBW.
    let mut elem = UeaElement::zero();
    for (p, c) in poly.coeffs().iter().enumerate() {
        let mut exps = [0u32; 3];
        exps[a.index()] = p as u32;
        elem.add_term(PbwMonomial(exps), c.clone());
    }
    Ok(table.reduce_element(&elem)?.iter().all(Zero::is_zero))
}

/// Every component of T_{2s+1} and T_{2s+2} is in the ideal.
pub fn top_multipole_vanishes(table: &SpinAlgebraTable) -> Result<bool> {
    for n in [table.two_s() + 1, table.two_s() + 2] {
        for w in index_multisets(n) {
            let t = multipole(n, &w)?;
            if !table.reduce_element(&t)?.iter().all(Zero::is_zero) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The factor identity behind the Casimir scalar: (4C + k(k+2))·T_k reduces
/// to zero in S_{k/2}, for every top-level component.
pub fn casimir_factor_identity_check(table: &SpinAlgebraTable) -> Result<bool> {
    let k = table.two_s();
    let mut central = casimir().scale(&int(4));
    central.add_scaled(&UeaElement::one(), &int((k as i64) * (k as i64 + 2)));
    for comp in &multipole_basis(k).components {
        let x = multiply(&central, &comp.expansion);
        if !table.reduce_element(&x)?.iter().all(Zero::is_zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A step-down immediately following a step-up out of the top level lands in
/// the ideal: D_a∘S⁺_b∘T_{2s}(w) reduces to zero.
pub fn stepdown_stepup_vanishes(
    table: &SpinAlgebraTable,
    a: Axis,
    b: Axis,
    word: &[Axis],
) -> Result<bool> {
    let k = table.two_s();
    let t = multipole(k, word)?;
    let up = step(StepKind::Up, b, k, &t)?;
    let down = step(StepKind::Down, a, k + 1, &up)?;
    Ok(table.reduce_element(&down)?.iter().all(Zero::is_zero))
}

/// Associativity through the table: (e_i·e_j)·e_l = e_i·(e_j·e_l).
pub fn associativity_holds(table: &SpinAlgebraTable, i: usize, j: usize, l: usize) -> bool {
    let left = table.mul_vectors(&table.product_vector(i, j), &table.basis_vector(l));
    let right = table.mul_vectors(&table.basis_vector(i), &table.product_vector(j, l));
    left == right
}

/// e_{(0,0)} is a two-sided identity.
pub fn identity_element_check(table: &SpinAlgebraTable) -> bool {
    let dim = table.dimension();
    (0..dim).all(|j| {
        table.product_vector(0, j) == table.basis_vector(j)
            && table.product_vector(j, 0) == table.basis_vector(j)
    })
}

/// The quotient preserves the Lie structure on level 1:
/// [T_1(J_a), T_1(J_b)] = Σ_c ε_abc T_1(J_c).
pub fn lie_closure_check(table: &SpinAlgebraTable) -> bool {
    if table.two_s() == 0 {
        return true; // level 1 is empty
    }
    for a in Axis::ALL {
        for b in Axis::ALL {
            let i = table.basis_index(1, a.index());
            let j = table.basis_index(1, b.index());
            let ij = table.product_vector(i, j);
            let ji = table.product_vector(j, i);
            let mut bracket: Vec<Rational> = ij.iter().zip(&ji).map(|(x, y)| x - y).collect();
            for c in Axis::ALL {
                let eps = structure_constant(a, b, c);
                let l = table.basis_index(1, c.index());
                bracket[l] = &bracket[l] - &eps;
            }
            if !bracket.iter().all(Zero::is_zero) {
                return false;
            }
        }
    }
    true
}

/// Spin-1/2 anticommutator identity in the real convention:
/// J_a·J_b + J_b·J_a = −½·δ_ab·1.
pub fn clifford_check(table: &SpinAlgebraTable) -> bool {
    assert_eq!(table.two_s(), 1);
    for a in Axis::ALL {
        for b in Axis::ALL {
            let i = table.basis_index(1, a.index());
            let j = table.basis_index(1, b.index());
            let mut anti: Vec<Rational> = table
                .product_vector(i, j)
                .iter()
                .zip(&table.product_vector(j, i))
                .map(|(x, y)| x + y)
                .collect();
            if a == b {
                anti[0] = &anti[0] + &rat(1, 2);
            }
            if !anti.iter().all(Zero::is_zero) {
                return false;
            }
        }
    }
    true
}

/// Spin-1 triple-product identity in the real convention:
/// J_a·J_b·J_c + J_c·J_b·J_a = −(δ_ab·J_c + δ_cb·J_a).
pub fn kemmer_check(table: &SpinAlgebraTable) -> bool {
    assert_eq!(table.two_s(), 2);
    let gen_vec = |a: Axis| table.basis_vector(table.basis_index(1, a.index()));
    for a in Axis::ALL {
        for b in Axis::ALL {
            for c in Axis::ALL {
                let abc =
                    table.mul_vectors(&table.mul_vectors(&gen_vec(a), &gen_vec(b)), &gen_vec(c));
                let cba =
                    table.mul_vectors(&table.mul_vectors(&gen_vec(c), &gen_vec(b)), &gen_vec(a));
                let mut lhs: Vec<Rational> = abc.iter().zip(&cba).map(|(x, y)| x + y).collect();
                if a == b {
                    let jc = table.basis_index(1, c.index());
                    lhs[jc] = &lhs[jc] + &Rational::one();
                }
                if c == b {
                    let ja = table.basis_index(1, a.index());
                    lhs[ja] = &lhs[ja] + &Rational::one();
                }
                if !lhs.iter().all(Zero::is_zero) {
                    return false;
                }
            }
        }
    }
    true
}
