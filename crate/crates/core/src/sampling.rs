//! Deterministic seeded sampling of exact rational test points.
//!
//! Randomness comes from ChaCha8 keyed by `seed` (expanded with
//! `SeedableRng::seed_from_u64`) on ChaCha stream `stream`. Integers are drawn
//! with `Rng::gen_range`; both are value-stable across platforms for a fixed
//! `rand`/`rand_chacha` version, so identical seeds give identical matrices.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{int, inverse, nullspace_basis, ratio, Rational, RationalMatrix};
use crate::shapes::{index_set, make_shape, FlagShape, GroupKind, IndexPair};

/// Resample attempts before giving up.
pub const RESAMPLE_BUDGET: usize = 64;

/// Default bound on sampled integer entries.
pub const DEFAULT_BOUND: i64 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Seed {
    pub seed: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(seed: u64, stream: u64) -> Self {
        Seed { seed, stream }
    }

    /// Stream reserved for trial `trial` of check number `check`.
    pub fn for_trial(seed: u64, check: u32, trial: u32) -> Self {
        Seed {
            seed,
            stream: (u64::from(check) << 32) | u64::from(trial),
        }
    }
}

/// Owns the random state for one sequence of draws.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: Seed) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.seed);
        rng.set_stream(seed.stream);
        Sampler { rng }
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn int(&mut self, bound: i64) -> Rational {
        int(self.rng.gen_range(-bound..=bound))
    }

    /// Uniform nonzero integer in `[-bound, bound]`.
    pub fn nonzero_int(&mut self, bound: i64) -> Rational {
        let v = self.rng.gen_range(1..=bound);
        int(if self.rng.gen_bool(0.5) { v } else { -v })
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
        RationalMatrix::from_fn(rows, cols, |_, _| self.int(bound))
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }
}

/// `I_N` (orthogonal) or `J_N` (symplectic) defining the bilinear form.
pub fn form_matrix(kind: GroupKind, n: usize) -> RationalMatrix {
    match kind {
        GroupKind::Sp => {
            let h = n / 2;
            let mut j = RationalMatrix::zeros(n, n);
            let anti = RationalMatrix::anti_identity(h);
            j.place(0, h, &anti.neg());
            j.place(h, 0, &anti);
            j
        }
        _ => RationalMatrix::anti_identity(n),
    }
}

/// Checks the defining equations of the group of `kind` exactly.
pub fn in_group(kind: GroupKind, m: &RationalMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    match kind {
        GroupKind::Gl => !m.det().expect("square").is_zero(),
        GroupKind::Sl => m.det().expect("square").is_one(),
        GroupKind::O | GroupKind::Sp => {
            let f = form_matrix(kind, m.rows());
            m.transpose().mul(&f).and_then(|x| x.mul(m)).is_ok_and(|x| x == f)
        }
    }
}

/// A matrix verified to lie in the group of its shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPoint {
    shape: FlagShape,
    matrix: RationalMatrix,
}

impl GroupPoint {
    pub fn new(shape: &FlagShape, matrix: RationalMatrix) -> Result<Self> {
        if matrix.rows() != shape.n() || !matrix.is_square() {
            return Err(Error::Dimension(format!(
                "expected {n}x{n} matrix for {shape}, got {}x{}",
                matrix.rows(),
                matrix.cols(),
                n = shape.n()
            )));
        }
        if !in_group(shape.kind(), &matrix) {
            return Err(Error::NotInGroup(shape.kind().to_string()));
        }
        Ok(GroupPoint {
            shape: shape.clone(),
            matrix,
        })
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> RationalMatrix {
        self.matrix
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LieScope {
    FullGroup,
    UnipotentRadical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SliceVariant {
    /// Support on the full generator pattern.
    S,
    /// Support on the part on or above the anti-diagonal.
    S0,
    /// Orthogonal/symplectic slice.
    SCirc,
}

/// A slice point; `sign` records the resolved sign of the corner block for `SCirc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicePoint {
    pub point: GroupPoint,
    pub sign: Option<i8>,
}

fn unit(n: usize, r: usize, c: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    m.set(r, c, Rational::one());
    m
}

/// Basis of the Lie algebra of the group (or of its unipotent radical).
pub fn lie_algebra_basis(shape: &FlagShape, scope: LieScope) -> Vec<RationalMatrix> {
    let n = shape.n();
    let support: Vec<IndexPair> = match scope {
        LieScope::FullGroup => (1..=n)
            .flat_map(|i| (1..=n).map(move |j| IndexPair::new(i, j)))
            .collect(),
        LieScope::UnipotentRadical => shape.strict_upper_block_positions(),
    };
    match shape.kind() {
        GroupKind::Gl => support.iter().map(|p| unit(n, p.i - 1, p.j - 1)).collect(),
        GroupKind::Sl => {
            let mut out: Vec<RationalMatrix> = support
                .iter()
                .filter(|p| p.i != p.j)
                .map(|p| unit(n, p.i - 1, p.j - 1))
                .collect();
            if scope == LieScope::FullGroup {
                for d in 0..n - 1 {
                    let mut m = unit(n, d, d);
                    m.set(n - 1, n - 1, -Rational::one());
                    out.push(m);
                }
            }
            out
        }
        GroupKind::O | GroupKind::Sp => form_lie_basis(n, &form_matrix(shape.kind(), n), &support),
    }
}

/// Nullspace of `A ↦ AᵗF + FA` over matrices supported on `support`.
fn form_lie_basis(n: usize, f: &RationalMatrix, support: &[IndexPair]) -> Vec<RationalMatrix> {
    let mut system = RationalMatrix::zeros(n * n, support.len());
    for (col, p) in support.iter().enumerate() {
        let (a, b) = (p.i - 1, p.j - 1);
        // (AᵗF)_{b,c} += F_{a,c}
        for c in 0..n {
            let v = f.get(a, c);
            if !v.is_zero() {
                let cur = system.get(b * n + c, col) + v;
                system.set(b * n + c, col, cur);
            }
        }
        // (FA)_{r,b} += F_{r,a}
        for r in 0..n {
            let v = f.get(r, a);
            if !v.is_zero() {
                let cur = system.get(r * n + b, col) + v;
                system.set(r * n + b, col, cur);
            }
        }
    }
    nullspace_basis(&system)
        .into_iter()
        .map(|v| {
            let mut m = RationalMatrix::zeros(n, n);
            for (k, p) in support.iter().enumerate() {
                m.set(p.i - 1, p.j - 1, v[k].clone());
            }
            m
        })
        .collect()
}

/// Sampling context for one shape; caches the Lie-algebra bases it needs.
#[derive(Debug, Clone)]
pub struct ShapeSampler {
    shape: FlagShape,
    full_basis: Vec<RationalMatrix>,
    central_basis: Vec<RationalMatrix>,
}

impl ShapeSampler {
    pub fn new(shape: &FlagShape) -> Self {
        let full_basis = if shape.kind().is_classical_form() {
            lie_algebra_basis(shape, LieScope::FullGroup)
        } else {
            Vec::new()
        };
        let n0 = shape.central_size();
        let central_basis = if shape.kind().is_classical_form() && n0 > 0 {
            let g0 = make_shape(shape.kind(), n0, vec![n0]).expect("central block is a valid shape");
            lie_algebra_basis(&g0, LieScope::FullGroup)
        } else {
            Vec::new()
        };
        ShapeSampler {
            shape: shape.clone(),
            full_basis,
            central_basis,
        }
    }

    pub fn shape(&self) -> &FlagShape {
        &self.shape
    }

    /// Element of the unipotent radical `U`.
    pub fn sample_unipotent_radical(&self, rng: &mut Sampler, bound: i64) -> Result<GroupPoint> {
        let shape = &self.shape;
        let n = shape.n();
        let m = match shape.kind() {
            GroupKind::Gl | GroupKind::Sl => {
                let mut g = RationalMatrix::identity(n);
                for p in shape.strict_upper_block_positions() {
                    g.set(p.i - 1, p.j - 1, rng.int(bound));
                }
                g
            }
            GroupKind::O | GroupKind::Sp => {
                let outer = self.outer_parabolic(rng, bound, true)?;
                let v = rng.int_matrix(shape.outer_size(), shape.central_size(), bound);
                let c = self.random_corner_form(rng, bound);
                let central = RationalMatrix::identity(shape.central_size());
                self.assemble_parabolic(&outer, &central, &v, &c)?
            }
        };
        GroupPoint::new(shape, m).map_err(|e| Error::Consistency(format!("radical sample left the group: {e}")))
    }

    /// Element of the full group.
    pub fn sample_group_point(&self, rng: &mut Sampler, bound: i64, swap_component: bool) -> Result<GroupPoint> {
        let shape = &self.shape;
        let n = shape.n();
        if swap_component && shape.kind() != GroupKind::O {
            return Err(Error::Sampling("component swap only applies to orthogonal groups".into()));
        }
        let m = match shape.kind() {
            GroupKind::Gl => random_invertible(rng, n, bound)?,
            GroupKind::Sl => {
                let g = random_invertible(rng, n, bound)?;
                scale_row_to_unit_det(g, 0)
            }
            GroupKind::O | GroupKind::Sp => {
                let mut g = cayley(rng, &self.full_basis, n, bound)?;
                if swap_component {
                    let mut p = RationalMatrix::identity(n);
                    p.set(0, 0, Rational::zero());
                    p.set(n - 1, n - 1, Rational::zero());
                    p.set(0, n - 1, Rational::one());
                    p.set(n - 1, 0, Rational::one());
                    g = g.mul(&p)?;
                }
                g
            }
        };
        GroupPoint::new(shape, m).map_err(|e| Error::Consistency(format!("group sample failed membership: {e}")))
    }

    /// Point of the slice `S`, `S0` or `S°`.
    pub fn sample_slice(&self, rng: &mut Sampler, bound: i64, variant: SliceVariant) -> Result<SlicePoint> {
        let shape = &self.shape;
        let n = shape.n();
        match variant {
            SliceVariant::S | SliceVariant::S0 => {
                let set = index_set(&shape.as_gl());
                let target = if shape.kind() == GroupKind::Sl { shape.clone() } else { shape.as_gl() };
                for _ in 0..RESAMPLE_BUDGET {
                    let mut m = RationalMatrix::zeros(n, n);
                    for p in set.pairs() {
                        let on_anti = p.i + p.j == n + 1;
                        let v = match variant {
                            SliceVariant::S => rng.int(bound),
                            _ if on_anti => rng.nonzero_int(bound),
                            _ if set.is_sigma0(*p) => rng.int(bound),
                            _ => continue,
                        };
                        m.set(p.i - 1, p.j - 1, v);
                    }
                    if m.det()?.is_zero() {
                        continue;
                    }
                    if target.kind() == GroupKind::Sl {
                        // bottom row (n,1)... lies fully inside the pattern
                        m = scale_row_to_unit_det(m, n - 1);
                    }
                    return Ok(SlicePoint {
                        point: GroupPoint::new(&target, m)?,
                        sign: None,
                    });
                }
                Err(Error::Sampling(format!("no invertible slice point after {RESAMPLE_BUDGET} draws")))
            }
            SliceVariant::SCirc => {
                if !shape.kind().is_classical_form() {
                    return Err(Error::WrongKind {
                        expected: "o|sp".into(),
                        actual: shape.kind().to_string(),
                    });
                }
                self.sample_circ_slice(rng, bound)
            }
        }
    }

    fn sample_circ_slice(&self, rng: &mut Sampler, bound: i64) -> Result<SlicePoint> {
        let shape = &self.shape;
        let (outer_n, n0) = (shape.outer_size(), shape.central_size());
        let a = self.outer_parabolic(rng, bound, false)?;
        let a0 = if n0 > 0 {
            cayley(rng, &self.central_basis, n0, bound)?
        } else {
            RationalMatrix::identity(0)
        };
        let v = rng.int_matrix(outer_n, n0, bound);
        let c = self.random_corner_form(rng, bound);
        let p = self.assemble_parabolic(&a, &a0, &v, &c)?;
        // S° = w·p with w = [[0,0,±I0],[0,J0,0],[I0,0,0]]
        for sign in [1i8, -1] {
            let w = self.slice_twist(sign);
            let s = w.mul(&p)?;
            if in_group(shape.kind(), &s) {
                return Ok(SlicePoint {
                    point: GroupPoint::new(shape, s)?,
                    sign: Some(sign),
                });
            }
        }
        Err(Error::Consistency("neither sign of the corner block satisfies the form equation".into()))
    }

    fn slice_twist(&self, sign: i8) -> RationalMatrix {
        let shape = &self.shape;
        let (n, outer_n, n0) = (shape.n(), shape.outer_size(), shape.central_size());
        let i0 = RationalMatrix::anti_identity(outer_n);
        let mut w = RationalMatrix::zeros(n, n);
        w.place(0, n - outer_n, &i0.scale(&int(sign.into())));
        if n0 > 0 {
            w.place(outer_n, outer_n, &form_matrix(shape.kind(), n0));
        }
        w.place(n - outer_n, 0, &i0);
        w
    }

    /// Random block upper triangular matrix in `GL(N0)` for the outer blocks;
    /// unitriangular when `unipotent`.
    fn outer_parabolic(&self, rng: &mut Sampler, bound: i64, unipotent: bool) -> Result<RationalMatrix> {
        let outer = make_shape(GroupKind::Gl, self.shape.outer_size(), self.shape.parts()[..self.shape.half_blocks()].to_vec())?;
        let n = outer.n();
        for _ in 0..RESAMPLE_BUDGET {
            let mut a = RationalMatrix::identity(n);
            for p in outer.strict_upper_block_positions() {
                a.set(p.i - 1, p.j - 1, rng.int(bound));
            }
            if unipotent {
                return Ok(a);
            }
            for p in outer.diagonal_block_positions() {
                a.set(p.i - 1, p.j - 1, rng.int(bound));
            }
            if !a.det()?.is_zero() {
                return Ok(a);
            }
        }
        Err(Error::Sampling(format!("no invertible Levi block after {RESAMPLE_BUDGET} draws")))
    }

    /// `C = I0·B`: skew-symmetric (orthogonal) or symmetric (symplectic).
    fn random_corner_form(&self, rng: &mut Sampler, bound: i64) -> RationalMatrix {
        let n = self.shape.outer_size();
        let skew = self.shape.kind() == GroupKind::O;
        let mut c = RationalMatrix::zeros(n, n);
        for r in 0..n {
            for col in r..n {
                if skew && r == col {
                    continue;
                }
                let v = rng.int(bound);
                c.set(col, r, if skew { -v.clone() } else { v.clone() });
                c.set(r, col, v);
            }
        }
        c
    }

    /// `diag(A, A0, (Aσ)⁻¹) · [[E, V, B + VW/2], [0, E, W], [0, 0, E]]` with
    /// `B = I0·C` and `W = −J0·Vᵗ·I0`.
    fn assemble_parabolic(
        &self,
        a: &RationalMatrix,
        a0: &RationalMatrix,
        v: &RationalMatrix,
        c: &RationalMatrix,
    ) -> Result<RationalMatrix> {
        let shape = &self.shape;
        let (n, outer_n, n0) = (shape.n(), shape.outer_size(), shape.central_size());
        let i0 = RationalMatrix::anti_identity(outer_n);
        let b = i0.mul(c)?;
        let a_sigma_inv = inverse(&a.anti_transpose())?
            .ok_or_else(|| Error::Consistency("singular Levi block".into()))?;

        let mut upper = RationalMatrix::identity(n);
        let mut diag = RationalMatrix::zeros(n, n);
        diag.place(0, 0, a);
        diag.place(n - outer_n, n - outer_n, &a_sigma_inv);
        if n0 > 0 {
            let j0 = form_matrix(shape.kind(), n0);
            let w = j0.mul(&v.transpose())?.mul(&i0)?.neg();
            let corner = b.add(&v.mul(&w)?.scale(&ratio(1, 2)))?;
            upper.place(0, outer_n, v);
            upper.place(outer_n, n - outer_n, &w);
            upper.place(0, n - outer_n, &corner);
            diag.place(outer_n, outer_n, a0);
        } else {
            upper.place(0, n - outer_n, &b);
        }
        diag.mul(&upper)
    }
}

fn random_invertible(rng: &mut Sampler, n: usize, bound: i64) -> Result<RationalMatrix> {
    for _ in 0..RESAMPLE_BUDGET {
        let m = rng.int_matrix(n, n, bound);
        if !m.det()?.is_zero() {
            return Ok(m);
        }
    }
    Err(Error::Sampling(format!("no invertible matrix after {RESAMPLE_BUDGET} draws")))
}

fn scale_row_to_unit_det(mut m: RationalMatrix, row: usize) -> RationalMatrix {
    let d = m.det().expect("square").recip();
    for c in 0..m.cols() {
        let v = m.get(row, c) * &d;
        m.set(row, c, v);
    }
    m
}

/// `(E − A)(E + A)⁻¹` for a random combination `A` of `basis`.
fn cayley(rng: &mut Sampler, basis: &[RationalMatrix], n: usize, bound: i64) -> Result<RationalMatrix> {
    let e = RationalMatrix::identity(n);
    for _ in 0..RESAMPLE_BUDGET {
        let mut a = RationalMatrix::zeros(n, n);
        for b in basis {
            let c = rng.int(bound);
            if !c.is_zero() {
                a = a.add(&b.scale(&c))?;
            }
        }
        if let Some(inv) = inverse(&e.add(&a)?)? {
            return e.sub(&a)?.mul(&inv);
        }
    }
    Err(Error::Sampling(format!("Cayley transform singular after {RESAMPLE_BUDGET} draws")))
}

/// Cayley transform of a fixed Lie-algebra element.
pub fn cayley_transform(a: &RationalMatrix) -> Result<Option<RationalMatrix>> {
    let e = RationalMatrix::identity(a.rows());
    match inverse(&e.add(a)?)? {
        Some(inv) => Ok(Some(e.sub(a)?.mul(&inv)?)),
        None => Ok(None),
    }
}
