//! Group kinds, compositions of `[1, n]` and the index combinatorics built on them.
//!
//! All indices are 1-based.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Gl,
    Sl,
    O,
    Sp,
}

impl GroupKind {
    pub fn is_classical_form(self) -> bool {
        matches!(self, GroupKind::O | GroupKind::Sp)
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Gl => "gl",
            GroupKind::Sl => "sl",
            GroupKind::O => "o",
            GroupKind::Sp => "sp",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(GroupKind::Gl),
            "sl" => Ok(GroupKind::Sl),
            "o" => Ok(GroupKind::O),
            "sp" => Ok(GroupKind::Sp),
            other => Err(Error::InvalidShape(format!("unknown group kind {other:?}"))),
        }
    }
}

/// A matrix position `(i, j)`.
///
/// `Ord` is the generator order: `(i1, j1) < (i, j)` iff `j1 < j`, or `j1 = j`
/// and `i1 > i`. The smallest pair is therefore `(n, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct IndexPair {
    pub i: usize,
    pub j: usize,
}

impl IndexPair {
    pub fn new(i: usize, j: usize) -> Self {
        IndexPair { i, j }
    }
}

impl Ord for IndexPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.j.cmp(&other.j).then(other.i.cmp(&self.i))
    }
}

impl PartialOrd for IndexPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<IndexPair> for [usize; 2] {
    fn from(p: IndexPair) -> Self {
        [p.i, p.j]
    }
}

impl From<[usize; 2]> for IndexPair {
    fn from([i, j]: [usize; 2]) -> Self {
        IndexPair { i, j }
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Group kind together with the composition `(n_1, ..., n_l)` of `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FlagShape {
    kind: GroupKind,
    n: usize,
    parts: Vec<usize>,
}

impl<'de> Deserialize<'de> for FlagShape {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: GroupKind,
            n: usize,
            parts: Vec<usize>,
        }
        let raw = Raw::deserialize(d)?;
        make_shape(raw.kind, raw.n, raw.parts).map_err(serde::de::Error::custom)
    }
}

/// Validates and builds a shape.
pub fn make_shape(kind: GroupKind, n: usize, parts: Vec<usize>) -> Result<FlagShape> {
    if parts.is_empty() {
        return Err(Error::InvalidShape("empty composition".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidShape("parts must be positive".into()));
    }
    let total: usize = parts.iter().sum();
    if total != n {
        return Err(Error::InvalidShape(format!("parts sum to {total}, expected {n}")));
    }
    if kind == GroupKind::Sp && n % 2 == 1 {
        return Err(Error::InvalidShape(format!("symplectic size must be even, got {n}")));
    }
    if kind.is_classical_form() && parts.iter().ne(parts.iter().rev()) {
        return Err(Error::InvalidShape(format!(
            "composition {parts:?} must be palindromic for kind {kind}"
        )));
    }
    Ok(FlagShape { kind, n, parts })
}

impl FlagShape {
    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks `l`.
    pub fn num_blocks(&self) -> usize {
        self.parts.len()
    }

    /// Segment `I_k` as an inclusive range `(first, last)`, `k` 1-based.
    pub fn segment(&self, k: usize) -> (usize, usize) {
        let start: usize = self.parts[..k - 1].iter().sum::<usize>() + 1;
        (start, start + self.parts[k - 1] - 1)
    }

    /// Block number `k` with `i ∈ I_k`.
    pub fn block_of(&self, i: usize) -> usize {
        let mut end = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            end += p;
            if i <= end {
                return k + 1;
            }
        }
        panic!("index {i} outside [1, {}]", self.n)
    }

    pub fn mirror(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, bound: self.n });
        }
        Ok(self.n + 1 - i)
    }

    /// `l0 = floor(l / 2)`.
    pub fn half_blocks(&self) -> usize {
        self.parts.len() / 2
    }

    /// `N0 = n_1 + ... + n_{l0}`.
    pub fn outer_size(&self) -> usize {
        self.parts[..self.half_blocks()].iter().sum()
    }

    /// Central segment `I0` for odd `l`.
    pub fn central_segment(&self) -> Option<(usize, usize)> {
        (self.parts.len() % 2 == 1).then(|| self.segment(self.half_blocks() + 1))
    }

    /// `n0 = |I0|`, zero when `l` is even.
    pub fn central_size(&self) -> usize {
        self.central_segment().map_or(0, |(a, b)| b - a + 1)
    }

    /// Whether `(i, j)` satisfies `i ∈ I_k, j ∈ I'_m, k ≥ m`.
    pub fn in_slice_pattern(&self, i: usize, j: usize) -> bool {
        self.block_of(i) >= self.block_of(self.n + 1 - j)
    }

    /// Positions (1-based) strictly above the diagonal blocks.
    pub fn strict_upper_block_positions(&self) -> Vec<IndexPair> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.block_of(i) < self.block_of(j) {
                    out.push(IndexPair::new(i, j));
                }
            }
        }
        out
    }

    /// Positions inside the diagonal blocks.
    pub fn diagonal_block_positions(&self) -> Vec<IndexPair> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                if self.block_of(i) == self.block_of(j) {
                    out.push(IndexPair::new(i, j));
                }
            }
        }
        out
    }

    /// The same composition viewed as a GL shape.
    pub fn as_gl(&self) -> FlagShape {
        FlagShape {
            kind: GroupKind::Gl,
            n: self.n,
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for FlagShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}({})[{}]", self.kind, self.n, parts.join(","))
    }
}

/// Generator index set, sorted ascending in the generator order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorIndexSet {
    n: usize,
    pairs: Vec<IndexPair>,
    gamma0: Vec<IndexPair>,
}

impl GeneratorIndexSet {
    pub fn pairs(&self) -> &[IndexPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// On or above the anti-diagonal: `i + j <= n + 1`.
    pub fn is_sigma0(&self, p: IndexPair) -> bool {
        p.i + p.j <= self.n + 1
    }

    pub fn sigma0(&self) -> impl Iterator<Item = IndexPair> + '_ {
        self.pairs.iter().copied().filter(|&p| self.is_sigma0(p))
    }

    pub fn sigma1(&self) -> impl Iterator<Item = IndexPair> + '_ {
        self.pairs.iter().copied().filter(|&p| !self.is_sigma0(p))
    }

    /// `I0 × I0` for orthogonal/symplectic shapes with odd `l`; empty otherwise.
    pub fn gamma0(&self) -> &[IndexPair] {
        &self.gamma0
    }

    pub fn contains(&self, p: IndexPair) -> bool {
        self.pairs.binary_search(&p).is_ok()
    }
}

fn gl_pairs(shape: &FlagShape) -> Vec<IndexPair> {
    let n = shape.n;
    let mut pairs: Vec<IndexPair> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| IndexPair::new(i, j)))
        .filter(|p| shape.in_slice_pattern(p.i, p.j))
        .collect();
    pairs.sort();
    pairs
}

pub fn index_set(shape: &FlagShape) -> GeneratorIndexSet {
    let n = shape.n;
    let mut pairs = gl_pairs(shape);
    let mut gamma0 = Vec::new();
    match shape.kind {
        GroupKind::Gl => {}
        GroupKind::Sl => pairs.retain(|&p| p != IndexPair::new(1, n)),
        GroupKind::O | GroupKind::Sp => {
            let floor = n - shape.outer_size();
            let strict = shape.kind == GroupKind::O;
            pairs.retain(|p| p.i > floor && if strict { p.i > p.j } else { p.i >= p.j });
            if let Some((a, b)) = shape.central_segment() {
                gamma0 = (a..=b)
                    .flat_map(|i| (a..=b).map(move |j| IndexPair::new(i, j)))
                    .collect();
            }
        }
    }
    GeneratorIndexSet { n, pairs, gamma0 }
}

/// Dimension of the unipotent radical `U`.
pub fn dim_unipotent_radical(shape: &FlagShape) -> usize {
    match shape.kind {
        GroupKind::Gl | GroupKind::Sl => {
            let p = &shape.parts;
            let mut d = 0;
            for k in 0..p.len() {
                for m in k + 1..p.len() {
                    d += p[k] * p[m];
                }
            }
            d
        }
        GroupKind::O | GroupKind::Sp => (dim_group(shape) - dim_levi(shape)) / 2,
    }
}

pub fn dim_group(shape: &FlagShape) -> usize {
    let n = shape.n;
    match shape.kind {
        GroupKind::Gl => n * n,
        GroupKind::Sl => n * n - 1,
        GroupKind::O => n * (n - 1) / 2,
        GroupKind::Sp => n * (n + 1) / 2,
    }
}

/// Dimension of `G0 = O(n0)` or `Sp(n0)`; zero for even `l` and for GL/SL.
pub fn dim_g0(shape: &FlagShape) -> usize {
    let n0 = shape.central_size();
    match shape.kind {
        GroupKind::O => n0 * n0.saturating_sub(1) / 2,
        GroupKind::Sp => n0 * (n0 + 1) / 2,
        _ => 0,
    }
}

/// Dimension of the Levi factor.
pub fn dim_levi(shape: &FlagShape) -> usize {
    match shape.kind {
        GroupKind::Gl => shape.parts.iter().map(|p| p * p).sum(),
        GroupKind::Sl => shape.parts.iter().map(|p| p * p).sum::<usize>() - 1,
        GroupKind::O | GroupKind::Sp => {
            shape.parts[..shape.half_blocks()].iter().map(|p| p * p).sum::<usize>() + dim_g0(shape)
        }
    }
}
