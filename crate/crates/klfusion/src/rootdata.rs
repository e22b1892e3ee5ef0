//! Simply-laced root-system contexts.
//!
//! A [`RootSystem`] bundles the exact Cartan data of one type `A_n`, `D_n`,
//! `E_6`, `E_7`, or `E_8`: the Cartan matrix, the normalized invariant form
//! (all roots of squared length 2), the positive roots, the Weyl vector, the
//! dual Coxeter number, and the discriminant group `P/Q` with its quadratic
//! form. Everything is computed from the Cartan matrix at construction time
//! with exact integer/rational arithmetic; nothing is tabulated except the
//! Dynkin diagrams themselves.
//!
//! Weights are always stored in the fundamental-weight basis, so dominance is
//! `coords >= 0` and membership in the root lattice is integrality of the
//! simple-root coordinates (equivalently, of the pairings with the
//! fundamental weights).
//!
//! Node numbering follows Bourbaki. For `E_6`/`E_7`/`E_8` the nodes
//! `1-3-4-5-6(-7(-8))` form the long chain and node `2` attaches to node `4`;
//! for `D_n` the chain is `1-...-(n-2)` with both `n-1` and `n` attached to
//! `n-2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charalg::CharCache;
use crate::frac::{frac, mod1, Frac};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: char, rank: usize },
    #[error("unrecognized Lie type `{0}`")]
    ParseType(String),
    #[error("weight has {got} coordinates, expected rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
}

/// The three simply-laced series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    D,
    E,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::D => 'D',
            Series::E => 'E',
        }
    }
}

/// A simply-laced type such as `A2`, `D4`, or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    /// Validates the series/rank combination: `A_n` with `n >= 1`, `D_n`
    /// with `n >= 3`, `E_n` with `n` in `{6, 7, 8}`.
    pub fn new(series: Series, rank: usize) -> Result<Self, RootError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(LieType { series, rank })
        } else {
            Err(RootError::InvalidRank {
                series: series.letter(),
                rank,
            })
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootError;

    fn from_str(s: &str) -> Result<Self, RootError> {
        let mut chars = s.chars();
        let series = match chars.next() {
            Some('A' | 'a') => Series::A,
            Some('D' | 'd') => Series::D,
            Some('E' | 'e') => Series::E,
            _ => return Err(RootError::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootError::ParseType(s.to_string()))?;
        LieType::new(series, rank)
    }
}

/// An element of the weight lattice `P` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Dominant means every fundamental-weight coordinate is non-negative.
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| c * a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A coset of the root lattice `Q` inside `P`, held by its canonical
/// representative (the lexicographically first vector with coordinates in
/// `{0, 1}` that lies in the coset; for `ADE` these cover every class).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DiscClass {
    rep: Weight,
}

impl DiscClass {
    pub fn rep(&self) -> &Weight {
        &self.rep
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.is_zero()
    }

    /// Wraps an untrusted representative (deserialization only); contexts
    /// re-canonicalize through [`RootSystem::disc_class`] on use.
    pub(crate) fn from_raw_rep(rep: Weight) -> DiscClass {
        DiscClass { rep }
    }
}

impl fmt::Display for DiscClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

/// Result of the shifted-action Weyl reduction [`RootSystem::dominant_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylReduction {
    /// `w(v + rho) - rho` for the reducing Weyl element `w`.
    pub dominant: Weight,
    /// `det(w) = (-1)^{length}`; meaningful only when `singular` is false.
    pub parity: i8,
    /// True iff `v + rho` lies on a reflection wall.
    pub singular: bool,
}

/// Immutable context for one simply-laced type.
///
/// Construction is single-threaded; afterwards the context is read-only
/// (the embedded character cache uses interior locking) and can be shared
/// across threads.
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    /// `form_num[i][j] / form_den` is `(omega_i, omega_j)`; this is the
    /// inverse Cartan matrix under the `(alpha, alpha) = 2` normalization.
    form_num: Vec<Vec<i64>>,
    form_den: i64,
    positive_roots: Vec<Weight>,
    highest_root: Weight,
    rho: Weight,
    h_dual: u64,
    disc_order: u64,
    disc_reps: Vec<Weight>,
    char_cache: CharCache,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("lie_type", &self.lie_type)
            .field("h_dual", &self.h_dual)
            .field("disc_order", &self.disc_order)
            .finish()
    }
}

fn dynkin_edges(t: LieType) -> Vec<(usize, usize)> {
    let n = t.rank();
    match t.series() {
        Series::A => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        Series::D => {
            let mut e: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
            e.push((n - 3, n - 1));
            e
        }
        Series::E => {
            // Bourbaki: chain 1-3-4-5-6(-7(-8)), node 2 attached to node 4.
            let mut chain = vec![0];
            chain.extend(2..n);
            let mut e: Vec<(usize, usize)> =
                chain.windows(2).map(|w| (w[0], w[1])).collect();
            e.push((1, 3));
            e
        }
    }
}

fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in dynkin_edges(t) {
        a[i][j] = -1;
        a[j][i] = -1;
    }
    a
}

/// Exact inverse by Gauss-Jordan over `Frac`; returns `(det, inverse)`.
fn invert_exact(a: &[Vec<i64>]) -> (Frac, Vec<Vec<Frac>>) {
    let n = a.len();
    let mut m: Vec<Vec<Frac>> = a
        .iter()
        .map(|row| row.iter().map(|&x| frac(x, 1)).collect())
        .collect();
    let mut inv: Vec<Vec<Frac>> = (0..n)
        .map(|i| (0..n).map(|j| frac(i64::from(i == j), 1)).collect())
        .collect();
    let mut det = frac(1, 1);
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| m[r][col] != frac(0, 1))
            .expect("Cartan matrix is invertible");
        if pivot_row != col {
            m.swap(pivot_row, col);
            inv.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col];
        det *= pivot;
        for j in 0..n {
            m[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for r in 0..n {
            if r != col && m[r][col] != frac(0, 1) {
                let factor = m[r][col];
                for j in 0..n {
                    let (mc, ic) = (m[col][j], inv[col][j]);
                    m[r][j] -= factor * mc;
                    inv[r][j] -= factor * ic;
                }
            }
        }
    }
    (det, inv)
}

impl RootSystem {
    /// Builds the full context for `t`. Positive roots are generated by
    /// closure from the simple roots; `h_dual`, `disc_order`, and the
    /// discriminant representatives are derived, not tabulated.
    pub fn new(t: LieType) -> Result<RootSystem, RootError> {
        let n = t.rank();
        let cartan = cartan_matrix(t);
        let (det, inv) = invert_exact(&cartan);
        let det_i = *det.numer();
        debug_assert_eq!(*det.denom(), 1);
        debug_assert!(det_i > 0);

        let form_den = det_i;
        let form_num: Vec<Vec<i64>> = inv
            .iter()
            .map(|row| {
                row.iter()
                    .map(|f| {
                        let scaled = *f * frac(form_den, 1);
                        debug_assert_eq!(*scaled.denom(), 1);
                        *scaled.numer()
                    })
                    .collect()
            })
            .collect();

        // Simple root alpha_i has fundamental-weight coordinates equal to the
        // i-th row of the Cartan matrix.
        let simple_roots: Vec<Weight> =
            (0..n).map(|i| Weight::new(cartan[i].clone())).collect();

        let mut sys = RootSystem {
            lie_type: t,
            cartan,
            form_num,
            form_den,
            positive_roots: Vec::new(),
            highest_root: Weight::zero(n),
            rho: Weight::new(vec![1; n]),
            h_dual: 0,
            disc_order: det_i as u64,
            disc_reps: Vec::new(),
            char_cache: CharCache::new(),
        };

        // Closure: for simply-laced roots, r + alpha_i is a root iff
        // (r, alpha_i) = -1.
        let mut roots: BTreeSet<Weight> = simple_roots.iter().cloned().collect();
        let mut frontier: Vec<Weight> = simple_roots.clone();
        while let Some(r) = frontier.pop() {
            for alpha in &simple_roots {
                if sys.ip(&r, alpha) == frac(-1, 1) {
                    let next = r.add(alpha);
                    if roots.insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
        sys.positive_roots = roots.into_iter().collect();

        sys.highest_root = sys
            .positive_roots
            .iter()
            .max_by_key(|r| sys.height_times_den(r))
            .expect("nonempty root system")
            .clone();

        let rho_theta = sys.ip(&sys.rho, &sys.highest_root);
        debug_assert_eq!(*rho_theta.denom(), 1);
        sys.h_dual = (1 + rho_theta.numer()) as u64;

        sys.disc_reps = sys.find_disc_reps();
        debug_assert_eq!(sys.disc_reps.len() as u64, sys.disc_order);

        Ok(sys)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Dual Coxeter number, `1 + (rho, theta)`.
    pub fn h_dual(&self) -> u64 {
        self.h_dual
    }

    /// `|P/Q| = det(Cartan)`.
    pub fn disc_order(&self) -> u64 {
        self.disc_order
    }

    /// Canonical representatives of the classes of `P/Q`, sorted by
    /// coordinate vector.
    pub fn disc_reps(&self) -> &[Weight] {
        &self.disc_reps
    }

    pub fn char_cache(&self) -> &CharCache {
        &self.char_cache
    }

    fn check_rank(&self, w: &Weight) -> Result<(), RootError> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(RootError::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    /// The normalized invariant bilinear form `(a, b)`.
    pub fn pairing(&self, a: &Weight, b: &Weight) -> Result<Frac, RootError> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        Ok(self.ip(a, b))
    }

    /// Internal unchecked pairing; callers guarantee matching ranks.
    pub(crate) fn ip(&self, a: &Weight, b: &Weight) -> Frac {
        debug_assert_eq!(a.rank(), self.rank());
        debug_assert_eq!(b.rank(), self.rank());
        let mut acc: i64 = 0;
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let row = &self.form_num[i];
            let mut dot: i64 = 0;
            for (j, &bj) in b.coords().iter().enumerate() {
                dot += row[j] * bj;
            }
            acc += ai * dot;
        }
        frac(acc, self.form_den)
    }

    /// `(w, rho) * form_den`, an integer proxy for the height functional.
    pub(crate) fn height_times_den(&self, w: &Weight) -> i64 {
        let h = self.ip(w, &self.rho) * frac(self.form_den, 1);
        debug_assert_eq!(*h.denom(), 1);
        *h.numer()
    }

    /// `(w, rho)` as an exact rational.
    pub fn height(&self, w: &Weight) -> Frac {
        self.ip(w, &self.rho)
    }

    /// Applies the simple reflection `s_i` to `w`.
    pub fn simple_reflect(&self, i: usize, w: &Weight) -> Weight {
        let c = w.coords()[i];
        if c == 0 {
            return w.clone();
        }
        let mut out = w.coords().to_vec();
        for (j, v) in out.iter_mut().enumerate() {
            *v -= c * self.cartan[i][j];
        }
        Weight::new(out)
    }

    /// Dominant representative under the plain Weyl action.
    pub fn plain_dominant(&self, w: &Weight) -> Weight {
        let mut v = w.clone();
        loop {
            match v.coords().iter().position(|&c| c < 0) {
                Some(i) => v = self.simple_reflect(i, &v),
                None => return v,
            }
        }
    }

    /// Weyl reduction of `w` under the rho-shifted action: reduces `w + rho`
    /// to the dominant chamber by simple reflections, tracking the sign of
    /// the reducing element, and flags wall points as singular.
    pub fn dominant_reduce(&self, w: &Weight) -> WeylReduction {
        let mut v = w.add(&self.rho);
        let mut parity: i8 = 1;
        loop {
            match v.coords().iter().position(|&c| c < 0) {
                Some(i) => {
                    v = self.simple_reflect(i, &v);
                    parity = -parity;
                }
                None => {
                    let singular = v.coords().contains(&0);
                    return WeylReduction {
                        dominant: v.sub(&self.rho),
                        parity,
                        singular,
                    };
                }
            }
        }
    }

    /// `lambda* = -w_0(lambda)`, the highest weight of the dual module.
    pub fn star(&self, lambda: &Weight) -> Result<Weight, RootError> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(RootError::NotDominant(lambda.clone()));
        }
        Ok(self.plain_dominant(&lambda.neg()))
    }

    /// Simple-root coordinates of `w` when `w` lies in the root lattice.
    pub fn root_coords(&self, w: &Weight) -> Option<Vec<i64>> {
        // x_j = (w, omega_j); integral for all j iff w is in Q.
        let mut out = Vec::with_capacity(self.rank());
        for j in 0..self.rank() {
            let mut dot: i64 = 0;
            for (i, &wi) in w.coords().iter().enumerate() {
                dot += self.form_num[j][i] * wi;
            }
            if dot % self.form_den != 0 {
                return None;
            }
            out.push(dot / self.form_den);
        }
        Some(out)
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.root_coords(w).is_some()
    }

    /// Class signature: the fractional parts of the simple-root coordinates.
    fn class_signature(&self, w: &Weight) -> Vec<i64> {
        (0..self.rank())
            .map(|j| {
                let mut dot: i64 = 0;
                for (i, &wi) in w.coords().iter().enumerate() {
                    dot += self.form_num[j][i] * wi;
                }
                dot.rem_euclid(self.form_den)
            })
            .collect()
    }

    fn find_disc_reps(&self) -> Vec<Weight> {
        let n = self.rank();
        let mut by_sig: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
        // {0,1}-box in ascending lexicographic order; the first vector found
        // in each class is its canonical representative.
        for mask in 0u64..(1 << n) {
            let coords: Vec<i64> = (0..n)
                .map(|i| ((mask >> (n - 1 - i)) & 1) as i64)
                .collect();
            let w = Weight::new(coords);
            let sig = self.class_signature(&w);
            by_sig.entry(sig).or_insert(w);
            if by_sig.len() as u64 == self.disc_order {
                break;
            }
        }
        let mut reps: Vec<Weight> = by_sig.into_values().collect();
        reps.sort();
        reps
    }

    /// The class of `lambda` in `P/Q`.
    pub fn disc_class(&self, lambda: &Weight) -> DiscClass {
        let sig = self.class_signature(lambda);
        for rep in &self.disc_reps {
            if self.class_signature(rep) == sig {
                return DiscClass { rep: rep.clone() };
            }
        }
        unreachable!("every class has a canonical representative")
    }

    pub fn disc_add(&self, a: &DiscClass, b: &DiscClass) -> DiscClass {
        self.disc_class(&a.rep.add(&b.rep))
    }

    pub fn disc_neg(&self, a: &DiscClass) -> DiscClass {
        self.disc_class(&a.rep.neg())
    }

    /// `(rep_a, rep_b) mod 1`; well-defined on cosets since `(Q, P)` is
    /// integral.
    pub fn disc_bilinear(&self, a: &DiscClass, b: &DiscClass) -> Frac {
        mod1(self.ip(&a.rep, &b.rep))
    }

    /// The exponent `m * (rep, rep) mod 1` of the quadratic form
    /// `q^m(x) = exp(2 pi i m (x, x))` on `P/Q`.
    pub fn disc_quadratic(&self, a: &DiscClass, m: i64) -> Frac {
        mod1(self.ip(&a.rep, &a.rep) * frac(m, 1))
    }

    /// Full Weyl orbit of a dominant weight, sorted.
    pub fn weyl_orbit(&self, dominant: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut stack = vec![dominant.clone()];
        seen.insert(dominant.clone());
        while let Some(w) = stack.pop() {
            for i in 0..self.rank() {
                let img = self.simple_reflect(i, &w);
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// All dominant weights with `(nu, rho) <= bound`, sorted.
    pub fn dominant_by_height(&self, bound: u32) -> Vec<Weight> {
        let n = self.rank();
        let budget = i64::from(bound) * self.form_den;
        // (omega_i, rho) * form_den, all positive.
        let unit_heights: Vec<i64> = (0..n)
            .map(|i| self.form_num[i].iter().sum::<i64>())
            .collect();
        let mut out = Vec::new();
        let mut coords = vec![0i64; n];
        fn walk(
            i: usize,
            remaining: i64,
            coords: &mut Vec<i64>,
            unit: &[i64],
            out: &mut Vec<Weight>,
        ) {
            if i == coords.len() {
                out.push(Weight::new(coords.clone()));
                return;
            }
            let max = remaining / unit[i];
            for c in 0..=max {
                coords[i] = c;
                walk(i + 1, remaining - c * unit[i], coords, unit, out);
            }
            coords[i] = 0;
        }
        walk(0, budget, &mut coords, &unit_heights, &mut out);
        out.sort();
        out
    }

    /// Dominant weights congruent to `class` mod `Q` with height at most
    /// `bound`, sorted.
    pub fn dominant_in_class_by_height(&self, class: &DiscClass, bound: u32) -> Vec<Weight> {
        let sig = self.class_signature(&class.rep);
        self.dominant_by_height(bound)
            .into_iter()
            .filter(|w| self.class_signature(w) == sig)
            .collect()
    }
}
