//! Finite-dimensional character combinatorics.
//!
//! Dominant weight multiplicities come from the Freudenthal recursion with
//! exact rational arithmetic (every intermediate value is asserted integral),
//! dimensions from the Weyl dimension formula, and tensor-product
//! coefficients `c_{lambda,mu}^nu` from the Klimyk rule over the weights of
//! the smaller factor.
//!
//! [`brute_tensor_oracle`] is an independent cross-check for ranks up to 3:
//! it expands both characters as alternating-sum quotients of the Weyl
//! character formula (never touching the Freudenthal tables), convolves the
//! two monomial multisets, and greedily strips dominated characters from the
//! top.
//!
//! Character tables are cached in-process on the owning [`RootSystem`] and
//! optionally on disk; see [`CharCache`] for the file format.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigRational, BigUint, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::frac::{big_is_integer, to_big};
use crate::rootdata::{RootSystem, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("brute-force oracle guard: {0}")]
    OracleGuard(String),
}

/// Dominant-support character table of one simple module `L(lambda)`.
#[derive(Debug, Clone)]
pub struct CharTable {
    highest: Weight,
    mults: BTreeMap<Weight, u64>,
    orbits: OnceLock<Arc<Vec<(Weight, u64)>>>,
}

impl CharTable {
    fn new(highest: Weight, mults: BTreeMap<Weight, u64>) -> CharTable {
        CharTable {
            highest,
            mults,
            orbits: OnceLock::new(),
        }
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// Multiplicities indexed by dominant weights only.
    pub fn dominant_multiplicities(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    /// Multiplicity of an arbitrary weight (via its dominant representative).
    pub fn multiplicity(&self, ctx: &RootSystem, w: &Weight) -> u64 {
        let dom = ctx.plain_dominant(w);
        self.mults.get(&dom).copied().unwrap_or(0)
    }

    /// The full Weyl-orbit weight multiset, expanded once and shared.
    pub fn expand_orbits(&self, ctx: &RootSystem) -> Arc<Vec<(Weight, u64)>> {
        self.orbits
            .get_or_init(|| {
                let mut out = Vec::new();
                for (w, &m) in &self.mults {
                    for x in ctx.weyl_orbit(w) {
                        out.push((x, m));
                    }
                }
                Arc::new(out)
            })
            .clone()
    }

    /// Full dimension, summing multiplicities over all Weyl orbits.
    pub fn dimension(&self, ctx: &RootSystem) -> BigUint {
        self.expand_orbits(ctx)
            .iter()
            .fold(BigUint::zero(), |acc, (_, m)| acc + BigUint::from(*m))
    }
}

/// A finitely supported sum of labels with non-negative multiplicities.
/// Zero multiplicities are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum<L: Ord = Weight> {
    terms: BTreeMap<L, u64>,
    pub truncated: bool,
}

impl<L: Ord + Clone> FormalSum<L> {
    pub fn new() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn add_term(&mut self, label: L, mult: u64) {
        if mult > 0 {
            *self.terms.entry(label).or_insert(0) += mult;
        }
    }

    pub fn terms(&self) -> &BTreeMap<L, u64> {
        &self.terms
    }

    pub fn get(&self, label: &L) -> u64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<L: Ord + Clone> Default for FormalSum<L> {
    fn default() -> Self {
        Self::new()
    }
}

impl<L: Ord + Clone> FromIterator<(L, u64)> for FormalSum<L> {
    fn from_iter<I: IntoIterator<Item = (L, u64)>>(iter: I) -> Self {
        let mut s = FormalSum::new();
        for (l, m) in iter {
            s.add_term(l, m);
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------------

/// In-process character-table cache with an optional on-disk layer.
///
/// Disk format (one file per `(type, lambda)`, name `TYPE_c1_c2_...chartab`):
///
/// ```text
/// chartab 1 A2 1,1
/// 0,0 2
/// 1,1 1
/// ```
///
/// The header carries the format version, the Lie type, and the highest
/// weight; each following line is `coords mult` sorted by coordinate vector.
/// Unreadable or mismatched files are treated as cache misses.
pub struct CharCache {
    mem: RwLock<HashMap<Weight, Arc<CharTable>>>,
    /// Tensor decompositions, keyed by the ordered pair so that symmetry
    /// checks still exercise two independent computations.
    tensor: RwLock<HashMap<(Weight, Weight), Arc<FormalSum<Weight>>>>,
    dir: RwLock<Option<PathBuf>>,
}

pub const CHARTAB_FORMAT_VERSION: u32 = 1;

impl CharCache {
    pub fn new() -> Self {
        CharCache {
            mem: RwLock::new(HashMap::new()),
            tensor: RwLock::new(HashMap::new()),
            dir: RwLock::new(None),
        }
    }

    /// Enables (or disables, with `None`) the on-disk layer.
    pub fn set_dir(&self, dir: Option<PathBuf>) {
        *self.dir.write().unwrap() = dir;
    }

    pub fn dir(&self) -> Option<PathBuf> {
        self.dir.read().unwrap().clone()
    }

    fn get_mem(&self, lambda: &Weight) -> Option<Arc<CharTable>> {
        self.mem.read().unwrap().get(lambda).cloned()
    }

    fn put_mem(&self, lambda: Weight, table: Arc<CharTable>) -> Arc<CharTable> {
        match self.mem.write().unwrap().entry(lambda) {
            Entry::Occupied(e) => e.get().clone(),
            Entry::Vacant(e) => {
                e.insert(table.clone());
                table
            }
        }
    }

    fn get_tensor(&self, key: &(Weight, Weight)) -> Option<Arc<FormalSum<Weight>>> {
        self.tensor.read().unwrap().get(key).cloned()
    }

    fn put_tensor(
        &self,
        key: (Weight, Weight),
        sum: Arc<FormalSum<Weight>>,
    ) -> Arc<FormalSum<Weight>> {
        match self.tensor.write().unwrap().entry(key) {
            Entry::Occupied(e) => e.get().clone(),
            Entry::Vacant(e) => {
                e.insert(sum.clone());
                sum
            }
        }
    }

    fn file_path(dir: &Path, ctx: &RootSystem, lambda: &Weight) -> PathBuf {
        let coords: Vec<String> = lambda.coords().iter().map(|c| c.to_string()).collect();
        dir.join(format!("{}_{}.chartab", ctx.lie_type(), coords.join("_")))
    }

    pub fn encode(ctx: &RootSystem, table: &CharTable) -> String {
        let mut out = format!(
            "chartab {} {} {}\n",
            CHARTAB_FORMAT_VERSION,
            ctx.lie_type(),
            table.highest()
        );
        for (w, m) in table.dominant_multiplicities() {
            out.push_str(&format!("{w} {m}\n"));
        }
        out
    }

    pub fn decode(ctx: &RootSystem, lambda: &Weight, text: &str) -> Option<CharTable> {
        let mut lines = text.lines();
        let header = lines.next()?;
        let mut parts = header.split_whitespace();
        if parts.next()? != "chartab" {
            return None;
        }
        if parts.next()?.parse::<u32>().ok()? != CHARTAB_FORMAT_VERSION {
            return None;
        }
        if parts.next()? != ctx.lie_type().to_string() {
            return None;
        }
        if parse_coords(parts.next()?)? != *lambda {
            return None;
        }
        let mut mults = BTreeMap::new();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut cols = line.split_whitespace();
            let w = parse_coords(cols.next()?)?;
            let m: u64 = cols.next()?.parse().ok()?;
            if w.rank() != ctx.rank() || cols.next().is_some() {
                return None;
            }
            mults.insert(w, m);
        }
        if mults.get(lambda).copied() != Some(1) {
            return None;
        }
        Some(CharTable::new(lambda.clone(), mults))
    }

    fn get_disk(&self, ctx: &RootSystem, lambda: &Weight) -> Option<CharTable> {
        let dir = self.dir()?;
        let text = fs::read_to_string(Self::file_path(&dir, ctx, lambda)).ok()?;
        Self::decode(ctx, lambda, &text)
    }

    fn put_disk(&self, ctx: &RootSystem, table: &CharTable) {
        if let Some(dir) = self.dir() {
            // Best-effort: a failed cache write must not fail the computation.
            let _ = fs::create_dir_all(&dir);
            let _ = fs::write(
                Self::file_path(&dir, ctx, table.highest()),
                Self::encode(ctx, table),
            );
        }
    }
}

impl Default for CharCache {
    fn default() -> Self {
        Self::new()
    }
}

fn parse_coords(s: &str) -> Option<Weight> {
    let coords: Option<Vec<i64>> = s.split(',').map(|c| c.parse().ok()).collect();
    Some(Weight::new(coords?))
}

// ---------------------------------------------------------------------------
// Freudenthal recursion
// ---------------------------------------------------------------------------

/// Dominant-weight multiplicity table of `L(lambda)` by the Freudenthal
/// recursion, descending from `lambda` through the root cone.
pub fn weight_multiplicities(
    ctx: &RootSystem,
    lambda: &Weight,
) -> Result<Arc<CharTable>, CharError> {
    if !lambda.is_dominant() {
        return Err(CharError::NotDominant(lambda.clone()));
    }
    let cache = ctx.char_cache();
    if let Some(hit) = cache.get_mem(lambda) {
        return Ok(hit);
    }
    if let Some(hit) = cache.get_disk(ctx, lambda) {
        return Ok(cache.put_mem(lambda.clone(), Arc::new(hit)));
    }
    let table = freudenthal(ctx, lambda);
    cache.put_disk(ctx, &table);
    Ok(cache.put_mem(lambda.clone(), Arc::new(table)))
}

/// Dominant weights `mu` with `lambda - mu` in the non-negative root cone.
/// Since `(w, omega_j) = j`-th simple-root coordinate, the cone coordinates
/// are bounded by `(lambda, omega_j)`.
fn dominant_cone_below(ctx: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let n = ctx.rank();
    let omegas: Vec<Weight> = (0..n)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i] = 1;
            Weight::new(c)
        })
        .collect();
    let caps: Vec<i64> = omegas
        .iter()
        .map(|o| ctx.ip(lambda, o).floor().to_integer())
        .collect();
    let simple_roots: Vec<Weight> = (0..n)
        .map(|i| Weight::new(ctx.cartan()[i].clone()))
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<(usize, Weight)> = vec![(0, lambda.clone())];
    while let Some((i, w)) = stack.pop() {
        if i == n {
            if w.is_dominant() {
                out.push(w);
            }
            continue;
        }
        for c in 0..=caps[i] {
            stack.push((i + 1, w.sub(&simple_roots[i].scaled(c))));
        }
    }
    out.sort();
    out.dedup();
    out
}

fn freudenthal(ctx: &RootSystem, lambda: &Weight) -> CharTable {
    let rho = ctx.rho().clone();
    let lam_rho = lambda.add(&rho);
    let top_norm = to_big(ctx.ip(&lam_rho, &lam_rho));
    let lam_norm = ctx.ip(lambda, lambda);

    let mut candidates = dominant_cone_below(ctx, lambda);
    // Descending root height so every lookup is already computed.
    candidates.sort_by_key(|m| {
        (
            -ctx.height_times_den(m),
            m.coords().to_vec(),
        )
    });

    let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
    for mu in candidates {
        if mu == *lambda {
            mults.insert(mu, 1);
            continue;
        }
        let mut rhs = BigRational::zero();
        for alpha in ctx.positive_roots() {
            let mut j = 1i64;
            loop {
                let shifted = mu.add(&alpha.scaled(j));
                if ctx.ip(&shifted, &shifted) > lam_norm {
                    break;
                }
                let m = {
                    let dom = ctx.plain_dominant(&shifted);
                    mults.get(&dom).copied().unwrap_or(0)
                };
                if m > 0 {
                    rhs += to_big(ctx.ip(&shifted, alpha)) * BigRational::from_integer(m.into());
                }
                j += 1;
            }
        }
        if rhs.is_zero() {
            continue; // not a weight of L(lambda)
        }
        let mu_rho = mu.add(&rho);
        let denom = &top_norm - to_big(ctx.ip(&mu_rho, &mu_rho));
        let value = BigRational::from_integer(2.into()) * rhs / denom;
        assert!(
            big_is_integer(&value) && value.is_positive(),
            "Freudenthal multiplicity must be a positive integer, got {value}"
        );
        let m = value.numer().to_u64().expect("multiplicity fits u64");
        mults.insert(mu, m);
    }

    CharTable::new(lambda.clone(), mults)
}

// ---------------------------------------------------------------------------
// Weyl dimension formula
// ---------------------------------------------------------------------------

/// `dim L(lambda)` as a product over positive roots.
pub fn weyl_dim(ctx: &RootSystem, lambda: &Weight) -> Result<BigUint, CharError> {
    if !lambda.is_dominant() {
        return Err(CharError::NotDominant(lambda.clone()));
    }
    let lam_rho = lambda.add(ctx.rho());
    let mut value = BigRational::one();
    for alpha in ctx.positive_roots() {
        value *= to_big(ctx.ip(&lam_rho, alpha)) / to_big(ctx.ip(ctx.rho(), alpha));
    }
    assert!(big_is_integer(&value), "Weyl dimension must be integral");
    Ok(value.numer().magnitude().clone())
}

// ---------------------------------------------------------------------------
// Klimyk tensor decomposition
// ---------------------------------------------------------------------------

/// Tensor-product coefficients `{nu -> c_{lambda,mu}^nu}` by the Klimyk
/// rule: every weight `tau` of the smaller factor contributes its
/// multiplicity, signed by the shifted Weyl reduction of `big + tau`.
pub fn tensor_decompose(
    ctx: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<FormalSum<Weight>, CharError> {
    if !lambda.is_dominant() {
        return Err(CharError::NotDominant(lambda.clone()));
    }
    if !mu.is_dominant() {
        return Err(CharError::NotDominant(mu.clone()));
    }
    if lambda.is_zero() {
        return Ok(FormalSum::from_iter([(mu.clone(), 1)]));
    }
    if mu.is_zero() {
        return Ok(FormalSum::from_iter([(lambda.clone(), 1)]));
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = ctx.char_cache().get_tensor(&key) {
        return Ok((*hit).clone());
    }

    let (big, small) = if weyl_dim(ctx, lambda)? >= weyl_dim(ctx, mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };

    let table = weight_multiplicities(ctx, small)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (tau, m) in table.expand_orbits(ctx).iter() {
        let red = ctx.dominant_reduce(&big.add(tau));
        if red.singular {
            continue;
        }
        *acc.entry(red.dominant).or_insert(0) += i64::from(red.parity) * *m as i64;
    }

    let mut sum = FormalSum::new();
    for (nu, c) in acc {
        assert!(c >= 0, "Klimyk coefficient must be non-negative, got {c} at {nu}");
        sum.add_term(nu, c as u64);
    }
    Ok((*ctx.char_cache().put_tensor(key, Arc::new(sum))).clone())
}

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

const ORACLE_MAX_RANK: usize = 3;
const ORACLE_MAX_COORD: i64 = 8;

/// Key for monomial multisets ordered by height-then-lexicographic; this is
/// the term order used for Weyl-denominator division and top stripping.
type TermKey = (i64, Vec<i64>);
type Monomials = BTreeMap<TermKey, i64>;

fn term_key(ctx: &RootSystem, w: &Weight) -> TermKey {
    (ctx.height_times_den(w), w.coords().to_vec())
}

/// Reusable brute-force session: memoizes the Weyl group and full character
/// expansions so that sweeps over many pairs stay cheap. Independent of the
/// Freudenthal/Klimyk path by construction: characters are computed as
/// quotients of alternating orbit sums.
pub struct BruteOracle<'a> {
    ctx: &'a RootSystem,
    /// (matrix, sign) pairs for the full Weyl group, matrices row-major.
    group: Vec<(Vec<i64>, i64)>,
    denominator: Monomials,
    chars: HashMap<Weight, Arc<Monomials>>,
}

impl<'a> BruteOracle<'a> {
    pub fn new(ctx: &'a RootSystem) -> Result<Self, CharError> {
        if ctx.rank() > ORACLE_MAX_RANK {
            return Err(CharError::OracleGuard(format!(
                "rank {} exceeds the oracle limit {}",
                ctx.rank(),
                ORACLE_MAX_RANK
            )));
        }
        let group = enumerate_weyl_group(ctx);
        let mut oracle = BruteOracle {
            ctx,
            group,
            denominator: Monomials::new(),
            chars: HashMap::new(),
        };
        oracle.denominator = oracle.alternating_sum(ctx.rho());
        Ok(oracle)
    }

    fn apply(&self, mat: &[i64], w: &Weight) -> Weight {
        let n = self.ctx.rank();
        let mut out = vec![0i64; n];
        for (r, o) in out.iter_mut().enumerate() {
            let mut acc = 0i64;
            for (c, &wc) in w.coords().iter().enumerate() {
                acc += mat[r * n + c] * wc;
            }
            *o = acc;
        }
        Weight::new(out)
    }

    /// `sum_w sign(w) e^{w(v)}` for strictly dominant `v`.
    fn alternating_sum(&self, v: &Weight) -> Monomials {
        let mut out = Monomials::new();
        for (mat, sign) in &self.group {
            let img = self.apply(mat, v);
            *out.entry(term_key(self.ctx, &img)).or_insert(0) += sign;
        }
        out
    }

    /// Full character of `L(lambda)` as a monomial multiset, by dividing the
    /// alternating sum at `lambda + rho` by the Weyl denominator.
    fn character(&mut self, lambda: &Weight) -> Arc<Monomials> {
        if let Some(hit) = self.chars.get(lambda) {
            return hit.clone();
        }
        let mut numerator = self.alternating_sum(&lambda.add(self.ctx.rho()));
        let den_lead = self
            .denominator
            .iter()
            .next_back()
            .map(|(k, _)| k.clone())
            .expect("nonempty denominator");
        debug_assert_eq!(self.denominator.get(&den_lead), Some(&1));

        let mut quotient = Monomials::new();
        while let Some((lead, &coeff)) = numerator.iter().next_back() {
            debug_assert_ne!(coeff, 0);
            let shift: Vec<i64> = lead
                .1
                .iter()
                .zip(&den_lead.1)
                .map(|(a, b)| a - b)
                .collect();
            let shift_w = Weight::new(shift);
            *quotient.entry(term_key(self.ctx, &shift_w)).or_insert(0) += coeff;
            for (dk, dc) in &self.denominator {
                let moved = Weight::new(
                    dk.1.iter().zip(shift_w.coords()).map(|(a, b)| a + b).collect(),
                );
                let key = term_key(self.ctx, &moved);
                let entry = numerator.entry(key.clone()).or_insert(0);
                *entry -= coeff * dc;
                if *entry == 0 {
                    numerator.remove(&key);
                }
            }
        }
        debug_assert!(quotient.values().all(|&c| c > 0));
        let arc = Arc::new(quotient);
        self.chars.insert(lambda.clone(), arc.clone());
        arc
    }

    /// Decomposes `L(lambda) (x) L(mu)` by convolving the two characters and
    /// stripping dominated characters greedily from the top.
    pub fn tensor(
        &mut self,
        lambda: &Weight,
        mu: &Weight,
    ) -> Result<FormalSum<Weight>, CharError> {
        for w in [lambda, mu] {
            if !w.is_dominant() {
                return Err(CharError::NotDominant(w.clone()));
            }
            if w.coords().iter().any(|&c| c > ORACLE_MAX_COORD) {
                return Err(CharError::OracleGuard(format!(
                    "coordinate above the oracle limit {ORACLE_MAX_COORD} in {w}"
                )));
            }
        }

        let ca = self.character(lambda);
        let cb = self.character(mu);
        let mut product: HashMap<Vec<i64>, i64> = HashMap::new();
        for (ka, &ma) in ca.iter() {
            for (kb, &mb) in cb.iter() {
                let sum: Vec<i64> = ka.1.iter().zip(&kb.1).map(|(a, b)| a + b).collect();
                *product.entry(sum).or_insert(0) += ma * mb;
            }
        }
        let mut remaining = Monomials::new();
        for (coords, m) in product {
            if m != 0 {
                let w = Weight::new(coords);
                remaining.insert(term_key(self.ctx, &w), m);
            }
        }

        let mut result = FormalSum::new();
        while let Some((lead, &coeff)) = remaining.iter().next_back() {
            let nu = Weight::new(lead.1.clone());
            assert!(
                nu.is_dominant() && coeff > 0,
                "top term of a character product must be dominant with positive \
                 coefficient, got {coeff} at {nu}"
            );
            let ch = self.character(&nu);
            for (k, c) in ch.iter() {
                let entry = remaining.entry(k.clone()).or_insert(0);
                *entry -= coeff * c;
                if *entry == 0 {
                    remaining.remove(k);
                }
            }
            result.add_term(nu, coeff as u64);
        }
        Ok(result)
    }
}

fn enumerate_weyl_group(ctx: &RootSystem) -> Vec<(Vec<i64>, i64)> {
    let n = ctx.rank();
    let identity: Vec<i64> = (0..n * n)
        .map(|k| i64::from(k / n == k % n))
        .collect();
    // Generator s_i acts by (s_i v)[r] = v[r] - v[i] * alpha_i[r].
    let gens: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut m = identity.clone();
            for r in 0..n {
                m[r * n + i] = i64::from(r == i) - ctx.cartan()[i][r];
            }
            m
        })
        .collect();

    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut out = vec![0i64; n * n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = 0;
                for k in 0..n {
                    acc += a[r * n + k] * b[k * n + c];
                }
                out[r * n + c] = acc;
            }
        }
        out
    };

    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    seen.insert(identity.clone(), 1);
    let mut frontier = vec![identity];
    while let Some(m) = frontier.pop() {
        let sign = seen[&m];
        for g in &gens {
            let next = mul(g, &m);
            if let Entry::Vacant(e) = seen.entry(next.clone()) {
                e.insert(-sign);
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<(Vec<i64>, i64)> = seen.into_iter().collect();
    out.sort();
    out
}

/// One-shot oracle call; sweeps should construct a [`BruteOracle`] session
/// and reuse it.
pub fn brute_tensor_oracle(
    ctx: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<FormalSum<Weight>, CharError> {
    BruteOracle::new(ctx)?.tensor(lambda, mu)
}

/// Convenience wrapper returning `c_{lambda,mu}^{nu}`.
pub fn tensor_coefficient(
    ctx: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<u64, CharError> {
    Ok(tensor_decompose(ctx, lambda, mu)?.get(nu))
}
