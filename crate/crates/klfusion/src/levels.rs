//! Exact arithmetic in the formal level parameter `k = kappa + h_dual`.
//!
//! [`RatFunc`] is the field of rational functions in one variable `k` with
//! integer-coefficient numerator and denominator in a canonical form, so
//! equality of values is equality of representations. [`LevelParam`] is an
//! integer Moebius transform `k -> (a k + b) / (c k + d)` acting on the base
//! formal variable; the named level relations of the theory are fixed
//! transforms:
//!
//! * `shift`:      `k -> k - 1`            (`kappa -> kappa - 1`)
//! * `gko`:        `k -> k / (k - 1)`      (`1/k + 1/k_gko = 1`)
//! * `opposite`:   `k -> -k`               (`k + k_opp = 0`)
//! * `ff_dual`:    `k -> 1/k`              (`k * k_dual = 1`, simply-laced)
//! * `m_shift(m)`: `k -> k / (1 - m k)`    (`1/k = 1/k_m + m`)
//!
//! Identities are proven in `Q(k)`; irrationality of `kappa` matters only at
//! numeric specialization, where strict mode rejects exactly-rational input.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::frac::Frac;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LevelError {
    #[error("degenerate Moebius transform: det of [{a},{b};{c},{d}] is zero")]
    Degenerate { a: i64, b: i64, c: i64, d: i64 },
    #[error("strict specialization rejects exactly-rational kappa = {0}")]
    RationalKappa(String),
    #[error("evaluation hit a pole of the denominator")]
    Pole,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("substitution produced an identically-zero denominator")]
    ZeroDenominator,
}

// ---------------------------------------------------------------------------
// Integer polynomials (internal)
// ---------------------------------------------------------------------------

/// Integer-coefficient polynomial, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    fn normalized(mut coeffs: Vec<BigInt>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    fn constant(c: BigInt) -> Poly {
        Poly::normalized(vec![c])
    }

    fn var() -> Poly {
        Poly::normalized(vec![BigInt::zero(), BigInt::one()])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::normalized((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::normalized((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::normalized(out)
    }

    fn scale(&self, c: &BigInt) -> Poly {
        Poly::normalized(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Positive gcd of the coefficients; 0 for the zero polynomial.
    fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Poly::normalized(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn eval_big(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Rational-coefficient long division of `self` by `d`.
    fn divrem_rat(&self, d: &Poly) -> (Vec<BigRational>, Vec<BigRational>) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        if rem.len() < dd + 1 {
            return (vec![], rem);
        }
        let lead = BigRational::from_integer(d.leading());
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            quot[i - dd] = q.clone();
            for (j, c) in d.coeffs.iter().enumerate() {
                let delta = &q * BigRational::from_integer(c.clone());
                rem[i - dd + j] -= delta;
            }
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        (quot, rem)
    }

    /// Primitive positive-leading gcd via the Euclidean algorithm over `Q`.
    fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (_, rem) = a.divrem_rat(&b);
            let rem_poly = rat_vec_to_primitive(&rem);
            a = b;
            b = rem_poly;
        }
        a.primitive()
    }

    /// Exact division; panics if `d` does not divide `self`.
    fn exact_div(&self, d: &Poly) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let (q, r) = self.divrem_rat(d);
        assert!(r.is_empty(), "exact_div with nonzero remainder");
        let ints: Vec<BigInt> = q
            .iter()
            .map(|x| {
                assert!(x.is_integer(), "exact_div produced a fractional coefficient");
                x.numer().clone()
            })
            .collect();
        Poly::normalized(ints)
    }

    fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::constant(BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

fn rat_vec_to_primitive(v: &[BigRational]) -> Poly {
    if v.is_empty() {
        return Poly::zero();
    }
    let mut denom_lcm = BigInt::one();
    for x in v {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    Poly::normalized(ints).primitive()
}

fn poly_display(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in p.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = match i {
            0 => c.to_string(),
            1 if c.is_one() => "k".to_string(),
            1 if (-c).is_one() => "-k".to_string(),
            1 => format!("{c}*k"),
            _ if c.is_one() => format!("k^{i}"),
            _ if (-c).is_one() => format!("-k^{i}"),
            _ => format!("{c}*k^{i}"),
        };
        if parts.is_empty() {
            parts.push(body);
        } else if let Some(tail) = body.strip_prefix('-') {
            parts.push(format!(" - {tail}"));
        } else {
            parts.push(format!(" + {body}"));
        }
    }
    parts.concat()
}

// ---------------------------------------------------------------------------
// RatFunc
// ---------------------------------------------------------------------------

/// A rational function of `k` in canonical form: coprime integer numerator
/// and denominator with overall coefficient gcd 1 and a positive leading
/// denominator coefficient. Equal values have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    fn make(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "RatFunc denominator must be nonzero");
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::constant(BigInt::one()),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.exact_div(&g), den.exact_div(&g));
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = Poly::normalized(num.coeffs.iter().map(|x| x / &c).collect());
            den = Poly::normalized(den.coeffs.iter().map(|x| x / &c).collect());
        }
        if den.leading().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn zero() -> RatFunc {
        RatFunc::make(Poly::zero(), Poly::constant(BigInt::one()))
    }

    pub fn one() -> RatFunc {
        RatFunc::from_int(1)
    }

    /// The formal variable `k` itself.
    pub fn var() -> RatFunc {
        RatFunc::make(Poly::var(), Poly::constant(BigInt::one()))
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc::make(
            Poly::constant(BigInt::from(n)),
            Poly::constant(BigInt::one()),
        )
    }

    pub fn from_big_ratio(r: &BigRational) -> RatFunc {
        RatFunc::make(
            Poly::constant(r.numer().clone()),
            Poly::constant(r.denom().clone()),
        )
    }

    pub fn from_frac(f: Frac) -> RatFunc {
        RatFunc::make(
            Poly::constant(BigInt::from(*f.numer())),
            Poly::constant(BigInt::from(*f.denom())),
        )
    }

    /// Builds `(c0 + c1 k + ... ) / k^pole` from Laurent data.
    pub fn from_laurent(pole_order: usize, coeffs: &[Frac]) -> RatFunc {
        let mut num = Poly::zero();
        let mut den_scale = BigInt::one();
        for f in coeffs {
            den_scale = den_scale.lcm(&BigInt::from(*f.denom()));
        }
        for (i, f) in coeffs.iter().enumerate() {
            let scaled = BigInt::from(*f.numer()) * (&den_scale / BigInt::from(*f.denom()));
            let mut mono = vec![BigInt::zero(); i + 1];
            mono[i] = scaled;
            num = num.add(&Poly::normalized(mono));
        }
        let mut den = vec![BigInt::zero(); pole_order + 1];
        den[pole_order] = den_scale;
        RatFunc::make(num, Poly::normalized(den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Lowest-degree-first coefficient vectors `(numerator, denominator)`.
    pub fn coeff_arrays(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        (self.num.coeffs.clone(), self.den.coeffs.clone())
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        RatFunc::make(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        RatFunc::make(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        RatFunc::make(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn divide(&self, other: &RatFunc) -> Result<RatFunc, LevelError> {
        if other.is_zero() {
            return Err(LevelError::DivisionByZero);
        }
        Ok(RatFunc::make(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Substitutes the Moebius image of `k` into the function. Degeneracy is
    /// impossible for a validated [`LevelParam`] (nonzero determinant), so
    /// the result is always defined.
    pub fn substitute(&self, p: &LevelParam) -> RatFunc {
        let lin_num = Poly::normalized(vec![BigInt::from(p.b), BigInt::from(p.a)]);
        let lin_den = Poly::normalized(vec![BigInt::from(p.d), BigInt::from(p.c)]);
        let n = self
            .num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0));
        let num_powers: Vec<Poly> = (0..=n).map(|e| lin_num.pow(e)).collect();
        let den_powers: Vec<Poly> = (0..=n).map(|e| lin_den.pow(e)).collect();
        let homogenize = |p: &Poly| -> Poly {
            let mut acc = Poly::zero();
            for (i, c) in p.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc = acc.add(&num_powers[i].mul(&den_powers[n - i]).scale(c));
            }
            acc
        };
        let new_num = homogenize(&self.num);
        let new_den = homogenize(&self.den);
        assert!(
            !new_den.is_zero(),
            "Moebius substitution with nonzero determinant keeps denominators nonzero"
        );
        RatFunc::make(new_num, new_den)
    }

    pub fn eval_big(&self, x: &BigRational) -> Result<BigRational, LevelError> {
        let den = self.den.eval_big(x);
        if den.is_zero() {
            return Err(LevelError::Pole);
        }
        Ok(self.num.eval_big(x) / den)
    }

    pub fn eval_f64(&self, x: f64) -> Result<f64, LevelError> {
        let den = self.den.eval_f64(x);
        if den == 0.0 {
            return Err(LevelError::Pole);
        }
        Ok(self.num.eval_f64(x) / den)
    }

    /// The value as a rational number, when the function is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }

    /// Laurent coefficients `{power -> coefficient}` when the denominator is
    /// a monomial `c * k^j`; `None` otherwise.
    pub fn laurent(&self) -> Option<Vec<(i64, BigRational)>> {
        let j = self.den.degree()?;
        if self.den.coeffs.iter().take(j).any(|c| !c.is_zero()) {
            return None;
        }
        let c = self.den.leading();
        Some(
            self.num
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| {
                    (
                        i as i64 - j as i64,
                        BigRational::new(x.clone(), c.clone()),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_terms = self.num.coeffs.iter().filter(|c| !c.is_zero()).count();
        if self.den == Poly::constant(BigInt::one()) {
            write!(f, "{}", poly_display(&self.num))
        } else if self.den.degree() == Some(0) && num_terms <= 1 {
            write!(f, "{}/{}", poly_display(&self.num), self.den.coeff(0))
        } else if self.den.degree() == Some(0) {
            write!(f, "({})/{}", poly_display(&self.num), self.den.coeff(0))
        } else {
            write!(f, "({})/({})", poly_display(&self.num), poly_display(&self.den))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatFuncRepr {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = RatFuncRepr {
            num: self.num.coeffs.iter().map(|c| c.to_string()).collect(),
            den: self.den.coeffs.iter().map(|c| c.to_string()).collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = RatFuncRepr::deserialize(deserializer)?;
        let parse = |v: &[String]| -> Result<Vec<BigInt>, D::Error> {
            v.iter()
                .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
                .collect()
        };
        let num = Poly::normalized(parse(&repr.num)?);
        let den = Poly::normalized(parse(&repr.den)?);
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(RatFunc::make(num, den))
    }
}

// ---------------------------------------------------------------------------
// LevelParam
// ---------------------------------------------------------------------------

/// An invertible integer Moebius transform of the base formal variable,
/// stored up to scalar with `gcd(a,b,c,d) = 1` and the first nonzero entry
/// positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelParam {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl LevelParam {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<LevelParam, LevelError> {
        if a * d - b * c == 0 {
            return Err(LevelError::Degenerate { a, b, c, d });
        }
        Ok(LevelParam::normalized(a, b, c, d))
    }

    fn normalized(a: i64, b: i64, c: i64, d: i64) -> LevelParam {
        let mut g = 0i64;
        for v in [a, b, c, d] {
            g = num::integer::gcd(g, v);
        }
        debug_assert!(g > 0);
        let (mut a, mut b, mut c, mut d) = (a / g, b / g, c / g, d / g);
        let first = [a, b, c, d].into_iter().find(|&v| v != 0).unwrap_or(1);
        if first < 0 {
            (a, b, c, d) = (-a, -b, -c, -d);
        }
        LevelParam { a, b, c, d }
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    /// The identity transform `k -> k`.
    pub fn identity() -> LevelParam {
        LevelParam::normalized(1, 0, 0, 1)
    }

    /// `k -> k - 1`.
    pub fn shift() -> LevelParam {
        LevelParam::normalized(1, -1, 0, 1)
    }

    /// `k -> k / (k - 1)`, the coset relation `1/k + 1/k' = 1`.
    pub fn gko() -> LevelParam {
        LevelParam::normalized(1, 0, 1, -1)
    }

    /// `k -> -k`, the opposite-level relation `k + k' = 0`.
    pub fn opposite() -> LevelParam {
        LevelParam::normalized(-1, 0, 0, 1)
    }

    /// `k -> 1/k`, Feigin-Frenkel duality in the simply-laced case.
    pub fn ff_dual() -> LevelParam {
        LevelParam::normalized(0, 1, 1, 0)
    }

    /// `k -> k / (1 - m k)`, the relation `1/k = 1/k_m + m`.
    pub fn m_shift(m: i64) -> LevelParam {
        LevelParam::normalized(1, 0, -m, 1)
    }

    /// Function composition `self(inner(k))` as a matrix product.
    pub fn compose(&self, inner: &LevelParam) -> LevelParam {
        LevelParam::normalized(
            self.a * inner.a + self.b * inner.c,
            self.a * inner.b + self.b * inner.d,
            self.c * inner.a + self.d * inner.c,
            self.c * inner.b + self.d * inner.d,
        )
    }

    pub fn inverse(&self) -> LevelParam {
        LevelParam::normalized(self.d, -self.b, -self.c, self.a)
    }

    /// The transform as an element of `Q(k)`.
    pub fn as_ratfunc(&self) -> RatFunc {
        RatFunc::make(
            Poly::normalized(vec![BigInt::from(self.b), BigInt::from(self.a)]),
            Poly::normalized(vec![BigInt::from(self.d), BigInt::from(self.c)]),
        )
    }

    /// Evaluates the transform at a rational point; `None` at the pole.
    pub fn eval(&self, k: Frac) -> Option<Frac> {
        let den = Frac::from(self.c) * k + Frac::from(self.d);
        if den == Frac::from(0) {
            return None;
        }
        Some((Frac::from(self.a) * k + Frac::from(self.b)) / den)
    }
}

impl fmt::Display for LevelParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{};{},{}]", self.a, self.b, self.c, self.d)
    }
}

// ---------------------------------------------------------------------------
// Spec-level operations
// ---------------------------------------------------------------------------

/// `kappa -> kappa - 1` applied after `p`.
pub fn level_shift(p: &LevelParam) -> LevelParam {
    LevelParam::shift().compose(p)
}

/// The coset level `1/k + 1/k_gko = 1` applied after `p`.
pub fn level_gko(p: &LevelParam) -> LevelParam {
    LevelParam::gko().compose(p)
}

/// The opposite level `k_opp = -k` applied after `p`.
pub fn level_opposite(p: &LevelParam) -> LevelParam {
    LevelParam::opposite().compose(p)
}

/// The Feigin-Frenkel dual level `k_dual = 1/k` applied after `p`.
pub fn level_ff_dual(p: &LevelParam) -> LevelParam {
    LevelParam::ff_dual().compose(p)
}

/// The `m`-shifted level `1/k = 1/k_m + m` applied after `p`.
pub fn level_m(p: &LevelParam, m: i64) -> LevelParam {
    LevelParam::m_shift(m).compose(p)
}

/// Substitutes the Moebius image of `k` into `f`.
pub fn ratfunc_substitute(f: &RatFunc, p: &LevelParam) -> RatFunc {
    f.substitute(p)
}

/// Evaluates `f` at `k = kappa + h_dual` for exactly-rational `kappa`.
/// Strict mode refuses: the structural identities of the theory hold for
/// irrational levels only.
pub fn specialize_rational(
    f: &RatFunc,
    kappa: Frac,
    h_dual: u64,
    strict: bool,
) -> Result<BigRational, LevelError> {
    if strict {
        return Err(LevelError::RationalKappa(kappa.to_string()));
    }
    let k = crate::frac::to_big(kappa + Frac::from(h_dual as i64));
    f.eval_big(&k)
}

/// Evaluates `f` at `k = kappa + h_dual` for a floating-point `kappa`
/// standing in for an irrational level.
pub fn specialize_float(f: &RatFunc, kappa: f64, h_dual: u64) -> Result<f64, LevelError> {
    f.eval_f64(kappa + h_dual as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::frac;

    #[test]
    fn named_transforms_have_expected_matrices() {
        assert_eq!(LevelParam::shift().entries(), (1, -1, 0, 1));
        assert_eq!(LevelParam::gko().entries(), (1, 0, 1, -1));
        // stored up to scalar with the first nonzero entry positive
        assert_eq!(LevelParam::opposite().entries(), (1, 0, 0, -1));
        assert_eq!(LevelParam::ff_dual().entries(), (0, 1, 1, 0));
        assert_eq!(LevelParam::m_shift(2).entries(), (1, 0, -2, 1));
        assert!(LevelParam::new(1, 2, 1, 2).is_err());
    }

    #[test]
    fn shift_examples() {
        let id = LevelParam::identity();
        let s = level_shift(&id);
        assert_eq!(s.eval(frac(5, 2)), Some(frac(3, 2)));
        let s2 = level_shift(&s);
        assert_eq!(s2.eval(frac(0, 1)), Some(frac(-2, 1)));
    }

    #[test]
    fn gko_examples() {
        let g = level_gko(&LevelParam::identity());
        assert_eq!(g.eval(frac(3, 1)), Some(frac(3, 2)));
        assert_eq!(g.eval(frac(2, 1)), Some(frac(2, 1)));
        assert_eq!(level_gko(&g), LevelParam::identity());
    }

    #[test]
    fn opposite_and_ff_dual() {
        let o = level_opposite(&LevelParam::identity());
        assert_eq!(o.eval(frac(7, 3)), Some(frac(-7, 3)));
        assert_eq!(level_opposite(&o), LevelParam::identity());

        let d = level_ff_dual(&LevelParam::identity());
        assert_eq!(d.eval(frac(4, 1)), Some(frac(1, 4)));
        assert_eq!(level_ff_dual(&d), LevelParam::identity());

        // ff_dual of the gko level is 1/k_gko = (k-1)/k.
        let dg = level_ff_dual(&level_gko(&LevelParam::identity()));
        assert_eq!(dg, LevelParam::new(1, -1, 1, 0).unwrap());
        assert_eq!(dg.eval(frac(3, 1)), Some(frac(2, 3)));
    }

    #[test]
    fn m_shift_examples() {
        assert_eq!(level_m(&LevelParam::identity(), 0), LevelParam::identity());
        let m1 = level_m(&LevelParam::identity(), 1);
        assert_eq!(m1.eval(frac(1, 3)), Some(frac(1, 2)));
        for (a, b) in [(2, 3), (-1, 4), (5, -5), (0, -2)] {
            let lhs = level_m(&level_m(&LevelParam::identity(), a), b);
            let rhs = level_m(&LevelParam::identity(), a + b);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn shift_inverse_composition() {
        let s = LevelParam::shift();
        assert_eq!(s.compose(&s.inverse()), LevelParam::identity());
        assert_eq!(s.inverse().compose(&s), LevelParam::identity());
    }

    #[test]
    fn substitute_examples() {
        let k = RatFunc::var();
        assert_eq!(
            ratfunc_substitute(&k, &LevelParam::ff_dual()),
            RatFunc::one().divide(&k).unwrap()
        );

        // 3/(4k) - 1/2 unchanged under identity
        let f = RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]);
        assert_eq!(ratfunc_substitute(&f, &LevelParam::identity()), f);

        // 1/k under m_shift(1) becomes (1 - k)/k
        let inv_k = RatFunc::one().divide(&k).unwrap();
        let sub = ratfunc_substitute(&inv_k, &LevelParam::m_shift(1));
        let expected = RatFunc::from_laurent(1, &[frac(1, 1), frac(-1, 1)]);
        assert_eq!(sub, expected);
    }

    #[test]
    fn substitution_composes() {
        let f = RatFunc::from_laurent(2, &[frac(1, 2), frac(0, 1), frac(3, 1), frac(-2, 5)]);
        let p = LevelParam::gko();
        let q = LevelParam::m_shift(-2);
        let lhs = f.substitute(&p).substitute(&q);
        let rhs = f.substitute(&p.compose(&q));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn canonical_form_examples() {
        // (2k + 2)/(4) == (k + 1)/2
        let two_k_plus_2 = RatFunc::var()
            .mul(&RatFunc::from_int(2))
            .add(&RatFunc::from_int(2));
        let f = two_k_plus_2.divide(&RatFunc::from_int(4)).unwrap();
        let g = RatFunc::var()
            .add(&RatFunc::from_int(1))
            .divide(&RatFunc::from_int(2))
            .unwrap();
        assert_eq!(f, g);

        // (k^2 - 1)/(k - 1) == k + 1
        let k = RatFunc::var();
        let num = k.mul(&k).sub(&RatFunc::from_int(1));
        let den = k.sub(&RatFunc::from_int(1));
        assert_eq!(num.divide(&den).unwrap(), k.add(&RatFunc::from_int(1)));
    }

    #[test]
    fn field_laws_randomized() {
        // (f * g) / g == f over a grid of small rational functions.
        let mk = |n0: i64, n1: i64, d0: i64, d1: i64| {
            RatFunc::make(
                Poly::normalized(vec![BigInt::from(n0), BigInt::from(n1)]),
                Poly::normalized(vec![BigInt::from(d0), BigInt::from(d1)]),
            )
        };
        let mut checked = 0;
        for n0 in -2i64..=2 {
            for n1 in -2i64..=2 {
                for d0 in 1i64..=2 {
                    for d1 in 0i64..=2 {
                        let f = mk(n0, n1, d0, d1);
                        let g = mk(n1 + 2, n0, d1 + 1, d0);
                        if g.is_zero() {
                            continue;
                        }
                        assert_eq!(f.mul(&g).divide(&g).unwrap(), f);
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked >= 100);
    }

    #[test]
    fn laurent_and_constant_views() {
        let f = RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]);
        let l = f.laurent().unwrap();
        assert_eq!(
            l,
            vec![
                (-1, BigRational::new(3.into(), 4.into())),
                (0, BigRational::new((-1).into(), 2.into()))
            ]
        );
        assert_eq!(f.as_constant(), None);
        assert_eq!(
            RatFunc::from_frac(frac(-5, 3)).as_constant(),
            Some(BigRational::new((-5).into(), 3.into()))
        );
        // (k+1)/(k-1) has no Laurent monomial denominator
        let k = RatFunc::var();
        let g = k
            .add(&RatFunc::from_int(1))
            .divide(&k.sub(&RatFunc::from_int(1)))
            .unwrap();
        assert_eq!(g.laurent(), None);
    }

    #[test]
    fn specialization() {
        let k = RatFunc::var();
        // strict mode rejects rational kappa
        assert!(matches!(
            specialize_rational(&k, frac(1, 2), 2, true),
            Err(LevelError::RationalKappa(_))
        ));
        // non-strict evaluates k = kappa + h_dual
        assert_eq!(
            specialize_rational(&k, frac(1, 2), 2, false).unwrap(),
            BigRational::new(5.into(), 2.into())
        );
        // float path: kappa = sqrt(2) - 2 with h_dual = 2 gives sqrt(2)
        let v = specialize_float(&k, 2f64.sqrt() - 2.0, 2).unwrap();
        assert!((v - 2f64.sqrt()).abs() < 1e-12);
        // pole of 1/k at k = 0
        let inv_k = RatFunc::one().divide(&k).unwrap();
        assert!(matches!(
            specialize_rational(&inv_k, frac(-2, 1), 2, false),
            Err(LevelError::Pole)
        ));
    }

    #[test]
    fn json_shapes() {
        let p = LevelParam::gko();
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"a":1,"b":0,"c":1,"d":-1}"#
        );
        let f = RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"num":["3","-2"],"den":["0","4"]}"#);
        let back: RatFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn display_forms() {
        let f = RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]);
        assert_eq!(f.to_string(), "(3 - 2*k)/(4*k)");
        assert_eq!(RatFunc::zero().to_string(), "0");
        assert_eq!(RatFunc::var().to_string(), "k");
        assert_eq!(LevelParam::gko().to_string(), "[1,0;1,-1]");
    }
}
