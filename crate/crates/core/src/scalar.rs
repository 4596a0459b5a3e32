//! Exact arithmetic in cyclotomic fields `Q(z)`, `z` a primitive `n`-th root
//! of unity.
//!
//! An element is stored as its unique residue modulo the cyclotomic
//! polynomial `Phi_n`: a vector of `phi(n)` rational coefficients. Equality
//! of scalars is therefore plain coefficient equality, which is what lets
//! hyperplanes and subspaces be hashed and compared directly.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Integer polynomial, coefficients from the constant term upwards.
pub type IntPoly = Vec<BigInt>;

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// The `n`-th cyclotomic polynomial, computed as `(x^n - 1)` divided exactly
/// by `Phi_d` for every proper divisor `d` of `n`.
///
/// Panics if `n == 0`.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    cyclotomic_arc(n).as_ref().clone()
}

pub(crate) fn cyclotomic_arc(n: u32) -> Arc<IntPoly> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num: IntPoly = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_arc(d);
            num = exact_monic_div(&num, &den);
        }
    }
    let arc = Arc::new(num);
    phi_cache().write().unwrap().insert(n, arc.clone());
    arc
}

fn exact_monic_div(num: &IntPoly, den: &IntPoly) -> IntPoly {
    let dn = den.len() - 1;
    let mut rem = num.clone();
    let qlen = num.len() - dn;
    let mut quot = vec![BigInt::zero(); qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= &c * dc;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// How to build a scalar by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScalarSpec {
    Rational(Rational),
    /// `z_n^k` with `0 <= k < n`.
    RootOfUnity { n: u32, k: u32 },
    /// `(1 + sqrt 5) / 2`, realized as `-z_5^2 - z_5^3`.
    GoldenRatio,
    /// `1 / golden ratio`, realized as `z_5 + z_5^4`.
    GoldenRatioReciprocal,
}

pub fn make_scalar(spec: ScalarSpec) -> Result<CycloScalar> {
    match spec {
        ScalarSpec::Rational(q) => Ok(CycloScalar::from_rational(q, 1)),
        ScalarSpec::RootOfUnity { n, k } => {
            if n == 0 {
                return Err(Error::ZeroConductor);
            }
            if k >= n {
                return Err(Error::InvalidRootExponent { n, k });
            }
            Ok(CycloScalar::zeta_pow(n, k as u64))
        }
        ScalarSpec::GoldenRatio => {
            let z2 = CycloScalar::zeta_pow(5, 2);
            let z3 = CycloScalar::zeta_pow(5, 3);
            Ok(-(&z2 + &z3))
        }
        ScalarSpec::GoldenRatioReciprocal => {
            let z1 = CycloScalar::zeta_pow(5, 1);
            let z4 = CycloScalar::zeta_pow(5, 4);
            Ok(&z1 + &z4)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked field operation; rejects mixed conductors and division by zero.
pub fn arith(a: &CycloScalar, b: &CycloScalar, op: ArithOp) -> Result<CycloScalar> {
    if a.conductor != b.conductor {
        return Err(Error::ConductorMismatch(a.conductor, b.conductor));
    }
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a * &b.inv()?,
    })
}

/// Element of `Q(z_n)` in reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloScalar {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl CycloScalar {
    pub fn zero(n: u32) -> Self {
        assert!(n > 0);
        CycloScalar { conductor: n, coeffs: vec![Rational::zero(); euler_phi(n)] }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(Rational::one(), n)
    }

    pub fn from_int(v: i64, n: u32) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)), n)
    }

    pub fn from_rational(q: Rational, n: u32) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = q;
        s
    }

    /// `z_n^k` for any `k`, reduced.
    pub fn zeta_pow(n: u32, k: u64) -> Self {
        let k = (k % n as u64) as usize;
        let mut poly = vec![Rational::zero(); k + 1];
        poly[k] = Rational::one();
        Self::from_poly(n, poly)
    }

    /// Reduces an arbitrary rational polynomial in `z` modulo `Phi_n`.
    pub fn from_poly(n: u32, mut poly: Vec<Rational>) -> Self {
        let phi = cyclotomic_arc(n);
        let deg = phi.len() - 1;
        reduce_in_place(&mut poly, &phi);
        poly.resize(deg, Rational::zero());
        CycloScalar { conductor: n, coeffs: poly }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` against the (irreducible) `Phi_n`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(CycloScalar { conductor: self.conductor, coeffs: vec![self.coeffs[0].recip()] });
        }
        let phi: Vec<Rational> = cyclotomic_arc(self.conductor)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        // invariant: r_i = s_i * a (mod phi)
        let (mut r0, mut r1) = (phi, a);
        let (mut s0, mut s1) = (vec![], vec![Rational::one()]);
        while !(r1.len() == 1) {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            debug_assert!(!r1.is_empty(), "Phi_n is irreducible, gcd must be a unit");
        }
        let c = r1[0].recip();
        let s: Vec<Rational> = s1.into_iter().map(|x| x * &c).collect();
        Ok(Self::from_poly(self.conductor, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        arith(self, other, ArithOp::Div)
    }

    /// Image under `z_m -> z_n^(n/m)`.
    pub fn lift(&self, n: u32) -> Result<Self> {
        let m = self.conductor;
        if n == 0 || !n.is_multiple_of(m) {
            return Err(Error::NonDivisibleConductor { from: m, to: n });
        }
        if n == m {
            return Ok(self.clone());
        }
        let step = (n / m) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self::from_poly(n, poly))
    }

    /// Value under the embedding `z -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }

    /// Parses a polynomial in `z` with rational coefficients, e.g.
    /// `1/2 - 1/2*z + z^2`.
    pub fn parse(text: &str, n: u32) -> std::result::Result<Self, String> {
        if n == 0 {
            return Err("conductor must be positive".into());
        }
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err("empty scalar".into());
        }
        let mut poly: Vec<Rational> = Vec::new();
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut first = true;
        while i < bytes.len() {
            let mut sign = Rational::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if !first {
                return Err(format!("expected '+' or '-' in {text:?}"));
            }
            first = false;
            let start = i;
            while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
                i += 1;
            }
            let term = &s[start..i];
            if term.is_empty() {
                return Err(format!("empty term in {text:?}"));
            }
            let (coef, power) = parse_term(term)?;
            if poly.len() <= power {
                poly.resize(power + 1, Rational::zero());
            }
            poly[power] += sign * coef;
        }
        // z^k with k >= n wraps around
        let n_us = n as usize;
        if poly.len() > n_us {
            let mut folded = vec![Rational::zero(); n_us];
            for (k, c) in poly.into_iter().enumerate() {
                folded[k % n_us] += c;
            }
            poly = folded;
        }
        Ok(Self::from_poly(n, poly))
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "mixed conductors; lift explicitly before combining"
        );
    }
}

fn parse_term(term: &str) -> std::result::Result<(Rational, usize), String> {
    let (coef_part, z_part) = match term.find('z') {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        if z_part.is_none() {
            return Err(format!("bad term {term:?}"));
        }
        Rational::one()
    } else {
        parse_rational(coef_part).ok_or_else(|| format!("bad coefficient {coef_part:?}"))?
    };
    let power = match z_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(|| format!("bad power in {term:?}"))?;
            e.parse::<usize>().map_err(|_| format!("bad exponent {e:?}"))?
        }
    };
    Ok((coef, power))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().ok()?;
            let b: BigInt = b.parse().ok()?;
            if b.is_zero() {
                return None;
            }
            Some(Rational::new(a, b))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

fn reduce_in_place(poly: &mut Vec<Rational>, phi: &IntPoly) {
    let deg = phi.len() - 1;
    if poly.len() <= deg {
        return;
    }
    for top in (deg..poly.len()).rev() {
        if poly[top].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[top], Rational::zero());
        let base = top - deg;
        for (j, pc) in phi[..deg].iter().enumerate() {
            if !pc.is_zero() {
                poly[base + j] -= &c * pc;
            }
        }
    }
    poly.truncate(deg);
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

/// Division with remainder; `b` must be trimmed and nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (j, bc) in b.iter().enumerate() {
            rem[shift + j] -= &c * bc;
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same(rhs);
        CycloScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same(rhs);
        CycloScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        self.assert_same(rhs);
        if self.coeffs.len() == 1 {
            return CycloScalar { conductor: self.conductor, coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        if self.is_zero() || rhs.is_zero() {
            return CycloScalar::zero(self.conductor);
        }
        let mut prod = vec![Rational::zero(); 2 * self.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycloScalar::from_poly(self.conductor, prod)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(mut self) -> CycloScalar {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self, self.conductor)
    }
}

/// Least common multiple of two conductors.
pub fn lcm_conductor(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}
