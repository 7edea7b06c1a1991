//! Exact elements of the cyclotomic fields Q(ζ_n).
//!
//! A [`Scalar`] is a residue modulo the n-th cyclotomic polynomial Φ_n with
//! rational coefficients. Conductor 1 encodes plain rationals. Values with
//! different conductors are promoted to the least common multiple before any
//! binary operation, so every pair of scalars can be combined.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients of Φ_n, lowest degree first. Monic.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    assert!(n >= 1, "conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_int_div(&num, &cyclotomic_polynomial(d));
    }
    let phi = Arc::new(num);
    cache.lock().unwrap().insert(n, Arc::clone(&phi));
    phi
}

fn exact_int_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Degree of Φ_n, i.e. Euler's totient of n.
pub fn field_degree(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[derive(Clone, Debug)]
pub struct Scalar {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn from_frac(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::rational(BigRational::new(num.into(), den.into())))
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// Builds the residue of `Σ coeffs[k] x^k` modulo Φ_conductor. The input
    /// may be longer than the field degree; it is reduced.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        Scalar {
            conductor,
            coeffs: reduce(conductor, coeffs),
        }
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let exp = k.rem_euclid(n as i64) as usize;
        let mut c = vec![BigRational::zero(); exp + 1];
        c[exp] = BigRational::one();
        Self::from_coeffs(n, c)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational, if every non-constant coefficient vanishes.
    pub fn as_rational(&self) -> Option<&BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| &self.coeffs[0])
    }

    /// Re-expresses the element in Q(ζ_m) through ζ_n = ζ_m^(m/n).
    pub fn promote(&self, m: u32) -> Result<Scalar> {
        if !m.is_multiple_of(self.conductor) {
            return Err(Error::ConductorMismatch(self.conductor, m));
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = (m / self.conductor) as usize;
        let mut c = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, q) in self.coeffs.iter().enumerate() {
            c[k * step] = q.clone();
        }
        Ok(Scalar::from_coeffs(m, c))
    }

    fn aligned<'a>(&'a self, other: &'a Scalar) -> (std::borrow::Cow<'a, Scalar>, std::borrow::Cow<'a, Scalar>, u32) {
        use std::borrow::Cow;
        if self.conductor == other.conductor {
            return (Cow::Borrowed(self), Cow::Borrowed(other), self.conductor);
        }
        let m = lcm(self.conductor, other.conductor);
        let a = self.promote(m).expect("lcm is a common multiple");
        let b = other.promote(m).expect("lcm is a common multiple");
        (Cow::Owned(a), Cow::Owned(b), m)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Scalar {
                conductor: self.conductor,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let phi: Vec<BigRational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        // Extended Euclid: track s with s·self ≡ r (mod Φ).
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![BigRational::zero()];
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "Φ_n is irreducible, gcd must be constant");
        let g = r0[0].recip();
        let s: Vec<BigRational> = s0.into_iter().map(|c| c * &g).collect();
        Ok(Scalar::from_coeffs(self.conductor, s))
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical text form: `p/q` for rationals of conductor 1.
    pub fn to_rational_literal(q: &BigRational) -> String {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
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

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
            match b.get(k) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    if a.len() <= db {
        return (vec![BigRational::zero()], a.to_vec());
    }
    let lead = b[db].recip();
    let mut rem = a.to_vec();
    let mut quot = vec![BigRational::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if !c.is_zero() {
            for (i, y) in b.iter().enumerate() {
                rem[k + i] -= &c * y;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

/// Reduces a coefficient vector modulo Φ_n to exactly `deg Φ_n` entries.
fn reduce(n: u32, mut c: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    for k in (d..c.len()).rev() {
        if c[k].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut c[k], BigRational::zero());
        for (i, &p) in phi[..d].iter().enumerate() {
            if p != 0 {
                c[k - d + i] -= &lead * BigInt::from(p);
            }
        }
    }
    c.resize(d, BigRational::zero());
    c
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Scalar {}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let (a, b, n) = self.aligned(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Scalar { conductor: n, coeffs }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let (a, b, n) = self.aligned(rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        Scalar { conductor: n, coeffs }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let (a, b, n) = self.aligned(rhs);
        if a.coeffs.len() == 1 {
            return Scalar {
                conductor: n,
                coeffs: vec![&a.coeffs[0] * &b.coeffs[0]],
            };
        }
        let mut prod = vec![BigRational::zero(); 2 * a.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Scalar {
            conductor: n,
            coeffs: reduce(n, prod),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Parses a rational literal `p`, `-p`, or `p/q` with `q != 0`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("invalid rational literal `{s}`"))?;
    let den: BigInt = den.parse().map_err(|_| format!("invalid rational literal `{s}`"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Scalar::rational).map_err(|message| Error::Parse {
            line: 1,
            column: 1,
            message,
        })
    }
}
