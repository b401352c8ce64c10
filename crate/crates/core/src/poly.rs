//! Univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored lowest degree first; the variable is written `u`
//! throughout (profiles live on the substituted axis `u = 2π|x|²`). The zero
//! polynomial is the empty coefficient list and has no degree.

use crate::rational::Rational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Build from coefficients, lowest degree first. Trailing zeros are
    /// trimmed so the leading coefficient is nonzero unless the polynomial
    /// is identically zero.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `u`.
    pub fn variable() -> Self {
        Polynomial::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Horner evaluation; exact.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Rational::from(k as i64))
                .collect(),
        )
    }

    /// `p(a·u + b)`, exact.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Polynomial {
        let mut acc = Polynomial::zero();
        let inner = Polynomial::new(vec![b.clone(), a.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &inner) + &Polynomial::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for i in 0..=dd {
                let t = &d.coeffs[i] * &factor;
                rem[k + i] = &rem[k + i] - &t;
            }
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            if rem.len() > k + dd {
                // leading term failed to cancel; cannot happen with exact arithmetic
                unreachable!("leading term survived exact division");
            }
            quot[k] = factor;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_zero() => {
                let inv = l.recip();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// The squarefree part `p / gcd(p, p′)`: same roots, all simple.
    pub fn squarefree_part(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        q
    }

    /// Clear denominators and divide by the integer content, then fix the
    /// sign so that the constant term is positive (falling back to the
    /// leading coefficient when the constant term vanishes). The result has
    /// coprime integer coefficients and spans the same line.
    pub fn into_primitive_integer(self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Zero as _;
        if self.is_zero() {
            return self;
        }
        let mut lcm = BigInt::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c * &Rational::from_bigint(lcm.clone());
                debug_assert!(r.is_integer());
                r.numer().clone()
            })
            .collect();
        let mut content = BigInt::zero();
        for v in &scaled {
            content = content.gcd(v);
        }
        let mut out: Vec<Rational> = scaled
            .into_iter()
            .map(|v| Rational::from_bigint(v / &content))
            .collect();
        let anchor = out
            .first()
            .filter(|c| !c.is_zero())
            .or(out.last())
            .cloned()
            .unwrap_or_else(Rational::one);
        if anchor.is_negative() {
            for c in &mut out {
                *c = -c.clone();
            }
        }
        Polynomial::new(out)
    }

    /// A rational `B` with every real root of the polynomial in `(-B, B)`
    /// (Cauchy bound). Panics on the zero polynomial.
    pub fn root_bound(&self) -> Rational {
        assert!(!self.is_zero(), "root bound of the zero polynomial");
        let lead = self.leading().unwrap();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            m = m.max((c / lead).abs());
        }
        m + Rational::one()
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(out)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}")?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", c.abs())?;
            } else {
                write!(f, " + {c}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(ser)
    }
}

impl<'de> serde::Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(de)?;
        Ok(Polynomial::new(coeffs))
    }
}
