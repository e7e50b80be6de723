//! Exact arithmetic in the cyclotomic field Q(zeta_d), with elements stored
//! as rational polynomials in zeta_d reduced modulo the d-th cyclotomic
//! polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::sync::Arc;

use crate::{Error, Result};

use super::interval::{cos_two_pi_cached, Interval};

/// Polynomial over Q, dense, lowest degree first. Internal helper.
#[derive(Debug, Clone, PartialEq, Eq)]
struct QPoly(Vec<BigRational>);

impl QPoly {
    fn zero() -> Self {
        QPoly(vec![])
    }
    fn one() -> Self {
        QPoly(vec![BigRational::one()])
    }
    fn monomial(deg: usize) -> Self {
        let mut c = vec![BigRational::zero(); deg + 1];
        c[deg] = BigRational::one();
        QPoly(c)
    }
    fn trim(&mut self) {
        while self.0.last().map_or(false, |c| c.is_zero()) {
            self.0.pop();
        }
    }
    fn deg(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }
    #[allow(dead_code)]
    fn add(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        let mut p = QPoly(out);
        p.trim();
        p
    }
    fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] -= c;
        }
        let mut p = QPoly(out);
        p.trim();
        p
    }
    fn mul(&self, other: &QPoly) -> QPoly {
        if self.0.is_empty() || other.0.is_empty() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = QPoly(out);
        p.trim();
        p
    }
    /// Quotient and remainder of division by a nonzero polynomial.
    fn div_rem(&self, div: &QPoly) -> (QPoly, QPoly) {
        let dd = div.deg().expect("division by zero polynomial");
        let lead_inv = div.0[dd].recip();
        let mut rem = self.clone();
        let mut quot = vec![
            BigRational::zero();
            self.0.len().saturating_sub(div.0.len()).saturating_add(1)
        ];
        while let Some(rd) = rem.deg() {
            if rd < dd {
                break;
            }
            let coeff = &rem.0[rd] * &lead_inv;
            let shift = rd - dd;
            quot[shift] = coeff.clone();
            for (i, c) in div.0.iter().enumerate() {
                let s = &coeff * c;
                rem.0[i + shift] -= s;
            }
            rem.trim();
        }
        let mut q = QPoly(quot);
        q.trim();
        (q, rem)
    }
}

/// The field Q(zeta_d). Construct once per order and share.
#[derive(Debug)]
pub struct CycField {
    pub order: i64,
    /// Degree phi(d) of the field over Q.
    pub degree: usize,
    /// Coefficients of the cyclotomic polynomial Phi_d (monic).
    phi: QPoly,
    /// Reduction table: zeta^j as a reduced element, for j in 0..2*degree.
    powers: Vec<Vec<BigRational>>,
}

impl CycField {
    pub fn new(order: i64) -> Arc<CycField> {
        assert!(order >= 1);
        let phi = cyclotomic_poly(order);
        let degree = phi.deg().unwrap();
        // Precompute zeta^j mod Phi for all exponents used by schoolbook
        // multiplication and by conjugation (up to 2*degree - 1, and order).
        let max_pow = (2 * degree).max(order as usize + 1);
        let mut powers = Vec::with_capacity(max_pow);
        let mut cur = QPoly::one();
        for _ in 0..max_pow {
            powers.push({
                let mut v = cur.0.clone();
                v.resize(degree, BigRational::zero());
                v
            });
            cur = cur.mul(&QPoly::monomial(1));
            cur = cur.div_rem(&phi).1;
        }
        Arc::new(CycField {
            order,
            degree,
            phi,
            powers,
        })
    }

    pub fn zero(self: &Arc<Self>) -> CycElt {
        CycElt {
            field: Arc::clone(self),
            coeffs: vec![BigRational::zero(); self.degree],
        }
    }

    pub fn from_rational(self: &Arc<Self>, x: BigRational) -> CycElt {
        let mut e = self.zero();
        if self.degree > 0 {
            e.coeffs[0] = x;
        }
        e
    }

    pub fn from_int(self: &Arc<Self>, x: i64) -> CycElt {
        self.from_rational(BigRational::from(BigInt::from(x)))
    }

    /// zeta_d^j, for any integer j.
    pub fn root_power(self: &Arc<Self>, j: i64) -> CycElt {
        let j = j.rem_euclid(self.order) as usize;
        CycElt {
            field: Arc::clone(self),
            coeffs: self.powers[j].clone(),
        }
    }

    fn reduce(&self, poly: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (j, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if j < self.degree {
                out[j] += c;
            } else {
                for (i, p) in self.powers[j].iter().enumerate() {
                    out[i] += c * p;
                }
            }
        }
        out
    }
}

/// Element of Q(zeta_d).
#[derive(Debug, Clone)]
pub struct CycElt {
    field: Arc<CycField>,
    /// Coefficients w.r.t. 1, zeta, ..., zeta^(degree-1).
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycElt {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl CycElt {
    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &CycElt) -> CycElt {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycElt {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    pub fn sub(&self, other: &CycElt) -> CycElt {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycElt {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }

    /// Multiply by an integer scalar.
    pub fn scale_int(&self, c: &BigInt) -> CycElt {
        let c = BigRational::from_integer(c.clone());
        CycElt {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|a| a * &c).collect(),
        }
    }

    pub fn neg(&self) -> CycElt {
        CycElt {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &CycElt) -> CycElt {
        let n = self.field.degree;
        if n == 0 {
            return self.clone();
        }
        let mut raw = vec![BigRational::zero(); 2 * n.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        CycElt {
            field: Arc::clone(&self.field),
            coeffs: self.field.reduce(&raw),
        }
    }

    /// Complex conjugate: zeta -> zeta^(d-1).
    pub fn conj(&self) -> CycElt {
        let mut out = self.field.zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = self.field.root_power(-(j as i64));
            for (i, pc) in p.coeffs.iter().enumerate() {
                out.coeffs[i] += c * pc;
            }
        }
        out
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
    pub fn inverse(&self) -> Result<CycElt> {
        if self.is_zero() {
            return Err(Error::InvalidArgument("inverse of zero".into()));
        }
        let mut a = self.field.phi.clone();
        let mut b = QPoly({
            let mut v = self.coeffs.clone();
            v.truncate(self.field.degree);
            v
        });
        b.trim();
        // Invariants: s*self + t*Phi = a-chain; we only track the coefficient
        // of `self`.
        let mut s0 = QPoly::zero();
        let mut s1 = QPoly::one();
        while let Some(_) = b.deg() {
            let (q, r) = a.div_rem(&b);
            let s2 = s0.sub(&q.mul(&s1));
            a = b;
            b = r;
            s0 = s1;
            s1 = s2;
        }
        // a is now a nonzero constant gcd.
        let c = a.0[0].recip();
        let inv_poly = QPoly(s0.0.iter().map(|x| x * &c).collect());
        let coeffs = self.field.reduce(&inv_poly.0);
        Ok(CycElt {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    /// Interval enclosure of the real part under zeta_d -> exp(2*pi*i/d).
    pub fn real_part_interval(&self, prec: u32) -> Interval {
        let mut acc = Interval::zero(prec);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cosj = cos_two_pi_cached(j as i64, self.field.order, prec);
            acc = acc.add(&cosj.scale(c));
        }
        acc
    }

    /// Whether the element is fixed by conjugation (i.e. real).
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }
}

/// The d-th cyclotomic polynomial, by recursive exact division:
/// x^d - 1 = prod over e | d of Phi_e.
fn cyclotomic_poly(d: i64) -> QPoly {
    assert!(d >= 1);
    // x^d - 1
    let mut num = QPoly::monomial(d as usize);
    num.0[0] = -BigRational::one();
    let mut den = QPoly::one();
    for e in 1..d {
        if d % e == 0 {
            den = den.mul(&cyclotomic_poly(e));
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.deg().is_none(), "cyclotomic division not exact");
    q
}
