//! Rational interval arithmetic with outward rounding, plus enclosures of
//! pi and of cos(2*pi*j/d). Used only to certify the sign of real algebraic
//! numbers that have already been proven nonzero by exact means.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Closed interval [lo, hi] with rational endpoints. After every operation the
/// endpoints are rounded outward to denominator 2^prec to keep them small.
#[derive(Debug, Clone)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
    prec: u32,
}

fn pow2(prec: u32) -> BigInt {
    BigInt::one() << prec
}

fn round_down(x: &BigRational, prec: u32) -> BigRational {
    let scaled = x * BigRational::from(pow2(prec));
    BigRational::new(scaled.floor().to_integer(), pow2(prec))
}

fn round_up(x: &BigRational, prec: u32) -> BigRational {
    let scaled = x * BigRational::from(pow2(prec));
    BigRational::new(scaled.ceil().to_integer(), pow2(prec))
}

impl Interval {
    pub fn exact(x: BigRational, prec: u32) -> Self {
        Interval {
            lo: round_down(&x, prec),
            hi: round_up(&x, prec),
            prec,
        }
    }

    pub fn zero(prec: u32) -> Self {
        Interval {
            lo: BigRational::zero(),
            hi: BigRational::zero(),
            prec,
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: round_down(&(&self.lo + &other.lo), self.prec),
            hi: round_up(&(&self.hi + &other.hi), self.prec),
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: round_down(&(&self.lo - &other.hi), self.prec),
            hi: round_up(&(&self.hi - &other.lo), self.prec),
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = candidates.iter().min().unwrap().clone();
        let hi = candidates.iter().max().unwrap().clone();
        Interval {
            lo: round_down(&lo, self.prec),
            hi: round_up(&hi, self.prec),
            prec: self.prec,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Interval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        let (lo, hi) = if c.is_negative() { (b, a) } else { (a, b) };
        Interval {
            lo: round_down(&lo, self.prec),
            hi: round_up(&hi, self.prec),
            prec: self.prec,
        }
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Definite sign, if the interval does not straddle zero.
    pub fn sign(&self) -> Option<i64> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// Enclosure of arctan(1/x) for integer x >= 2, by the alternating Taylor
/// series; the truncation error is bounded by the first omitted term.
fn atan_inv(x: i64, prec: u32) -> Interval {
    let guard = prec + 16;
    let xr = BigRational::from(BigInt::from(x));
    let x2 = &xr * &xr;
    let mut term = xr.recip(); // 1/x
    let mut sum = BigRational::zero();
    let mut n: i64 = 0;
    let eps = BigRational::new(BigInt::one(), pow2(guard));
    loop {
        let contrib = &term / BigRational::from(BigInt::from(2 * n + 1));
        if n % 2 == 0 {
            sum += &contrib;
        } else {
            sum -= &contrib;
        }
        term = &term / &x2;
        n += 1;
        let next = &term / BigRational::from(BigInt::from(2 * n + 1));
        if next < eps {
            // Alternating series: the partial sum is within `next` of the limit.
            return Interval {
                lo: round_down(&(&sum - &next), prec),
                hi: round_up(&(&sum + &next), prec),
                prec,
            };
        }
    }
}

/// Enclosure of pi via Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239).
pub fn pi_interval(prec: u32) -> Interval {
    let a = atan_inv(5, prec + 8);
    let b = atan_inv(239, prec + 8);
    let sixteen = BigRational::from(BigInt::from(16));
    let four = BigRational::from(BigInt::from(4));
    let r = a.scale(&sixteen).sub(&b.scale(&four));
    Interval {
        lo: round_down(&r.lo, prec),
        hi: round_up(&r.hi, prec),
        prec,
    }
}

/// Enclosure of cos of an interval argument contained in [0, pi/2 + small].
/// Taylor series at 0 with alternating-series remainder bound.
fn cos_small(x: &Interval, prec: u32) -> Interval {
    // cos is monotone decreasing on [0, pi], so evaluate at both endpoints.
    let lo = cos_point(&x.hi, prec);
    let hi = cos_point(&x.lo, prec);
    Interval {
        lo: lo.lo,
        hi: hi.hi,
        prec,
    }
}

fn cos_point(x: &BigRational, prec: u32) -> Interval {
    let guard = prec + 16;
    let x2 = x * x;
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    let mut n: i64 = 0;
    let eps = BigRational::new(BigInt::one(), pow2(guard));
    loop {
        if n % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = &term * &x2 / BigRational::from(BigInt::from((2 * n + 1) * (2 * n + 2)));
        n += 1;
        // |x| <= 1.7 < sqrt((2n+1)(2n+2)) for n >= 1, so terms decrease and the
        // alternating bound applies.
        if n >= 2 && term < eps {
            return Interval {
                lo: round_down(&(&sum - &term), prec),
                hi: round_up(&(&sum + &term), prec),
                prec,
            };
        }
    }
}

/// Enclosure of cos(2*pi*j/d), folding the argument into [0, pi/2] by symmetry.
pub fn cos_two_pi(j: i64, d: i64, prec: u32) -> Interval {
    assert!(d > 0);
    // Reduce j/d into [0, 1).
    let mut t = BigRational::new(BigInt::from(j.rem_euclid(d)), BigInt::from(d));
    let one = BigRational::one();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
    // cos(2 pi t) = cos(2 pi (1 - t))
    if t > half {
        t = &one - &t;
    }
    // Now t in [0, 1/2]; cos(2 pi t) = -cos(2 pi (1/2 - t)) for t > 1/4.
    let mut sign = 1i64;
    if t > quarter {
        t = &half - &t;
        sign = -1;
    }
    // Now t in [0, 1/4], argument 2 pi t in [0, pi/2].
    let pi = pi_interval(prec + 8);
    let two_t = &t * BigRational::from(BigInt::from(2));
    let arg = pi.scale(&two_t);
    let c = cos_small(&arg, prec);
    if sign < 0 {
        c.neg()
    } else {
        c
    }
}

/// Process-wide cache of cos(2*pi*j/d) enclosures, keyed by (j, d, prec).
static COS_CACHE: Lazy<Mutex<HashMap<(i64, i64, u32), Interval>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub fn cos_two_pi_cached(j: i64, d: i64, prec: u32) -> Interval {
    let key = (j.rem_euclid(d), d, prec);
    if let Some(v) = COS_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = cos_two_pi(key.0, d, prec);
    COS_CACHE.lock().unwrap().insert(key, v.clone());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn approx(x: &Interval) -> f64 {
        let lo = x.lo.numer().to_string().parse::<f64>().unwrap()
            / x.lo.denom().to_string().parse::<f64>().unwrap();
        lo
    }

    #[test]
    fn pi_value() {
        let pi = pi_interval(64);
        assert!((approx(&pi) - std::f64::consts::PI).abs() < 1e-12);
        assert!(&pi.hi - &pi.lo < BigRational::new(BigInt::one(), BigInt::one() << 60));
    }

    #[test]
    fn cos_values() {
        for (j, d, expect) in [
            (0, 5, 1.0),
            (1, 4, 0.0),
            (1, 3, -0.5),
            (1, 6, 0.5),
            (1, 2, -1.0),
            (2, 3, -0.5),
            (1, 12, 3f64.sqrt() / 2.0),
            (5, 7, (2.0 * std::f64::consts::PI * 5.0 / 7.0).cos()),
        ] {
            let c = cos_two_pi(j, d, 80);
            assert!(
                (approx(&c) - expect).abs() < 1e-10,
                "cos(2pi*{j}/{d}) = {} vs {expect}",
                approx(&c)
            );
        }
    }

    #[test]
    fn interval_width_tracks_precision() {
        let c = cos_two_pi(3, 7, 256);
        let width = &c.hi - &c.lo;
        assert!(width < BigRational::new(BigInt::one(), BigInt::one() << 250));
    }
}
