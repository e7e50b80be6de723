//! The 3-strand pretzel-knot model and its classical invariants.

use crate::exact_math::{symmetric_signature, IntMatrix};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Parity classification of a parameter triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityClass {
    /// All three parameters odd.
    Odd,
    /// Exactly one parameter even.
    Even,
    /// Two or three even parameters: a multi-component link, not a knot.
    NotAKnot,
}

/// Classify a parameter triple by parity.
pub fn classify(p: i64, q: i64, r: i64) -> ParityClass {
    let evens = [p, q, r].iter().filter(|x| *x % 2 == 0).count();
    match evens {
        0 => ParityClass::Odd,
        1 => ParityClass::Even,
        _ => ParityClass::NotAKnot,
    }
}

/// A 3-strand pretzel knot P(p, q, r): three vertical bands of p, q, r
/// signed half-twists. Construction rejects parameter triples whose closure
/// is a link rather than a knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PretzelKnot {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

/// Recognized ribbon presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RibbonForm {
    /// P(p, q, -q) up to permutation and reflection (odd class: p odd;
    /// even class: p even, q odd).
    PairCancel { p: i64, q: i64 },
    /// P(1, q, -q-4) with q > 0 odd, up to permutation and reflection.
    OneQQFour { q: i64 },
}

impl RibbonForm {
    pub fn label(&self) -> String {
        match self {
            RibbonForm::PairCancel { .. } => "P(p,q,-q)".to_string(),
            RibbonForm::OneQQFour { q } => format!("P(1,q,-q-4), q={q}"),
        }
    }
}

/// Membership in the determinant-one exceptional even family
/// P(a, -a-2, -(a+1)^2/2), a > 0 odd (up to permutation and reflection).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExceptionalEvenFamily {
    pub a: i64,
    pub residue_mod_60: i64,
    /// True when a mod 60 is in {1, 11, 37, 47, 59}: topological
    /// slice status not settled by the obstruction pipeline.
    pub unresolved: bool,
}

/// Residues a mod 60 for which the determinant-one even family is left
/// unresolved.
pub const UNRESOLVED_RESIDUES: [i64; 5] = [1, 11, 37, 47, 59];

/// Classical abelian invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalInvariants {
    pub determinant: i64,
    /// Knot signature; unavailable for the even class (no genus-one
    /// Seifert surface is modeled).
    pub signature: Option<i64>,
    /// Normalized Alexander polynomial, lowest degree 0, positive leading
    /// coefficient; unavailable for the even class.
    pub alexander: Option<Vec<BigInt>>,
    /// Whether the knot passes every modeled algebraic sliceness gate;
    /// None when the gates cannot all be evaluated (even class with
    /// square determinant).
    pub alg_slice: Option<bool>,
    pub alg_slice_reason: String,
}

impl PretzelKnot {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self> {
        match classify(p, q, r) {
            ParityClass::NotAKnot => Err(Error::NotAKnot(p, q, r)),
            _ => Ok(PretzelKnot { p, q, r }),
        }
    }

    pub fn class(&self) -> ParityClass {
        classify(self.p, self.q, self.r)
    }

    pub fn params(&self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    pub fn reflected(&self) -> PretzelKnot {
        PretzelKnot {
            p: -self.p,
            q: -self.q,
            r: -self.r,
        }
    }

    /// All 12 parameter triples presenting the same knot or its mirror
    /// partner class used for scan deduplication: 6 permutations x 2 signs.
    pub fn symmetric_variants(&self) -> Vec<[i64; 3]> {
        let [p, q, r] = self.params();
        let perms = [
            [p, q, r],
            [p, r, q],
            [q, p, r],
            [q, r, p],
            [r, p, q],
            [r, q, p],
        ];
        let mut out = Vec::with_capacity(12);
        for perm in perms {
            out.push(perm);
            out.push([-perm[0], -perm[1], -perm[2]]);
        }
        out
    }

    /// `pq + qr + pr`; its absolute value is the determinant.
    pub fn parameter_form(&self) -> i64 {
        self.p * self.q + self.q * self.r + self.p * self.r
    }

    /// Determinant of the knot (= order of the first homology of the double
    /// branched cover).
    pub fn determinant(&self) -> i64 {
        self.parameter_form().abs()
    }

    /// Genus-one Seifert matrix for the odd class:
    /// V = [[(p+q)/2, (q+1)/2], [(q-1)/2, (q+r)/2]].
    pub fn seifert_matrix(&self) -> Result<IntMatrix> {
        if self.class() != ParityClass::Odd {
            return Err(Error::InvalidArgument(
                "Seifert matrix is modeled only for the odd class".to_string(),
            ));
        }
        let (p, q, r) = (self.p, self.q, self.r);
        Ok(IntMatrix::from_rows(&[
            vec![(p + q) / 2, (q + 1) / 2],
            vec![(q - 1) / 2, (q + r) / 2],
        ]))
    }

    /// Classical invariants; Alexander polynomial / signature / Fox-Milnor
    /// only for the odd class.
    pub fn classical(&self) -> ClassicalInvariants {
        let det = self.determinant();
        match self.class() {
            ParityClass::Odd => {
                let v = self.seifert_matrix().expect("odd class");
                let sym = v.add(&v.transpose());
                let signature = symmetric_signature(&sym).expect("symmetric");
                let alexander = alexander_from_seifert(&v);
                let (alg, reason) = odd_alg_slice_gates(det, signature, &alexander);
                ClassicalInvariants {
                    determinant: det,
                    signature: Some(signature),
                    alexander: Some(alexander),
                    alg_slice: Some(alg),
                    alg_slice_reason: reason,
                }
            }
            ParityClass::Even => {
                let (alg, reason) = if !is_perfect_square(det) {
                    (
                        Some(false),
                        format!("determinant {det} is not a perfect square"),
                    )
                } else {
                    (
                        None,
                        "even class: determinant is square; further Seifert-form gates not modeled"
                            .to_string(),
                    )
                };
                ClassicalInvariants {
                    determinant: det,
                    signature: None,
                    alexander: None,
                    alg_slice: alg,
                    alg_slice_reason: reason,
                }
            }
            ParityClass::NotAKnot => unreachable!("constructor rejects links"),
        }
    }

    /// Recognize membership in the modeled ribbon families.
    pub fn ribbon_form(&self) -> Option<RibbonForm> {
        for [x, y, z] in self.symmetric_variants() {
            // P(x, y, -y): the x band's parity matches the class
            if y == -z && y != 0 {
                return Some(RibbonForm::PairCancel { p: x, q: y.abs() });
            }
        }
        if self.class() == ParityClass::Odd {
            for [x, y, z] in self.symmetric_variants() {
                if x == 1 && y > 0 && y % 2 != 0 && z == -y - 4 {
                    return Some(RibbonForm::OneQQFour { q: y });
                }
            }
        }
        None
    }

    /// Recognize the exceptional determinant-one even family.
    pub fn exceptional_even_family(&self) -> Option<ExceptionalEvenFamily> {
        if self.class() != ParityClass::Even {
            return None;
        }
        for [x, y, z] in self.symmetric_variants() {
            if x > 0 && x % 2 != 0 && y == -x - 2 {
                let half = (x + 1) * (x + 1);
                if half % 2 == 0 && z == -half / 2 {
                    let residue = x.rem_euclid(60);
                    return Some(ExceptionalEvenFamily {
                        a: x,
                        residue_mod_60: residue,
                        unresolved: UNRESOLVED_RESIDUES.contains(&residue),
                    });
                }
            }
        }
        None
    }
}

/// The pretzel presentation of the 2-bridge knot with fraction
/// (4ab+1)/(2a): P(1, 2a-1, -(2b+1)).
pub fn twobridge_to_pretzel(a: i64, b: i64) -> Result<PretzelKnot> {
    if a <= 0 || b <= 0 {
        return Err(Error::InvalidArgument(
            "two-bridge parameters must be positive".to_string(),
        ));
    }
    PretzelKnot::new(1, 2 * a - 1, -(2 * b + 1))
}

pub fn is_perfect_square(n: i64) -> bool {
    if n < 0 {
        return false;
    }
    let s = (n as f64).sqrt().round() as i64;
    (s - 1..=s + 1).any(|t| t * t == n)
}

/// det(V - t V^T), normalized to lowest degree 0 and positive leading
/// coefficient.
pub fn alexander_from_seifert(v: &IntMatrix) -> Vec<BigInt> {
    assert_eq!((v.rows, v.cols), (2, 2), "genus-one matrix expected");
    let a = &v[(0, 0)];
    let b = &v[(0, 1)];
    let c = &v[(1, 0)];
    let d = &v[(1, 1)];
    // det([[a - t a, b - t c], [c - t b, d - t d]])
    //   = ad (1-t)^2 - (b - tc)(c - tb)
    //   = (ad - bc) t^2 + (-2ad + b^2 + c^2) t + (ad - bc)
    let ad = a * d;
    let bc = b * c;
    let coeffs = vec![&ad - &bc, b * b + c * c - BigInt::from(2) * &ad, &ad - &bc];
    normalize_poly(coeffs)
}

/// Strip trailing zeros, shift so the lowest nonzero degree is 0, and make
/// the leading coefficient positive. The zero polynomial normalizes to [].
pub fn normalize_poly(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    coeffs.drain(..shift);
    if coeffs.last().is_some_and(|c| c.is_negative()) {
        for c in &mut coeffs {
            *c = -c.clone();
        }
    }
    coeffs
}

/// Fox-Milnor factorization test for normalized quadratic (or trivial)
/// Alexander polynomials: passes iff the polynomial is 1 or has the shape
/// +-(mt - n)(nt - m) for integers m, n.
pub fn fox_milnor_quadratic(alex: &[BigInt]) -> bool {
    if alex == [BigInt::from(1)] {
        return true;
    }
    if alex.len() != 3 || alex[0] != alex[2] {
        return false;
    }
    let c2 = i64::try_from(&alex[2]).expect("desk-scale coefficients");
    let c1 = i64::try_from(&alex[1]).expect("desk-scale coefficients");
    // mn = s*c2 and m^2 + n^2 = -s*c1 for a sign s
    for s in [1i64, -1] {
        let mn = s * c2;
        let sum_sq = -s * c1;
        if sum_sq <= 0 {
            continue;
        }
        for m in 1..=mn.abs() {
            if mn % m == 0 {
                let n = mn / m;
                if m * m + n * n == sum_sq {
                    return true;
                }
            }
        }
    }
    false
}

fn odd_alg_slice_gates(det: i64, signature: i64, alex: &[BigInt]) -> (bool, String) {
    if signature != 0 {
        return (false, format!("signature {signature} is nonzero"));
    }
    if !is_perfect_square(det) {
        return (false, format!("determinant {det} is not a perfect square"));
    }
    if !fox_milnor_quadratic(alex) {
        return (false, "Alexander polynomial has no Fox-Milnor factorization".to_string());
    }
    (true, "signature 0, square determinant, Fox-Milnor factorization".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classification() {
        assert_eq!(classify(3, 5, -5), ParityClass::Odd);
        assert_eq!(classify(2, 3, -3), ParityClass::Even);
        assert_eq!(classify(2, 4, 3), ParityClass::NotAKnot);
        assert_eq!(classify(0, 3, 5), ParityClass::Even);
        assert_eq!(classify(0, 4, 5), ParityClass::NotAKnot);
        assert!(PretzelKnot::new(2, 4, 3).is_err());
    }

    #[test]
    fn seifert_matrices_and_determinants() {
        let k = PretzelKnot::new(-3, 5, 7).unwrap();
        assert_eq!(k.seifert_matrix().unwrap(), IntMatrix::from_rows(&[vec![1, 3], vec![2, 6]]));
        assert_eq!(k.determinant(), 1);

        let k = PretzelKnot::new(1, 3, -7).unwrap();
        assert_eq!(k.seifert_matrix().unwrap(), IntMatrix::from_rows(&[vec![2, 2], vec![1, -2]]));
        assert_eq!(k.determinant(), 25);

        let trefoil = PretzelKnot::new(1, 1, 1).unwrap();
        assert_eq!(
            trefoil.seifert_matrix().unwrap(),
            IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]])
        );
        assert_eq!(trefoil.determinant(), 3);

        // reflected exceptional-family member has determinant one
        assert_eq!(PretzelKnot::new(-1, 3, 2).unwrap().determinant(), 1);
    }

    #[test]
    fn seifert_matrix_identities_across_the_range() {
        for p in (-25..=25).step_by(2) {
            for q in (-25..=25).step_by(2) {
                for r in (-25..=25).step_by(2) {
                    let k = PretzelKnot::new(p, q, r).unwrap();
                    let v = k.seifert_matrix().unwrap();
                    let skew = v.sub(&v.transpose());
                    assert_eq!(skew, IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]]));
                    let sym = v.add(&v.transpose());
                    assert_eq!(sym.det(), BigInt::from(k.parameter_form()));
                    // determinant = |Alexander(-1)| for the normalized polynomial
                    let alex = alexander_from_seifert(&v);
                    let at_minus_one: BigInt = alex
                        .iter()
                        .enumerate()
                        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
                        .sum();
                    assert_eq!(at_minus_one.magnitude().clone(), BigInt::from(k.determinant()).magnitude().clone());
                }
            }
        }
    }

    #[test]
    fn classical_invariant_fixtures() {
        let c = PretzelKnot::new(1, 3, -7).unwrap().classical();
        assert_eq!(c.determinant, 25);
        assert_eq!(c.signature, Some(0));
        // (2t-3)(3t-2) = 6t^2 - 13t + 6
        assert_eq!(c.alexander.as_deref(), Some(&ints(&[6, -13, 6])[..]));
        assert_eq!(c.alg_slice, Some(true));

        let c = PretzelKnot::new(-3, 5, 7).unwrap().classical();
        assert_eq!(c.alexander.as_deref(), Some(&ints(&[1])[..]));
        assert_eq!(c.alg_slice, Some(true));

        let c = PretzelKnot::new(3, 5, 7).unwrap().classical();
        assert_ne!(c.signature, Some(0));
        assert_eq!(c.alg_slice, Some(false));

        let c = PretzelKnot::new(2, 3, -3).unwrap().classical();
        assert_eq!(c.determinant, 9);
        assert_eq!(c.signature, None);
        assert_eq!(c.alg_slice, None);
    }

    #[test]
    fn ribbon_recognition() {
        let f = PretzelKnot::new(3, 5, -5).unwrap().ribbon_form().unwrap();
        assert!(matches!(f, RibbonForm::PairCancel { q: 5, .. }));
        let f = PretzelKnot::new(1, 3, -7).unwrap().ribbon_form().unwrap();
        assert!(matches!(f, RibbonForm::OneQQFour { q: 3 }));
        assert_eq!(PretzelKnot::new(5, 9, -41).unwrap().ribbon_form(), None);
        // invariance under reflection and permutation
        let base = PretzelKnot::new(1, 3, -7).unwrap().ribbon_form();
        assert_eq!(PretzelKnot::new(-1, -3, 7).unwrap().ribbon_form(), base);
        assert_eq!(PretzelKnot::new(-7, 3, 1).unwrap().ribbon_form(), base);
        // even-class ribbon family
        let f = PretzelKnot::new(2, 7, -7).unwrap().ribbon_form().unwrap();
        assert!(matches!(f, RibbonForm::PairCancel { q: 7, .. }));
    }

    #[test]
    fn exceptional_even_family_detection() {
        let m = PretzelKnot::new(1, -3, -2).unwrap().exceptional_even_family().unwrap();
        assert_eq!((m.a, m.residue_mod_60, m.unresolved), (1, 1, true));
        let m = PretzelKnot::new(3, -5, -8).unwrap().exceptional_even_family().unwrap();
        assert_eq!((m.a, m.residue_mod_60, m.unresolved), (3, 3, false));
        // reflection and permutation invariance
        let m = PretzelKnot::new(8, 5, -3).unwrap().exceptional_even_family().unwrap();
        assert_eq!(m.a, 3);
        assert_eq!(PretzelKnot::new(2, 3, -3).unwrap().exceptional_even_family(), None);
    }

    #[test]
    fn two_bridge_conversions() {
        assert_eq!(twobridge_to_pretzel(1, 1).unwrap(), PretzelKnot::new(1, 1, -3).unwrap());
        assert_eq!(twobridge_to_pretzel(2, 1).unwrap(), PretzelKnot::new(1, 3, -3).unwrap());
        let k = twobridge_to_pretzel(2, 3).unwrap();
        assert_eq!(k, PretzelKnot::new(1, 3, -7).unwrap());
        assert_eq!(k.determinant(), 4 * 2 * 3 + 1);
        assert!(twobridge_to_pretzel(0, 1).is_err());
    }

    #[test]
    fn pair_cancel_family_has_square_determinant() {
        for p in [-7i64, -1, 1, 3, 9].iter().copied() {
            for q in [1i64, 3, 5, 7].iter().copied() {
                let k = PretzelKnot::new(p, q, -q).unwrap();
                assert_eq!(k.determinant(), q * q);
            }
        }
    }
}
