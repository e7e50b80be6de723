//! Tristram-Levine signatures of the cabled links arising from surgery
//! presentations: each surgery component is replaced by a bundle of parallel
//! (or one pair of antiparallel) strands, and the signature of the resulting
//! link is evaluated at a root of unity.

use crate::double_cover::{LinkModel, SurgeryPresentation};
use crate::exact_math::{hermitian_signature_at_root, SignConfig};
use crate::link_sig::braid::Braid;
use crate::link_sig::torus::torus_sigma_at;
use crate::{Error, Result};

/// How one surgery component is cabled: `n_plus` strands along the component
/// and `n_minus` against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CableSpec {
    pub n_plus: usize,
    pub n_minus: usize,
}

impl CableSpec {
    pub fn coherent(m: usize) -> CableSpec {
        assert!(m >= 1);
        CableSpec { n_plus: m, n_minus: 0 }
    }

    pub fn reversed(m: usize) -> CableSpec {
        assert!(m >= 1);
        CableSpec { n_plus: 0, n_minus: m }
    }

    pub fn antiparallel_pair() -> CableSpec {
        CableSpec { n_plus: 1, n_minus: 1 }
    }

    /// Net strand count.
    pub fn net(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_antiparallel_pair(&self) -> bool {
        self.n_plus == 1 && self.n_minus == 1
    }

    pub fn is_coherent(&self) -> bool {
        (self.n_minus == 0 && self.n_plus >= 1) || (self.n_plus == 0 && self.n_minus >= 1)
    }
}

/// Signature of the cabled presentation link at e^{2 pi i k / d}.
pub fn satellite_sigma(
    pres: &SurgeryPresentation,
    cables: &[CableSpec],
    d: i64,
    k: i64,
    cfg: SignConfig,
) -> Result<i64> {
    assert!(d >= 2 && k.rem_euclid(d) != 0, "evaluation point must not be 1");
    if cables.len() != pres.linking_matrix.rows {
        return Err(Error::InvalidArgument(
            "cable count must match the presentation's component count".to_string(),
        ));
    }
    if cables
        .iter()
        .any(|c| !(c.is_coherent() || c.is_antiparallel_pair()))
    {
        return Err(Error::UnsupportedCableShape(
            "only coherent bundles and antiparallel pairs are supported".to_string(),
        ));
    }
    match pres.link_model {
        LinkModel::AxisWithTwists { p, q, r } => {
            // The axis pair must be antiparallel: the resulting link then
            // splits into independent pieces, one per twist component, and
            // the signatures add.
            if !cables[0].is_antiparallel_pair() {
                return Err(Error::UnsupportedCableShape(
                    "the axis component supports only an antiparallel pair".to_string(),
                ));
            }
            let mut total = 0i64;
            for (cable, twist) in cables[1..].iter().zip([p, q, r]) {
                total += if cable.is_antiparallel_pair() {
                    // boundary of a twist-framed annulus: 1x1 form [twist]
                    twist.signum()
                } else {
                    let m = cable.net().unsigned_abs() as i64;
                    assert!(
                        m < d,
                        "coherent bundle width must stay below the character order"
                    );
                    torus_sigma_at(m, twist * m, k, d)
                };
            }
            Ok(total)
        }
        LinkModel::TorusTwoStrand { f } => {
            let (c1, c2) = (cables[0], cables[1]);
            if c1.is_antiparallel_pair() || c2.is_antiparallel_pair() {
                return Err(Error::UnsupportedCableShape(
                    "antiparallel pairs on a two-strand model are not supported".to_string(),
                ));
            }
            let (m1, m2) = (c1.net(), c2.net());
            if m1 * m2 < 0 {
                if m1.abs() == 1 && m2.abs() == 1 {
                    // annulus boundary with core the pattern: 1x1 form [f]
                    return Ok(f.signum());
                }
                return Err(Error::UnsupportedCableShape(
                    "mixed-orientation bundles wider than one strand are not supported"
                        .to_string(),
                ));
            }
            // reversing the whole link preserves signatures
            let (u, v) = (m1.unsigned_abs() as usize, m2.unsigned_abs() as usize);
            let braid = cable_braid(f, u, v, pres.framings[0], pres.framings[1]);
            let seifert = braid.seifert_matrix()?;
            hermitian_signature_at_root(&seifert, d, k, cfg)
        }
    }
}

/// Closed braid for the (u, v)-strand coherent cable of the two-strand
/// pattern with 2f pattern crossings and bundle framings lam1, lam2.
fn cable_braid(f: i64, u: usize, v: usize, lam1: i64, lam2: i64) -> Braid {
    assert!(u >= 1 && v >= 1);
    let n = u + v;
    let mut braid = Braid::new(n);
    let sign = if f >= 0 { 1i8 } else { -1 };
    // each pattern crossing becomes a block swap of the two bundles,
    // preserving strand order inside each bundle
    let mut left = u;
    for _ in 0..(2 * f.abs()) {
        let right = n - left;
        for t in (1..=left).rev() {
            for c in t..t + right {
                braid.push(c, sign);
            }
        }
        left = right;
    }
    // after an even number of swaps the bundles are back in place; full
    // twists realize the surgery framings as pairwise linking within bundles
    braid.push_full_twists(0, u, lam1);
    braid.push_full_twists(u, v, lam2);
    debug_assert!(cable_linking_is_correct(&braid, f, u, v, lam1, lam2));
    braid
}

fn cable_linking_is_correct(braid: &Braid, f: i64, u: usize, v: usize, lam1: i64, lam2: i64) -> bool {
    let comps = braid.closure_components();
    if comps.len() != u + v || comps.iter().any(|c| c.len() != 1) {
        return false;
    }
    for a in 0..u + v {
        for b in (a + 1)..u + v {
            let expected = if b < u {
                lam1
            } else if a >= u {
                lam2
            } else {
                f
            };
            if braid.closure_linking(&[a], &[b]) != expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::double_cover::{presentation, PresentationKind};
    use crate::link_sig::colored::colored_torus_sigma;
    use crate::pretzel::PretzelKnot;

    fn cfg() -> SignConfig {
        SignConfig::default()
    }

    fn pres(p: i64, q: i64, r: i64, kind: PresentationKind) -> SurgeryPresentation {
        presentation(&PretzelKnot::new(p, q, r).unwrap(), kind).unwrap()
    }

    #[test]
    fn annulus_representative_gives_the_framing_sign() {
        let pres = pres(9, 9, -5, PresentationKind::OddReduced2);
        let cables = [CableSpec::coherent(1), CableSpec::reversed(1)];
        assert_eq!(satellite_sigma(&pres, &cables, 3, 1, cfg()).unwrap(), -1);
        let pres2 = super::super::super::double_cover::presentation(
            &PretzelKnot::new(1, 3, -7).unwrap(),
            PresentationKind::ReducedAt(1),
        )
        .unwrap();
        // canceled parameter 3 > 0
        let cables = [CableSpec::reversed(1), CableSpec::coherent(1)];
        assert_eq!(satellite_sigma(&pres2, &cables, 5, 2, cfg()).unwrap(), 1);
    }

    #[test]
    fn axis_model_adds_torus_pieces() {
        // coherent bundles (2,4,1) at d=7: the two wide bundles contribute
        // torus-link signatures, the single strand contributes 0
        let pres = pres(21, 35, -119, PresentationKind::Odd4);
        let cables = [
            CableSpec::antiparallel_pair(),
            CableSpec::coherent(2),
            CableSpec::coherent(4),
            CableSpec::coherent(1),
        ];
        assert_eq!(
            satellite_sigma(&pres, &cables, 7, 1, cfg()).unwrap(),
            -12 + -120 + 0
        );
        // an antiparallel twist bundle contributes the framing sign
        let cables = [
            CableSpec::antiparallel_pair(),
            CableSpec::coherent(1),
            CableSpec::coherent(6),
            CableSpec::antiparallel_pair(),
        ];
        assert_eq!(
            satellite_sigma(&pres, &cables, 7, 1, cfg()).unwrap(),
            0 + torus_sigma_at(6, 35 * 6, 1, 7) + (-1)
        );
    }

    #[test]
    fn coherent_cable_of_the_even_model_matches_the_colored_route() {
        // P(-1,3,6): pattern T(2,-2), framings (2,5), bundles (1,2)
        let pres = pres(-1, 3, 6, PresentationKind::Even2);
        let cables = [CableSpec::coherent(1), CableSpec::coherent(2)];
        let sig = satellite_sigma(&pres, &cables, 3, 1, cfg()).unwrap();
        assert_eq!(sig, -5);
        // colored cross-check through the full correction formula:
        // sigma(A) - (sig_colored - a12) - (2/9) * 9 = 2 - sig_colored - 1 - 2
        // must equal sigma(A) - sig_cable - (2*1*2/9) * 18 = 2 - sig_cable - 8
        let colored = colored_torus_sigma(-1, 3, 1, 2, cfg()).unwrap();
        assert_eq!(2 - (colored - (-1)) - 2, 2 - sig - 8);
    }

    #[test]
    fn coherent_cable_recovers_plain_torus_links() {
        // bundles (1,1) with zero framings on the T(2,2f) pattern give back
        // the torus link itself
        for f in [1i64, 2, 3, -2] {
            let braid = cable_braid(f, 1, 1, 0, 0);
            let v = braid.seifert_matrix().unwrap();
            let w = Braid::torus(2, 2 * f).seifert_matrix().unwrap();
            for (d, k) in [(3i64, 1i64), (5, 2), (7, 3)] {
                assert_eq!(
                    hermitian_signature_at_root(&v, d, k, cfg()).unwrap(),
                    hermitian_signature_at_root(&w, d, k, cfg()).unwrap(),
                );
            }
        }
    }

    #[test]
    fn coherent_representatives_are_orientation_symmetric() {
        // reversing every strand of the link leaves the signature unchanged
        let pres = pres(3, 5, -17, PresentationKind::OddReduced2);
        for (m1, m2) in [(1usize, 2usize), (2, 2), (1, 4)] {
            for k in 1..5 {
                let a = satellite_sigma(
                    &pres,
                    &[CableSpec::coherent(m1), CableSpec::coherent(m2)],
                    5,
                    k,
                    cfg(),
                )
                .unwrap();
                let b = satellite_sigma(
                    &pres,
                    &[CableSpec::reversed(m1), CableSpec::reversed(m2)],
                    5,
                    k,
                    cfg(),
                )
                .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn conjugate_evaluation_points_agree() {
        let pres = pres(9, 9, -5, PresentationKind::OddReduced2);
        let cables = [CableSpec::coherent(1), CableSpec::coherent(2)];
        for d in [3i64, 5] {
            for k in 1..d {
                assert_eq!(
                    satellite_sigma(&pres, &cables, d, k, cfg()).unwrap(),
                    satellite_sigma(&pres, &cables, d, d - k, cfg()).unwrap()
                );
            }
        }
    }

    #[test]
    fn unsupported_shapes_are_rejected() {
        let pres2 = pres(9, 9, -5, PresentationKind::OddReduced2);
        let bad = [CableSpec::coherent(2), CableSpec::reversed(1)];
        assert!(matches!(
            satellite_sigma(&pres2, &bad, 3, 1, cfg()),
            Err(Error::UnsupportedCableShape(_))
        ));
        let bad = [CableSpec::antiparallel_pair(), CableSpec::coherent(1)];
        assert!(matches!(
            satellite_sigma(&pres2, &bad, 3, 1, cfg()),
            Err(Error::UnsupportedCableShape(_))
        ));
        let pres4 = pres(1, 3, -7, PresentationKind::Odd4);
        let bad = [
            CableSpec::coherent(2),
            CableSpec::coherent(1),
            CableSpec::coherent(1),
            CableSpec::coherent(1),
        ];
        assert!(matches!(
            satellite_sigma(&pres4, &bad, 5, 1, cfg()),
            Err(Error::UnsupportedCableShape(_))
        ));
    }
}
