//! Self-check suite: exact-value fixtures and classification scans, shared
//! by the `acceptance` integration test and the CLI `fixtures` command.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cg::{
    f_chi, is_multiple_of_four, sigma_best, sigma_closed_form, sigma_colored, sigma_fchi,
    sigma_satellite, RepPolicy,
};
use crate::double_cover::{
    characters, cover_h1_dim, homology, linking_form, metabolizers, presentation, vanishes_on,
    Character, PresentationKind,
};
use crate::exact_math::{hermitian_signature_at_root, SignConfig};
use crate::link_sig::torus::{litherland_torus_sigma, torus_link_seifert};
use crate::pretzel::{is_perfect_square, PretzelKnot};
use crate::verdict::{
    analyze, scan_even, scan_odd, AnalyzeOptions, ScanRecord, VerdictStatus,
};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn run(name: &'static str, body: impl FnOnce() -> Result<String>) -> CriterionResult {
    match body() {
        Ok(detail) => CriterionResult {
            name,
            passed: true,
            detail,
        },
        Err(e) => CriterionResult {
            name,
            passed: false,
            detail: format!("{e:?}"),
        },
    }
}

fn fail(msg: String) -> Error {
    Error::CrossCheckFailed(msg)
}

fn knot(p: i64, q: i64, r: i64) -> PretzelKnot {
    PretzelKnot::new(p, q, r).expect("fixture knot")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn odd_slice_candidate(rec: &ScanRecord) -> bool {
    rec.signature == Some(0) && rec.det > 1 && is_perfect_square(rec.det)
}

/// Normal-form odd knots with all |parameters| bounded by `max`.
fn odd_normal_forms(max: i64) -> Vec<PretzelKnot> {
    let mut out = Vec::new();
    for p in (1..=max).step_by(2) {
        for q in (p..=max).step_by(2) {
            for r in (1..=max).step_by(2) {
                out.push(knot(p, q, -r));
            }
        }
    }
    out
}

/// 1. Odd-class classification scan: every signature-zero odd knot with
///    square determinant > 1 in 0 < p <= q <= 33, |r| <= 121 is ribbon or
///    obstructed.
pub fn criterion_1(opts: &AnalyzeOptions) -> CriterionResult {
    run("odd classification scan (p,q <= 33, |r| <= 121)", || {
        let recs = scan_odd(33, 121, opts)?;
        let mut candidates = 0usize;
        for rec in &recs {
            if !odd_slice_candidate(rec) {
                continue;
            }
            candidates += 1;
            if !matches!(
                rec.verdict.status,
                VerdictStatus::RibbonSlice(_) | VerdictStatus::CGObstructed(_)
            ) {
                return Err(fail(format!(
                    "P({},{},{}) -> {:?}",
                    rec.p, rec.q, rec.r, rec.verdict.status
                )));
            }
        }
        Ok(format!(
            "{} rows, {candidates} slice candidates, zero inconclusive",
            recs.len()
        ))
    })
}

/// 2. K_s family: for s in {3,5,7}, K_s = P(s^2, s^2, -(s^2+1)/2), every
///    nontrivial character to Z_s and every k gives sigma_k < -1.
pub fn criterion_2(cfg: SignConfig) -> CriterionResult {
    run("K_s family: all sigma_k < -1", || {
        let mut checked = 0usize;
        for s in [3i64, 5, 7] {
            let k = knot(s * s, s * s, -(s * s + 1) / 2);
            let pres = presentation(&k, PresentationKind::Odd4)?;
            for chi in characters(&pres, s)? {
                if chi.is_trivial() {
                    continue;
                }
                for kk in 1..s {
                    let sv = sigma_best(&k, &pres, &chi, kk, cfg)?;
                    if sv.value >= rat(-1) {
                        return Err(fail(format!(
                            "s={s} chi={:?} k={kk}: sigma={}",
                            chi.images, sv.value
                        )));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} signature values, all < -1"))
    })
}

/// 3. Cross-route exactness: on the four-component model, every pair of
///    applicable routes agrees for all odd knots with |params| <= 15 and
///    primes d <= 13 dividing the determinant.
pub fn criterion_3(cfg: SignConfig) -> CriterionResult {
    run("cross-route exactness (|params| <= 15, d <= 13)", || {
        let mut comparisons = 0usize;
        for k in odd_normal_forms(15) {
            let det = k.determinant();
            if det <= 1 {
                continue;
            }
            let pres = presentation(&k, PresentationKind::Odd4)?;
            for (d, _) in crate::double_cover::factorize(det) {
                if d <= 2 || d > 13 {
                    continue;
                }
                for chi in characters(&pres, d)? {
                    if chi.is_trivial() {
                        continue;
                    }
                    for kk in 1..d {
                        let mut values: Vec<(&str, BigRational)> = Vec::new();
                        if let Ok(v) = sigma_closed_form(&k, &chi, kk) {
                            values.push(("closed-form", v));
                        }
                        if let Ok(v) = sigma_fchi(&k, &chi.multiple(kk)) {
                            values.push(("f-chi", v));
                        }
                        if let Ok(v) =
                            sigma_satellite(&pres, &chi, kk, RepPolicy::CoherentLifts, cfg)
                        {
                            values.push(("satellite", v));
                        }
                        if let Ok(v) = sigma_colored(&pres, &chi, kk, cfg) {
                            values.push(("colored", v));
                        }
                        if values.len() >= 2 {
                            comparisons += 1;
                            let (name0, v0) = &values[0];
                            for (name, v) in &values[1..] {
                                if v != v0 {
                                    return Err(fail(format!(
                                        "P({},{},{}) d={d} chi={:?} k={kk}: {name0}={v0} vs {name}={v}",
                                        k.p, k.q, k.r, chi.images
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(format!("{comparisons} multi-route comparisons, all equal"))
    })
}

/// 4. Torus-knot signature oracle: the Seifert-matrix signature of
///    T(j, jkn) at the primitive n-th root of unity equals -2j(j-1)k.
pub fn criterion_4(cfg: SignConfig) -> CriterionResult {
    run("torus signature closed form (j < n <= 8, k <= 4)", || {
        let mut checked = 0usize;
        for n in 2..=8i64 {
            for j in 1..n {
                for k in 1..=4i64 {
                    let v = torus_link_seifert(j as usize, j * k * n)?;
                    let got = hermitian_signature_at_root(&v, n, 1, cfg)?;
                    let want = litherland_torus_sigma(j, k);
                    if got != want {
                        return Err(fail(format!("T({j},{}) at n={n}: {got} != {want}", j * k * n)));
                    }
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} torus signatures match the closed form"))
    })
}

/// 5. Divisibility facts over the criterion-1 slice candidates:
///    d^2 | f(chi) whenever f is defined, and full-support
///    metabolizer-vanishing characters give integer sigma_1 = 0 mod 4.
pub fn criterion_5(opts: &AnalyzeOptions) -> CriterionResult {
    run("divisibility: d^2 | f(chi); full-support sigma_1 = 0 mod 4", || {
        let recs = scan_odd(33, 121, opts)?;
        let mut f_checked = 0usize;
        let mut full_checked = 0usize;
        for rec in &recs {
            if !odd_slice_candidate(rec) {
                continue;
            }
            let k = knot(rec.p, rec.q, rec.r);
            let pres = presentation(&k, PresentationKind::Odd4)?;
            for (d, _) in crate::double_cover::factorize(rec.det) {
                if d <= 2 {
                    continue;
                }
                let full_support = k.p % d == 0 && k.q % d == 0 && k.r % d == 0;
                let (group, mets) = if full_support {
                    let group = homology(&pres)?;
                    let form = linking_form(&pres, &group)?;
                    let mets = metabolizers(&group, &form)?;
                    (Some(group), mets)
                } else {
                    (None, Vec::new())
                };
                for chi in characters(&pres, d)? {
                    if chi.is_trivial() {
                        continue;
                    }
                    if let Ok(f) = f_chi(&k, &chi) {
                        let d2 = BigInt::from(d) * BigInt::from(d);
                        if !(&f.value % &d2).is_zero() {
                            return Err(fail(format!(
                                "P({},{},{}) d={d} chi={:?}: f={} not divisible by d^2",
                                k.p, k.q, k.r, chi.images, f.value
                            )));
                        }
                        f_checked += 1;
                    }
                    if full_support {
                        // the mod-4 law covers characters with all three
                        // twist images nonzero
                        if chi.images[1..].iter().any(|m| m.rem_euclid(d) == 0) {
                            continue;
                        }
                        let group = group.as_ref().expect("computed above");
                        if mets.iter().any(|m| vanishes_on(&chi, group, m)) {
                            let sv = sigma_best(&k, &pres, &chi, 1, opts.cfg)?;
                            if !is_multiple_of_four(&sv.value) {
                                return Err(fail(format!(
                                    "P({},{},{}) d={d} chi={:?}: sigma_1={} not 0 mod 4",
                                    k.p, k.q, k.r, chi.images, sv.value
                                )));
                            }
                            full_checked += 1;
                        }
                    }
                }
            }
        }
        Ok(format!(
            "{f_checked} f-divisibility checks, {full_checked} full-support mod-4 checks"
        ))
    })
}

/// 6. Named exact-value fixtures.
pub fn criterion_6(opts: &AnalyzeOptions) -> CriterionResult {
    run("named exact-value fixtures", || {
        let cfg = opts.cfg;

        // P(5,9,-41) at d=23
        let k = knot(5, 9, -41);
        let pres = presentation(&k, PresentationKind::Odd4)?;
        let chi1 = Character {
            modulus: 23,
            images: vec![18, 1, 21, 1],
        };
        if !chi1.is_valid_for(&pres) {
            return Err(fail("chi_1 invalid for P(5,9,-41)".to_string()));
        }
        let f1 = f_chi(&k, &chi1)?;
        if f1.value != BigInt::from(529) {
            return Err(fail(format!("f(chi_1)={} != 529", f1.value)));
        }
        if sigma_fchi(&k, &chi1)? != rat(1) {
            return Err(fail("sigma_1(chi_1) != 1".to_string()));
        }
        let chi2 = chi1.multiple(2);
        let f2 = f_chi(&k, &chi2)?;
        if !f2.value.is_zero() || sigma_fchi(&k, &chi2)? != rat(3) {
            return Err(fail("f(2 chi_1) != 0 or sigma_1(2 chi_1) != 3".to_string()));
        }
        match analyze(&k, opts)?.status {
            VerdictStatus::CGObstructed(_) => {}
            other => return Err(fail(format!("P(5,9,-41) verdict {other:?}"))),
        }

        // P(9,9,-5) at d=3: sigma_1 = sigma_2 = -7
        let k = knot(9, 9, -5);
        let pres = presentation(&k, PresentationKind::Odd4)?;
        let chi = characters(&pres, 3)?
            .into_iter()
            .find(|c| !c.is_trivial())
            .expect("nontrivial character");
        for kk in [1, 2] {
            let sv = sigma_best(&k, &pres, &chi, kk, cfg)?;
            if sv.value != rat(-7) {
                return Err(fail(format!("P(9,9,-5) sigma_{kk}={}", sv.value)));
            }
        }

        // P(21,35,-119) at d=7, chi=(2,4,1): |sigma_1| = 24/7 on both routes
        let k = knot(21, 35, -119);
        let pres = presentation(&k, PresentationKind::Odd4)?;
        let chi = Character {
            modulus: 7,
            images: vec![0, 2, 4, 1],
        };
        if !chi.is_valid_for(&pres) {
            return Err(fail("chi invalid for P(21,35,-119)".to_string()));
        }
        let want = BigRational::new(BigInt::from(24), BigInt::from(7));
        let closed = sigma_closed_form(&k, &chi, 1)?;
        let sat = sigma_satellite(&pres, &chi, 1, RepPolicy::CoherentLifts, cfg)?;
        if closed.abs() != want || sat.abs() != want || closed != sat {
            return Err(fail(format!(
                "P(21,35,-119): closed={closed} satellite={sat}, want |.|=24/7"
            )));
        }

        // P(-1,3,6) even: d=3 chi=(1,2) -> -1; d=9 chi=(2,4) -> -11/9
        let k = knot(-1, 3, 6);
        let pres = presentation(&k, PresentationKind::Even2)?;
        let chi = Character {
            modulus: 3,
            images: vec![1, 2],
        };
        let got = sigma_best(&k, &pres, &chi, 1, cfg)?;
        if got.value != rat(-1) {
            return Err(fail(format!("P(-1,3,6) d=3 sigma_1={}", got.value)));
        }
        let chi = Character {
            modulus: 9,
            images: vec![2, 4],
        };
        let got = sigma_best(&k, &pres, &chi, 1, cfg)?;
        if got.value != BigRational::new(BigInt::from(-11), BigInt::from(9)) {
            return Err(fail(format!("P(-1,3,6) d=9 sigma_1={}", got.value)));
        }

        Ok("all named fixtures exact".to_string())
    })
}

/// 7. Cover-homology routes agree for |params| <= 21, d in {3,5,7} dividing
///    the determinant (the closed form is cross-checked against the covering
///    complex inside `cover_h1_dim`).
pub fn criterion_7() -> CriterionResult {
    run("cover homology closed form vs covering complex", || {
        let mut checked = 0usize;
        for k in odd_normal_forms(21) {
            let det = k.determinant();
            if det <= 1 {
                continue;
            }
            let pres = presentation(&k, PresentationKind::Odd4)?;
            for d in [3i64, 5, 7] {
                if det % d != 0 {
                    continue;
                }
                for chi in characters(&pres, d)? {
                    if chi.is_trivial() {
                        continue;
                    }
                    let twists = [chi.images[1], chi.images[2], chi.images[3]];
                    cover_h1_dim(&k, d, twists)?;
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} characters cross-checked"))
    })
}

/// 8. Classical-invariant suite.
pub fn criterion_8(opts: &AnalyzeOptions) -> CriterionResult {
    run("classical invariants", || {
        // determinant identity, exhaustive over dets <= 25
        let mut checked = 0usize;
        for k in odd_normal_forms(25) {
            if k.determinant() > 25 {
                continue;
            }
            let v = k.seifert_matrix()?;
            let sym = v.add(&v.transpose());
            if sym.det().magnitude() != BigInt::from(k.determinant()).magnitude() {
                return Err(fail(format!(
                    "P({},{},{}): |det(V+V^T)| != determinant",
                    k.p, k.q, k.r
                )));
            }
            checked += 1;
        }

        // trivial Alexander polynomial fixture
        let k = knot(-3, 5, 7);
        let alex = k.classical().alexander.expect("odd class");
        if alex != vec![BigInt::from(1)] {
            return Err(fail(format!("Alexander of P(-3,5,7) = {alex:?}")));
        }
        match analyze(&k, opts)?.status {
            VerdictStatus::FreedmanSlice {
                smoothly_slice: false,
            } => {}
            other => return Err(fail(format!("P(-3,5,7) verdict {other:?}"))),
        }

        // Fox-Milnor fixture: Alexander of P(1,3,-7) is (2t-3)(3t-2) up to units
        let alex = knot(1, 3, -7).classical().alexander.expect("odd class");
        let want: Vec<BigInt> = [6, -13, 6].iter().map(|&x| BigInt::from(x)).collect();
        if alex != want && alex != want.iter().rev().cloned().collect::<Vec<_>>() {
            return Err(fail(format!("Alexander of P(1,3,-7) = {alex:?}")));
        }
        if !crate::pretzel::fox_milnor_quadratic(&alex) {
            return Err(fail("P(1,3,-7) fails Fox-Milnor".to_string()));
        }

        // signature gate fixture
        match analyze(&knot(3, 5, 7), opts)?.status {
            VerdictStatus::NotAlgSlice(ref m) if m.contains("signature") => {}
            other => return Err(fail(format!("P(3,5,7) verdict {other:?}"))),
        }

        Ok(format!("{checked} determinant identities + named gates"))
    })
}

/// 9. Even-class classification scan: P(-p, p+2, q) with determinant
///    m^2 > 1 for p <= 15, q <= 60 is ribbon or obstructed; the
///    determinant-one exceptional family is flagged with its residue
///    disposition.
pub fn criterion_9(opts: &AnalyzeOptions) -> CriterionResult {
    run("even classification scan (p <= 15, q <= 60)", || {
        let recs = scan_even(15, 60, opts)?;
        let mut candidates = 0usize;
        let mut exceptional = 0usize;
        for rec in &recs {
            let k = knot(rec.p, rec.q, rec.r);
            if let Some(fam) = k.exceptional_even_family() {
                exceptional += 1;
                let expected_unresolved =
                    crate::pretzel::UNRESOLVED_RESIDUES.contains(&fam.residue_mod_60);
                match &rec.verdict.status {
                    VerdictStatus::ExceptionalEven {
                        a,
                        residue,
                        unresolved,
                    } if *a == fam.a
                        && *residue == fam.a.rem_euclid(60)
                        && *unresolved == expected_unresolved => {}
                    other => {
                        return Err(fail(format!(
                            "P({},{},{}) exceptional member verdict {other:?}",
                            rec.p, rec.q, rec.r
                        )))
                    }
                }
                continue;
            }
            if rec.det > 1 && is_perfect_square(rec.det) {
                candidates += 1;
                if !matches!(
                    rec.verdict.status,
                    VerdictStatus::RibbonSlice(_) | VerdictStatus::CGObstructed(_)
                ) {
                    return Err(fail(format!(
                        "P({},{},{}) det={} -> {:?}",
                        rec.p, rec.q, rec.r, rec.det, rec.verdict.status
                    )));
                }
            }
        }
        if exceptional == 0 {
            return Err(fail("no exceptional-family members in range".to_string()));
        }
        Ok(format!(
            "{} rows, {candidates} square-determinant candidates, {exceptional} exceptional members",
            recs.len()
        ))
    })
}

/// 10. Representative independence: on two-strand reduced models, the
///     satellite formula with the antiparallel (1, -1) pair agrees with
///     coherent (1, d-1) lifts for d in {3,5}.
pub fn criterion_10(cfg: SignConfig) -> CriterionResult {
    run("satellite representative independence (d in {3,5})", || {
        let mut checked = 0usize;
        for k in odd_normal_forms(15) {
            let det = k.determinant();
            if det <= 1 {
                continue;
            }
            let pres = presentation(&k, PresentationKind::OddReduced2)?;
            for d in [3i64, 5] {
                if det % d != 0 {
                    continue;
                }
                for chi in characters(&pres, d)? {
                    let images: Vec<i64> =
                        chi.images.iter().map(|x| x.rem_euclid(d)).collect();
                    if !(images == [1, d - 1] || images == [d - 1, 1]) {
                        continue;
                    }
                    for kk in 1..d {
                        let a = sigma_satellite(&pres, &chi, kk, RepPolicy::AnnulusPair, cfg);
                        let b = sigma_satellite(&pres, &chi, kk, RepPolicy::CoherentLifts, cfg);
                        match (a, b) {
                            (Ok(a), Ok(b)) => {
                                if a != b {
                                    return Err(fail(format!(
                                        "P({},{},{}) d={d} k={kk}: annulus {a} vs coherent {b}",
                                        k.p, k.q, k.r
                                    )));
                                }
                                checked += 1;
                            }
                            (Err(Error::UnsupportedCableShape(_)), _)
                            | (_, Err(Error::UnsupportedCableShape(_))) => continue,
                            (Err(e), _) | (_, Err(e)) => return Err(e),
                        }
                    }
                }
            }
        }
        if checked == 0 {
            return Err(fail("no comparable instances found".to_string()));
        }
        Ok(format!("{checked} paired evaluations agree"))
    })
}

/// Run the complete suite in order.
pub fn run_all(opts: &AnalyzeOptions) -> Vec<CriterionResult> {
    vec![
        criterion_1(opts),
        criterion_2(opts.cfg),
        criterion_3(opts.cfg),
        criterion_4(opts.cfg),
        criterion_5(opts),
        criterion_6(opts),
        criterion_7(),
        criterion_8(opts),
        criterion_9(opts),
        criterion_10(opts.cfg),
    ]
}
