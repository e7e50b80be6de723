//! Signature of a Hermitian matrix over Q(zeta_d), by exact congruence
//! reduction. Pivots are elements of the real subfield; each pivot is first
//! tested for zero exactly (polynomial normal form), and only then is its
//! sign certified with interval arithmetic at adaptively doubled precision.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;

use crate::{Error, Result};

use super::cyclotomic::{CycElt, CycField};
use super::int_matrix::IntMatrix;

/// Precision policy for pivot sign certification.
#[derive(Debug, Clone, Copy)]
pub struct SignConfig {
    /// Starting precision in bits.
    pub start_bits: u32,
    /// Hard cap; exceeding it yields `Error::SignUndecidable`.
    pub max_bits: u32,
}

impl Default for SignConfig {
    fn default() -> Self {
        SignConfig {
            start_bits: 128,
            max_bits: 4096,
        }
    }
}

impl SignConfig {
    pub fn from_env() -> Self {
        let mut cfg = SignConfig::default();
        if let Ok(s) = std::env::var("PK_PRECISION_BITS") {
            if let Ok(bits) = s.trim().parse::<u32>() {
                cfg.start_bits = bits.clamp(8, cfg.max_bits);
            }
        }
        cfg
    }
}

/// Sign of a nonzero real cyclotomic element. The caller must have verified
/// that the element is exactly nonzero.
pub fn real_sign(x: &CycElt, cfg: SignConfig) -> Result<i64> {
    debug_assert!(!x.is_zero());
    debug_assert!(x.is_real());
    let mut bits = cfg.start_bits;
    loop {
        if let Some(s) = x.real_part_interval(bits).sign() {
            return Ok(s);
        }
        if bits >= cfg.max_bits {
            return Err(Error::SignUndecidable {
                bits,
                context: "real cyclotomic pivot".into(),
            });
        }
        bits = (bits * 2).min(cfg.max_bits);
    }
}

/// Sparse Hermitian matrix over a fixed cyclotomic field: one map per row.
/// Only structurally-nonzero entries are stored; entries are kept exactly.
pub struct SparseHermitian {
    pub n: usize,
    pub field: Arc<CycField>,
    rows: Vec<BTreeMap<usize, CycElt>>,
}

impl SparseHermitian {
    pub fn new(n: usize, field: Arc<CycField>) -> Self {
        SparseHermitian {
            n,
            field,
            rows: vec![BTreeMap::new(); n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> CycElt {
        self.rows[i]
            .get(&j)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycElt) {
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &CycElt) {
        let cur = self.get(i, j);
        self.set(i, j, cur.add(v));
    }

    fn check_hermitian(&self) -> Result<()> {
        for i in 0..self.n {
            for (&j, v) in &self.rows[i] {
                let other = self.get(j, i);
                if other.conj() != *v {
                    return Err(Error::InvalidArgument(format!(
                        "matrix is not Hermitian at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Signature of a sparse Hermitian matrix; zero eigenvalues contribute 0.
pub fn hermitian_signature_sparse(mut m: SparseHermitian, cfg: SignConfig) -> Result<i64> {
    m.check_hermitian()?;
    let field = Arc::clone(&m.field);
    let mut alive: Vec<bool> = vec![true; m.n];
    let mut remaining: Vec<usize> = (0..m.n).collect();
    let mut sig: i64 = 0;

    while !remaining.is_empty() {
        // 1x1 pivot: a live index with nonzero diagonal. Prefer the sparsest
        // row to limit fill-in.
        let pivot = remaining
            .iter()
            .copied()
            .filter(|&i| m.rows[i].contains_key(&i))
            .min_by_key(|&i| m.rows[i].len());
        if let Some(p) = pivot {
            let d = m.get(p, p);
            sig += real_sign(&d, cfg)?;
            let dinv = d.inverse()?;
            eliminate_one(&mut m, p, &dinv, &alive);
            alive[p] = false;
            remaining.retain(|&i| i != p);
            continue;
        }
        // All live diagonals vanish. Any nonzero off-diagonal entry spans a
        // block [[0, h], [h*, 0]] of signature 0.
        let mut blk = None;
        'outer: for &i in &remaining {
            for (&j, _) in &m.rows[i] {
                if j != i && alive[j] {
                    blk = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = blk else { break }; // remaining block is zero
        let h = m.get(i, j);
        let hinv = h.inverse()?;
        eliminate_two(&mut m, i, j, &hinv, &alive);
        alive[i] = false;
        alive[j] = false;
        remaining.retain(|&u| u != i && u != j);
        let _ = &field;
    }
    Ok(sig)
}

/// Schur complement elimination of a single pivot row/column p.
fn eliminate_one(m: &mut SparseHermitian, p: usize, dinv: &CycElt, alive: &[bool]) {
    // Column p entries: m[u][p] for live u != p, read off row p by hermiticity.
    let row_p: Vec<(usize, CycElt)> = m.rows[p]
        .iter()
        .filter(|(&j, _)| j != p && alive[j])
        .map(|(&j, v)| (j, v.clone()))
        .collect();
    for (u, puv) in &row_p {
        // m[u][p] = conj(m[p][u])
        let mup = puv.conj();
        let coeff = mup.mul(dinv);
        for (v, ppv) in &row_p {
            // m[u][v] -= m[u][p] * dinv * m[p][v]
            let sub = coeff.mul(ppv).neg();
            m.add_to(*u, *v, &sub);
        }
        m.rows[*u].remove(&p);
    }
    m.rows[p].clear();
}

/// Schur complement elimination of a hyperbolic block on indices (i, j),
/// where m[i][i] = m[j][j] = 0, h = m[i][j]. Inverse block:
/// [[0, 1/h*], [1/h, 0]] (conjugate-transpose structure).
fn eliminate_two(m: &mut SparseHermitian, i: usize, j: usize, hinv: &CycElt, alive: &[bool]) {
    let hinv_conj = hinv.conj();
    let row_i: Vec<(usize, CycElt)> = m.rows[i]
        .iter()
        .filter(|(&v, _)| v != i && v != j && alive[v])
        .map(|(&v, e)| (v, e.clone()))
        .collect();
    let row_j: Vec<(usize, CycElt)> = m.rows[j]
        .iter()
        .filter(|(&v, _)| v != i && v != j && alive[v])
        .map(|(&v, e)| (v, e.clone()))
        .collect();
    // Collect the union of affected columns.
    let mut touched: Vec<usize> = row_i.iter().chain(row_j.iter()).map(|(v, _)| *v).collect();
    touched.sort_unstable();
    touched.dedup();
    // For B = [[0, h], [h*, 0]]: B^{-1} = [[0, 1/h*], [1/h, 0]].
    // m[u][v] -= [m[u][i], m[u][j]] B^{-1} [m[i][v], m[j][v]]^T
    //          = m[u][i]/h* * m[j][v] + m[u][j]/h * m[i][v].
    for &u in &touched {
        let mui = m.get(u, i);
        let muj = m.get(u, j);
        let ci = mui.mul(&hinv_conj);
        let cj = muj.mul(hinv);
        for &v in &touched {
            let miv = m.get(i, v);
            let mjv = m.get(j, v);
            let sub = ci.mul(&mjv).add(&cj.mul(&miv)).neg();
            m.add_to(u, v, &sub);
        }
        m.rows[u].remove(&i);
        m.rows[u].remove(&j);
    }
    m.rows[i].clear();
    m.rows[j].clear();
}

/// Signature of (1 - w) V + (1 - conj(w)) V^T at w = zeta_d^k, for an integer
/// Seifert matrix V. Requires 0 < k < d.
pub fn hermitian_signature_at_root(v: &IntMatrix, d: i64, k: i64, cfg: SignConfig) -> Result<i64> {
    if !v.is_square() {
        return Err(Error::InvalidArgument("Seifert matrix must be square".into()));
    }
    if d < 2 || k <= 0 || k >= d {
        return Err(Error::InvalidArgument(format!(
            "evaluation point requires 0 < k ({k}) < d ({d}), d >= 2"
        )));
    }
    let field = CycField::new(d);
    let w = field.root_power(k);
    let one_minus_w = field.from_int(1).sub(&w);
    let one_minus_wbar = one_minus_w.conj();
    let n = v.rows;
    let mut h = SparseHermitian::new(n, Arc::clone(&field));
    for i in 0..n {
        for j in 0..n {
            use num_traits::Zero;
            let vij = &v[(i, j)];
            let vji = &v[(j, i)];
            if vij.is_zero() && vji.is_zero() {
                continue;
            }
            let a = one_minus_w.mul(&field.from_rational(BigRational::from(vij.clone())));
            let b = one_minus_wbar.mul(&field.from_rational(BigRational::from(vji.clone())));
            h.set(i, j, a.add(&b));
        }
    }
    hermitian_signature_sparse(h, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hopf_link_convention() {
        // V = [-1] for the positive Hopf link: signature -1 at w = -1.
        let v = IntMatrix::from_rows(&[vec![-1]]);
        assert_eq!(
            hermitian_signature_at_root(&v, 2, 1, SignConfig::default()).unwrap(),
            -1
        );
    }

    #[test]
    fn trefoil_signature() {
        // Positive trefoil Seifert matrix; signature -2 at w = -1.
        let v = IntMatrix::from_rows(&[vec![-1, 1], vec![0, -1]]);
        assert_eq!(
            hermitian_signature_at_root(&v, 2, 1, SignConfig::default()).unwrap(),
            -2
        );
        // At a 6th root of unity, just outside/at the Alexander root, the
        // form degenerates: zeta_6 is a root of t^2 - t + 1.
        assert_eq!(
            hermitian_signature_at_root(&v, 6, 1, SignConfig::default()).unwrap(),
            -1
        );
        // At a 3rd root of unity: -2.
        assert_eq!(
            hermitian_signature_at_root(&v, 3, 1, SignConfig::default()).unwrap(),
            -2
        );
    }

    #[test]
    fn hyperbolic_block() {
        // [[0, 2], [2, 0]] has signature 0.
        let v = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            hermitian_signature_at_root(&v, 2, 1, SignConfig::default()).unwrap(),
            0
        );
    }
}
