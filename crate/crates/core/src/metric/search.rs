use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{classify_metric, gram_matrix, positive_definite, real_solution_space, standard_omega, MetricCandidate};
use crate::arith::{rational, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::session::Session;

type GR = GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub denominator: u32,
    pub coefficient: u32,
    /// Hard cap on the number of grid points probed.
    pub max_probes: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { denominator: 4, coefficient: 2, max_probes: 250_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    /// Real dimension of the searched space.
    pub dimension: usize,
    pub grid_size: u64,
    pub probes: u64,
    /// Whether the whole grid fit under the probe cap.
    pub exhaustive: bool,
    /// Set when some diagonal Gram entry vanishes on the whole space, so no
    /// element can be positive and the grid is skipped.
    pub infeasible: bool,
    pub certificate: Option<MetricCandidate>,
}

/// Rational basis of a real-linear space of `(2,0)`-forms.
#[derive(Clone, Debug)]
pub struct SearchSpace {
    pub basis: Vec<Vec<GR>>,
}

/// `{Ω : ∂Ω = 0, J̄Ω = Ω}`.
pub fn hkt_search_space(s: &Session) -> Result<SearchSpace> {
    Ok(SearchSpace { basis: real_solution_space(s, &s.del[2].matrix)? })
}

/// `{Ω : ∂Ω^{n−1} ∈ Im ∂_J, J̄Ω = Ω}`, linear only for `n = 2`.
pub fn sg_search_space(s: &Session) -> Result<SearchSpace> {
    if s.n() != 2 {
        return Err(Error::NotSL2(s.n()));
    }
    // ∂Ω lies in Im ∂_J iff every functional vanishing on Im ∂_J kills it
    let dj = &s.del_j[2].matrix;
    let annihilator = Subspace::kernel(&dj.transpose());
    let w = Matrix::from_rows(dj.rows(), annihilator.basis().to_vec());
    let constraint = &w * &s.del[2].matrix;
    Ok(SearchSpace { basis: real_solution_space(s, &constraint)? })
}

/// Grid offsets `p/q` with `q ≤ denominator`, `|p/q| ≤ coefficient`, ordered
/// by denominator, then size, positive first; zero leads.
fn grid_values(bounds: &SearchBounds) -> Vec<Rational> {
    let mut values = vec![Rational::zero()];
    for q in 1..=bounds.denominator as i64 {
        for p in 1..=(bounds.coefficient as i64 * q) {
            if p.gcd(&q) == 1 {
                values.push(rational(p, q));
                values.push(rational(-p, q));
            }
        }
    }
    values
}

/// Least-squares coordinates of `target` on `basis` over the real structure
/// `v ↦ (Re v, Im v)`.
fn project(basis: &[Vec<GR>], target: &[GR]) -> Result<Vec<Rational>> {
    let real = |v: &[GR]| -> Vec<Rational> { v.iter().map(|x| x.re().clone()).chain(v.iter().map(|x| x.im().clone())).collect() };
    let dot = |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let k: Vec<Vec<Rational>> = basis.iter().map(|v| real(v)).collect();
    let t = real(target);
    let r = k.len();
    let normal = Matrix::from_fn(r, r, |i, j| GR::from_real(dot(&k[i], &k[j])));
    let rhs: Vec<GR> = k.iter().map(|ki| GR::from_real(dot(ki, &t))).collect();
    let coords = normal.inverse()?.apply(&rhs);
    Ok(coords.into_iter().map(|c| c.re().clone()).collect())
}

/// Bounded grid search for a positive Gram matrix in `space`, starting at the
/// projection of `Ω_std`; the lexicographically first success is returned.
pub fn positive_search(s: &Session, space: &SearchSpace, bounds: &SearchBounds) -> Result<SearchOutcome> {
    let r = space.basis.len();
    let values = grid_values(bounds);
    let grid_size = (values.len() as u64).checked_pow(r as u32).unwrap_or(u64::MAX);
    let limit = grid_size.min(bounds.max_probes);
    if r == 0 {
        return Ok(SearchOutcome {
            dimension: 0,
            grid_size: 1,
            probes: 0,
            exhaustive: true,
            infeasible: true,
            certificate: None,
        });
    }
    let omega_std = s.engine.vector(&standard_omega(s), 2)?;
    let start = project(&space.basis, &omega_std)?;
    // the Gram matrix is linear in the coordinates
    let grams: Vec<Matrix> = space.basis.iter().map(|b| gram_matrix(s, b)).collect();
    let holo = grams[0].rows();
    if (0..holo).any(|a| grams.iter().all(|g| g[(a, a)].is_zero())) {
        return Ok(SearchOutcome { dimension: r, grid_size, probes: 0, exhaustive: true, infeasible: true, certificate: None });
    }
    let base = grams.iter().zip(&start).fold(Matrix::zeros(grams[0].rows(), grams[0].cols()), |acc, (g, c)| {
        &acc + &g.scale(&GR::from_real(c.clone()))
    });
    let coords = |index: u64| -> Vec<Rational> {
        let mut rest = index;
        let mut out = vec![Rational::zero(); r];
        // last coordinate varies fastest
        for j in (0..r).rev() {
            let v = values.len() as u64;
            out[j] = values[(rest % v) as usize].clone();
            rest /= v;
        }
        out
    };
    // floating-point Cholesky only prunes; acceptance is Sylvester on exact minors
    let grams_f: Vec<Vec<f64>> = grams.iter().map(real_form).collect();
    let base_f = real_form(&base);
    let values_f: Vec<f64> = values.iter().map(to_f64).collect();
    let found = (0..limit).into_par_iter().find_first(|&index| {
        let mut g = base_f.clone();
        let mut rest = index;
        for j in (0..r).rev() {
            let c = values_f[(rest % values.len() as u64) as usize];
            rest /= values.len() as u64;
            if c != 0.0 {
                for (x, y) in g.iter_mut().zip(&grams_f[j]) {
                    *x += c * y;
                }
            }
        }
        if !maybe_positive(&g, 2 * holo) {
            return false;
        }
        let offset = coords(index);
        let exact = grams.iter().zip(&offset).filter(|(_, c)| !c.is_zero()).fold(base.clone(), |acc, (g, c)| {
            &acc + &g.scale(&GR::from_real(c.clone()))
        });
        positive_definite(&exact)
    });
    let certificate = match found {
        Some(index) => {
            let offset = coords(index);
            let mut v = vec![GR::zero(); omega_std.len()];
            for ((b, c0), c) in space.basis.iter().zip(&start).zip(&offset) {
                let w = GR::from_real(c0 + c);
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &(y * &w);
                }
            }
            let candidate = classify_metric(s, &s.engine.form(&v, 2))?;
            if !candidate.hermitian {
                return Err(Error::InternalInconsistency(format!("search accepted non-Hermitian {}", candidate.omega)));
            }
            Some(candidate)
        }
        None => None,
    };
    let probes = found.map_or(limit, |i| i + 1);
    Ok(SearchOutcome { dimension: r, grid_size, probes, exhaustive: grid_size <= bounds.max_probes, infeasible: false, certificate })
}

fn to_f64(x: &Rational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// The real symmetric `2n × 2n` form `[[Re, −Im], [Im, Re]]` of a Hermitian
/// matrix, row-major; positive definite exactly when the matrix is.
fn real_form(g: &Matrix) -> Vec<f64> {
    let n = g.rows();
    let mut out = vec![0.0; 4 * n * n];
    for r in 0..n {
        for c in 0..n {
            let (re, im) = (to_f64(g[(r, c)].re()), to_f64(g[(r, c)].im()));
            out[r * 2 * n + c] = re;
            out[(r + n) * 2 * n + c + n] = re;
            out[r * 2 * n + c + n] = -im;
            out[(r + n) * 2 * n + c] = im;
        }
    }
    out
}

/// Cholesky with a tolerance: `false` only when a pivot is clearly negative.
fn maybe_positive(m: &[f64], n: usize) -> bool {
    const TOL: f64 = 1e-9;
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = m[j * n + j];
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if d < -TOL || d.is_nan() {
            return false;
        }
        let root = d.max(TOL).sqrt();
        l[j * n + j] = root;
        for i in j + 1..n {
            let mut v = m[i * n + j];
            for k in 0..j {
                v -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = v / root;
        }
    }
    true
}
