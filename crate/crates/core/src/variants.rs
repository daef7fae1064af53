//! Randomized variants of an algebra that must keep every invariant or
//! at least still validate.

use num_traits::{One, Zero};
use rand::Rng;

use crate::algebra::{Algebra, AlgebraSpec};
use crate::arith::{rational, Bindings, GaussianRational};
use crate::error::{Error, Result};
use crate::exterior::{Form, Substitution};
use crate::linalg::{Matrix, Subspace};

type GR = GaussianRational;

/// Real matrices commuting with both `I` and `J`, i.e. `GL(n,ℍ)` directions.
fn quaternionic_commutant(alg: &Algebra) -> Vec<Matrix> {
    let n = alg.dim;
    // unknown X flattened row-major; rows of XA − AX for A ∈ {I, J}
    let mut rows = Vec::new();
    for a in [&alg.i, &alg.j] {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![GR::zero(); n * n];
                for k in 0..n {
                    row[r * n + k] += &a[(k, c)];
                    row[k * n + c] -= &a[(r, k)];
                }
                rows.push(row);
            }
        }
    }
    Subspace::kernel(&Matrix::from_rows(n * n, rows))
        .basis()
        .iter()
        .map(|v| Matrix::from_fn(n, n, |r, c| v[r * n + c].clone()))
        .collect()
}

/// Rewrites the structure equations in the coframe whose old coordinates are
/// the columns of `b`. Since `b` commutes with `I` and `J`, their matrices
/// are unchanged.
pub fn change_basis(alg: &Algebra, b: &Matrix) -> Result<Algebra> {
    let inv = b.inverse()?;
    let n = alg.dim;
    let back = Substitution::new(n, (0..n).map(|l| Form::linear(&inv.column(l))).collect());
    let d = (0..n).map(|k| back.apply(&alg.d_of_one_form(&b.column(k)))).collect();
    Ok(Algebra { d, k_input: None, ..alg.clone() })
}

/// Identity plus one or two small multiples of commutant basis elements,
/// applied as a change of coframe. Sparse changes keep the coefficients
/// small enough for exact arithmetic to stay fast.
pub fn random_quaternionic_change(alg: &Algebra, rng: &mut impl Rng) -> Result<Algebra> {
    let basis = quaternionic_commutant(alg);
    if basis.is_empty() {
        return Err(Error::InternalInconsistency("I and J have a trivial commutant".into()));
    }
    for _ in 0..100 {
        let mut b = Matrix::identity(alg.dim);
        for _ in 0..rng.gen_range(1..=2) {
            let m = &basis[rng.gen_range(0..basis.len())];
            let c = [-2, -1, 1, 2][rng.gen_range(0..4)];
            b = &b + &m.scale(&GR::from_int(c));
        }
        if !b.det().is_zero() && b != Matrix::identity(alg.dim) {
            let mut out = change_basis(alg, &b)?;
            out.name = format!("{} (random GL(n,H) change)", alg.name);
            return Ok(out);
        }
    }
    Err(Error::InternalInconsistency("no invertible quaternionic change found".into()))
}

/// A random rational parameter value `p/q` with `q ≤ 9`, skipping `excluded`.
pub fn random_parameter(rng: &mut impl Rng, excluded: &[GR]) -> crate::arith::Rational {
    loop {
        let q = rng.gen_range(2i64..=9);
        let p = rng.gen_range(-2 * q..=2 * q);
        let t = rational(p, q);
        if !excluded.contains(&GR::from_real(t.clone())) {
            return t;
        }
    }
}

/// Random bindings of every parameter of `spec` at which it instantiates.
pub fn random_bindings(spec: &AlgebraSpec, rng: &mut impl Rng) -> Result<(Bindings, Algebra)> {
    for _ in 0..100 {
        let bindings: Bindings = spec
            .parameters
            .iter()
            .map(|p| (p.clone(), random_parameter(rng, &[GR::zero(), GR::one()])))
            .collect();
        match spec.instantiate(&bindings) {
            Ok(alg) => return Ok((bindings, alg)),
            Err(Error::PoleAtBinding { .. }) | Err(Error::DivisionByZero) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InternalInconsistency("no admissible random bindings".into()))
}
