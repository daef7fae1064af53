use num_traits::Zero;

use crate::arith::{Bindings, GaussianRational, ParamExpr};
use crate::error::{Error, Result};
use crate::exterior::{Derivation, Form};
use crate::linalg::Matrix;

type GR = GaussianRational;

/// One term `coeff · e^i ∧ e^j` of a structure equation, 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTerm {
    pub i: usize,
    pub j: usize,
    pub coeff: ParamExpr,
}

/// `de^k = Σ terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureEquation {
    pub k: usize,
    pub terms: Vec<StructureTerm>,
}

/// A Lie algebra with a hypercomplex structure, possibly depending on
/// formal parameters.
///
/// Matrices follow the file layout: row `a` lists the coordinates of the
/// image of `e^{a+1}`, so `I[0] = [0, 1, 0, …]` encodes `I e^1 = e^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub dimension: usize,
    pub parameters: Vec<String>,
    pub structure: Vec<StructureEquation>,
    pub i_matrix: Vec<Vec<ParamExpr>>,
    pub j_matrix: Vec<Vec<ParamExpr>>,
    pub k_matrix: Option<Vec<Vec<ParamExpr>>>,
    pub metadata: Option<serde_json::Value>,
}

/// An [`AlgebraSpec`] evaluated at concrete parameter values.
///
/// Matrices here act on coefficient columns: entry `(a, b)` is the
/// coefficient of `e^{a+1}` in the image of `e^{b+1}`.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub name: String,
    pub dim: usize,
    pub bindings: Bindings,
    /// `de^k` as a real 2-form on the coframe, index `k` 0-based.
    pub d: Vec<Form>,
    pub i: Matrix,
    pub j: Matrix,
    pub k: Matrix,
    /// The optional `K` supplied by the input, for validation against `I∘J`.
    pub k_input: Option<Matrix>,
}

impl AlgebraSpec {
    pub fn instantiate(&self, bindings: &Bindings) -> Result<Algebra> {
        for p in &self.parameters {
            if !bindings.contains_key(p) {
                return Err(Error::UnboundParameter(p.clone()));
            }
        }
        if let Some(extra) = bindings.keys().find(|b| !self.parameters.contains(b)) {
            return Err(Error::Schema { path: "--param".into(), message: format!("undeclared parameter `{extra}`") });
        }
        let n = self.dimension;
        if n == 0 || n % 4 != 0 {
            return Err(Error::DimensionMismatch(format!("dimension {n} is not a positive multiple of 4")));
        }
        let mut d = vec![Form::zero(n); n];
        for eq in &self.structure {
            if eq.k == 0 || eq.k > n {
                return Err(Error::Index(format!("structure equation for e^{} outside 1..={n}", eq.k)));
            }
            for t in &eq.terms {
                if t.i == 0 || t.i > n || t.j == 0 || t.j > n {
                    return Err(Error::Index(format!("term e^{}∧e^{} in de^{} outside 1..={n}", t.i, t.j, eq.k)));
                }
                if t.i == t.j {
                    return Err(Error::Index(format!("term e^{}∧e^{} in de^{} repeats an index", t.i, t.j, eq.k)));
                }
                let c = real_value(&t.coeff, bindings, &format!("de^{}", eq.k))?;
                let term = Form::generator(n, t.i - 1).wedge(&Form::generator(n, t.j - 1)).scale(&c);
                d[eq.k - 1] = &d[eq.k - 1] + &term;
            }
        }
        let i = file_matrix(&self.i_matrix, n, bindings, "I")?;
        let j = file_matrix(&self.j_matrix, n, bindings, "J")?;
        let k_input = self.k_matrix.as_ref().map(|k| file_matrix(k, n, bindings, "K")).transpose()?;
        let k = &i * &j;
        Ok(Algebra { name: self.name.clone(), dim: n, bindings: bindings.clone(), d, i, j, k, k_input })
    }
}

fn real_value(expr: &ParamExpr, bindings: &Bindings, what: &str) -> Result<GR> {
    let v = expr.eval(bindings)?;
    if !v.is_real() {
        return Err(Error::Schema { path: what.to_string(), message: format!("coefficient `{expr}` is not real") });
    }
    Ok(v)
}

fn file_matrix(rows: &[Vec<ParamExpr>], n: usize, bindings: &Bindings, name: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Schema { path: name.to_string(), message: format!("expected a {n}x{n} matrix") });
    }
    let mut m = Matrix::zeros(n, n);
    for (a, row) in rows.iter().enumerate() {
        for (b, x) in row.iter().enumerate() {
            // row a is the image of e^{a+1}: column a of the action matrix
            m[(b, a)] = real_value(x, bindings, &format!("{name}[{a}][{b}]"))?;
        }
    }
    Ok(m)
}

impl Algebra {
    /// `n` in real dimension `4n`.
    pub fn quaternionic_dim(&self) -> usize {
        self.dim / 4
    }

    /// The Chevalley–Eilenberg differential on the real coframe.
    pub fn differential(&self) -> Derivation {
        Derivation::new(self.d.clone())
    }

    /// Whether every structure constant vanishes.
    pub fn is_abelian(&self) -> bool {
        self.d.iter().all(Form::is_zero)
    }

    /// Coordinates of `d(Σ v_k e^k)` as a 2-form.
    pub fn d_of_one_form(&self, v: &[GR]) -> Form {
        let mut out = Form::zero(self.dim);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.add_assign_scaled(&self.d[k], c);
            }
        }
        out
    }
}
