use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::GaussianRational;
use crate::error::{Error, Result};

type GR = GaussianRational;

/// Set of generator indices of a wedge monomial, bit `k` for generator `k`.
pub type Mask = u64;

/// Sign of `m_a ∧ m_b` relative to the sorted monomial `m_a | m_b`, or
/// `None` when the monomials share a generator.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> j).count_ones();
        rest &= rest - 1;
    }
    Some(inversions % 2 == 1)
}

/// Generator indices of a monomial in increasing order.
pub fn mask_indices(mask: Mask) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

pub fn mask_of(indices: &[usize]) -> Mask {
    indices.iter().fold(0, |m, &k| m | (1 << k))
}

/// An element of the exterior algebra on `gens` generators over ℚ(i).
///
/// Stored sparsely: monomial mask to nonzero coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    gens: usize,
    terms: BTreeMap<Mask, GR>,
}

impl Form {
    pub fn zero(gens: usize) -> Form {
        assert!(gens <= 64, "at most 64 generators");
        Form { gens, terms: BTreeMap::new() }
    }

    pub fn scalar(gens: usize, c: GR) -> Form {
        Form::monomial(gens, 0, c)
    }

    pub fn one(gens: usize) -> Form {
        Form::scalar(gens, GR::one())
    }

    pub fn monomial(gens: usize, mask: Mask, c: GR) -> Form {
        let mut f = Form::zero(gens);
        f.add_term(mask, c);
        f
    }

    pub fn generator(gens: usize, k: usize) -> Form {
        assert!(k < gens, "generator index out of range");
        Form::monomial(gens, 1 << k, GR::one())
    }

    /// The 1-form `Σ_k coeffs[k]·gen_k`.
    pub fn linear(coeffs: &[GR]) -> Form {
        let mut f = Form::zero(coeffs.len());
        for (k, c) in coeffs.iter().enumerate() {
            f.add_term(1 << k, c.clone());
        }
        f
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &GR)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: Mask) -> GR {
        self.terms.get(&mask).cloned().unwrap_or_else(GR::zero)
    }

    /// Degree of a homogeneous form; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, mask: Mask, c: GR) {
        debug_assert!(self.gens == 64 || mask >> self.gens == 0);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Form, s: &GR) {
        assert_eq!(self.gens, other.gens, "forms over different generator sets");
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(*m, c * s);
        }
    }

    pub fn scale(&self, s: &GR) -> Form {
        let mut out = Form::zero(self.gens);
        out.add_assign_scaled(self, s);
        out
    }

    /// Coefficients conjugated, monomials unchanged.
    pub fn conj_coeffs(&self) -> Form {
        Form { gens: self.gens, terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect() }
    }

    /// Keeps the monomials accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(Mask) -> bool) -> Form {
        Form { gens: self.gens, terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    pub fn checked_wedge(&self, other: &Form) -> Result<Form> {
        if self.gens != other.gens {
            return Err(Error::DimensionMismatch(format!(
                "wedge of forms on {} and {} generators",
                self.gens, other.gens
            )));
        }
        let mut out = Form::zero(self.gens);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(neg) = wedge_sign(*ma, *mb) {
                    let c = ca * cb;
                    out.add_term(ma | mb, if neg { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Form) -> Form {
        self.checked_wedge(other).expect("forms over the same generators")
    }

    /// `self^k` under the wedge product.
    pub fn wedge_power(&self, k: usize) -> Form {
        (0..k).fold(Form::one(self.gens), |acc, _| acc.wedge(self))
    }

    /// Coefficient vector on an ordered list of monomials. Fails if the form
    /// has a term outside the list.
    pub fn to_vector(&self, basis: &[Mask]) -> Option<Vec<GR>> {
        let mut seen = 0;
        let v: Vec<GR> = basis
            .iter()
            .map(|m| {
                let c = self.coeff(*m);
                if !c.is_zero() {
                    seen += 1;
                }
                c
            })
            .collect();
        (seen == self.terms.len()).then_some(v)
    }

    pub fn from_vector(gens: usize, basis: &[Mask], v: &[GR]) -> Form {
        let mut f = Form::zero(gens);
        for (m, c) in basis.iter().zip(v) {
            f.add_term(*m, c.clone());
        }
        f
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &GR::one());
        out
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, &GR::from_int(-1));
        out
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        self.scale(&GR::from_int(-1))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let idx: Vec<String> = mask_indices(*m).iter().map(|k| (k + 1).to_string()).collect();
                format!("({c})g[{}]", idx.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An anti-derivation of degree +1 given by its values on generators.
#[derive(Clone, Debug)]
pub struct Derivation {
    images: Vec<Form>,
}

impl Derivation {
    pub fn new(images: Vec<Form>) -> Derivation {
        let gens = images.len();
        assert!(images.iter().all(|f| f.gens() == gens));
        Derivation { images }
    }

    pub fn gens(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, k: usize) -> &Form {
        &self.images[k]
    }

    /// Extends by `d(a∧b) = da∧b + (−1)^{|a|} a∧db`.
    pub fn apply(&self, f: &Form) -> Form {
        let gens = self.gens();
        let mut out = Form::zero(gens);
        for (mask, c) in f.terms() {
            for (r, k) in mask_indices(mask).into_iter().enumerate() {
                let dk = &self.images[k];
                if dk.is_zero() {
                    continue;
                }
                let below = mask & ((1u64 << k) - 1);
                let above = mask & !((1u64 << (k + 1)) - 1);
                let term = Form::monomial(gens, below, GR::one()).wedge(dk).wedge(&Form::monomial(gens, above, GR::one()));
                let s = if r % 2 == 1 { -c } else { c.clone() };
                out.add_assign_scaled(&term, &s);
            }
        }
        out
    }
}

/// An algebra homomorphism determined by images of generators, possibly
/// into an exterior algebra on a different generator set.
#[derive(Clone, Debug)]
pub struct Substitution {
    target_gens: usize,
    images: Vec<Form>,
}

impl Substitution {
    pub fn new(target_gens: usize, images: Vec<Form>) -> Substitution {
        assert!(images.iter().all(|f| f.gens() == target_gens));
        Substitution { target_gens, images }
    }

    pub fn image(&self, k: usize) -> &Form {
        &self.images[k]
    }

    pub fn apply(&self, f: &Form) -> Form {
        assert_eq!(f.gens(), self.images.len(), "substitution source mismatch");
        let mut out = Form::zero(self.target_gens);
        for (mask, c) in f.terms() {
            let mut prod = Form::one(self.target_gens);
            for k in mask_indices(mask) {
                prod = prod.wedge(&self.images[k]);
                if prod.is_zero() {
                    break;
                }
            }
            out.add_assign_scaled(&prod, c);
        }
        out
    }
}
