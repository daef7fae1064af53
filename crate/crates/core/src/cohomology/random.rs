//! Random double complexes with known relations, for cross-checking the
//! page computations.

use num_traits::{One, Zero};
use rand::Rng;

use super::DoubleComplex;
use crate::arith::GaussianRational;
use crate::linalg::Matrix;

type GR = GaussianRational;

/// A sparse piece placed in absolute degrees: dims per degree and the edges
/// `(degree, from, to, coefficient)` of `∂` and `∂_J`.
struct Piece {
    dims: Vec<usize>,
    del: Vec<(usize, usize, usize, GR)>,
    del_j: Vec<(usize, usize, usize, GR)>,
}

impl Piece {
    fn empty(top: usize) -> Piece {
        Piece { dims: vec![0; top + 1], del: Vec::new(), del_j: Vec::new() }
    }
}

fn small_nonzero(rng: &mut impl Rng) -> GR {
    loop {
        let re = rng.gen_range(-2i64..=2);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-1i64..=1) } else { 0 };
        let c = GR::complex(re, 1, im, 1);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Two-level zigzag: bottom vectors `a_i` in degree `p`, top vectors in
/// `p + 1`, with `∂ a_i = t_{i+s}` and `∂_J a_i = t_{i+s+1}` where defined.
fn zigzag(top: usize, rng: &mut impl Rng) -> Piece {
    let mut piece = Piece::empty(top);
    if top == 0 {
        piece.dims[0] = 1;
        return piece;
    }
    let p = rng.gen_range(0..top);
    let bottom = rng.gen_range(1..=3);
    let shift = rng.gen_range(0..=1usize);
    let tops = bottom + rng.gen_range(0..=1) + shift;
    piece.dims[p] = bottom;
    piece.dims[p + 1] = tops;
    for i in 0..bottom {
        if i + shift >= 1 && i + shift - 1 < tops {
            piece.del.push((p, i, i + shift - 1, small_nonzero(rng)));
        }
        if i + shift < tops {
            piece.del_j.push((p, i, i + shift, small_nonzero(rng)));
        }
    }
    piece
}

/// A short complex `C_0 → C_1 → … ` of random matrices with `d² = 0`,
/// realized as direct sum of identity blocks and zero parts.
fn small_complex(len: usize, rng: &mut impl Rng) -> (Vec<usize>, Vec<Vec<(usize, usize)>>) {
    // dims[k] = incoming rank + kernel extra + outgoing rank
    let mut dims = Vec::with_capacity(len);
    let mut maps = Vec::with_capacity(len);
    let mut incoming = 0;
    for k in 0..len {
        let harmonic = rng.gen_range(0..=1);
        let outgoing = if k + 1 < len { rng.gen_range(0..=1) } else { 0 };
        dims.push(incoming + harmonic + outgoing);
        // map sends the last `outgoing` basis vectors to the first ones of the next degree
        let start = incoming + harmonic;
        maps.push((0..outgoing).map(|r| (start + r, r)).collect());
        incoming = outgoing;
    }
    (dims, maps)
}

/// Tensor product `A ⊗ B` with `∂ = d_A ⊗ 1` and `∂_J = (−1)^{deg a} 1 ⊗ d_B`.
fn tensor_piece(top: usize, rng: &mut impl Rng) -> Piece {
    let la = rng.gen_range(1..=3.min(top + 1));
    let lb = rng.gen_range(1..=(top + 2 - la).min(3));
    let (da, ma) = small_complex(la, rng);
    let (db, mb) = small_complex(lb, rng);
    let offset = rng.gen_range(0..=(top + 2 - la - lb));
    let mut piece = Piece::empty(top);
    // index of (i, x) ⊗ (j, y) inside total degree i + j
    let mut index = std::collections::HashMap::new();
    for i in 0..la {
        for j in 0..lb {
            let deg = offset + i + j;
            for x in 0..da[i] {
                for y in 0..db[j] {
                    index.insert((i, x, j, y), piece.dims[deg]);
                    piece.dims[deg] += 1;
                }
            }
        }
    }
    let ca = small_nonzero(rng);
    let cb = small_nonzero(rng);
    for i in 0..la {
        for j in 0..lb {
            let deg = offset + i + j;
            for &(x, x2) in &ma[i] {
                for y in 0..db[j] {
                    piece.del.push((deg, index[&(i, x, j, y)], index[&(i + 1, x2, j, y)], ca.clone()));
                }
            }
            for x in 0..da[i] {
                for &(y, y2) in &mb[j] {
                    let c = if i % 2 == 1 { -&cb } else { cb.clone() };
                    piece.del_j.push((deg, index[&(i, x, j, y)], index[&(i, x, j + 1, y2)], c));
                }
            }
        }
    }
    piece
}

fn random_invertible(n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |r, c| {
            if r == c {
                GR::one()
            } else if rng.gen_bool(0.4) {
                GR::complex(rng.gen_range(-2..=2), 1, if rng.gen_bool(0.2) { 1 } else { 0 }, 1)
            } else {
                GR::zero()
            }
        });
        if !m.det().is_zero() {
            return m;
        }
    }
}

/// Direct sum of random zigzags and tensor products in degrees `0..=top`,
/// conjugated by random invertible matrices in each degree.
pub fn random_double_complex(top: usize, rng: &mut impl Rng) -> DoubleComplex {
    random_complex(top, false, rng)
}

/// Like [`random_double_complex`], but every piece comes with its mirror
/// (`∂` and `∂_J` swapped), the shape forced by `J̄` on actual forms.
pub fn random_symmetric_double_complex(top: usize, rng: &mut impl Rng) -> DoubleComplex {
    random_complex(top, true, rng)
}

fn random_complex(top: usize, mirrored: bool, rng: &mut impl Rng) -> DoubleComplex {
    let mut total = Piece::empty(top);
    let mut pieces = Vec::new();
    for _ in 0..rng.gen_range(1..=if mirrored { 2 } else { 4 }) {
        let piece = if rng.gen_bool(0.5) { zigzag(top, rng) } else { tensor_piece(top, rng) };
        if mirrored {
            let mirror =
                Piece { dims: piece.dims.clone(), del: piece.del_j.clone(), del_j: piece.del.clone() };
            pieces.push(mirror);
        }
        pieces.push(piece);
    }
    for piece in pieces {
        let base: Vec<usize> = total.dims.clone();
        for deg in 0..=top {
            total.dims[deg] += piece.dims[deg];
        }
        for (deg, from, to, c) in piece.del {
            total.del.push((deg, base[deg] + from, base[deg + 1] + to, c));
        }
        for (deg, from, to, c) in piece.del_j {
            total.del_j.push((deg, base[deg] + from, base[deg + 1] + to, c));
        }
    }
    let dims = total.dims.clone();
    let assemble = |edges: &[(usize, usize, usize, GR)]| -> Vec<Matrix> {
        let mut ms: Vec<Matrix> =
            (0..=top).map(|p| Matrix::zeros(if p < top { dims[p + 1] } else { 0 }, dims[p])).collect();
        for (deg, from, to, c) in edges {
            ms[*deg][(*to, *from)] = c.clone();
        }
        ms
    };
    let (del, del_j) = (assemble(&total.del), assemble(&total.del_j));
    let g: Vec<Matrix> = dims.iter().map(|&n| random_invertible(n, rng)).collect();
    let g_inv: Vec<Matrix> = g.iter().map(|m| m.inverse().expect("invertible")).collect();
    let conj = |ms: Vec<Matrix>| -> Vec<Matrix> {
        ms.into_iter()
            .enumerate()
            .map(|(p, m)| if p < top { &(&g[p + 1] * &m) * &g_inv[p] } else { m })
            .collect()
    };
    DoubleComplex::new(conj(del), conj(del_j)).expect("consistent shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_complexes_satisfy_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let top = rng.gen_range(1..=5);
            let cx = random_double_complex(top, &mut rng);
            cx.check_relations().unwrap();
        }
    }
}
