//! Subspace arithmetic on the single complex `(Λ^{•,0}, ∂, ∂_J)` and the
//! dimensions built from it.

mod complex;
pub mod random;
mod table;

pub use complex::DoubleComplex;
pub use table::{
    bc_ae_dims, compute_table, ddj_lemma_holds, dolbeault_dims, e2_page_iteration, e2_quotient, non_hkt_degrees,
    varouchas_dims, CohomologyRow, CohomologyTable,
};
