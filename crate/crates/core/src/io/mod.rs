//! JSON input documents and structured report output.

mod spec_doc;

pub use spec_doc::{parse_document, parse_spec, EquationDocument, Scalar, SpecDocument, TermDocument};
