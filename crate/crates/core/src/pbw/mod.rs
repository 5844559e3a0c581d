//! U(gl_d): generator labels, words, PBW normal ordering and elements.

mod element;
pub(crate) mod normal;
mod text;
mod word;

pub(crate) use element::{check_dim, Accumulator};
pub use element::{normal_order, UeaElement};
pub use normal::clear_normal_order_cache;
pub use text::{parse_rational, parse_terms, ElementJson, ParsedTerm, TermJson};
pub(crate) use text::{terms_json, write_terms};
pub use word::{GenIndex, Word};
