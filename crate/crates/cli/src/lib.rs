//! IO companion to `domino-core`. It holds the JSON documents and ASCII
//! rendering used by the `domino` binary, plus a threaded verification
//! harness.

pub mod doc;
pub mod parse;
pub mod render;
pub mod verify;

pub use doc::{PairDocument, PermutationDocument, TableauDocument};
pub use parse::parse_signed_permutation;
pub use render::{render_ascii, RenderedTableau};
