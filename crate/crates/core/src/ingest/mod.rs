//! Reading association data and writing plots.
//!
//! Two input formats are accepted, both UTF-8 TSV with `#` comment lines:
//! stimulus-count rows (`stimulus, response, count, total`) and
//! pre-aggregated edge lists (`word1, word2, strength`). Words are trimmed
//! and upper-cased.

mod corpus;
mod svg;

pub use corpus::{normalize_word, AssociationCorpus};
pub use svg::{render_barcode_svg, RenderOptions};
