//! Lyubeznik tables of cover ideals of graphs, Bass numbers of local
//! cohomology supported on them, and the algorithms that compute both:
//! minimal free resolutions of squarefree monomial ideals, a splitting
//! recursion over graph decompositions, and closed forms for forests and
//! cycles.

pub mod bass;
pub mod census;
pub mod error;
pub mod exactla;
pub mod field;
pub mod graphs;
pub mod ideals;
pub mod lytable;
pub mod resolution;
pub mod simplicial;
pub mod splitter;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp};
pub use graphs::{Graph, VertexMask};
pub use ideals::SqfreeIdeal;
pub use lytable::{LyubeznikTable, TablePattern};

/// The field with two elements.
pub type Gf2 = Fp<2>;
/// The default working field.
pub type Gf32003 = Fp<32003>;
