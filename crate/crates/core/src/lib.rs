//! Combinatorics of digitally convex binary words.
//!
//! Words over `{0,1}` are read as lattice paths (`0` east, `1` north). The
//! crate builds Christoffel words, decides balance and digital convexity
//! through the Lyndon factorization, enumerates minimal forbidden words,
//! counts convex words exactly, and walks the lattice of convex words of a
//! fixed Parikh vector through inflation and deflation moves.
//!
//! All values are immutable and every function is pure.

pub mod christoffel;
pub mod convexity;
pub mod counting;
pub mod error;
pub mod lattice;
pub mod lyndon;
pub mod word;

pub use christoffel::{
    central_decomposition, central_periods, central_word, christoffel_lower, christoffel_upper,
    classify_christoffel, factorizations, is_central, CentralDecomposition, ChristoffelClass,
    Factorizations,
};
pub use convexity::{
    is_balanced, is_convex, is_dc, is_digitally_convex, mfw_balanced, mfw_dc, mfw_of_word,
    ConvexityReport, Direction, MfwConstruction, Witness,
};
pub use counting::{
    count_balanced, count_dc, count_dc0, fibonacci_word, lyndon_fib, totient, totient_table,
    CountKind, CountTable,
};
pub use error::{Error, Result};
pub use lattice::{
    cover_relations, deflate, deflation_chain, deflation_sites, dominance_le, enumerate_dc,
    enumerate_dc_from_top, inflate, inflation_chain, inflation_sites, join, meet, CoverRelations,
    DominanceProfile, Site, SiteKind,
};
pub use lyndon::{is_lyndon, lyndon_factorization, standard_factorization, LyndonFactorization};
pub use word::{lex_compare, parse_word, LetterOrder, Parikh, Slope, Word};
