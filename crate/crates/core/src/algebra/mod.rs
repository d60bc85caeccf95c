//! Words, polynomials and the basic operations of the word algebra
//! `A_z = Q<e0, e1, ez>`.

mod maps;
mod poly;
mod products;
mod subspace;
mod word;

pub use maps::{
    const_proj, derivation, derivation_chain, derivation_word, substitute, tau_infinity, tau_z,
    tau_z_word,
};
pub use poly::{rat, NCPoly, Rational};
pub use products::{shuffle, shuffle_words, stuffle, stuffle_words};
pub(crate) use subspace::require;
pub use subspace::{subspace_check, SubspaceTag};
pub use word::{Letter, Word, PACKED_CAPACITY};
