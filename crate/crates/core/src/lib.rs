//! Exact matrix representations of cyclotomic fields and their subfields.
//!
//! The crate is organised bottom-up:
//!
//! - [`numtheory`]: factorization, Möbius, totient, primitive roots and
//!   Ramanujan sums.
//! - [`polyring`]: dense polynomials over `Z` and `Q`, cyclotomic polynomials,
//!   heights and the Newton–Girard recursion.
//! - [`matrixrep`]: circulant, companion and Cayley-digraph matrices with exact
//!   minimal polynomials, the Hoffman polynomial and subfield representations.
//! - [`ansearch`]: the smallest 0,1-companion matrices whose minimal
//!   polynomial is divisible by `Phi_n`, with every known construction and an
//!   exact search.
//! - [`verify`]: replayable check suites used by the `cyclo verify` command.
//!
//! ```
//! use cyclorep::polyring::{cyclotomic, profile};
//!
//! assert_eq!(cyclotomic(6).to_string(), "x^2 - x + 1");
//! let p = profile(105);
//! assert!(!p.flat);
//! assert_eq!(p.height, 2.into());
//! ```
//!
//! Everything is exact: integers are arbitrary precision and no floating point
//! is used anywhere.

pub mod ansearch;
pub mod matrixrep;
pub mod numtheory;
pub mod polyring;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cyclotomic.md")]
    mod cyclotomic {}
    #[doc = include_str!("../../../book/src/circulants.md")]
    mod circulants {}
    #[doc = include_str!("../../../book/src/cayley.md")]
    mod cayley {}
    #[doc = include_str!("../../../book/src/companion-search.md")]
    mod companion_search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
