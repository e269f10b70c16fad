//! Exact-arithmetic toolkit for the gamma expansions of matroid Chow
//! rings.
//!
//! The crate computes Hilbert series and equivariant Hilbert series of
//! the Chow ring and augmented Chow ring of a loopless matroid through
//! their chain-of-flats monomial bases, extracts gamma expansions, and
//! verifies the expansion coefficients against independently computed
//! homology characters of rank-selected subposets of the lattice of
//! flats. On top of the matroid machinery it carries the symmetric
//! function and permutation-statistic corollaries for uniform matroids:
//! q-Eulerian, q-derangement, and q-binomial-Eulerian polynomials,
//! Eulerian quasisymmetric functions, ribbon Schur expansions, and the
//! (p,q)-specialization identities.
//!
//! All arithmetic is exact: big integers, big rationals, and sparse
//! integer polynomials; no floating point anywhere.

pub mod chow;
pub mod equivariant;
pub mod eulerian;
pub mod linalg;
pub mod matroid;
pub mod perm;
pub mod poly;
pub mod report;
pub mod symfunc;
pub mod topology;

pub use chow::{fy_basis, hilbert_series, FYBasis, FYMonomial, RingKind};
pub use equivariant::{
    alpha_character, beta_character, equivariant_gamma, equivariant_hilbert,
    verify_main_theorems, ClassFunction, EqSeries, PermGroup,
};
pub use matroid::{FlatLattice, Matroid, MatroidSpec};
pub use perm::Perm;
pub use poly::{gamma_expand, GammaVector, MVPoly, Var};
pub use report::VerificationReport;
