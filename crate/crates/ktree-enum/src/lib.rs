//! Exact enumeration of unlabeled k-trees by hedron count.
//!
//! A k-tree is built from the complete graph K_k by repeatedly attaching a
//! new vertex to an existing k-clique; a *hedron* is a (k+1)-clique and a
//! *front* is a k-clique. This crate computes the number of isomorphism
//! classes of k-trees with n hedra, exactly, three independent ways:
//!
//! * [`gamma_gf`] — the production engine: a recursive system of
//!   partition-indexed ordinary generating functions combined by
//!   dissymmetry, memoized per conjugacy class. Handles k = 10, n = 30 in
//!   seconds.
//! * [`cycle_index`] — the same decomposition carried out on full two-sort
//!   cycle indices at small scale; specializing it must reproduce the
//!   generating-function engine, and it additionally yields labeled counts.
//! * [`oracle`] — a brute-force enumerator for tiny (k, n) that grows
//!   k-trees explicitly and deduplicates by canonical form, sharing no
//!   mathematics with the other two.
//!
//! [`table`] holds the CLI exchange type and the CSV/JSON/fixture formats.

pub mod cycle_index;
pub mod gamma_gf;
pub mod oracle;
pub mod partitions;
pub mod series;
pub mod table;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use cycle_index::{ktree_cycle_index, CiBounds, CycleIndex, GammaCiTable};
pub use gamma_gf::{unlabeled_ktree_series, GammaSeriesTable};
pub use oracle::{brute_count, grow_ktrees, CanonicalForm, SmallGraph};
pub use partitions::{partitions_of, Partition, Permutation};
pub use series::Series;
pub use table::{compute_table, verify_fixture, Engine, EnumerationTable};
