//! Maximum-diameter simplicial 2-complexes and Hamilton cycle square packings.
//!
//! A 2-complex here is a walk of triangles in which consecutive triangles
//! share an edge and no other pair does. Such a walk on `t + 1` triangles has
//! dual diameter `t`, so making the walk long is the same as covering as many
//! edges of `K_n` as possible. The crate builds walks that reach the upper
//! bound `⌊C(n,2)/2 − 3/2⌋` for every `n ≥ 3` (`n = 6` is one less), and
//! checks them independently.
//!
//! Modules:
//!
//! * [`complex`]: vertices, edges, triangle walks, the `(labels, layout)` codec and certificates.
//! * [`genseq`]: cyclic generating sequences over `Z/nZ` and their circular walks.
//! * [`assembly`]: rotations, zig-zags, attachment gadgets, the small-`n` table and [`assembly::construct_optimal`].
//! * [`hampack`]: partitions of `E(K_n)` into squares of Hamilton cycles.
//! * [`oracle`]: exhaustive search for tiny `n`.
//! * [`cli`]: the `diamforge` command line.

pub mod assembly;
pub mod cli;
pub mod complex;
mod error;
pub mod genseq;
pub mod hampack;
pub mod oracle;

pub use error::{Error, Result};
