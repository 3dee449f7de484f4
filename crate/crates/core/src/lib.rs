//! Combinatorics of twisted Bruhat orders and exact type-A total positivity.

pub mod cartan;
pub mod error;
pub mod nodes;
pub mod orders;
pub mod rational;
pub mod slgroup;
pub mod topo;
pub mod tpcells;
pub mod weyl;

pub use cartan::{CartanData, Glued, NodeCopy, NodeTag, Validation};
pub use error::{Error, Result};
pub use nodes::NodeSet;
pub use weyl::{CosetDecomposition, WeylElement, WeylGroup};
pub use orders::{CellKind, CellPair, TwistedContext};
pub use topo::{GradedPoset, PosetElement};
pub use rational::RationalMatrix;
pub use slgroup::{LeviContext, SlModel};
