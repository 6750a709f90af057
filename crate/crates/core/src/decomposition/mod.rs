//! Blocks, Tutte decompositions of blocks, tree-decomposition axioms and
//! the completion of adhesion sets.

mod blocks;
mod treedec;
mod tutte;

pub(crate) use blocks::biconnected_components;
pub use blocks::{
    block_decomposition, check_two_connected, is_three_connected, small_separator, Block, BlockDecomposition, BlockKind,
};
pub use treedec::{check_td_axioms, TreeDecomposition, Violation};
pub use tutte::{
    complete_adhesions, torso, tutte_decomposition, PartKind, Torso, TutteDecomposition, TutteNode, TutteTreeEdge,
};
