#![doc = include_str!("../../../book/src/intro.md")]

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/modal.md")]
pub mod modal_pairs {}

#[doc = include_str!("../../../book/src/twist.md")]
pub mod twist_construction {}

#[doc = include_str!("../../../book/src/skeleton.md")]
pub mod skeletons {}

#[doc = include_str!("../../../book/src/subvarieties.md")]
pub mod subvarieties {}

#[doc = include_str!("../../../book/src/duality.md")]
pub mod spectra {}

#[doc = include_str!("../../../book/src/documents.md")]
pub mod documents {}

#[doc = include_str!("../../../book/src/workbench.md")]
pub mod workbench_cli {}
