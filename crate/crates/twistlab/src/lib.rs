//! Finite-model workbench for twist constructions over modal Heyting
//! algebras.
//!
//! The crate builds and checks finite algebras at desk scale (carriers up to
//! 64 elements): Heyting algebras with modal operator pairs, residuated
//! lattices with an involutive negation and a 3-potent monoid, twist
//! constructions that assemble the latter from the former, and a finite
//! neighbourhood duality for the modal algebras. Laws are checked
//! exhaustively and report named witnesses; constructions whose soundness is
//! a theorem re-verify their output and treat a violation as an internal
//! error.
//!
//! A guided tour lives under [`guide`], mirrored from the `book/` directory;
//! the `twistlab` binary in the companion CLI crate exposes the same
//! operations over a line-oriented JSON document format ([`doc`]).

pub mod catalog;
pub mod doc;
pub mod duality;
pub mod error;
pub mod guide;
pub mod heyting;
pub mod iso;
pub mod lattice;
pub mod modal;
pub mod nelson;
pub mod poset;
pub mod report;
pub mod set;
pub mod twist;
pub mod workbench;

pub use error::Error;
pub use heyting::HeytingAlgebra;
pub use lattice::FiniteLattice;
pub use modal::ModalHeytingAlgebra;
pub use nelson::ModalNelsonLattice;
pub use poset::FinitePoset;
pub use report::LawReport;
pub use set::ElemSet;

#[cfg(test)]
pub(crate) mod test_support {
    //! Shared constructors for unit tests.
    pub use crate::catalog::{
        chain_heyting as chain, heyting as heyting_from, kite_heyting, lattice,
        lukasiewicz_chain as lukasiewicz,
    };
    use crate::heyting::HeytingAlgebra;
    use crate::nelson::ModalNelsonLattice;

    pub fn boolean(atoms: usize) -> HeytingAlgebra {
        crate::catalog::boolean_heyting(atoms)
    }

    /// Boolean 2 as a Nelson lattice: fusion = ∧, residual = ⇀.
    pub fn b2_nelson() -> ModalNelsonLattice {
        crate::catalog::boolean_nelson(1)
    }
}
