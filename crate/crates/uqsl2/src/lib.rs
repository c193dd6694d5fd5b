//! Exact symbolic computation in the q-deformed enveloping algebra of sl(2,R):
//! PBW normal forms, the center, induced modules and their classification,
//! the specialization to q = 1, and finite-dimensional irreps.

pub mod harish;
pub mod indmodule;
pub mod limit;
pub mod par;
pub mod pbw;
pub mod scalars;
pub mod uqirrep;
