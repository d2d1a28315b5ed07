//! Cyclic valley-hopping on permutations: statistics, the hopping action and
//! its orbits, exact class enumeration, and executable checks of the joint
//! (cval, exc) product formulas and their gamma-positivity consequences.

pub mod algebra;
pub mod enumerate;
pub mod exec;
pub mod formulas;
pub mod hopping;
pub mod perm;

pub use algebra::{GammaExpansion, MultiPoly, TruncSeries};
pub use enumerate::{ClassSpec, EnumError, Enumerator, JointTable};
pub use exec::Execution;
pub use formulas::{Claim, FormulaError, VerificationReport};
pub use hopping::{orbit, phi, psi, OrbitReport};
pub use perm::{CycleForm, CycleType, CyclicKind, PermError, Permutation, StatCounts};
