//! Modular and fusion data of SU(n) level-k WZW models, together with the
//! twisted sector of their charge-conjugation Z₂ orbifold.
//!
//! The crate is organised bottom-up:
//!
//! * [`weights`]: the level-k alphabet of integrable highest weights.
//! * [`modular`]: Kac–Peterson S, twists, T, quantum dimensions, Gauss sum,
//!   the Verlinde tensor and the modular relation checks.
//! * [`fusion`]: fusion products and matrices, the SU(2) closed form and
//!   ring-axiom checks.
//! * [`twisted`]: twisted-sector counting and the orbifold sector inventory.
//! * [`nimrep`]: the SU(3) twisted NIM-rep solver, Perron–Frobenius
//!   normalisation and soliton indices.

pub mod error;
pub mod fusion;
pub mod modular;
pub mod nimrep;
pub mod report;
pub mod twisted;
pub mod weights;

mod linalg;
mod par;

pub use error::{Error, Result};
pub use par::configure_threads;
pub use fusion::{FusionMatrix, Spin};
pub use modular::{FusionTensor, ModularData};
pub use report::{Check, Report};
pub use weights::{AlgebraParams, Partition, Weight};

/// Tolerance used when rounding floating-point values to integers.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Default tolerance for floating-point identities.
pub const DEFAULT_TOL: f64 = 1e-8;
