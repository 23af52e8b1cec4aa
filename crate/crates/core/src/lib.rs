//! Deterministic simulator of a neutron-interferometer spin-superposition
//! experiment.
//!
//! A monochromatic beam carries intrinsic plane-wave fields. On one path a
//! static magnetic field is ramped on while the beam crosses the magnet; the
//! modified fields set the interaction potential, the kinetic-potential shift
//! and the phase picked up relative to the undisturbed path. The two paths
//! are recombined into an interferogram.
//!
//! All quantities are pure numbers in a natural unit system (see [`units`]).
//!
//! ```
//! use spinterf_core::model::{phase_shift, ExternalField, NeutronBeam};
//!
//! let beam = NeutronBeam::new(1.0, 1.0, 1.0, 1.0).unwrap();
//! let ext = ExternalField::new(1.0, 0.0, 1.0, 1.0).unwrap();
//! let phase = phase_shift(&beam, &ext);
//! assert_eq!(phase.wrap_count, 1);
//! assert_eq!(phase.alpha, 0.0);
//! ```

pub mod error;
pub mod interferometer;
pub mod model;
pub mod residual;
pub mod sweep;
pub mod table;
pub mod units;

pub use error::{Error, Result};
