//! Exact invariants of finite morphisms of non-archimedean curves.
//!
//! Radii `r` in `[0, 1]` are stored as valuations `v = -log_q r` for a fixed
//! formal base `q`, so that monomials `c * t^n` become affine maps
//! `v -> n * v + v(c)` and every computation is exact rational arithmetic.
//!
//! - [`pmfun`]: piecewise-affine increasing functions in valuation coordinates
//!   (profiles, Herbrand functions).
//! - [`hahn`]: finite Hahn sums over `F_p`, a computable model of the ground field.
//! - [`newton`]: disc morphisms given by sparse series, their Newton profiles
//!   and radiality probes.
//! - [`ramify`]: ramification filtrations, Herbrand functions, the different
//!   and tower calculus from inertia data.
//! - [`skeleta`]: metric-graph skeleton models, radial sets and multiplicity loci.
//!
//! ```
//! use ramcalc_core::{Coeff, DiscSeries, FiniteGroup, InertiaDatum, PrimeContext};
//! use ramcalc_core::ramify::herbrand_slopes;
//! use ramcalc_core::rational::int;
//!
//! let ctx = PrimeContext::new(3)?;
//! // t^3 + eps^2 t
//! let s = DiscSeries::new(ctx, [(3, Coeff::one(ctx)), (1, Coeff::monomial(ctx, 1, int(2)))])?;
//! let newton = s.newton_profile().profile;
//! assert_eq!(newton.to_string(), "slope 3/1 on [0/1, 1/1], slope 1/1 after");
//!
//! let d = InertiaDatum::constant(FiniteGroup::cyclic(3), int(1))?;
//! assert_eq!(herbrand_slopes(&d)?, newton);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod hahn;
pub mod newton;
pub mod pmfun;
pub mod ramify;
pub mod rational;
pub mod skeleta;

pub use hahn::{binom_mod_p, Coeff, HahnError, PrimeContext};
pub use newton::{DiscSeries, EnvelopeReport, NewtonError, RadialityVerdict};
pub use pmfun::{PmError, PmFunction, Profile, Side, Val};
pub use ramify::{Filtration, FiniteGroup, InertiaDatum, RamifyError, TowerStep};
pub use rational::Rational;
pub use skeleta::{MetricGraph, RadialMorphismModel, RadialSet, SkeletonError, TailPoint};
