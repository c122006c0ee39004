pub mod check;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod qfun;
pub mod qhyper;
pub mod series;
pub mod weights;

pub use check::CheckOutcome;
pub use error::{Error, Result};
pub use identities::{CheckResult, IdentityDescriptor, Params, Profile, Side, SideValue, Status, Strategy};
pub use partitions::{Chain, Color, ColoredPartition, DistinctPartition, GollnitzStats};
pub use poly::{ExponentVector, LaurentPoly, VarId};
pub use series::QSeriesTrunc;
