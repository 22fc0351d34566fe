//! Pi-points, support clouds, Carlson modules, truncated Ext-ring support,
//! and the reconstruction of global support from the local subalgebra
//! family.

mod carlson;
mod cloud;
mod error;
mod ext;
mod pi_point;
mod session;

pub use carlson::{carlson_module, realize_closed_set};
pub use cloud::{
    pack_fingerprint, pi_support, pi_support_local, support_reconstruct, CloudLabel, SupportCloud,
};
pub use error::SupportError;
pub use ext::{coh_support_points, ext_truncation, CohPoint, ExtModuleTable, ExtTruncation};
pub use pi_point::{
    alpha_element, alpha_nonprojective, is_operator_free, make_pi_point, restrict_jordan, PiPoint,
};
pub use session::{projective_coeffs, SupportSession, SweepClass, SweepPoint, Witness};
