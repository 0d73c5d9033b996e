//! Finite groups: multiplication tables, matrix groups, the catalog of
//! named families and isomorphism testing.

pub mod catalog;
pub mod descriptor;
pub mod gnpr;
pub mod iso;
pub mod matrix;
pub mod table;

pub use catalog::make_abstract;
pub use descriptor::{gnpr_degree_s, GroupDescriptor};
pub use gnpr::{
    check_gnpr_presentation, fp_minpoly, gnpr_generators, make_gnpr_abstract,
    make_gnpr_abstract_labeled, make_gnpr_matrix, make_gnpr_matrix_labeled, recognize_gnpr,
    GnprLabels,
};
pub use iso::{are_isomorphic, find_isomorphism, DEFAULT_ISO_CAP};
pub use matrix::{
    action_is_faithful, close_generated, find_unipotent_elem_abelian, make_binary_dihedral,
    make_sl2, MatrixGroup,
};
pub use table::{close, Bits, Closure, FiniteGroup};
