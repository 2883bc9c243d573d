//! Exact slope calculus for convex tori in contact 3-manifolds.
//!
//! Everything here is integer arithmetic: slopes on the projective
//! rational line, Farey-tessellation adjacency and shortest paths,
//! rotation measures compared against pi by sign tests, relative Euler
//! classes of layered `T^2 x I` structures, tight-structure counts on
//! solid tori, splitting-slope enumeration for mixed tori, Legendrian
//! surgery meridian bookkeeping, and lattice feasibility checks for
//! Reeb-orbit buildings.
//!
//! The modules mirror that list:
//!
//! * [`slope`] — slopes, curve classes, and `GL(2, Z)` gluing maps;
//! * [`farey`] — tessellation adjacency and shortest paths;
//! * [`rotation`] — exact comparison of rotation arcs against pi;
//! * [`layers`] — basic slices, Euler classes, and solid-torus counts;
//! * [`splitting`] — tight/overtwisted verdicts for splitting slopes;
//! * [`surgery`] — stabilizations, surgery meridians, and the meridian
//!   classification table;
//! * [`orbits`] — orbit tables and holomorphic-building feasibility.

pub mod error;
pub mod farey;
pub mod layers;
pub mod orbits;
pub mod rotation;
pub mod slope;
pub mod splitting;
pub mod surgery;

pub use error::{Error, Result};
pub use farey::{farey_adjacent, farey_path, Direction, FareyPath};
pub use layers::{
    count_tight_solid_torus, is_mixed_torus, is_universally_tight, negative_continued_fraction,
    relative_euler_class, slice_euler_contribution, BasicSlice, EulerClass, Sign, SlicePath,
};
pub use orbits::{
    breaking_scan, chern_from_index, default_mixed_torus_table, feasible_buildings, Action,
    Building, OrbitDatum, OrbitTable,
};
pub use rotation::arc_measure_vs_pi;
pub use slope::{apply_gluing, normalize_slope, CurveClass, GluingMap, Slope, Vec2};
pub use splitting::{
    check_split_slope, splitting_slopes, ObstructionReason, SplitSpec, SplitStatus, SplitVerdict,
};
pub use surgery::{
    classify_meridian, contact_surgery_meridian, meridian_table, stabilize, surgery_gluing_map,
    surgery_slope_table, LegendrianModel, MeridianVerdict, SideStatus, SurgerySlopeTable,
};
