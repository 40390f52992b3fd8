//! Boundary detection for point clouds and meshfree PDE solvers on the
//! detected boundary.
//!
//! Given `n` sample points drawn from a density on an unknown bounded domain,
//! this crate estimates, for each point, an inward unit normal and a distance
//! to the domain boundary, and labels the points lying within a strip of
//! prescribed width of the boundary. The detected boundary then serves as the
//! Dirichlet/Robin boundary set for PDE solves posed directly on the point
//! cloud: graph eikonal (distance) equations, Poisson problems with Robin
//! conditions, principal Dirichlet eigenpairs, and a data-depth/median
//! pipeline built from either.
//!
//! Module map:
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`pointcloud`] | cloud container, CSV/binary IO, synthetic samplers, ground-truth oracles |
//! | [`spatial`] | exact fixed-radius range search and kNN queries |
//! | [`normals`] | first/second-order inward normal estimators, kernel density surrogate |
//! | [`boundary`] | distance estimators, boundary tests, theory constants, detection metrics |
//! | [`graphpde`] | graph construction, Laplacians, eikonal/Robin/eigen solvers, depth |
//! | [`experiments`] | convergence/error-rate harnesses, quadrature oracles, log-log fits |
//!
//! All estimators are pure functions of an immutable [`spatial::SpatialIndex`]
//! and parallelize over points with per-point deterministic accumulation, so
//! results are independent of thread count.

pub mod boundary;
pub mod experiments;
pub mod graphpde;
pub mod normals;
pub mod pointcloud;
pub mod spatial;

pub(crate) mod vecmath;
