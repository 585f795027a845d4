//! Lifelong semantic voxel mapping at desk scale.
//!
//! A synthetic RGBD+semantic sensor streams posed observations into a trainable
//! multi-resolution voxel feature field. Scene changes are detected by comparing
//! encoder features of fresh observations against features rendered from the
//! field, localized as Z-aligned oriented boxes, and folded back into the map by
//! masking stale image regions. Embedding queries are answered by 3D argmax over
//! the field.

pub mod detect;
pub mod exec;
pub mod feat;
pub mod field;
pub mod geom;
pub mod harness;
pub mod io;
pub mod obs;
pub mod query;
pub mod scene;
pub mod transport;
pub mod update;
