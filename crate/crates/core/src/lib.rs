pub mod combinatorics;
pub mod coordinates;
pub mod fixtures;
pub mod geometry;
pub mod ideals;
pub mod linalg;
pub mod polyring;
pub mod rational;
pub mod verify;
