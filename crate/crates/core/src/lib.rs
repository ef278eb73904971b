pub mod algebra;
pub mod arith;
pub mod repr;
pub mod verify;
