//! Scrollar invariants of degree-d covers of the projective line over small
//! prime fields, together with the representation-theoretic predictions
//! they are compared against.

pub mod bhargava;
pub mod exactalg;
pub mod funfield;
pub mod predict;
pub mod resolvent;
pub mod symrep;
