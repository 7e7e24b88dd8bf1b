//! Shared fixtures for the criterion benchmarks.

use wbrauer::rational::{rat, ratio, Rat};
use wbrauer::{DiagramAlgebra, TensorSpace};

pub fn generic_delta() -> (Rat, Rat) {
    (rat(5), ratio(7, 3))
}

pub fn b33() -> DiagramAlgebra {
    DiagramAlgebra::new(3, 3, rat(5))
}

pub fn space_2211() -> TensorSpace {
    TensorSpace::new(2, 2, 1, 1, rat(1), rat(-5)).expect("small space")
}
