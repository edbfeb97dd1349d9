#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub fn probe(x: f64) -> f64 {
    libm::log(x) + libm::exp(x) + x.abs().max(1.0)
}
