//! Reversible arithmetic circuits and fault-tolerant resource estimates for
//! the elliptic-curve discrete-logarithm problem.
//!
//! The crate is organized in layers:
//!
//! - [`modmath`] — classical number theory and the elliptic-curve group law,
//!   used as ground truth for every circuit in the crate.
//! - [`revsim`] — a reversible-gate intermediate representation with a
//!   basis-state simulator and gate-statistics counters.
//! - [`circuits`] — builders producing verified reversible circuits for
//!   modular arithmetic, Montgomery multiplication, Kaliski inversion,
//!   elliptic-curve point addition, table lookups and batched inversion.
//! - [`costs`] — closed-form Toffoli/active-volume evaluators for every
//!   subroutine, composed up to per-key totals.
//! - [`estimator`] — code-distance selection, footprint and runtime figures
//!   for baseline and active-volume architectures on superconducting,
//!   trapped-ion and photonic (FBQC) hardware.
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! snippets are compiled as doc-tests (see the bottom of this file).

pub mod circuits;
pub mod costs;
pub mod estimator;
pub mod modmath;
pub mod revsim;

// Compile every code fence in the book as a doc-test so the guide cannot
// drift out of sync with the API. `cargo test --doc` picks these up.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            #[allow(unused)]
            mod $name {}
        };
    }

    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(modular_arithmetic, "../../../book/src/modular-arithmetic.md");
    chapter!(reversible_circuits, "../../../book/src/reversible-circuits.md");
    chapter!(circuit_builders, "../../../book/src/circuit-builders.md");
    chapter!(cost_model, "../../../book/src/cost-model.md");
    chapter!(resource_estimates, "../../../book/src/resource-estimates.md");
    chapter!(command_line, "../../../book/src/command-line.md");
}
