//! Orders of finite-order elements: single elements, and the full spectrum
//! of a tree family both by enumeration and in closed form.

mod order;
mod spectrum;

pub use order::{divisors, element_order, gcd0, lcm_claim_set, ElementOrder, PeriodicElement, PeriodicKind};
pub use spectrum::{
    representative_surfaces, spectrum_closed_form, spectrum_enumerated, OrderSpectrum, SpectrumOrders, Witness,
};

use serde::Serialize;
use thiserror::Error;

use crate::trees::{TreeError, TreeFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorsionError {
    #[error("no closed form for {0}")]
    Unsupported(TreeFamily),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Distinction {
    /// `order` occurs in exactly one of the two spectra.
    Distinguished { order: u64 },
    /// The spectra coincide; nothing is claimed about isomorphism.
    Inconclusive {
        #[serde(skip_serializing_if = "Option::is_none")]
        note: Option<String>,
    },
}

/// Tries to tell two families apart by their torsion.
///
/// For two finite spectra the separating order is the largest order in
/// their symmetric difference. Against an unbounded spectrum it is the
/// least order missing from the finite one.
pub fn distinguish(first: TreeFamily, second: TreeFamily) -> Result<Distinction, TorsionError> {
    let a = spectrum_closed_form(first)?;
    let b = spectrum_closed_form(second)?;
    let missing_from = |s: &OrderSpectrum| (1..).find(|&k| !s.contains(k)).expect("finite spectra miss some order");
    let separating = match (a.finite_orders(), b.finite_orders()) {
        (Some(x), Some(y)) => x.symmetric_difference(y).max().copied(),
        (Some(_), None) => Some(missing_from(&a)),
        (None, Some(_)) => Some(missing_from(&b)),
        (None, None) => None,
    };
    Ok(match separating {
        Some(order) => Distinction::Distinguished { order },
        None => Distinction::Inconclusive { note: open_pair_note(first, second) },
    })
}

/// Families `higman (6k-1) 6k` and `higman (6k-2) 6k` share their spectra
/// and whether their groups are isomorphic is not known.
fn open_pair_note(a: TreeFamily, b: TreeFamily) -> Option<String> {
    let (Some(p), Some(q)) = (a.higman_params(), b.higman_params()) else { return None };
    let is_pair = |(n1, m1): (u32, u32), (n2, m2): (u32, u32)| m1 == m2 && m1 % 6 == 0 && n1 + 1 == m1 && n2 + 2 == m2;
    if is_pair(p, q) || is_pair(q, p) {
        Some(format!(
            "isomorphism of the groups for {a} and {b} is an open problem; equal torsion spectra cannot decide it"
        ))
    } else {
        None
    }
}
