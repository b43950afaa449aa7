use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::order::{divisors, gcd0};
use super::TorsionError;
use crate::trees::enumerate::{canonical_rooted_surfaces, rooted_surfaces};
use crate::trees::{AdmissibleSurface, PolygonAddress, TreeFamily};

/// Where a finite order comes from: a surface of height `height` whose
/// frontier rotations have order `rotation`, contributing `gcd`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub height: u64,
    pub rotation: u64,
    pub gcd: u64,
    /// Serialized surface, when one was enumerated.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectrumOrders {
    Finite(BTreeSet<u64>),
    /// Every positive integer occurs.
    Unbounded,
}

/// Orders of finite-order elements, closed under divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum {
    pub family: TreeFamily,
    pub orders: SpectrumOrders,
    /// For every generating gcd, the first surface that produced it.
    pub witnesses: BTreeMap<u64, Witness>,
}

impl OrderSpectrum {
    pub fn contains(&self, order: u64) -> bool {
        match &self.orders {
            SpectrumOrders::Finite(set) => set.contains(&order),
            SpectrumOrders::Unbounded => order >= 1,
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self.orders, SpectrumOrders::Unbounded)
    }

    pub fn finite_orders(&self) -> Option<&BTreeSet<u64>> {
        match &self.orders {
            SpectrumOrders::Finite(set) => Some(set),
            SpectrumOrders::Unbounded => None,
        }
    }

    fn from_witnesses(family: TreeFamily, witnesses: BTreeMap<u64, Witness>) -> Self {
        let mut orders = BTreeSet::from([1]);
        for g in witnesses.keys() {
            orders.extend(divisors(*g));
        }
        OrderSpectrum { family, orders: SpectrumOrders::Finite(orders), witnesses }
    }
}

/// Surfaces whose rotation orders cover every value occurring in `family`
/// up to height `max_height`.
///
/// Higman trees: shapes up to sibling permutation around the center, and
/// below the first two polygons on the way out. Rotation orders ignore the
/// order of siblings there, and every surface avoiding the center is a
/// translate of one rooted at those polygons. Lamplighter: all surfaces
/// containing the center, which by translation covers every surface meeting
/// the line, plus those rooted at depths 1 to 3 of the central ray; deeper
/// ray segments look like the depth-3 ones to every rotation.
pub fn representative_surfaces(family: TreeFamily, max_height: usize) -> Vec<AdmissibleSurface> {
    let mut roots = vec![PolygonAddress::center()];
    match family {
        TreeFamily::Higman { n, m } => {
            roots.push(PolygonAddress::from_path([0]));
            roots.push(PolygonAddress::from_path([0, 0]));
            roots.iter().flat_map(|root| canonical_rooted_surfaces(n, m, root, max_height)).collect()
        }
        TreeFamily::Lamplighter => {
            roots.extend([vec![2], vec![2, 0], vec![2, 0, 0]].map(PolygonAddress::from_path));
            roots.iter().flat_map(|root| rooted_surfaces(family, root, max_height)).collect()
        }
    }
}

/// Divisor closure of `gcd(r, h)` and `gcd(r, h - 1)` over enumerated
/// surfaces of height at most `max_height` with nonzero rotation order `r`.
pub fn spectrum_enumerated(family: TreeFamily, max_height: usize) -> Result<OrderSpectrum, TorsionError> {
    let surfaces = representative_surfaces(family, max_height);
    let mut by_height: BTreeMap<usize, Vec<&AdmissibleSurface>> = BTreeMap::new();
    for s in &surfaces {
        by_height.entry(s.height()).or_default().push(s);
    }
    let layers: Vec<Vec<&AdmissibleSurface>> = by_height.into_values().collect();
    let contributions: Vec<Vec<(u64, Witness)>> = layers
        .par_iter()
        .map(|layer| {
            let mut out = Vec::new();
            for s in layer {
                let r = s.rotation_order()?;
                if r == 0 {
                    continue;
                }
                let h = s.height() as u64;
                for g in [gcd0(r, h), gcd0(r, h - 1)] {
                    let w = Witness { height: h, rotation: r, gcd: g, surface: Some(s.serialize()) };
                    out.push((g, w));
                }
            }
            Ok(out)
        })
        .collect::<Result<_, TorsionError>>()?;
    let mut witnesses = BTreeMap::new();
    for (g, w) in contributions.into_iter().flatten() {
        witnesses.entry(g).or_insert(w);
    }
    Ok(OrderSpectrum::from_witnesses(family, witnesses))
}

/// The spectrum predicted from `(n, m)` alone.
///
/// With `m = n + 1` it is the divisors of 2 and of `n + 1`; with `m = n - 1`
/// every order occurs; otherwise it is the divisors of `m` and of
/// `|m - n + 1|`. Stars are the case `n = 1`, giving the divisors of `m`.
pub fn spectrum_closed_form(family: TreeFamily) -> Result<OrderSpectrum, TorsionError> {
    let (n, m) = family.higman_params().ok_or(TorsionError::Unsupported(family))?;
    let (n, m) = (n as u64, m as u64);
    // Surfaces containing the center have `m + (h - 1)(n - 1)` frontier arcs
    // and full rotation symmetry.
    let centred = |h: u64, use_h: bool| {
        let r = m + (h - 1) * (n - 1);
        let g = if use_h { gcd0(r, h) } else { gcd0(r, h - 1) };
        (g, Witness { height: h, rotation: r, gcd: g, surface: None })
    };
    if m + 1 == n {
        return Ok(OrderSpectrum { family, orders: SpectrumOrders::Unbounded, witnesses: BTreeMap::new() });
    }
    let witnesses: BTreeMap<u64, Witness> = if m == n + 1 {
        [centred(2, true), centred(n + 2, false)].into_iter().collect()
    } else {
        let shift = m.abs_diff(n - 1);
        let mut list = vec![centred(m + 1, false)];
        if shift >= 1 {
            list.push(centred(shift, true));
        }
        list.into_iter().collect()
    };
    Ok(OrderSpectrum::from_witnesses(family, witnesses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(set: &[u64]) -> SpectrumOrders {
        SpectrumOrders::Finite(set.iter().copied().collect())
    }

    #[test]
    fn closed_forms() {
        let cf = |n, m| spectrum_closed_form(TreeFamily::higman(n, m).unwrap()).unwrap().orders;
        assert_eq!(cf(2, 3), finite(&[1, 2, 3]));
        assert_eq!(cf(2, 4), finite(&[1, 2, 3, 4]));
        assert_eq!(cf(3, 2), SpectrumOrders::Unbounded);
        assert_eq!(cf(4, 9), finite(&[1, 2, 3, 6, 9]));
        assert_eq!(cf(3, 4), finite(&[1, 2, 4]));
        for n in 1..=12 {
            let star = spectrum_closed_form(TreeFamily::star(n).unwrap()).unwrap();
            assert_eq!(star.orders, SpectrumOrders::Finite(divisors(n as u64)));
        }
        assert!(spectrum_closed_form(TreeFamily::Lamplighter).is_err());
    }

    #[test]
    fn enumerated_examples() {
        let en = |f: TreeFamily, h| spectrum_enumerated(f, h).unwrap().orders;
        assert_eq!(en(TreeFamily::higman(2, 3).unwrap(), 8), finite(&[1, 2, 3]));
        assert_eq!(en(TreeFamily::higman(2, 4).unwrap(), 8), finite(&[1, 2, 3, 4]));
        assert_eq!(en(TreeFamily::star(3).unwrap(), 4), finite(&[1, 3]));
    }

    #[test]
    fn closed_form_witnesses_are_realized() {
        for n in 1..=5u32 {
            for m in 1..=8u32 {
                let f = TreeFamily::higman(n, m).unwrap();
                let cf = spectrum_closed_form(f).unwrap();
                for (g, w) in &cf.witnesses {
                    assert_eq!(w.gcd, *g);
                    assert!(w.rotation % g == 0, "{f}: gcd {g} must divide rotation {}", w.rotation);
                }
            }
        }
    }
}
