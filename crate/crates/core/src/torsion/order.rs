use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};

/// Which periodic braid the element is a power of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PeriodicKind {
    /// Cyclically permutes all `h` punctures.
    Epsilon,
    /// Cyclically permutes `h - 1` punctures around a fixed one.
    Delta,
}

/// `rho^t` times a power `s` of a periodic braid, in the stabiliser of a
/// surface of height `h` whose frontier rotations have order `r`.
///
/// `rho^r`, `epsilon^h` and `delta^(h-1)` all equal the full twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PeriodicElement {
    pub t: u64,
    pub s: i64,
    pub kind: PeriodicKind,
    pub h: u64,
    pub r: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(n) => write!(f, "{n}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}

impl Serialize for ElementOrder {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        match self {
            ElementOrder::Finite(n) => ser.serialize_u64(*n),
            ElementOrder::Infinite => ser.serialize_str("infinite"),
        }
    }
}

/// Order of a periodic element.
///
/// With one puncture the braid part is trivial and only `rho^t` in `Z_r`
/// matters. Otherwise a product `rho^t * b^s` is periodic exactly when the
/// two powers of the full twist cancel, `t * p + s * r = 0` where `p` is the
/// number of permuted punctures, and its order is then
/// `lcm(lcm(t, r) / t, lcm(|s|, p) / |s|)`.
pub fn element_order(e: &PeriodicElement) -> ElementOrder {
    assert!(e.h >= 1, "height is at least 1");
    if e.h == 1 {
        return match (e.t, e.r) {
            (0, _) => ElementOrder::Finite(1),
            (_, 0) => ElementOrder::Infinite,
            (t, r) => ElementOrder::Finite(r / t.gcd(&r)),
        };
    }
    let permuted = match e.kind {
        PeriodicKind::Epsilon => e.h,
        PeriodicKind::Delta => e.h - 1,
    };
    match (e.t, e.s) {
        (0, 0) => return ElementOrder::Finite(1),
        (0, _) | (_, 0) => return ElementOrder::Infinite,
        _ => {}
    }
    let t = e.t as i128;
    let s = e.s as i128;
    if e.r == 0 || t * permuted as i128 + s * e.r as i128 != 0 {
        return ElementOrder::Infinite;
    }
    let s_abs = e.s.unsigned_abs();
    let from_rotation = e.t.lcm(&e.r) / e.t;
    let from_braid = s_abs.lcm(&permuted) / s_abs;
    ElementOrder::Finite(from_rotation.lcm(&from_braid))
}

/// `{ lcm(lcm(t, a) / t, lcm(s, b) / s) : 1 <= t, s <= bound, t * b = s * a }`.
pub fn lcm_claim_set(a: u64, b: u64, bound: u64) -> BTreeSet<u64> {
    assert!(a >= 1 && b >= 1, "arguments are positive");
    let mut out = BTreeSet::new();
    for t in 1..=bound {
        // t * b = s * a forces s = t * b / a.
        if !(t * b).is_multiple_of(a) {
            continue;
        }
        let s = t * b / a;
        if s == 0 || s > bound {
            continue;
        }
        out.insert((t.lcm(&a) / t).lcm(&(s.lcm(&b) / s)));
    }
    out
}

/// Positive divisors of `n >= 1`, ascending.
pub fn divisors(n: u64) -> BTreeSet<u64> {
    assert!(n >= 1, "divisors of zero are unbounded");
    let mut out = BTreeSet::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.insert(d);
            out.insert(n / d);
        }
        d += 1;
    }
    out
}

/// `gcd` with `gcd(x, 0) = x`.
pub fn gcd0(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(t: u64, s: i64, kind: PeriodicKind, h: u64, r: u64) -> ElementOrder {
        element_order(&PeriodicElement { t, s, kind, h, r })
    }

    #[test]
    fn examples() {
        use PeriodicKind::*;
        assert_eq!(order(2, -1, Epsilon, 2, 4), ElementOrder::Finite(2));
        assert_eq!(order(2, -1, Delta, 4, 6), ElementOrder::Finite(3));
        assert_eq!(order(1, 1, Epsilon, 3, 5), ElementOrder::Infinite);
    }

    #[test]
    fn degenerate_cases() {
        use PeriodicKind::*;
        assert_eq!(order(0, 5, Epsilon, 1, 0), ElementOrder::Finite(1));
        assert_eq!(order(3, 0, Epsilon, 1, 0), ElementOrder::Infinite);
        assert_eq!(order(4, 0, Epsilon, 1, 6), ElementOrder::Finite(3));
        assert_eq!(order(0, 0, Delta, 5, 7), ElementOrder::Finite(1));
        assert_eq!(order(0, 2, Epsilon, 5, 7), ElementOrder::Infinite);
        assert_eq!(order(2, 0, Epsilon, 5, 7), ElementOrder::Infinite);
    }

    #[test]
    fn lcm_claim_examples() {
        assert_eq!(lcm_claim_set(6, 4, 100), BTreeSet::from([1, 2]));
        assert_eq!(lcm_claim_set(5, 5, 100), BTreeSet::from([1, 5]));
        assert_eq!(lcm_claim_set(7, 3, 100), BTreeSet::from([1]));
    }

    #[test]
    fn divisor_sets() {
        assert_eq!(divisors(1), BTreeSet::from([1]));
        assert_eq!(divisors(12), BTreeSet::from([1, 2, 3, 4, 6, 12]));
        assert_eq!(divisors(49), BTreeSet::from([1, 7, 49]));
        assert_eq!(gcd0(6, 0), 6);
    }
}
