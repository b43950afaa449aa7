use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported permutation of the integers paired with a shift.
///
/// `(sigma, a)` acts by `x -> sigma(x + a)`, and the product `f * g` is the
/// composite "apply `g`, then `f`". This gives
/// `(sigma, a) * (pi, b) = (sigma o (x -> pi(x - a) + a), a + b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ShiftPermutation {
    /// Moved points only.
    perm: BTreeMap<i64, i64>,
    shift: i64,
}

impl ShiftPermutation {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn translation(shift: i64) -> Self {
        ShiftPermutation { perm: BTreeMap::new(), shift }
    }

    /// Swaps `a` and `b`.
    pub fn transposition(a: i64, b: i64) -> Self {
        Self::from_map([(a, b), (b, a)], 0).expect("a transposition is a bijection")
    }

    /// Builds from explicit images; `None` unless they permute their own
    /// domain.
    pub fn from_map(images: impl IntoIterator<Item = (i64, i64)>, shift: i64) -> Option<Self> {
        let perm: BTreeMap<i64, i64> = images.into_iter().filter(|(x, y)| x != y).collect();
        let mut targets: Vec<i64> = perm.values().copied().collect();
        targets.sort_unstable();
        let sources: Vec<i64> = perm.keys().copied().collect();
        (targets == sources).then_some(ShiftPermutation { perm, shift })
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// `sigma(x)` for the permutation part alone.
    pub fn permute(&self, x: i64) -> i64 {
        self.perm.get(&x).copied().unwrap_or(x)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.perm.keys().copied()
    }

    pub fn apply(&self, x: i64) -> i64 {
        self.permute(x + self.shift)
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_empty() && self.shift == 0
    }

    pub fn compose(&self, rhs: &ShiftPermutation) -> ShiftPermutation {
        // x -> sigma(pi(x - a) + a) moves only points of supp(pi) + a and supp(sigma).
        let a = self.shift;
        let candidates = rhs.perm.keys().map(|&x| x + a).chain(self.perm.keys().copied());
        let perm = candidates
            .map(|x| (x, self.permute(rhs.permute(x - a) + a)))
            .filter(|(x, y)| x != y)
            .collect();
        ShiftPermutation { perm, shift: a + rhs.shift }
    }

    pub fn inverse(&self) -> ShiftPermutation {
        // (sigma, a)^-1 = (x -> sigma^-1(x + a) - a, -a).
        let a = self.shift;
        let perm = self.perm.iter().map(|(&x, &y)| (y - a, x - a)).collect();
        ShiftPermutation { perm, shift: -a }
    }
}

impl fmt::Display for ShiftPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.perm.iter().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "([{}], {})", pairs.join(", "), self.shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_element() -> impl Strategy<Value = ShiftPermutation> {
        (Just((-20i64..=20).collect::<Vec<_>>()).prop_shuffle(), 0usize..41, -5i64..=5).prop_map(|(shuffled, k, shift)| {
            // A random permutation of a random subset of [-20, 20].
            let mut domain: Vec<i64> = shuffled[..k].to_vec();
            let images = domain.clone();
            domain.sort_unstable();
            ShiftPermutation::from_map(domain.into_iter().zip(images), shift).unwrap()
        })
    }

    proptest! {
        #[test]
        fn associativity(f in arb_element(), g in arb_element(), h in arb_element()) {
            prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        }

        #[test]
        fn identity_and_inverse(f in arb_element()) {
            prop_assert_eq!(f.compose(&ShiftPermutation::identity()), f.clone());
            prop_assert_eq!(ShiftPermutation::identity().compose(&f), f.clone());
            prop_assert!(f.compose(&f.inverse()).is_identity());
            prop_assert!(f.inverse().compose(&f).is_identity());
        }

        #[test]
        fn product_is_composition(f in arb_element(), g in arb_element(), x in -40i64..40) {
            prop_assert_eq!(f.compose(&g).apply(x), f.apply(g.apply(x)));
        }
    }

    #[test]
    fn conjugating_by_the_shift_moves_support() {
        let t = ShiftPermutation::translation(1);
        let tau = ShiftPermutation::transposition(0, 1);
        let conj = t.compose(&tau).compose(&t.inverse());
        assert_eq!(conj, ShiftPermutation::transposition(1, 2));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(ShiftPermutation::from_map([(0, 1), (1, 1)], 0).is_none());
    }
}
