use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ComparativeSystem, Decision};
use crate::tower::Natural;

/// A finite, non-empty set of tokens.
#[derive(Clone, PartialEq, Eq)]
pub struct TokenSet(Vec<u64>);

impl TokenSet {
    pub fn from_tokens(tokens: impl IntoIterator<Item = u64>) -> Self {
        let mut v: Vec<u64> = tokens.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(!v.is_empty(), "the empty set is the neutral object and is excluded");
        TokenSet(v)
    }

    pub fn tokens(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Debug for TokenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "t{t}")?;
        }
        write!(f, "}}")
    }
}

/// Cardinality: comparison by direct pairing, composition by disjoint union.
#[derive(Debug, Clone, Copy, Default)]
pub struct Cardinality;

/// Pairs off elements one by one; returns the unpaired remainders.
fn pair_off(x: &TokenSet, y: &TokenSet) -> (usize, usize) {
    let mut xs = x.0.iter();
    let mut ys = y.0.iter();
    loop {
        match (xs.next(), ys.next()) {
            (Some(_), Some(_)) => continue,
            (None, None) => return (0, 0),
            (Some(_), None) => return (1 + xs.count(), 0),
            (None, Some(_)) => return (0, 1 + ys.count()),
        }
    }
}

impl Cardinality {
    /// The counting measure.
    pub fn count(x: &TokenSet) -> Natural {
        Natural::from(x.0.len() as u64)
    }
}

impl ComparativeSystem for Cardinality {
    type Object = TokenSet;

    fn name(&self) -> &str {
        "cardinality"
    }

    fn equiv(&self, x: &TokenSet, y: &TokenSet) -> Decision {
        Ok(pair_off(x, y) == (0, 0))
    }

    fn precedes(&self, x: &TokenSet, y: &TokenSet) -> Decision {
        let (_, left_in_y) = pair_off(x, y);
        Ok(left_in_y > 0)
    }

    /// Disjoint union: the tokens of `y` are relabelled past those of `x`.
    fn compose(&self, x: &TokenSet, y: &TokenSet) -> TokenSet {
        let offset = x.0.last().map_or(0, |t| t + 1);
        let mut tokens = x.0.clone();
        tokens.extend(y.0.iter().map(|t| t + offset));
        TokenSet(tokens)
    }
}

/// Seeded sample of `size` token sets with 1 to 12 elements each.
pub fn cardinality_sample(size: usize, seed: u64) -> Vec<TokenSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            let len = rng.random_range(1..=12);
            let mut tokens = Vec::new();
            while tokens.len() < len {
                let t = rng.random_range(0..1000u64);
                if !tokens.contains(&t) {
                    tokens.push(t);
                }
            }
            TokenSet::from_tokens(tokens)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_a_disjoint_union() {
        let x = TokenSet::from_tokens([1, 2]);
        let y = TokenSet::from_tokens([1, 2, 3]);
        let xy = Cardinality.compose(&x, &y);
        assert_eq!(xy.tokens().len(), 5);
        assert_eq!(Cardinality::count(&xy), Natural::from(5));
    }

    #[test]
    fn pairing_decides_order() {
        let x = TokenSet::from_tokens([10, 20]);
        let y = TokenSet::from_tokens([1, 2, 3]);
        assert_eq!(Cardinality.precedes(&x, &y), Ok(true));
        assert_eq!(Cardinality.precedes(&y, &x), Ok(false));
        assert_eq!(Cardinality.equiv(&x, &TokenSet::from_tokens([7, 8])), Ok(true));
        assert_eq!(format!("{x:?}"), "{t10,t20}");
    }

    #[test]
    fn samples_are_reproducible() {
        assert_eq!(cardinality_sample(5, 42), cardinality_sample(5, 42));
        assert!(cardinality_sample(50, 1).iter().all(|s| !s.tokens().is_empty()));
    }
}
