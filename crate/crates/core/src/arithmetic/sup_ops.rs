use std::sync::Arc;

use crate::error::Result;
use crate::real::DecimalExpansion;
use crate::sup::{supremum, FnOracle, SupremumResult};
use crate::tower::Rational;

/// Which operation a [`SupDefinedOp`] realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupKind {
    Sum,
    Product,
}

/// `a + b := sup_m {a_(m) + b_(m)}` or `a·b := sup_m {a_(m)·b_(m)}`.
///
/// The induced oracle "`q ≥ t_m` for every `m`" is decided from the
/// bracket `t_m ≤ value ≤ u_m`: `q < t_m` refutes, `q ≥ u_m` confirms. Points
/// still inside the bracket at precision `cap` are answered "upper bound",
/// which is only reachable when `q` is within `u_cap − t_cap` of the value;
/// on an exact grid boundary this shows up as a run of nines.
#[derive(Clone, Debug)]
pub struct SupDefinedOp {
    pub a: DecimalExpansion,
    pub b: DecimalExpansion,
    pub kind: SupKind,
    pub cap: u32,
}

impl SupDefinedOp {
    /// Lower and upper bracket at truncation depth `m`.
    pub fn bracket(&self, m: u32) -> Result<(Rational, Rational)> {
        let (am, bm) = (self.a.truncate(m)?, self.b.truncate(m)?);
        let u = Rational::ulp(m);
        Ok(match self.kind {
            SupKind::Sum => {
                let t = &am + &bm;
                let hi = &t + &(&u + &u);
                (t, hi)
            }
            SupKind::Product => {
                let hi = &(&am + &u) * &(&bm + &u);
                (&am * &bm, hi)
            }
        })
    }

    pub fn is_upper_bound(&self, q: &Rational) -> Result<bool> {
        let mut m = 1;
        loop {
            let (t, u) = self.bracket(m)?;
            if q < &t {
                return Ok(false);
            }
            if q >= &u || m >= self.cap {
                return Ok(true);
            }
            m = (m * 2).min(self.cap);
        }
    }

    pub fn run(self) -> Result<SupremumResult> {
        let op = Arc::new(self);
        supremum(Arc::new(FnOracle(move |q: &Rational| op.is_upper_bound(q))))
    }
}

/// `a + b` through the supremum of truncation sums.
pub fn add_sup(a: &DecimalExpansion, b: &DecimalExpansion, cap: u32) -> Result<SupremumResult> {
    SupDefinedOp {
        a: a.clone(),
        b: b.clone(),
        kind: SupKind::Sum,
        cap,
    }
    .run()
}

/// `a · b` through the supremum of truncation products.
pub fn mul_sup(a: &DecimalExpansion, b: &DecimalExpansion, cap: u32) -> Result<SupremumResult> {
    SupDefinedOp {
        a: a.clone(),
        b: b.clone(),
        kind: SupKind::Product,
        cap,
    }
    .run()
}
