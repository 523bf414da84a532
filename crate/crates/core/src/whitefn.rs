//! Fractional parts, the emptiness equation systems, the step functions
//! `f_n`, and the gcd/unit-parameter criterion for `T_{a,b,c}`.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intlin::{gcd, mul};

/// Exact rational; equality is by value.
pub type Frac = Ratio<i64>;

/// Parameters `(a, b, c)` of `T_{a,b,c}` with `0 <= a, b < c`, plus `d = (1 − a − b) mod c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CanonicalForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let d = d_of(a, b, c)?;
        Ok(CanonicalForm { a, b, c, d })
    }

    /// Sort key `(c, a, b)` used to pick canonical representatives.
    pub fn key(&self) -> (i64, i64, i64) {
        (self.c, self.a, self.b)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.a, self.b, self.c)
    }
}

/// One of the four unit-parameter alternatives in the emptiness criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WhiteClause {
    #[serde(rename = "a=1")]
    AIsOne,
    #[serde(rename = "b=1")]
    BIsOne,
    #[serde(rename = "c=1")]
    CIsOne,
    #[serde(rename = "d=1")]
    DIsOne,
}

impl WhiteClause {
    pub fn as_str(&self) -> &'static str {
        match self {
            WhiteClause::AIsOne => "a=1",
            WhiteClause::BIsOne => "b=1",
            WhiteClause::CIsOne => "c=1",
            WhiteClause::DIsOne => "d=1",
        }
    }
}

impl fmt::Display for WhiteClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(1 − a − b) mod c`, in `[0, c)`.
pub fn d_of(a: i64, b: i64, c: i64) -> Result<i64> {
    if c < 1 || !(0..c).contains(&a) || !(0..c).contains(&b) {
        return Err(Error::InvalidForm { a, b, c });
    }
    // a, b < c so 1 − a − b cannot overflow
    Ok((1 - a - b).rem_euclid(c))
}

/// Fractional part `⟨k·n/c⟩ = (k·n mod c)/c`.
pub fn frac_kn_c(k: i64, n: i64, c: i64) -> Result<Frac> {
    if c < 1 {
        return Err(Error::Precondition(format!("denominator must be positive, got {c}")));
    }
    Ok(Frac::new(mul(k, n, "fractional part")?.rem_euclid(c), c))
}

/// `⌊x/y⌋` for `y > 0`.
fn floor_div(x: i64, y: i64) -> i64 {
    x.div_euclid(y)
}

/// `gcd(a,c) = gcd(b,c) = gcd(d,c) = 1`.
pub fn is_clean_canonical(cf: &CanonicalForm) -> bool {
    gcd(cf.a, cf.c) == 1 && gcd(cf.b, cf.c) == 1 && gcd(cf.d, cf.c) == 1
}

fn require_clean_nontrivial(cf: &CanonicalForm) -> Result<()> {
    if cf.c <= 1 {
        return Err(Error::Precondition(format!("c > 1 required, got c = {}", cf.c)));
    }
    if !is_clean_canonical(cf) {
        return Err(Error::NotClean { a: cf.a, b: cf.b, c: cf.c });
    }
    Ok(())
}

/// `⟨ka/c⟩ + ⟨kb/c⟩ + ⟨kd/c⟩ − k/c = 1` for every `k = 1..c−1`, in exact rationals.
///
/// Requires a clean form with `c > 1`.
pub fn satisfies_system(cf: &CanonicalForm) -> Result<bool> {
    require_clean_nontrivial(cf)?;
    let c = cf.c;
    for k in 1..c {
        let lhs = frac_kn_c(k, cf.a, c)? + frac_kn_c(k, cf.b, c)? + frac_kn_c(k, cf.d, c)? - Frac::new(k, c);
        if lhs != Frac::from_integer(1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Clauses of the unit-parameter criterion that hold for `cf`, in fixed order.
pub fn white_clauses(cf: &CanonicalForm) -> Vec<WhiteClause> {
    let mut out = Vec::new();
    if cf.a == 1 {
        out.push(WhiteClause::AIsOne);
    }
    if cf.b == 1 {
        out.push(WhiteClause::BIsOne);
    }
    if cf.c == 1 {
        out.push(WhiteClause::CIsOne);
    }
    if cf.d == 1 {
        out.push(WhiteClause::DIsOne);
    }
    out
}

/// Fast emptiness test: clean and at least one of `a, b, c, d` equals 1.
pub fn white_empty(cf: &CanonicalForm) -> bool {
    is_clean_canonical(cf) && (cf.a == 1 || cf.b == 1 || cf.c == 1 || cf.d == 1)
}

fn check_fn_args(n: i64, c: i64) -> Result<()> {
    if !(0 < n && n < c) || gcd(n, c) != 1 {
        return Err(Error::Precondition(format!("f_n needs 0 < n < c and gcd(n,c) = 1, got n={n}, c={c}")));
    }
    Ok(())
}

/// `f_n(k) = ⌊(k+1)n/c⌋ − ⌊kn/c⌋` on `k = 1..c−2`; always 0 or 1.
pub fn f_n(n: i64, c: i64, k: i64) -> Result<u8> {
    check_fn_args(n, c)?;
    if !(1..=c - 2).contains(&k) {
        return Err(Error::Precondition(format!("f_n domain is 1..={}, got k={k}", c - 2)));
    }
    let ctx = "f_n";
    let hi = floor_div(mul(k + 1, n, ctx)?, c);
    let lo = floor_div(mul(k, n, ctx)?, c);
    let v = hi - lo;
    debug_assert!(v == 0 || v == 1);
    Ok(v as u8)
}

/// `f_n⁻¹({1})`, computed pointwise over the domain `1..=c−2`.
pub fn f_support(n: i64, c: i64) -> Result<BTreeSet<i64>> {
    check_fn_args(n, c)?;
    let mut out = BTreeSet::new();
    for k in 1..=c - 2 {
        if f_n(n, c, k)? == 1 {
            out.insert(k);
        }
    }
    Ok(out)
}

/// `{⌊kc/n⌋ : k = 1..n−1}`, the closed form of the support of `f_n`.
pub fn floor_multiples(n: i64, c: i64) -> Result<BTreeSet<i64>> {
    check_fn_args(n, c)?;
    (1..n).map(|k| Ok(floor_div(mul(k, c, "floor multiples")?, n))).collect()
}

/// `f_a(k) + f_b(k) + f_d(k) = 1` for `k = 1..c−2`, together with `a + b + d = c + 1`.
///
/// Requires a clean form with `c > 1`. For `c = 2` the `k` range is empty and
/// only the sum condition is tested.
pub fn check_sum_system(cf: &CanonicalForm) -> Result<bool> {
    require_clean_nontrivial(cf)?;
    let c = cf.c;
    if cf.a + cf.b + cf.d != c + 1 {
        return Ok(false);
    }
    for k in 1..=c - 2 {
        if f_n(cf.a, c, k)? + f_n(cf.b, c, k)? + f_n(cf.d, c, k)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
