use num_bigint::BigUint;
use num_traits::One;

use crate::clique::find_clique;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An upper bound on the Ramsey number `R(s, t)`: exact for `R(1, t) = 1`,
/// `R(2, t) = t` and `R(3, 3) = 6` (all symmetric), the binomial bound
/// `C(s + t - 2, s - 1)` elsewhere.
pub fn ramsey_upper(s: usize, t: usize) -> BigUint {
    let (lo, hi) = (s.min(t), s.max(t));
    match (lo, hi) {
        (0, _) => BigUint::from(0u32),
        (1, _) => BigUint::one(),
        (2, t) => BigUint::from(t),
        (3, 3) => BigUint::from(6u32),
        _ => binomial(s + t - 2, s - 1),
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn check(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

/// `(t - 1)(R(t, l + 2) - 1)^3 - 1`.
pub fn bound_main(t: usize, l: usize) -> Result<BigUint> {
    check(t >= 2 && l >= 1, "need t >= 2 and l >= 1")?;
    let r = ramsey_upper(t, l + 2) - BigUint::one();
    Ok(BigUint::from(t - 1) * r.pow(3) - BigUint::one())
}

/// `2 R(3, 4k - 1)^3 - 1`.
pub fn bound_ttf(k: usize) -> Result<BigUint> {
    check(k >= 1, "need k >= 1")?;
    Ok(BigUint::from(2u32) * ramsey_upper(3, 4 * k - 1).pow(3) - BigUint::one())
}

/// `(t - 1) R(t, 4k - 1)^3 - 1`.
pub fn bound_ehf(t: usize, k: usize) -> Result<BigUint> {
    check(t >= 2 && k >= 1, "need t >= 2 and k >= 1")?;
    Ok(BigUint::from(t - 1) * ramsey_upper(t, 4 * k - 1).pow(3) - BigUint::one())
}

/// Every graph on `n` vertices has a clique on `s` vertices or an
/// independent set on `t` vertices, checked over all `2^(n(n-1)/2)` graphs.
pub fn ramsey_holds(s: usize, t: usize, n: usize) -> Result<bool> {
    let pairs: alloc::vec::Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if pairs.len() > 28 {
        return Err(Error::ScaleLimit {
            op: "ramsey_holds",
            n,
            max: 8,
        });
    }
    for mask in 0u64..(1 << pairs.len()) {
        let mut g = Graph::new(n)?;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v)?;
            }
        }
        if find_clique(&g, s).is_none() && find_clique(&g.complement(), t).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ramsey_values_and_bounds() {
        assert_eq!(ramsey_upper(2, 5), BigUint::from(5u32));
        assert_eq!(ramsey_upper(3, 3), BigUint::from(6u32));
        assert_eq!(ramsey_upper(3, 4), BigUint::from(10u32));
        assert_eq!(bound_main(3, 1).unwrap(), BigUint::from(249u32));
        assert_eq!(bound_main(2, 1).unwrap(), BigUint::from(7u32));
        assert_eq!(bound_ttf(1).unwrap(), BigUint::from(431u32));
        assert_eq!(bound_ehf(2, 1).unwrap(), BigUint::from(26u32));
        assert!(bound_main(3, 2).unwrap() >= bound_main(3, 1).unwrap());
        for k in 1..=5 {
            assert!(bound_ttf(k).unwrap() >= bound_main(3, 4 * k - 3).unwrap());
        }
        assert!(bound_main(1, 1).is_err());
    }

    #[test]
    fn ramsey_three_three_is_six() {
        assert!(!ramsey_holds(3, 3, 5).unwrap());
        assert!(ramsey_holds(3, 3, 6).unwrap());
    }
}
