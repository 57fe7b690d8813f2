//! Catalan numbers and the shifted variants used by the type A counts.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalanTriple {
    pub m: usize,
    #[serde(serialize_with = "big_json::serialize")]
    pub cat: BigUint,
    /// Defined for `m >= 1`.
    #[serde(serialize_with = "big_json::serialize_opt")]
    pub cat1: Option<BigUint>,
    /// Defined for `m >= 2`.
    #[serde(serialize_with = "big_json::serialize_opt")]
    pub cat2: Option<BigUint>,
}

/// JSON numbers for values that fit in `u64`, decimal strings otherwise.
pub mod big_json {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match x.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn serialize_opt<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => serialize(v, s),
            None => s.serialize_none(),
        }
    }
}

/// `C(2m, m) / (m + 1)`.
pub fn cat(m: usize) -> BigUint {
    // cat(k+1) = cat(k) * 2(2k+1) / (k+2), exact at every step
    let mut c = BigUint::one();
    for k in 0..m {
        c = c * BigUint::from(2 * (2 * k + 1)) / BigUint::from(k + 2);
    }
    c
}

/// `cat(m) - cat(m-1)`, for `m >= 1`.
pub fn cat1(m: usize) -> Result<BigUint> {
    if m < 1 {
        return Err(Error::Domain(format!("cat1 needs m >= 1, got {m}")));
    }
    Ok(cat(m) - cat(m - 1))
}

/// `cat(m) - 2 cat(m-1) + cat(m-2)`, for `m >= 2`.
pub fn cat2(m: usize) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::Domain(format!("cat2 needs m >= 2, got {m}")));
    }
    // cat(m) >= 2 cat(m-1) for m >= 2
    Ok(cat(m) - BigUint::from(2u32) * cat(m - 1) + cat(m - 2))
}

pub fn catalan_numbers(m: usize) -> CatalanTriple {
    CatalanTriple {
        m,
        cat: cat(m),
        cat1: cat1(m).ok(),
        cat2: cat2(m).ok(),
    }
}

/// `x - 1`, failing when `x` is zero.
pub(crate) fn underline(x: BigUint) -> Result<BigUint> {
    if x == BigUint::ZERO {
        Err(Error::Domain("underlined value would be negative".into()))
    } else {
        Ok(x - BigUint::one())
    }
}
