//! Exact rationals and their text form (`p` or `p/q`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serializer};

pub type Q = BigRational;

pub fn int(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

pub fn to_text(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn from_text(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
        Some((p, q)) => {
            let (p, q) = (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?);
            (!q.is_zero()).then(|| Q::new(p, q))
        }
    }
}

/// `serde(with = "crate::exact::text")` for `Q` fields.
pub mod text {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_text(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        from_text(&s).ok_or_else(|| serde::de::Error::custom(format!("not a rational: {s}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for x in [int(4), ratio(-13, 3), ratio(6, 4), int(0)] {
            assert_eq!(from_text(&to_text(&x)), Some(x));
        }
        assert_eq!(to_text(&ratio(6, 4)), "3/2");
        assert_eq!(from_text("1/0"), None);
    }
}
