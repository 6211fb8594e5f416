//! Arithmetic in the ring `Z[t]/(t^2 - 1)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element `a + b t` with `t^2 = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TElem {
    pub a: BigInt,
    pub b: BigInt,
}

impl TElem {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        TElem { a: a.into(), b: b.into() }
    }

    /// The integer `a`, i.e. `a + 0 t`.
    pub fn int(a: impl Into<BigInt>) -> Self {
        Self::new(a, 0)
    }

    /// The element `b t`.
    pub fn t_mul_int(b: impl Into<BigInt>) -> Self {
        Self::new(0, b)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn t() -> Self {
        Self::t_mul_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of `a + b`, the image under `t -> 1`.
    pub fn sign(&self) -> i32 {
        let s = &self.a + &self.b;
        if s.is_positive() {
            1
        } else if s.is_negative() {
            -1
        } else {
            0
        }
    }

    /// Multiplication by `t` swaps the two coefficients.
    pub fn times_t(&self) -> Self {
        TElem { a: self.b.clone(), b: self.a.clone() }
    }

    /// Substitute `t = s`, giving `a + b s`.
    pub fn eval_at(&self, s: i32) -> BigInt {
        &self.a + &self.b * s
    }

    /// Lies in `Z` (no `t` part).
    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    /// Lies in `tZ` (no constant part).
    pub fn is_t_multiple(&self) -> bool {
        self.a.is_zero()
    }

    /// Lies in `Z` or in `tZ`.
    pub fn is_pure(&self) -> bool {
        self.is_integer() || self.is_t_multiple()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TElem { a: &self.a * k, b: &self.b * k }
    }
}

impl From<i64> for TElem {
    fn from(a: i64) -> Self {
        TElem::int(a)
    }
}

impl Add for &TElem {
    type Output = TElem;
    fn add(self, o: &TElem) -> TElem {
        TElem { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Add for TElem {
    type Output = TElem;
    fn add(self, o: TElem) -> TElem {
        &self + &o
    }
}

impl AddAssign<&TElem> for TElem {
    fn add_assign(&mut self, o: &TElem) {
        self.a += &o.a;
        self.b += &o.b;
    }
}

impl Sub for &TElem {
    type Output = TElem;
    fn sub(self, o: &TElem) -> TElem {
        TElem { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Sub for TElem {
    type Output = TElem;
    fn sub(self, o: TElem) -> TElem {
        &self - &o
    }
}

impl Mul for &TElem {
    type Output = TElem;
    fn mul(self, o: &TElem) -> TElem {
        TElem {
            a: &self.a * &o.a + &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Mul for TElem {
    type Output = TElem;
    fn mul(self, o: TElem) -> TElem {
        &self * &o
    }
}

impl Neg for &TElem {
    type Output = TElem;
    fn neg(self) -> TElem {
        TElem { a: -&self.a, b: -&self.b }
    }
}

impl Neg for TElem {
    type Output = TElem;
    fn neg(self) -> TElem {
        -&self
    }
}

impl Zero for TElem {
    fn zero() -> Self {
        TElem::default()
    }
    fn is_zero(&self) -> bool {
        TElem::is_zero(self)
    }
}

impl One for TElem {
    fn one() -> Self {
        TElem::int(1)
    }
}

/// Text form `a+bt`, with `0`, `t`, `-t`, `2t`, `-1+t` style abbreviations.
impl fmt::Display for TElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t_part = |b: &BigInt| -> String {
            if b.is_one() {
                "t".to_string()
            } else if *b == -BigInt::one() {
                "-t".to_string()
            } else {
                format!("{b}t")
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}", t_part(&self.b)),
            (false, false) => {
                let tp = t_part(&self.b);
                if tp.starts_with('-') {
                    write!(f, "{}{}", self.a, tp)
                } else {
                    write!(f, "{}+{}", self.a, tp)
                }
            }
        }
    }
}

/// JSON integers: plain numbers when they fit in `i64`, decimal strings
/// otherwise, so that large coefficients survive a round trip.
pub mod json_int {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.parse().map_err(de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TElemJson {
    #[serde(with = "json_int")]
    a: BigInt,
    #[serde(with = "json_int")]
    b: BigInt,
}

impl Serialize for TElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TElemJson { a: self.a.clone(), b: self.b.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TElemJson::deserialize(d)?;
        Ok(TElem { a: j.a, b: j.b })
    }
}
