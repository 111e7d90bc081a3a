//! Exact arithmetic in real quadratic fields.

use core::cmp::Ordering;
use core::fmt;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};

/// The number `(p + q*sqrt(d)) / r`.
///
/// Canonical form: `d` squarefree and greater than 1, `r > 0` and
/// `gcd(p, q, r) = 1`. Rationals are the elements with `q = 0`; they still
/// carry a `d` but combine freely with elements of any field.
#[derive(Debug, Clone, Copy)]
pub struct QuadraticIrrational {
    p: i128,
    q: i128,
    d: i128,
    r: i128,
}

fn is_square(n: i128) -> bool {
    n >= 0 && {
        let s = n.sqrt();
        s * s == n
    }
}

/// Splits `d` into `(f, s)` with `d = f^2 * s` and `s` squarefree.
fn squarefree_part(d: i128) -> (i128, i128) {
    let mut f = 1;
    let mut s = d;
    let mut i = 2;
    while i * i <= s {
        while s % (i * i) == 0 {
            s /= i * i;
            f *= i;
        }
        i += 1;
    }
    (f, s)
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl QuadraticIrrational {
    pub fn new(p: i128, q: i128, d: i128, r: i128) -> Result<Self> {
        if d <= 0 || is_square(d) {
            return Err(Error::InvalidParameter("d must be a positive non-square"));
        }
        if r == 0 {
            return Err(Error::DivisionByZero);
        }
        let (f, d) = squarefree_part(d);
        Self::normalized(p, mul(q, f)?, d, r)
    }

    fn normalized(mut p: i128, mut q: i128, d: i128, mut r: i128) -> Result<Self> {
        if r < 0 {
            p = p.checked_neg().ok_or(Error::Overflow)?;
            q = q.checked_neg().ok_or(Error::Overflow)?;
            r = -r;
        }
        let g = p.gcd(&q).gcd(&r);
        if g > 1 {
            p /= g;
            q /= g;
            r /= g;
        }
        Ok(QuadraticIrrational { p, q, d, r })
    }

    /// The integer `n`, placed in the field `Q(sqrt(d))`.
    pub fn integer(n: i128, d: i128) -> Result<Self> {
        Self::new(n, 0, d, 1)
    }

    /// The rational `n / r`, placed in the field `Q(sqrt(d))`.
    pub fn rational(n: i128, r: i128, d: i128) -> Result<Self> {
        Self::new(n, 0, d, r)
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i128) -> Result<Self> {
        Self::new(0, 1, d, 1)
    }

    /// The golden mean `(1 + sqrt 5) / 2`.
    pub fn golden_ratio() -> Self {
        QuadraticIrrational {
            p: 1,
            q: 1,
            d: 5,
            r: 2,
        }
    }

    pub fn p(&self) -> i128 {
        self.p
    }
    pub fn q(&self) -> i128 {
        self.q
    }
    pub fn d(&self) -> i128 {
        self.d
    }
    pub fn r(&self) -> i128 {
        self.r
    }

    pub fn is_irrational(&self) -> bool {
        self.q != 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 0 && self.r == 1
    }

    fn common_field(&self, other: &Self) -> Result<i128> {
        match (self.q, other.q) {
            (0, _) => Ok(other.d),
            (_, 0) => Ok(self.d),
            _ if self.d == other.d => Ok(self.d),
            _ => Err(Error::FieldMismatch(self.d, other.d)),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        let d = self.common_field(o)?;
        let p = add(mul(self.p, o.r)?, mul(o.p, self.r)?)?;
        let q = add(mul(self.q, o.r)?, mul(o.q, self.r)?)?;
        Self::normalized(p, q, d, mul(self.r, o.r)?)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&o.neg())
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        let d = self.common_field(o)?;
        let p = add(mul(self.p, o.p)?, mul(mul(self.q, o.q)?, d)?)?;
        let q = add(mul(self.p, o.q)?, mul(self.q, o.p)?)?;
        Self::normalized(p, q, d, mul(self.r, o.r)?)
    }

    pub fn recip(&self) -> Result<Self> {
        // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
        let norm = mul(self.p, self.p)? - mul(mul(self.q, self.q)?, self.d)?;
        if norm == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::normalized(mul(self.r, self.p)?, mul(-self.r, self.q)?, self.d, norm)
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.checked_mul(&o.recip()?)
    }

    pub fn scale(&self, k: i128) -> Result<Self> {
        Self::normalized(mul(self.p, k)?, mul(self.q, k)?, self.d, self.r)
    }

    pub fn add_integer(&self, n: i128) -> Result<Self> {
        Self::normalized(add(self.p, mul(n, self.r)?)?, self.q, self.d, self.r)
    }

    pub fn neg(&self) -> Self {
        QuadraticIrrational {
            p: -self.p,
            q: -self.q,
            ..*self
        }
    }

    /// Sign of the value, decided by integer squaring.
    pub fn signum(&self) -> i32 {
        let sp = self.p.signum();
        let sq = self.q.signum();
        if sq == 0 {
            return sp as i32;
        }
        if sp == 0 || sp == sq {
            return sq as i32;
        }
        // opposite signs: compare p^2 against q^2 d
        let lhs = self.p.unsigned_abs().pow(2);
        let rhs = self.q.unsigned_abs().pow(2) * self.d as u128;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sp as i32,
            Ordering::Less => sq as i32,
            Ordering::Equal => 0,
        }
    }

    /// `floor(q * sqrt(d))`.
    fn floor_surd(&self) -> i128 {
        let s = (self.q * self.q * self.d).sqrt();
        match self.q.signum() {
            0 => 0,
            1 => s,
            // q^2 d is not a square when q != 0
            _ => -s - 1,
        }
    }

    /// Exact `floor` of the value.
    pub fn floor(&self) -> i128 {
        Integer::div_floor(&(self.p + self.floor_surd()), &self.r)
    }

    pub fn ceil(&self) -> i128 {
        -self.neg().floor()
    }

    /// Smallest `m >= 1` with `m * self + offset` rational, if any.
    pub(crate) fn rational_multiple(&self, offset: &Self) -> Option<i128> {
        if self.q == 0 {
            return None;
        }
        // m * q_s / r_s + q_o / r_o = 0
        let num = -offset.q * self.r;
        let den = offset.r * self.q;
        (num % den == 0 && num / den >= 1).then(|| num / den)
    }
}

impl PartialEq for QuadraticIrrational {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.q == o.q && self.r == o.r && (self.q == 0 || self.d == o.d)
    }
}

impl Eq for QuadraticIrrational {}

impl PartialOrd for QuadraticIrrational {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(o).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.q, self.r) {
            (0, 1) => write!(f, "{}", self.p),
            (0, r) => write!(f, "{}/{}", self.p, r),
            (q, 1) => write!(f, "{}{:+}*sqrt({})", self.p, q, self.d),
            (q, r) => write!(f, "({}{:+}*sqrt({}))/{}", self.p, q, self.d, r),
        }
    }
}
